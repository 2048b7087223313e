# ~/epframe/setup.py
try:
    from setuptools import setup
except ImportError:
    from distutils.core import setup

setup(
        name="epframe",
        version="0.1.0",
        author="epframe developers",
        packages=["epframe",
                  # capabilities
                  "epframe.capabilities",
                  # validation_tests
                  "epframe.validation_tests",
                  ],
        keywords = ["GRAPH THEORY", "ERDOS-POSA", "A-PATHS",
                    "CERTIFICATES", "SCIENTIFIC METHOD"],
        license="BSD Clause-3",
        description="Erdos-Posa dichotomies for A-paths with checkable certificates",
        long_description="Solvers that return either k disjoint A-paths or a small hitting set, an exhaustive oracle that verifies their certificates, and generators for the known counterexample families.",
        install_requires=[
            "sciunit",
            "scipy",
            "numpy",
            ],
        extras_require={
            "tests": ["pytest", "hypothesis", "networkx"],
            },
        entry_points={
            "console_scripts": ["epframe = epframe.cli:main"],
            },
        classifiers = [
            # "3 - Alpha", "4 - Beta" or "5 - Production/Stable" as current state of package
            "Development Status :: 3 - Alpha",
            # Define audience
            "Intended Audience :: Science/Research",
            # License
            "License :: OSI Approved :: BSD License",
            # Specify supported python versions
            "Programming Language :: Python :: 3.8",
            "Programming Language :: Python :: 3.9",
            "Programming Language :: Python :: 3.10",
            ],
)
