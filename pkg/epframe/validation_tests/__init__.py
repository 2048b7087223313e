# ~/epframe/epframe/validation_tests/__init__.py
from .dichotomy import DichotomyTest
from .counterexamples import PackingNumberTest, HittingNumberTest
