# ~/epframe/epframe/capabilities/__init__.py
from .solvers import ProducesCertificate
from .families import ProducesInstance
