"""Ordinal arithmetic below epsilon-zero in three representations.

``cnf`` holds Cantor normal forms with decidable order and arithmetic,
``brouwer`` holds Brouwer trees with a fuelled order, ``ewo`` holds finite
extensional wellfounded orders, and ``axiom_suite`` checks them all against
the same abstract laws.
"""

from . import axiom_suite, brouwer, cnf, ewo, expr

__all__ = ["axiom_suite", "brouwer", "cnf", "ewo", "expr"]
__version__ = "0.1.0"
