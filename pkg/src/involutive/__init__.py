"""Involutive divisions, involutive completion and involutive Groebner bases."""

from .monomials import Monomial, Order, VariableContext, compare, divides, lcm, quotient
from .divisions import (Division, Separation, find_involutive_divisor, involutive_divides,
                        pairwise_update, separation)
from .completion import (CompletionLimitExceeded, CompletionLimits, CompletionStats,
                         completeness_bound_check, involutive_complete,
                         is_autoreduced_involutively, is_involutive_bruteforce,
                         is_locally_involutive)

__version__ = "0.1.0"
