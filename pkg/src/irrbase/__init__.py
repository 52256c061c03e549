"""Exact base-size statistics for soluble linear groups over finite fields.

Modules
-------
algebra
    Finite fields, packed vectors and matrices.
groups
    Group handles, element types, orbits.
constructions
    Extraspecial-type, tensor, semilinear and wreath product groups.
search
    Minimum base, maximum irredundant base and greedy base sizes.
census
    Orbit census of the counterexample group and the odd-order spot checks.
dsl
    The group expression language.
kernels
    Orbit enumeration backend (compiled when available, numpy otherwise).
"""

__version__ = "0.1.0"

from .dsl import build, parse  # noqa: E402
from .search import greedy_max, greedy_run, max_irredundant, min_base, verify_irredundant  # noqa: E402

__all__ = ["build", "parse", "min_base", "max_irredundant", "greedy_max", "greedy_run",
           "verify_irredundant", "__version__"]
