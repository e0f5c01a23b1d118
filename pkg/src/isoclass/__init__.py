"""Exact computation and experiments on elliptic curves in isogeny classes.

Core pieces: the curve census t -> I(t) over a prime field, class numbers
of imaginary quadratic orders, quadratic characters and their partial sums,
Gauss sums, L(1) values, and brute-force large-sieve quantities, plus a CLI
that persists experiment reports to CSV/JSON.
"""

from isoclass.errors import DomainError

__all__ = ["DomainError"]
__version__ = "0.1.0"
