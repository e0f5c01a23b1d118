"""Exact integer arithmetic: the quadratic character chi_r built
multiplicatively from Legendre symbols and the chi_2 table, the field
discriminant character, conductor/fundamental-discriminant splitting,
and roots of unity with the standard orthogonality relation."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import gmpy2
from sympy import factorint

from isoclass.errors import DomainError

__all__ = [
    "DiscriminantSplit",
    "chi_disc",
    "conductor_split",
    "geometric_esum",
    "kronecker",
    "root_of_unity",
]

# chi_2(v) by residue mod 8: 0 on even v, +1 at v = 1, 7 and -1 at v = 3, 5.
_CHI2 = (0, 1, 0, -1, 0, -1, 0, 1)


@lru_cache(maxsize=None)
def _modulus_factors(r: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(factorint(r).items()))


def _legendre(v: int, ell: int) -> int:
    # ell an odd prime
    s = pow(v % ell, (ell - 1) // 2, ell)
    return -1 if s == ell - 1 else s


def kronecker(v: int, r: int) -> int:
    """Quadratic character chi_r(v) for modulus r >= 1.

    Fully multiplicative in both arguments: the product over the prime
    factorisation of r of Legendre symbols at odd primes and chi_2
    factors at 2.  kronecker(v, 1) == 1.
    """
    if r < 1:
        raise DomainError("modulus r must be >= 1")
    result = 1
    for ell, e in _modulus_factors(r):
        s = _CHI2[v % 8] if ell == 2 else _legendre(v, ell)
        if s == 0:
            return 0
        if e % 2 == 1 and s == -1:
            result = -result
    return result


def chi_disc(D: int, n: int) -> int:
    """Character n -> (D/n) attached to a negative discriminant D.

    Completely multiplicative in n and periodic with period |D|;
    vanishes exactly when gcd(n, D) > 1.
    """
    _check_discriminant(D)
    return int(gmpy2.kronecker(D, n))


def _check_discriminant(D: int) -> None:
    if D >= 0:
        raise DomainError("discriminant must be negative")
    if D % 4 not in (0, 1):
        raise DomainError("discriminant must be 0 or 1 mod 4")


def unit_weight(D_star: int) -> int:
    """Half the unit count of the order of discriminant D_star: 6 at -3,
    4 at -4, 2 otherwise."""
    if D_star == -3:
        return 6
    if D_star == -4:
        return 4
    return 2


@dataclass(frozen=True)
class DiscriminantSplit:
    """D = D_star * f**2 with D_star fundamental and f the conductor."""

    D: int
    D_star: int
    f: int
    w: int


@lru_cache(maxsize=None)
def conductor_split(D: int) -> DiscriminantSplit:
    """Split a negative discriminant into fundamental part and conductor.

    f is the largest integer whose square divides D with fundamental
    quotient; w is the unit weight of the maximal order.
    """
    _check_discriminant(D)
    N = -D
    m = 1
    for ell, e in factorint(N).items():
        m *= ell ** (e // 2)
    s = N // (m * m)  # squarefree part of |D|
    if (-s) % 4 == 1:
        d_star, f = -s, m
    else:
        # -s is 2 or 3 mod 4, so the fundamental discriminant is -4s and
        # m must be even for D itself to be 0 or 1 mod 4.
        d_star, f = -4 * s, m // 2
    assert d_star * f * f == D
    return DiscriminantSplit(D=D, D_star=d_star, f=f, w=unit_weight(d_star))


def is_fundamental(D: int) -> bool:
    if D >= 0 or D % 4 not in (0, 1):
        return False
    return conductor_split(D).f == 1


def root_of_unity(r: int, z: int) -> complex:
    """e_r(z) = exp(2 pi i z / r)."""
    if r < 1:
        raise DomainError("order r must be >= 1")
    return cmath.exp(2j * math.pi * (z % r) / r)


def geometric_esum(r: int, b: int, K: int, L: int) -> complex:
    """Sum of e_r(b*n) over n = K+1 .. K+L."""
    if r < 1:
        raise DomainError("order r must be >= 1")
    if L < 1:
        raise DomainError("length L must be >= 1")
    return sum(root_of_unity(r, b * n) for n in range(K + 1, K + L + 1))
