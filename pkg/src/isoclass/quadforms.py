"""Class numbers of imaginary quadratic orders via reduced binary
quadratic forms: h(D), the Kronecker class number, the Hurwitz weighted
variant, and the weight factor solved out of the class-number expression
for I(t)."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy import divisors, factorint

from isoclass.arith import conductor_split
from isoclass.errors import DomainError

__all__ = [
    "ClassNumberBundle",
    "QuadForm",
    "class_number",
    "class_number_bundle",
    "hurwitz",
    "kronecker_class_number",
    "psi_derived",
    "reduced_forms",
]


@dataclass(frozen=True)
class QuadForm:
    """A primitive reduced form a*x^2 + b*x*y + c*y^2 of negative
    discriminant: |b| <= a <= c, with b >= 0 when |b| = a or a = c."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c


def _check_disc(D: int) -> None:
    if D >= 0:
        raise DomainError("discriminant must be negative")
    if D % 4 not in (0, 1):
        raise DomainError("discriminant must be 0 or 1 mod 4")


def reduced_forms(D: int) -> list[QuadForm]:
    """All primitive reduced forms of discriminant D < 0."""
    _check_disc(D)
    forms = []
    a_max = math.isqrt(-D // 3)
    for a in range(1, a_max + 1):
        for b in range(-a, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and (a == -b or a == c):
                continue
            if math.gcd(math.gcd(a, b), c) != 1:
                continue
            forms.append(QuadForm(a, b, c))
    return forms


@lru_cache(maxsize=None)
def class_number(D: int) -> int:
    """h(D): the number of primitive reduced forms of discriminant D."""
    return len(reduced_forms(D))


def kronecker_class_number(D: int) -> int:
    """Sum of h(g^2 * D_star) over divisors g of the conductor of D.

    For D = t^2 - 4q with t ordinary this equals the number of
    isomorphism classes in the isogeny class of trace t.
    """
    split = conductor_split(D)
    return sum(class_number(g * g * split.D_star) for g in divisors(split.f))


def hurwitz(N: int) -> Fraction:
    """Hurwitz class number H(N): the Kronecker sum for -N with the term
    at discriminant -3 weighted 1/3 and at -4 weighted 1/2."""
    if N <= 0:
        raise DomainError("N must be positive")
    if N % 4 not in (0, 3):
        raise DomainError("N must be 0 or 3 mod 4")
    split = conductor_split(-N)
    total = Fraction(0)
    for g in divisors(split.f):
        d = g * g * split.D_star
        h = class_number(d)
        if d == -3:
            total += Fraction(h, 3)
        elif d == -4:
            total += Fraction(h, 2)
        else:
            total += h
    return total


@dataclass(frozen=True)
class ClassNumberBundle:
    D: int
    h: int
    K: int
    H: Fraction


def class_number_bundle(D: int) -> ClassNumberBundle:
    return ClassNumberBundle(
        D=D, h=class_number(D), K=kronecker_class_number(D), H=hurwitz(-D)
    )


def _characteristic(q: int) -> int:
    fac = factorint(q)
    if len(fac) != 1:
        raise DomainError("q must be a prime power")
    return next(iter(fac))


def psi_derived(q: int, t: int) -> Fraction:
    """Weight factor w(D*) * K(t^2 - 4q) / (f * h(D*)), exact.

    This is the conductor weight solved out of the class-number
    expression I(t) = (sqrt(4q - t^2) / 2 pi) * L(1, chi*) * psi(f).
    """
    p = _characteristic(q)
    if t == 0 or t * t >= 4 * q:
        raise DomainError("t must satisfy 0 < |t| < 2 sqrt(q)")
    if t % p == 0:
        raise DomainError("t must be ordinary (coprime to the characteristic)")
    split = conductor_split(t * t - 4 * q)
    K = kronecker_class_number(t * t - 4 * q)
    return Fraction(split.w * K, split.f * class_number(split.D_star))
