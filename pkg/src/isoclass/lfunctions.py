"""L(1) values of the quadratic characters attached to traces: truncated
Dirichlet series, the exact class-number-formula value at fundamental
discriminants, the Euler-factor bridge between conductor levels, and the
dyadic-window average."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from sympy import primefactors

from isoclass.arith import chi_disc, conductor_split, is_fundamental, unit_weight
from isoclass.characters import CharacterHandle, _window_traces
from isoclass.errors import DomainError
from isoclass.quadforms import class_number, _characteristic

__all__ = [
    "AvgAbsL",
    "LValueRecord",
    "avg_abs_l",
    "l_exact_fundamental",
    "l_star_and_full",
    "l_truncated",
    "truncation_tail_bound",
]


@dataclass(frozen=True)
class LValueRecord:
    q: int
    t: int
    D_star: int
    f: int
    L_star: float
    euler_product: float
    L_full: float
    method: str = "class_number_formula"


def l_truncated(h: CharacterHandle, N: int) -> float:
    """Partial sum of xi(n)/n over n <= N.

    Differs from L(1, xi) by at most 2 sqrt(delta) ln(delta) / N
    (partial summation against the complete-sum bound).
    """
    if h.is_principal:
        raise DomainError("character is principal; L(1) diverges")
    if N < 1:
        raise DomainError("N must be >= 1")
    n = np.arange(1, N + 1, dtype=np.int64)
    return float(np.sum(h.table[n % h.delta] / n))


def truncation_tail_bound(modulus: int, N: int) -> float:
    return 2.0 * math.sqrt(modulus) * math.log(modulus) / N


def l_exact_fundamental(D_star: int) -> float:
    """Dirichlet class number formula: L(1, chi_{D*}) = 2 pi h / (w sqrt|D*|)."""
    if not is_fundamental(D_star):
        raise DomainError("discriminant is not fundamental")
    return 2 * math.pi * class_number(D_star) / (unit_weight(D_star) * math.sqrt(-D_star))


def l_star_and_full(q: int, t: int) -> LValueRecord:
    """L*(t) at the fundamental level and L(t) = L*(t) * prod over
    primes l | f of (1 - chi*(l)/l)."""
    p = _characteristic(q)
    if t == 0 or t * t >= 4 * q:
        raise DomainError("t must satisfy 0 < |t| < 2 sqrt(q)")
    if t % p == 0:
        raise DomainError("t must be ordinary")
    split = conductor_split(t * t - 4 * q)
    l_star = l_exact_fundamental(split.D_star)
    euler = 1.0
    for ell in primefactors(split.f):
        euler *= 1.0 - chi_disc(split.D_star, ell) / ell
    return LValueRecord(
        q=q, t=t, D_star=split.D_star, f=split.f,
        L_star=l_star, euler_product=euler, L_full=l_star * euler,
    )


class AvgAbsL(NamedTuple):
    avg: float
    total: float
    envelope: float
    ratio: float


def avg_abs_l(q: int, R: int, method: str = "class_number_formula",
              trunc_N: int = 100_000) -> AvgAbsL:
    """(1/R) * sum over t ~ R of |L(1, chi_t)| with the dyadic envelope
    log q * sqrt(log log q / log R).

    Both the average and the raw sum are reported; the bound's statement
    and proof normalise differently.
    """
    if R < 2:
        raise DomainError("R must be >= 2")
    traces = _window_traces(q, R)
    total = 0.0
    for t in traces:
        if method == "class_number_formula":
            total += abs(l_star_and_full(q, t).L_full)
        elif method == "truncated":
            total += abs(l_truncated(CharacterHandle(q, t, "field_disc"), trunc_N))
        else:
            raise DomainError("method must be class_number_formula or truncated")
    avg = total / R
    envelope = math.log(q) * math.sqrt(math.log(math.log(q)) / math.log(R))
    return AvgAbsL(avg=avg, total=total, envelope=envelope, ratio=avg / envelope)
