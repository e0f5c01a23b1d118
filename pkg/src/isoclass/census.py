"""Exact enumeration of isomorphism classes of elliptic curves over a
prime field and the trace table t -> I(t).

Classes are enumerated as canonical representatives of the coefficient
action (a, b) -> (u^4 a, u^6 b): a pair is canonical when it is
lexicographically least in its orbit.  Orbit discovery is a single
row-major sweep of a visited bitmap with the whole orbit marked at each
hit, so the sweep itself certifies canonicity.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np
from sympy import isprime

from isoclass.errors import DomainError

__all__ = ["CurveEq", "TraceTable", "census", "iota", "model_count_check", "trace_of_curve"]

DEFAULT_MAX_P = 200_000
_TRACE_CHUNK = 256


@dataclass(frozen=True)
class CurveEq:
    """y^2 = x^3 + a x + b over F_p, p > 3 prime, nonsingular."""

    p: int
    a: int
    b: int


@dataclass(frozen=True)
class TraceTable:
    p: int
    counts: dict[int, int]
    total: int
    aut_weighted_total: Fraction
    model_count: int = field(repr=False)

    def count(self, t: int) -> int:
        return self.counts.get(t, 0)


@lru_cache(maxsize=8)
def _field_tables(p: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(x, x^3 mod p, legendre table) for F_p."""
    x = np.arange(p, dtype=np.int64)
    cubes = (x * x % p) * x % p
    leg = np.full(p, -1, dtype=np.int64)
    leg[x * x % p] = 1
    leg[0] = 0
    return x, cubes, leg


def trace_of_curve(curve: CurveEq) -> int:
    """Frobenius trace t = p + 1 - #E(F_p) by Legendre-symbol summation."""
    p, a, b = curve.p, curve.a % curve.p, curve.b % curve.p
    if not isprime(p) or p <= 3:
        raise DomainError("p must be a prime > 3")
    if (4 * a * a * a + 27 * b * b) % p == 0:
        raise DomainError("curve is singular (4a^3 + 27b^2 = 0 mod p)")
    x, cubes, leg = _field_tables(p)
    t = -int(leg[(cubes + a * x + b) % p].sum())
    assert t * t <= 4 * p
    return t


def census(p: int, max_p: int = DEFAULT_MAX_P, threads: int = 1) -> TraceTable:
    """Build the full trace table for F_p.

    One trace evaluation per isomorphism class; total cost is O(p^2)
    vectorised work and a p*p visited bitmap.
    """
    if not isprime(p):
        raise DomainError("p must be prime")
    if p <= 3:
        raise DomainError("p must be > 3")
    if p > max_p:
        raise DomainError(f"p exceeds the configured maximum {max_p}")
    if threads < 1:
        raise DomainError("threads must be >= 1")

    x, cubes, leg = _field_tables(p)
    u = np.arange(1, p, dtype=np.int64)
    u2 = u * u % p
    u4 = u2 * u2 % p
    u6 = u4 * u2 % p
    bsq27 = 27 * (x * x % p) % p

    visited = np.zeros((p, p), dtype=bool)
    reps_a: list[int] = []
    reps_b: list[int] = []
    auts: list[int] = []
    for a in range(p):
        row = visited[a]
        # singular pairs in this row: 27 b^2 = -4 a^3
        row[(bsq27 + 4 * pow(a, 3, p)) % p == 0] = True
        ia = u4 * a % p
        while True:
            free = np.flatnonzero(~row)
            if free.size == 0:
                break
            b = int(free[0])
            ib = u6 * b % p
            visited[ia, ib] = True
            aut = int(np.count_nonzero((ia == a) & (ib == b)))
            reps_a.append(a)
            reps_b.append(b)
            auts.append(aut)

    a_arr = np.asarray(reps_a, dtype=np.int64)
    b_arr = np.asarray(reps_b, dtype=np.int64)

    def chunk_traces(lo: int) -> np.ndarray:
        hi = min(lo + _TRACE_CHUNK, len(a_arr))
        vals = (cubes[None, :] + a_arr[lo:hi, None] * x[None, :] + b_arr[lo:hi, None]) % p
        return -leg[vals].sum(axis=1)

    starts = range(0, len(a_arr), _TRACE_CHUNK)
    if threads == 1:
        pieces = [chunk_traces(lo) for lo in starts]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            pieces = list(pool.map(chunk_traces, starts))
    traces = np.concatenate(pieces) if pieces else np.zeros(0, dtype=np.int64)
    assert (traces * traces <= 4 * p).all()

    counts = Counter(traces.tolist())
    aut_weighted = sum((Fraction(1, a) for a in auts), Fraction(0))
    model_count = sum((p - 1) // a for a in auts)
    return TraceTable(
        p=p,
        counts=dict(sorted(counts.items())),
        total=len(auts),
        aut_weighted_total=aut_weighted,
        model_count=model_count,
    )


def iota(table: TraceTable, t: int) -> float:
    """I(t) normalised by its mean value 0.5 sqrt(p)."""
    return table.count(t) / (0.5 * math.sqrt(table.p))


def model_count_check(table: TraceTable) -> int:
    """Sum over classes of (p-1)/#Aut; equals p^2 - p exactly."""
    return table.model_count
