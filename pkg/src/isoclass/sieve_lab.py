"""Brute-force large-sieve laboratory: the trigonometric polynomial and
the coprime-residue double sum over the quadratic moduli Delta(t), the
Farey-point counter, quadratic Gauss sums G(a, l; c), the multiple
divisor function with Garaev's second-moment bound, and the phased
factorisation coefficients rho_{b, nu}(k)."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

import numpy as np
from sympy import divisors

from isoclass.errors import DomainError

__all__ = [
    "GaraevCheck",
    "SieveEnvelopes",
    "SieveInstance",
    "farey_near_count",
    "garaev_check",
    "inner_residue_sum",
    "multi_divisor",
    "quad_gauss",
    "random_instance",
    "rho_coeff",
    "sieve_envelopes",
    "sieve_lhs",
    "trig_poly",
]

# Brute-force guards: sieve_lhs costs O(sum Delta(t) * N) complex ops.
MAX_Q = 20_011
MAX_R = 64
MAX_N = 4096


@dataclass(frozen=True)
class SieveInstance:
    """Coefficients alpha_1..alpha_N with the trace window (R, 2R] over F_q."""

    q: int
    R: int
    coeffs: np.ndarray = field(repr=False)
    seed: int | None = None

    def __post_init__(self):
        if self.R < 1 or self.R * self.R >= self.q:
            raise DomainError("window requires 0 < R < 2R < 2 sqrt(q)")
        if len(self.coeffs) < 1:
            raise DomainError("coefficient sequence must be nonempty")

    @property
    def N(self) -> int:
        return len(self.coeffs)

    @property
    def Z(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))

    @property
    def moduli(self) -> list[int]:
        return [4 * self.q - t * t for t in range(self.R + 1, 2 * self.R + 1)]


def random_instance(q: int, R: int, N: int, seed: int) -> SieveInstance:
    """Seeded complex-Gaussian coefficient instance, reproducible."""
    rng = np.random.default_rng(seed)
    coeffs = rng.standard_normal(N) + 1j * rng.standard_normal(N)
    return SieveInstance(q=q, R=R, coeffs=coeffs, seed=seed)


def trig_poly(inst: SieveInstance, x: float) -> complex:
    """T(x) = sum of alpha_n e(nx) for n = 1 .. N."""
    n = np.arange(1, inst.N + 1)
    return complex(np.dot(inst.coeffs, np.exp(2j * np.pi * n * x)))


def _guard(inst: SieveInstance) -> None:
    if inst.q > MAX_Q or inst.R > MAX_R or inst.N > MAX_N:
        raise DomainError(
            f"instance too large (limits: q <= {MAX_Q}, R <= {MAX_R}, N <= {MAX_N})"
        )


def inner_residue_sum(inst: SieveInstance, delta: int, coprime_only: bool = True) -> float:
    """Sum of |T(a/delta)|^2 over residues a mod delta, optionally only
    over a coprime to delta."""
    a = np.arange(delta, dtype=np.int64)
    if coprime_only:
        a = a[1:][np.gcd(a[1:], delta) == 1]
    return float(sum(abs(trig_poly(inst, int(ai) / delta)) ** 2 for ai in a))


def sieve_lhs(inst: SieveInstance, coprime_only: bool = True) -> float:
    """The double sum over t ~ R and residues a/Delta(t) of |T|^2."""
    _guard(inst)
    return float(sum(inner_residue_sum(inst, d, coprime_only) for d in inst.moduli))


class SieveEnvelopes(NamedTuple):
    paper: float
    classical: float
    conjecture: float


def sieve_envelopes(inst: SieveInstance) -> SieveEnvelopes:
    """The three comparison envelopes (implied constants and (qN)^{o(1)}
    factors dropped): the quadratic-moduli bound, the classical large
    sieve, and the conjectured strength."""
    q, R, N, Z = inst.q, inst.R, inst.N, inst.Z
    paper = (q * R + N + min(math.sqrt(R) * N + math.sqrt(q) * N ** 0.75,
                             math.sqrt(N) * q)) * Z
    classical = (q * q + N) * Z
    conjecture = (q * R + N) * Z
    return SieveEnvelopes(paper=paper, classical=classical, conjecture=conjecture)


def farey_near_count(q: int, R: int, alpha: float, D: float) -> int:
    """Exact count of coprime fractions a/Delta(t), t ~ R, within
    circle-distance D of alpha."""
    if not 0 < D <= 0.5:
        raise DomainError("D must lie in (0, 1/2]")
    if R < 1 or R * R >= q:
        raise DomainError("window requires 0 < R < 2R < 2 sqrt(q)")
    count = 0
    for t in range(R + 1, 2 * R + 1):
        delta = 4 * q - t * t
        a = np.arange(1, delta + 1, dtype=np.int64)
        a = a[np.gcd(a, delta) == 1]
        dist = np.abs((a / delta - alpha + 0.5) % 1.0 - 0.5)
        count += int(np.count_nonzero(dist <= D))
    return count


def quad_gauss(a: int, l: int, c: int) -> complex:
    """G(a, l; c) = sum over d = 1 .. c of e((a d^2 + l d) / c)."""
    if c < 1:
        raise DomainError("c must be >= 1")
    d = np.arange(1, c + 1, dtype=np.int64)
    r = ((a % c) * (d * d % c) + (l % c) * d) % c
    return complex(np.sum(np.exp(2j * np.pi * r / c)))


@lru_cache(maxsize=None)
def multi_divisor(k: int, nu: int, M: int) -> int:
    """d_{nu,M}(k): ordered factorisations k = m_1 ... m_nu, each m_i <= M."""
    if k < 1 or nu < 1 or M < 1:
        raise DomainError("k, nu, M must all be >= 1")
    if nu == 1:
        return 1 if k <= M else 0
    return sum(multi_divisor(k // m, nu - 1, M) for m in divisors(k) if m <= M)


class GaraevCheck(NamedTuple):
    lhs: int
    rhs: float
    ok: bool


def garaev_check(nu: int, M: int) -> GaraevCheck:
    """Second moment of d_{nu,M} over k <= M^nu against the bound
    M^nu (e log M / nu + e)^{nu^2}."""
    if nu < 1 or M < 1:
        raise DomainError("nu and M must be >= 1")
    size = M ** nu
    if size > 10 ** 7:
        raise DomainError("instance too large (M^nu must be <= 10^7)")
    counts = np.zeros(size + 1, dtype=np.int64)
    counts[1 : M + 1] = 1
    top = M
    for _ in range(nu - 1):
        nxt = np.zeros(size + 1, dtype=np.int64)
        for m in range(1, M + 1):
            nxt[m : top * m + 1 : m] += counts[1 : top + 1]
        counts = nxt
        top *= M
    lhs = int(np.sum(counts * counts))
    rhs = size * (math.e * math.log(M) / nu + math.e) ** (nu * nu)
    return GaraevCheck(lhs=lhs, rhs=rhs, ok=lhs <= rhs)


def rho_coeff(b: int, nu: int, M: int, k: int) -> complex:
    """rho_{b,nu}(k): sum of e_M(b (m_1 + ... + m_nu)) over the ordered
    factorisations counted by d_{nu,M}(k); |rho| <= d_{nu,M}(k)."""
    if k < 1 or nu < 1 or M < 1:
        raise DomainError("k, nu, M must all be >= 1")
    if M ** nu > 10 ** 7:
        raise DomainError("instance too large (M^nu must be <= 10^7)")

    def rec(kk: int, remaining: int) -> complex:
        if remaining == 1:
            if kk <= M:
                return np.exp(2j * np.pi * (b * kk % M) / M)
            return 0j
        return sum(
            np.exp(2j * np.pi * (b * m % M) / M) * rec(kk // m, remaining - 1)
            for m in divisors(kk)
            if m <= M
        )

    return complex(rec(k, nu))
