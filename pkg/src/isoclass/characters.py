"""Quadratic characters xi_t modulo Delta(t) = 4q - t^2, their partial
sums and window maxima, dyadic-averaged maxima, Gauss sums tau_r, and the
Gauss-sum twist identity.

Two character modes coexist: ``paper_literal`` evaluates the
multiplicative construction chi_{Delta(t)} directly, ``field_disc``
evaluates the field discriminant character (t^2 - 4q / .).  They agree
whenever Delta(t) is odd and squarefree; the literal construction can be
principal (square Delta), which is flagged rather than summed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import NamedTuple

import numpy as np

from isoclass.arith import _modulus_factors, chi_disc
from isoclass.errors import DomainError

__all__ = [
    "AvgMaxCharSum",
    "CharacterHandle",
    "avg_max_char_sum",
    "char_sum",
    "gauss_sum",
    "gauss_twist_residual",
    "max_char_sum",
    "quadratic_character_table",
    "twisted_sum_W",
    "xi",
]

_CHI2_TABLE = np.array([0, 1, 0, -1, 0, -1, 0, 1], dtype=np.int8)


@lru_cache(maxsize=None)
def _legendre_table(ell: int) -> np.ndarray:
    v = np.arange(ell, dtype=np.int64)
    tab = np.full(ell, -1, dtype=np.int8)
    tab[v * v % ell] = 1
    tab[0] = 0
    return tab


def quadratic_character_table(r: int) -> np.ndarray:
    """chi_r(v) for v = 0 .. r-1 as an int8 array.

    Built multiplicatively over the factorisation of r; even prime
    multiplicity contributes only the coprimality indicator.  For
    r = 2 mod 4 the two-argument symbol has period 4r and is not a
    character mod r (the sqrt(r) Gauss-sum bound can fail for it), so
    the factor at 2 degrades to the coprimality indicator there; this
    never concerns the moduli Delta(t), which are 0 or 3 mod 4.
    """
    if r < 1:
        raise DomainError("modulus r must be >= 1")
    v = np.arange(r, dtype=np.int64)
    vals = np.ones(r, dtype=np.int8)
    for ell, e in _modulus_factors(r):
        if ell == 2:
            if e % 2 == 1 and e >= 3:
                vals *= _CHI2_TABLE[v % 8]
            else:
                vals[v % 2 == 0] = 0
        else:
            comp = _legendre_table(ell)[v % ell]
            if e % 2 == 1:
                vals *= comp
            else:
                vals[comp == 0] = 0
    if r == 1:
        vals[0] = 1
    return vals


@dataclass(frozen=True)
class CharacterHandle:
    """xi_t: the quadratic character attached to a trace t over F_q."""

    q: int
    t: int
    mode: str = "paper_literal"

    def __post_init__(self):
        if self.mode not in ("paper_literal", "field_disc"):
            raise DomainError("mode must be paper_literal or field_disc")
        if self.t == 0 or self.t * self.t >= 4 * self.q:
            raise DomainError("t must satisfy 0 < |t| < 2 sqrt(q)")

    @property
    def delta(self) -> int:
        return 4 * self.q - self.t * self.t

    @property
    def is_principal(self) -> bool:
        if self.mode == "field_disc":
            return False
        return math.isqrt(self.delta) ** 2 == self.delta

    @cached_property
    def table(self) -> np.ndarray:
        """One period of values, indexed by n mod delta."""
        if self.mode == "paper_literal":
            return quadratic_character_table(self.delta)
        d = self.t * self.t - 4 * self.q
        return np.array([chi_disc(d, n) for n in range(self.delta)], dtype=np.int8)

    @cached_property
    def _prefix(self) -> np.ndarray:
        """prefix[k] = sum of xi(n) for n = 1 .. k, k = 0 .. delta."""
        n = np.arange(1, self.delta + 1) % self.delta
        return np.concatenate([[0], np.cumsum(self.table[n], dtype=np.int64)])


def xi(h: CharacterHandle, n: int) -> int:
    return int(h.table[n % h.delta])


def char_sum(h: CharacterHandle, N: int) -> int:
    """S_t(N): exact partial sum of xi over n = 1 .. N."""
    if N < 1:
        raise DomainError("N must be >= 1")
    full, rem = divmod(N, h.delta)
    return full * int(h._prefix[h.delta]) + int(h._prefix[rem])


def max_char_sum(h: CharacterHandle, L: int) -> tuple[int, int]:
    """(N*, |S_t(N*)|) maximising |S_t(N)| over N in (L, 2L], smallest N
    on ties."""
    if L < 1:
        raise DomainError("L must be >= 1")
    ns = np.arange(L + 1, 2 * L + 1)
    sums = char_sum(h, L) + np.cumsum(h.table[ns % h.delta], dtype=np.int64)
    k = int(np.argmax(np.abs(sums)))
    return L + 1 + k, int(abs(sums[k]))


def _window_traces(q: int, R: int) -> range:
    if R < 1:
        raise DomainError("R must be >= 1")
    if R * R >= q:
        raise DomainError("window requires 0 < R < 2R < 2 sqrt(q)")
    return range(R + 1, 2 * R + 1)


class AvgMaxCharSum(NamedTuple):
    avg: float
    envelope: float
    l_ok: bool


def avg_max_char_sum(q: int, R: int, L: int, mode: str = "paper_literal") -> AvgMaxCharSum:
    """(1/R) * sum over t ~ R of max_{N ~ L} |S_t(N)|, with the dyadic
    short-interval envelope L * exp(-(7/8) sqrt(log R log log L)) and a
    flag telling whether L clears the interval-length threshold
    log L / sqrt(log log L) >= 4 log X / sqrt(log R)."""
    traces = _window_traces(q, R)
    total = sum(max_char_sum(CharacterHandle(q, t, mode), L)[1] for t in traces)
    avg = total / R
    envelope = math.nan
    l_ok = False
    if R >= 2 and L >= 16:
        envelope = L * math.exp(-(7 / 8) * math.sqrt(math.log(R) * math.log(math.log(L))))
        X = max(q * math.sqrt(R), q * q / (R * R))
        l_ok = math.log(L) / math.sqrt(math.log(math.log(L))) >= 4 * math.log(X) / math.sqrt(math.log(R))
    return AvgMaxCharSum(avg=avg, envelope=envelope, l_ok=l_ok)


def gauss_sum(r: int) -> complex:
    """tau_r = sum over v of chi_r(v) e_r(v); |tau_r| <= sqrt(r)."""
    chi = quadratic_character_table(r)
    phases = np.exp(2j * np.pi * np.arange(r) / r)
    return complex(np.dot(chi.astype(np.float64), phases))


def gauss_twist_residual(v: int, r: int) -> float:
    """|chi_r(v) tau_r - sum_b chi_r(b) e_r(bv)| for gcd(v, r) = 1."""
    if math.gcd(v, r) != 1:
        raise DomainError("v must be coprime to r")
    chi = quadratic_character_table(r)
    b = np.arange(r, dtype=np.int64)
    phases = np.exp(2j * np.pi * (b * (v % r) % r) / r)
    rhs = complex(np.dot(chi.astype(np.float64), phases))
    lhs = int(chi[v % r]) * gauss_sum(r)
    return abs(lhs - rhs)


def twisted_sum_W(q: int, R: int, b: int, M: int, mode: str = "paper_literal") -> float:
    """W_b: sum over t ~ R of |sum_{m<=M} xi_t(m) e_M(bm)|."""
    if M < 1:
        raise DomainError("M must be >= 1")
    if abs(b) > M:
        raise DomainError("|b| must not exceed M")
    m = np.arange(1, M + 1, dtype=np.int64)
    phases = np.exp(2j * np.pi * (b * m % M) / M)
    total = 0.0
    for t in _window_traces(q, R):
        h = CharacterHandle(q, t, mode)
        total += abs(np.dot(h.table[m % h.delta].astype(np.float64), phases))
    return total
