"""Paper-level experiments: the dyadic-window average of iota(t) against
its envelope, the Sato-Tate window comparison with self-calibrated
normalisation, and the X / interval-length threshold parameters."""

from __future__ import annotations

import math
from dataclasses import dataclass

from isoclass.census import TraceTable, iota
from isoclass.errors import DomainError

__all__ = [
    "ReportRow",
    "WindowSpec",
    "l_threshold",
    "mu_density",
    "sato_tate_compare",
    "theorem_window_average",
    "window_iota_sum",
    "x_parameter",
]


@dataclass(frozen=True)
class ReportRow:
    command: str
    params: dict
    statistic: float
    envelope: float
    ratio: float
    seed: int | None = None


@dataclass(frozen=True)
class WindowSpec:
    """Dyadic trace window (R, 2R] over F_q; requires 0 < R < 2R < 2 sqrt(q)."""

    q: int
    R: int

    def __post_init__(self):
        if self.R < 1 or self.R * self.R >= self.q:
            raise DomainError("window requires 0 < R < 2R < 2 sqrt(q)")

    @property
    def traces(self) -> range:
        return range(self.R + 1, 2 * self.R + 1)


def window_iota_sum(table: TraceTable, R: int, mirror: bool = False) -> tuple[int, float]:
    """(sum of I(t), sum of iota(t)) over the window (R, 2R], optionally
    the mirrored window [-2R, -R) instead (identical by twist symmetry)."""
    if R < 1:
        raise DomainError("R must be >= 1")
    sign = -1 if mirror else 1
    count = sum(table.count(sign * t) for t in range(R + 1, 2 * R + 1))
    return count, count / (0.5 * math.sqrt(table.p))


def theorem_window_average(w: WindowSpec, table: TraceTable, mirror: bool = False) -> ReportRow:
    """(1/R) * sum over t ~ R of iota(t) against the envelope
    log q / sqrt(log R) * (log log q)^{7/2}.  Natural logarithms; R >= 2."""
    if w.R < 2:
        raise DomainError("R must be >= 2 (the envelope needs log R > 0)")
    if table.p != w.q:
        raise DomainError("trace table does not match the window's field")
    count, iota_sum = window_iota_sum(table, w.R, mirror=mirror)
    statistic = iota_sum / w.R
    envelope = math.log(w.q) / math.sqrt(math.log(w.R)) * math.log(math.log(w.q)) ** 3.5
    return ReportRow(
        command="theorem",
        params={"q": w.q, "R": w.R, "count": count, "sum_iota": iota_sum,
                "mirror": mirror},
        statistic=statistic,
        envelope=envelope,
        ratio=statistic / envelope,
    )


def mu_density(alpha: float, beta: float) -> float:
    """Sato-Tate mass (2/pi) * integral of sin^2 over the arccos window."""
    if not (-1 <= alpha <= beta <= 1):
        raise DomainError("need -1 <= alpha <= beta <= 1")

    def F(theta: float) -> float:
        return (theta - math.sin(theta) * math.cos(theta)) / 2

    return (2 / math.pi) * (F(math.acos(alpha)) - F(math.acos(beta)))


def sato_tate_compare(q: int, alpha: float, beta: float, table: TraceTable) -> ReportRow:
    """Window mass sum_{alpha T <= t <= beta T} iota(t) / T against
    c * mu(alpha, beta), where c is calibrated once per table as the full
    window (-1, 1) mass over mu(-1, 1) = 1."""
    if not (-1 <= alpha < beta <= 1):
        raise DomainError("need -1 <= alpha < beta <= 1")
    if table.p != q:
        raise DomainError("trace table does not match q")
    T = math.isqrt(4 * q)

    def mass(a: float, b: float) -> float:
        lo, hi = math.ceil(a * T), math.floor(b * T)
        return sum(iota(table, t) for t in range(lo, hi + 1)) / T

    c = mass(-1.0, 1.0)
    statistic = mass(alpha, beta)
    mu = mu_density(alpha, beta)
    envelope = c * mu
    return ReportRow(
        command="satotate",
        params={"q": q, "alpha": alpha, "beta": beta, "mu": mu, "c": c},
        statistic=statistic,
        envelope=envelope,
        ratio=statistic / envelope if envelope > 0 else math.nan,
    )


def x_parameter(q: int, R: int) -> int:
    """ceil(max(q sqrt(R), q^2 / R^2))."""
    if R < 2:
        raise DomainError("R must be >= 2")
    return math.ceil(max(q * math.sqrt(R), q * q / (R * R)))


def l_threshold(q: int, R: int) -> int:
    """Least integer L >= 16 with
    log L / sqrt(log log L) >= 4 log X / sqrt(log R)."""
    if R < 2:
        raise DomainError("R must be >= 2")
    rhs = 4 * math.log(x_parameter(q, R)) / math.sqrt(math.log(R))

    def g(L: int) -> float:
        return math.log(L) / math.sqrt(math.log(math.log(L)))

    lo, hi = 16, 16
    while g(hi) < rhs:
        lo, hi = hi, hi * 2
    # g is increasing on [16, inf); bisect for the least qualifying L
    while lo < hi:
        mid = (lo + hi) // 2
        if g(mid) >= rhs:
            hi = mid
        else:
            lo = mid + 1
    return lo
