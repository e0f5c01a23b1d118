"""End-to-end acceptance suite.

Each test prints a single PASS line (with -s, or collected in captured
output) naming the criterion it certifies, so a run log doubles as an
acceptance report.  Every numeric tolerance is stated inline.
"""

import json
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from isoclass.arith import conductor_split
from isoclass.census import census, model_count_check
from isoclass.characters import (CharacterHandle, avg_max_char_sum, char_sum,
                                 gauss_sum, gauss_twist_residual)
from isoclass.cli import run
from isoclass.experiments import (WindowSpec, mu_density, sato_tate_compare,
                                  theorem_window_average, window_iota_sum)
from isoclass.lfunctions import (l_exact_fundamental, l_star_and_full,
                                 l_truncated, truncation_tail_bound)
from isoclass.quadforms import (hurwitz, kronecker_class_number, psi_derived)
from isoclass.sieve_lab import garaev_check, random_instance, trig_poly


def _report(label):
    print(f"ACCEPTANCE PASS: {label}")


def _ordinary_traces(p):
    T = math.isqrt(4 * p)
    return [t for t in range(-T, T + 1) if t != 0 and t % p != 0]


class TestAcceptance:
    def test_01_census_class_number_equivalence(self, table_101, table_1009):
        start = time.monotonic()
        tables = {101: table_101, 499: census(499), 1009: table_1009}
        for p, table in tables.items():
            for t in _ordinary_traces(p):
                assert table.count(t) == kronecker_class_number(t * t - 4 * p), (p, t)
        elapsed = time.monotonic() - start
        assert elapsed < 60.0
        _report("1 census I(t) == Kronecker class number, p in {101,499,1009}, "
                f"{elapsed:.1f}s")

    def test_02_model_count(self, table_5, table_101, table_1009):
        tables = {5: table_5, 7: census(7), 101: table_101, 1009: table_1009}
        for p, table in tables.items():
            assert model_count_check(table) == p * p - p
        _report("2 weighted model count equals p^2 - p for p in {5,7,101,1009}")

    def test_03_kronecker_hurwitz(self):
        for p in (5, 101, 1009):
            T = math.isqrt(4 * p)
            total = sum(hurwitz(4 * p - t * t) for t in range(-T, T + 1))
            assert total == Fraction(2 * p)
        assert sum(hurwitz(20 - t * t) for t in range(-4, 5)) == 10
        _report("3 Hurwitz class-number sum equals 2p exactly for p in {5,101,1009}")

    def test_04_class_number_formula_closure(self, table_1009):
        p = 1009
        for t in _ordinary_traces(p):
            delta = 4 * p - t * t
            split = conductor_split(t * t - 4 * p)
            lhs = (math.sqrt(delta) / (2 * math.pi)
                   * l_exact_fundamental(split.D_star)
                   * float(psi_derived(p, t)))
            count = table_1009.count(t)
            assert abs(lhs - count) <= 1e-9 * count, t
            psi = psi_derived(p, t)
            assert psi >= 1
            if split.f == 1:
                assert psi == split.w
        _report("4 analytic class-number closure within 1e-9 rel at p=1009; "
                "psi >= 1 and psi = w when f = 1")

    def test_05_lvalue_consistency(self):
        p, N = 101, 10**6
        for t in _ordinary_traces(p):
            handle = CharacterHandle(p, t, "field_disc")
            rec = l_star_and_full(p, t)
            approx = l_truncated(handle, N)
            assert abs(approx - rec.L_full) <= truncation_tail_bound(handle.delta, N), t
        m4 = CharacterHandle(5, 4, "field_disc")      # delta = 4
        assert abs(l_truncated(m4, N) - math.pi / 4) < 1e-4
        m19 = CharacterHandle(5, 1, "field_disc")     # delta = 19
        assert abs(l_truncated(m19, N) - math.pi / math.sqrt(19)) < 1e-4
        _report("5 truncated L(1) within tail bound at p=101, N=1e6; "
                "spot values pi/4 and pi/sqrt(19) within 1e-4")

    def test_06_gauss_sums(self):
        for r in range(2, 2001):
            assert abs(gauss_sum(r)) <= math.sqrt(r) + 1e-9, r
        rng = np.random.default_rng(20260826)
        checked = 0
        while checked < 100:
            r = int(rng.integers(2, 501))
            v = int(rng.integers(1, r + 1))
            if math.gcd(v, r) != 1:
                continue
            assert gauss_twist_residual(v, r) <= 1e-8 * r, (r, v)
            checked += 1
        _report("6 |tau_r| <= sqrt(r)+1e-9 for r <= 2000; twist residual "
                "<= 1e-8*r on 100 seeded coprime pairs")

    def test_07_orthogonality_parseval(self):
        from isoclass.arith import root_of_unity
        for r in range(1, 51):
            for b in range(r):
                s = sum(root_of_unity(r, b * z) for z in range(r))
                target = r if b % r == 0 else 0
                assert abs(s - target) <= 1e-9, (r, b)
        rng = np.random.default_rng(7)
        for k in range(20):
            q = int(rng.choice([101, 401, 1009]))
            R = int(rng.integers(2, 6))
            delta_min = min(4 * q - t * t for t in WindowSpec(q, R).traces)
            N = int(rng.integers(4, min(65, delta_min + 1)))
            inst = random_instance(q, R, N, seed=1000 + k)
            Z = inst.Z
            for delta in inst.moduli:
                full = sum(abs(trig_poly(inst, a / delta)) ** 2
                           for a in range(delta))
                assert abs(full - delta * Z) <= 1e-9 * delta * Z, (q, R, delta)
        _report("7 root-of-unity orthogonality exact for r <= 50; "
                "full-residue Parseval within 1e-9 rel on 20 seeded instances")

    def test_08_garaev_bound(self):
        for nu in (1, 2, 3):
            for M in range(2, 33):
                chk = garaev_check(nu, M)
                assert chk.ok, (nu, M)
        assert garaev_check(2, 4).lhs == 32
        _report("8 divisor second-moment bound holds for nu in {1,2,3}, "
                "M in 2..32; hand instance (2,4) lhs = 32")

    def test_09_theorem_desk_scale(self, table_10007):
        start = time.monotonic()
        p = 10007
        ratios = {}
        for R in (8, 16, 32, 64):
            res = theorem_window_average(WindowSpec(p, R), table_10007)
            assert 0.2 <= res.statistic <= 5.0, R
            assert res.ratio < 1.0, R
            ratios[R] = res.ratio
        # the dyadic windows 1 < t <= 2, 2 < t <= 4, ... tile (1, T]
        T = math.isqrt(4 * p)
        total = 0.0
        R = 1
        while R < T:
            _, s = window_iota_sum(table_10007, R)
            total += s
            R *= 2
        direct = sum(table_10007.count(t) for t in range(2, T + 1))
        assert total == pytest.approx(direct / (0.5 * math.sqrt(p)), rel=1e-12)
        elapsed = time.monotonic() - start
        assert elapsed < 300.0
        _report(f"9 window averages in [0.2,5.0] with ratio < 1 at p=10007, "
                f"R in {{8,16,32,64}} (ratios {ratios}); dyadic partition "
                f"reconstructs the full normalized sum; {elapsed:.1f}s")

    def test_10_angle_distribution(self, table_10007):
        p = 10007
        windows = [(-1.0, -0.5), (-0.5, 0.0), (0.0, 0.5), (0.5, 1.0)]
        for a, b in windows:
            res = sato_tate_compare(p, a, b, table_10007)
            assert abs(res.statistic - res.envelope) <= 0.15 * res.envelope, (a, b)
        assert abs(mu_density(-1.0, 1.0) - 1.0) <= 1e-12
        assert abs(mu_density(0.0, 1.0) - 0.5) <= 1e-12
        _report("10 semicircle window masses within 15% of c*mu at p=10007 "
                "on four half-unit windows; mu(-1,1)=1 and mu(0,1)=1/2 exact")

    def test_11_char_sum_averages(self):
        q, R, L = 1009, 8, 64
        res = avg_max_char_sum(q, R, L)
        traces = WindowSpec(q, R).traces
        brute = []
        for t in traces:
            h = CharacterHandle(q, t)
            best = max(abs(char_sum(h, N)) for N in range(L + 1, 2 * L + 1))
            brute.append(best)
        oracle = sum(brute) / len(brute)
        assert res.avg == pytest.approx(oracle, rel=0, abs=0)
        _report(f"11 averaged window maximum equals double-loop oracle at "
                f"(q,R,L)=(1009,8,64); envelope ratio "
                f"{res.avg / res.envelope:.4g} reported (no hard threshold)")

    def test_12_cli_determinism(self, tmp_path):
        commands = [
            ["census", "--p", "101"],
            ["theorem", "--p", "101", "--r", "4"],
            ["satotate", "--p", "101", "--alpha", "-0.5", "--beta", "0.5"],
            ["charsum", "--q", "1009", "--r", "8", "--l", "64"],
            ["lfunc", "--p", "101", "--n", "50000"],
            ["sieve", "--q", "1009", "--r", "8", "--n", "64", "--seed", "99"],
            ["gauss", "--rmax", "100"],
            ["divisor", "--nu", "2", "--m", "16"],
            ["psi", "--p", "101"],
        ]
        for argv in commands:
            blobs = []
            for threads in ("1", "4"):
                out = tmp_path / f"{argv[0]}-{threads}.json"
                assert run(argv + ["--threads", threads, "--format", "json",
                                   "--out", str(out)]) == 0
                blobs.append(out.read_bytes())
            assert blobs[0] == blobs[1], argv[0]
            json.loads(blobs[0])  # well-formed
        _report("12 every CLI command is byte-identical across --threads in {1,4}")
