"""Acceptance criteria 1-9; each test prints one PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -s`` (or this file directly) to see the lines.
"""

import contextlib
import random
import sys
import time
from fractions import Fraction

from finpart import gfs, parts, vparts
from finpart.idcat import catalog, check_asymptotics, check_congruence, perturbed, scan_conjecture, verify, verify_all
from finpart.qformal import QSeries


class _NoCapture:
    @contextlib.contextmanager
    def disabled(self):
        yield


def check(capsys, num: int, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\ncriterion {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_1_spt_example(capsys):
    t = time.perf_counter()
    spt = parts.spt(6, 3)
    n2 = vparts.rank_moment(2, 3, 6)
    conv = sum(parts.p(j, 3) * parts.sigma_restricted(6 - j, 3) for j in range(6))
    dt = time.perf_counter() - t
    ok = spt == 21 and n2 == 72 and conv == 57 and conv - n2 // 2 == 21 and dt < 1
    check(capsys, 1, ok, f"spt(6,3)={spt}, N2={n2}, convolution={conv}, {conv}-{n2 // 2}={conv - n2 // 2}, {dt:.3f}s")


def test_criterion_2_compact_partitions(capsys):
    t = time.perf_counter()
    values = (parts.a_compact(8, 3), parts.ssptd(8, 3, "odd"), parts.ssptd(5, 3, "odd"))
    bad = [
        (n, N)
        for N in range(1, 7)
        for n in range(1, 41)
        if parts.a_compact(n, N) != parts.ssptd(n, N, "odd") - parts.ssptd(n - N, N, "odd")
    ]
    dt = time.perf_counter() - t
    ok = values == (3, 8, 5) and values[1] - values[2] == 3 and not bad and dt < 10
    check(capsys, 2, ok, f"a(8,3), ssptd_o(8,3), ssptd_o(5,3) = {values}; {240 - len(bad)}/240 (n,N) agree; {dt:.2f}s")


def test_criterion_3_verify_all_full(capsys):
    t = time.perf_counter()
    reports = verify_all("full")
    dt = time.perf_counter() - t
    core = {r.id for r in catalog() if r.tier == "core"}
    failed = sorted({r.identity for r in reports if not r.passed})
    seen = {r.identity for r in reports}
    low = [r for r in reports if r.identity in core and r.order < 14]
    ok = not failed and core <= seen and not low and all(r.order <= 60 for r in reports)
    check(capsys, 3, ok, f"{len(reports)} reports over {len(seen)} entries, failures={failed}, {dt:.0f}s (target < 600s)")


def test_criterion_4_oracle_gf_agreement(capsys):
    bad = []
    cells = 0
    for N in range(1, 6):
        rank = gfs.rank_gf(N, 18)
        crank = gfs.crank_gf(N, 14)
        for n in range(1, 19):
            cells += 1
            if rank.coeff(n).terms != dict(vparts.ns1_counts(n, N)):
                bad.append(("rank", N, n))
        for n in range(0, 15):
            cells += 1
            if crank.coeff(n).terms != dict(vparts.ms2_counts(n, N)):
                bad.append(("crank", N, n))
    check(capsys, 4, not bad, f"{cells - len(bad)}/{cells} (N,n) coefficient rows agree with N_S1 / M_S2; mismatches={bad[:5]}")


def test_criterion_5_conjecture_scan(capsys):
    r = scan_conjecture(12, 20, 5)
    smallest = min(r.margins.values())
    check(capsys, 5, r.all_positive and len(r.margins) == 600, f"{len(r.margins)} cells, min margin {smallest}, violations={r.violations[:5]}")


def test_criterion_6_congruence(capsys):
    rep = check_congruence(3, 1, 200)
    ns = [c.n for c in rep.cases]
    ok = rep.passed and ns == [6 * k - 3 for k in range(1, 201)]
    check(capsys, 6, ok, f"p(6k-3,3) mod 3 for k=1..200: {len(rep.failures)} nonzero residues")


def test_criterion_7_asymptotics(capsys):
    s2 = check_asymptotics(2, [500, 1000, 2000])
    s3 = check_asymptotics(3, [200, 400])
    d2 = [x.deviation for x in s2]
    d3 = [x.deviation for x in s3]
    ok = d2[0] > d2[1] > d2[2] and d2[2] < Fraction(1, 20) and d3[0] > d3[1]
    check(capsys, 7, ok, "N=2 ratios " + ", ".join(x.decimal for x in s2) + "; N=3 ratios " + ", ".join(x.decimal for x in s3))


def test_criterion_8_mutation_soundness(capsys):
    Q = 20
    recs = catalog()
    bindings = {r.id: r.grid("quick")[-1] if r.grid("quick") else r.grid("full")[0] for r in recs}
    baseline = {r.id: verify(r, bindings[r.id], Q) for r in recs}
    assert all(rep.passed for rep in baseline.values())
    rng = random.Random(8)
    outcomes = []
    for rec in rng.sample(recs, 20):
        order = baseline[rec.id].order
        k = rng.randint(0, order)
        eq = rng.randrange(len(rec.equations))
        side = rng.randrange(len(rec.equations[eq]))
        mutated = perturbed(rec, k, side=side, equation=eq, amount=rng.choice([1, -1, Fraction(1, 3)]))
        # builders are pure, so every other entry's report is its baseline report
        reports = [verify(mutated, bindings[rec.id], Q) if r.id == rec.id else baseline[r.id] for r in recs]
        failing = [x for x in reports if not x.passed]
        outcomes.append(len(failing) == 1 and failing[0].identity == rec.id and failing[0].mismatch_n == k)
    check(capsys, 8, all(outcomes), f"{sum(outcomes)}/20 random (entry, order) perturbations caught exactly once at the perturbed order")


def test_criterion_9_symmetry_parity(capsys):
    bad = []
    for N in range(1, 6):
        for name, gf in (("rank", gfs.rank_gf(N, 25)), ("crank", gfs.crank_gf(N, 25))):
            for n in range(26):
                c = gf.coeff(n).terms
                if c != {-m: v for m, v in c.items()}:
                    bad.append((name, N, n, "asym"))
            for k in (1, 3, 5):
                if gf.z_moment(k) != QSeries.zero(25):
                    bad.append((name, N, k, "odd moment"))
                if any(vparts.rank_moment(k, N, n) if name == "rank" else vparts.crank_moment(k, N, n) for n in range(1, 26)):
                    bad.append((name, N, k, "moment fn"))
        for n in range(1, 13):
            if not vparts.ns1_counts(n, N).is_symmetric() or not vparts.ms2_counts(n, N).is_symmetric():
                bad.append(("enum", N, n, "asym"))
    check(capsys, 9, not bad, f"symmetry and vanishing odd moments k=1,3,5, N<=5, n<=25; problems={bad[:5]}")


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failures = 0
    for fn in tests:
        try:
            fn(_NoCapture())
        except AssertionError:
            failures += 1
    sys.exit(1 if failures else 0)
