import random
from fractions import Fraction

import pytest

from finpart import parts, vparts
from finpart.idcat import (
    ConstraintViolated,
    InvalidModulus,
    UnknownIdentity,
    VerificationReport,
    catalog,
    check_asymptotics,
    check_congruence,
    lookup,
    perturbed,
    scan_conjecture,
    verify,
    verify_all,
)
from finpart.qformal import ZLaurent

EXPECTED_IDS = {
    # A
    "kluyver", "uchimura-triple", "hamme", "guo-zeng", "guo-zeng-comb",
    # B
    "master-abc", "fin-gen-garvan", "entry3gen", "gen-garvan-inf", "ram-entry4", "fin-ram-entry4",
    "fin-yanfu", "fin-sigma", "entry5-fin", "corteel-lovejoy-gen", "lambert-alt",
    # C
    "fingenc-master", "fin-spt-q", "spt-gf", "spt-moment", "second-fines", "merca", "qN-id",
    "c-neg1", "c-zero",
    # D
    "rank-gf", "crank-gf", "rank-bilateral", "crank-bilateral", "moment-deriv", "crank-alt",
    # E
    "beck-chern", "nsc-gf", "nsc-alt", "nsc-dnN", "dnN-rep", "fine-eval", "sum-explicit", "atw",
    "sum-of-tails", "gauss-tails", "ssptd-gf",
    # F
    "fin-garvan", "garvan-inf", "FN-pfd", "rogers-fine-fin", "s1-inter", "s1-ram", "z1-chain", "zq-chain",
    # G
    "q-binomial-thm", "finite-binomial", "q-chu", "chu-variant", "rowell-yee", "guo-zhang", "fu-lascoux",
}  # fmt: skip

CLASSICAL = {"q-binomial-thm", "finite-binomial", "q-chu", "chu-variant", "rowell-yee", "guo-zhang", "fu-lascoux"}


def test_catalog_contents():
    recs = catalog()
    assert {r.id for r in recs} == EXPECTED_IDS
    assert len(recs) == len(EXPECTED_IDS)
    assert {r.id for r in recs if r.tier == "classical-sanity"} == CLASSICAL
    assert all(r.anchor for r in recs)
    assert all(len(eq) >= 2 for r in recs for eq in r.equations)


def test_lookup():
    assert "van Hamme" in lookup("hamme").anchor
    assert "Garvan" in lookup("fin-garvan").anchor
    assert lookup("nonexistent") is None


def test_verify_examples():
    assert verify("hamme", {"N": 3}, 40).passed
    rep = verify("master-abc", {"N": 4, "a": Fraction(1, 2), "b": Fraction(1, 3), "c": Fraction(2, 5)}, 40)
    assert rep.passed and rep.order == 40


def test_fin_spt_q_coefficient():
    rec = lookup("fin-spt-q")
    assert verify(rec, {"N": 3}, 30).passed
    env = rec.resolve({"N": 3})
    for side in rec.equations[0]:
        # the convolution sum_j p(j,3) sigma(6-j,3) = spt(6,3) + rank moment / 2
        assert side.series(env, 30).scalar(6) == 57 == 21 + 72 // 2


def test_verify_errors():
    with pytest.raises(UnknownIdentity):
        verify("nonexistent", {}, 10)
    with pytest.raises(ConstraintViolated, match="c=1 forbidden"):
        verify("fin-yanfu", {"N": 2, "c": 1}, 10)
    with pytest.raises(ConstraintViolated, match="missing"):
        verify("hamme", {}, 10)
    with pytest.raises(ConstraintViolated, match="unknown"):
        verify("hamme", {"N": 2, "c": 3}, 10)
    with pytest.raises(ConstraintViolated):
        verify("hamme", {"N": 0}, 10)


def test_report_invariant():
    with pytest.raises(ValueError):
        VerificationReport("x", {}, 5, False)
    rep = VerificationReport("x", {}, 5, False, 3, ZLaurent({0: 1}), ZLaurent({0: 2}))
    assert rep.as_dict()["firstMismatch"] == {"n": 3, "lhs": "[0:1]", "rhs": "[0:2]"}


def test_builders_deterministic_and_truncation_consistent():
    for rec in catalog():
        b = rec.grid("quick")[0]
        env = rec.resolve(b)
        for eq in rec.equations:
            for side in eq:
                s30 = side.series(env, 30)
                assert s30 == side.series(env, 30)
                if side.cap is None:
                    assert side.series(env, 45).truncate(30) == s30


def test_every_grid_binding_is_admissible():
    for rec in catalog():
        grid = rec.grid("full")
        assert grid, rec.id
        for b in grid:
            rec.resolve(b)


def test_quick_profile_passes():
    reports = verify_all("quick")
    assert reports and all(r.passed for r in reports)
    ids = {r.identity for r in reports}
    assert ids == EXPECTED_IDS - CLASSICAL
    assert [r.identity for r in reports] == sorted(r.identity for r in reports)


def test_quick_profile_bounds():
    for rec in catalog():
        for b in rec.grid("quick"):
            assert b.get("N", 0) <= 4
        specializations = {
            tuple((k, repr(v)) for k, v in sorted(b.items()) if rec.param(k).kind != "int") for b in rec.grid("quick")
        }
        assert len(specializations) <= 1, rec.id


def test_classical_tier_full_grid(monkeypatch):
    monkeypatch.setenv("FINPART_THREADS", "1")
    reports = verify_all("full", records=[lookup(i) for i in sorted(CLASSICAL)], Q=30)
    assert reports and all(r.passed for r in reports)


def test_mutation_detected_at_exact_order():
    rec = lookup("hamme")
    bad = perturbed(rec, 13)
    rep = verify(bad, {"N": 3}, 30)
    assert not rep.passed and rep.mismatch_n == 13


def test_random_mutations():
    rng = random.Random(20261014)
    recs = [r for r in catalog()]
    for rec in rng.sample(recs, 20):
        b = rec.grid("quick")[0]
        order = verify(rec, b, 20).order
        k = rng.randint(0, order)
        eq = rng.randrange(len(rec.equations))
        side = rng.randrange(len(rec.equations[eq]))
        rep = verify(perturbed(rec, k, side=side, equation=eq), b, 20)
        assert not rep.passed and rep.mismatch_n == k, rec.id


def test_oracle_sides_match_stated_ranges():
    for N in range(1, 7):
        for n in range(1, 41):
            assert parts.a_compact(n, N) == parts.ssptd(n, N, "odd") - parts.ssptd(n - N, N, "odd")
    rec = lookup("nsc-gf")
    for N in range(1, 5):
        env = rec.resolve({"N": N})
        gf = rec.equations[0][0].series(env, 25)
        assert [gf.scalar(n) for n in range(1, 26)] == [vparts.count_NSC(n, N) for n in range(1, 26)]


# -- checks ------------------------------------------------------------------------


def test_scan_conjecture():
    r = scan_conjecture(12, 20, 5)
    assert r.all_positive and len(r.margins) == 6 * 20 * 5
    assert r.margins[(2, 3, 6)] == 114 - 72 == 42
    r2 = scan_conjecture(2, 20, 5)
    assert all(v > 0 for v in r2.margins.values())
    with pytest.raises(ValueError):
        scan_conjecture(5, 10, 2)


def test_congruence():
    rep = check_congruence(3, 1, 200)
    assert rep.passed and len(rep.cases) == 200
    assert rep.cases[0].n == 3 and rep.cases[0].value == 3
    assert parts.p(9, 3) == 12 and 12 % 3 == 0
    assert check_congruence(5, 1, 40).passed
    for bad in (4, 2, 1, 9):
        with pytest.raises(InvalidModulus):
            check_congruence(bad, 1, 10)


def test_asymptotics():
    s2 = check_asymptotics(2, [500, 1000, 2000])
    dev = [x.deviation for x in s2]
    assert dev[0] > dev[1] > dev[2] and dev[2] < Fraction(1, 20)
    assert s2[0].decimal.startswith("1.00")
    s3 = check_asymptotics(3, [200, 400])
    assert s3[0].deviation > s3[1].deviation
    assert all(x.ratio == 1 for x in check_asymptotics(1, [1, 7, 50]))
    small = check_asymptotics(3, [12])[0]
    assert small.spt == parts.spt(12, 3)
