import pytest

from finpart import gfs, parts, vparts
from finpart.vparts import EnumerationCapExceeded


def test_ns1_examples():
    assert vparts.count_NS1(5, 6, 3) == 1
    assert vparts.count_NS1(1, 6, 3) == 2
    assert vparts.count_NS1(3, 6, 3) == 1
    assert vparts.count_NS1(-3, 6, 3) == 1


def test_s1_membership():
    for N in range(1, 4):
        for n in range(1, 9):
            for v in vparts.enum_S1(n, N):
                pi1, pi2 = v.components
                j = pi2.durfee
                assert v.size == n and 1 <= j <= N
                assert pi1.is_distinct and all(N - j + 1 <= x <= N for x in pi1)
                assert v.weight == (-1) ** pi1.count and v.statistic == pi2.rank


def test_ms2_examples():
    assert vparts.count_MS2(0, 0, 3) == 1
    assert vparts.ms2_counts(6, 3).moment(2) == 114
    for N in range(1, 4):
        for n in range(10):
            assert vparts.ms2_counts(n, N).is_symmetric()


def test_ms2_factorized_matches_triple_walk():
    for N in range(1, 4):
        for n in range(9):
            brute = {}
            for v in vparts.enum_S2(n, N):
                brute[v.statistic] = brute.get(v.statistic, 0) + v.weight
            assert {m: c for m, c in brute.items() if c} == dict(vparts.ms2_counts(n, N))


def test_s2_cap():
    with pytest.raises(EnumerationCapExceeded):
        list(vparts.enum_S2(vparts.MS2_CAP + 1, 2))


def test_nsc_examples():
    assert vparts.count_NSC(1, 1) == 1
    assert vparts.count_NSC(2, 1) == 0
    assert vparts.count_NSC(3, 1) == 1


def test_s3_examples():
    assert vparts.count_S3(3, 2) == 2 == parts.d1(3, 2)
    assert all(vparts.count_S3(1, N) == 1 for N in range(1, 5))
    assert vparts.count_S3(2, 1) == 1 == parts.d1(2, 1)


def test_s3_odd_divisors():
    for N in range(1, 5):
        for m in range(1, 26):
            assert vparts.count_S3(m, N) == parts.d1(m, N)


def test_moment_examples():
    assert vparts.rank_moment(2, 3, 6) == 72
    assert vparts.rank_moment(2, 3, 6, route="enumeration") == 72
    assert vparts.crank_moment(2, 3, 6) == 114
    assert vparts.crank_moment(2, 3, 6, route="enumeration") == 114
    for N in range(1, 4):
        for n in range(1, 10):
            assert vparts.rank_moment(1, N, n) == 0


@pytest.mark.parametrize("N", range(1, 6))
def test_rank_gf_matches_ns1(N):
    gf = gfs.rank_gf(N, 18)
    for n in range(1, 19):
        counts = vparts.ns1_counts(n, N)
        assert gf.coeff(n).terms == dict(counts)
        assert counts.is_symmetric()


@pytest.mark.parametrize("N", range(1, 5))
def test_crank_gf_matches_ms2(N):
    gf = gfs.crank_gf(N, 14)
    for n in range(15):
        assert gf.coeff(n).terms == dict(vparts.ms2_counts(n, N))


def test_ns1_stabilizes_to_classical_rank():
    for n in range(1, 9):
        N = n + 1
        for m in range(-n, n + 1):
            assert vparts.count_NS1(m, n, N) == parts.classical_rank_count(m, n)


def test_durfee_split_sums_to_total():
    for j in (1, 2, 3):
        assert sum(vparts.count_NS1(m, 6, 3, j) for m in range(-6, 7)) == sum(
            v.weight for v in vparts.enum_S1(6, 3, j)
        )
    with pytest.raises(ValueError):
        list(vparts.enum_S1(4, 3, j=4))


def test_spt_moment_identities():
    for N in range(1, 6):
        for n in range(1, 26):
            m2 = vparts.crank_moment(2, N, n)
            n2 = vparts.rank_moment(2, N, n)
            s = parts.spt(n, N)
            assert 2 * s == m2 - n2
            conv = sum(parts.p(j, N) * parts.sigma_restricted(n - j, N) for j in range(n))
            assert 2 * s == 2 * conv - n2


def test_worked_example_values():
    conv = sum(parts.p(j, 3) * parts.sigma_restricted(6 - j, 3) for j in range(6))
    assert conv == 57
    assert conv - vparts.rank_moment(2, 3, 6) // 2 == parts.spt(6, 3) == 21
