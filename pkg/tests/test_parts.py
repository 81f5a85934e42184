import math

import pytest

from finpart import parts
from finpart.parts import Partition, StatTable, enum_partitions


def listing(n, N):
    return sorted(str(p) for p in enum_partitions(n, N))


def test_partition_conventions():
    e = Partition()
    assert (e.count, e.largest, e.smallest, e.rank, e.durfee) == (0, 0, math.inf, 0, 0)
    pi = Partition((1, 4, 1))
    assert pi.parts == (4, 1, 1)
    assert (pi.size, pi.largest, pi.smallest, pi.count, pi.distinct_count) == (6, 4, 1, 3, 2)
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_enum_partitions():
    assert listing(4, 2) == ["1+1+1+1", "2+1+1", "2+2"]
    assert listing(0, 5) == ["()"]
    assert len(list(enum_partitions(3, 3))) == 3


def test_enumeration_has_no_duplicates():
    for n in range(12):
        ps = [p.parts for p in enum_partitions(n)]
        assert len(ps) == len(set(ps))


def test_p_examples():
    assert parts.p(5, 3) == 5
    assert parts.p(6, 3) == 7
    assert all(parts.p(0, N) == 1 for N in range(1, 6))


def test_p_matches_materialized_enumeration():
    for N in range(1, 7):
        for n in range(20):
            assert parts.p(n, N) == sum(1 for _ in enum_partitions(n, N))


def test_spt_lpt_examples():
    assert parts.spt(6, 3) == 21
    assert parts.spt(4, 2) == 8
    assert all(parts.spt(n, 1) == n for n in range(1, 20))
    assert parts.lpt(4, 2) == 7
    assert all(parts.lpt(n, 1) == n for n in range(1, 20))
    assert all(parts.lpt(1, N) == 1 for N in range(1, 6))


def test_divisor_examples():
    assert parts.d(6, 3) == 3
    assert parts.d(4, 2) == 2
    assert parts.d1(3, 2) == 2
    assert parts.sigma_restricted(6, 3) == 11
    assert parts.sigma_restricted(4, 3) == 6
    assert all(parts.sigma_restricted(1, N) == 1 for N in range(1, 5))


def test_t_examples():
    assert parts.t(4, 2) == 4
    assert parts.t(2, 2) == 2
    assert parts.t(-1, 3) == 0 and parts.t(0, 3) == 0


def test_compact_and_ssptd_examples():
    assert parts.a_compact(8, 3) == 3
    assert parts.a_compact(4, 2) == 2
    assert all(parts.a_compact(1, N) == 1 for N in range(1, 5))
    assert parts.ssptd(8, 3, "odd") == 8
    assert parts.ssptd(5, 3, "odd") == 5
    for n in range(-2, 15):
        assert parts.ssptd(n, 3, "all") == parts.ssptd(n, 3, "odd") + parts.ssptd(n, 3, "even")
    with pytest.raises(ValueError):
        parts.ssptd(3, 3, "prime")


def test_w_weight_examples():
    assert parts.w_weight(4, 2) == 5
    assert parts.d(4, 2) + parts.w_weight(4, 2) == parts.lpt(4, 2) == 7
    assert all(parts.w_weight(1, N) == 0 for N in range(1, 5))


def test_rank_durfee():
    assert parts.rank(Partition((4, 1, 1))) == 1
    assert parts.durfee(Partition((3, 3, 2))) == 2
    assert parts.durfee(Partition()) == 0


def test_classical_rank_count():
    assert parts.classical_rank_count(0, 0) == 1
    assert sum(parts.classical_rank_count(m, 6) for m in range(-6, 7)) == 11


def test_p_recurrence():
    for N in range(1, 11):
        for n in range(61):
            prev = parts.p(n, N - 1) if N > 1 else int(n == 0)
            assert parts.p(n, N) == prev + parts.p(n - N, N)


def test_stabilization():
    for n in range(1, 13):
        for N in range(n, n + 3):
            assert parts.p(n, N) == parts.p(n, n)
            assert parts.d(n, N) == parts.d(n, n)
            assert parts.spt(n, N) == parts.spt(n, n)


def test_guo_zeng_refinement():
    for N in range(1, 9):
        for n in range(1, 51):
            assert parts.d(n, N) == parts.t(n, N) - parts.t(n - N, N)


def test_compact_partitions_theorem():
    for N in range(1, 7):
        for n in range(1, 41):
            assert parts.a_compact(n, N) == parts.ssptd(n, N, "odd") - parts.ssptd(n - N, N, "odd")


def test_divisors_plus_w_is_lpt():
    for N in range(1, 7):
        for m in range(1, 41):
            assert parts.d(m, N) + parts.w_weight(m, N) == parts.lpt(m, N)


def test_stat_table_routes_agree():
    enum, gf = StatTable("spt"), StatTable("spt", "generating-function")
    assert enum.method == "enumeration" and gf.method == "generating-function"
    for N in range(1, 5):
        assert enum.row(N, 15) == gf.row(N, 15)
    ptab = StatTable("p", "generating-function")
    assert ptab.get(6, 3) == 7
    before = dict(ptab._values)
    ptab.fill(3, 6)
    assert ptab._values == before
    with pytest.raises(ValueError):
        StatTable("lpt")
