"""Vector-partition oracles (S1, S2, self-conjugate S_N, S3) and finite rank/crank moments."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Literal

from . import gfs
from .parts import Partition, _distinct, _partitions

__all__ = [
    "EnumerationCapExceeded",
    "VectorPartition",
    "WeightedCount",
    "enum_S1",
    "enum_S2",
    "enum_SN",
    "enum_S3",
    "ns1_counts",
    "ms2_counts",
    "count_NS1",
    "count_MS2",
    "count_NSC",
    "count_S3",
    "rank_moment",
    "crank_moment",
    "MS2_CAP",
]

MS2_CAP = 20

Structure = Literal["S1", "S2", "SN", "S3"]


class EnumerationCapExceeded(ValueError):
    """The requested size is beyond the brute-force cap; use the generating function."""


@dataclass(frozen=True)
class VectorPartition:
    components: tuple[Partition, ...]
    structure: Structure
    weight: int
    statistic: int = 0  # rank for S1, crank for S2, unused otherwise

    @property
    def size(self) -> int:
        return sum(c.size for c in self.components)


class WeightedCount(dict):
    """Map ``m -> signed count``; zero entries are dropped."""

    @classmethod
    def from_counter(cls, counts: Counter) -> "WeightedCount":
        return cls({m: v for m, v in sorted(counts.items()) if v})

    def __missing__(self, m: int) -> int:
        return 0

    def moment(self, k: int) -> int:
        return sum(m**k * v for m, v in self.items())

    def total(self) -> int:
        return sum(self.values())

    def is_symmetric(self) -> bool:
        return all(self[-m] == v for m, v in self.items())


def _at_most_parts(n: int, j: int) -> Iterator[tuple[int, ...]]:
    for parts in _partitions(n, n):
        if len(parts) <= j:
            yield parts


# -- S1 ------------------------------------------------------------------------


def _s1_durfee(n: int, N: int, j: int) -> Iterator[VectorPartition]:
    """S1 objects of size ``n`` whose second component has Durfee size exactly ``j``."""
    free = n - j * j
    if free < 0:
        return
    for size1 in range(free + 1):
        for pi1 in _distinct(size1, N - j + 1, N):
            rem = free - size1
            w = (-1) ** len(pi1)
            for right_size in range(rem + 1):
                for right in _at_most_parts(right_size, j):
                    for below in _partitions(rem - right_size, j):
                        rows = [j + (right[i] if i < len(right) else 0) for i in range(j)]
                        pi2 = Partition(tuple(rows) + below)
                        yield VectorPartition((Partition(pi1), pi2), "S1", w, pi2.rank)


def enum_S1(n: int, N: int, j: int | None = None) -> Iterator[VectorPartition]:
    if j is not None:
        if not 1 <= j <= N:
            raise ValueError(f"Durfee index j={j} outside 1..{N}")
        yield from _s1_durfee(n, N, j)
        return
    for jj in range(1, N + 1):
        yield from _s1_durfee(n, N, jj)


@lru_cache(maxsize=4096)
def _ns1(n: int, N: int, j: int | None) -> WeightedCount:
    counts: Counter = Counter()
    for v in enum_S1(n, N, j):
        counts[v.statistic] += v.weight
    return WeightedCount.from_counter(counts)


def ns1_counts(n: int, N: int, j: int | None = None) -> WeightedCount:
    """``m -> N_{S1}(m, n)`` (restricted to Durfee size ``j`` when given)."""
    return WeightedCount(_ns1(n, N, j))


def count_NS1(m: int, n: int, N: int, j: int | None = None) -> int:
    return _ns1(n, N, j)[m]


# -- S2 ------------------------------------------------------------------------


def enum_S2(n: int, N: int, cap: int = MS2_CAP) -> Iterator[VectorPartition]:
    if n > cap:
        raise EnumerationCapExceeded(f"S2 enumeration capped at n={cap}, got n={n}")
    for a in range(n + 1):
        for pi1 in _distinct(a, 1, N):
            w = (-1) ** len(pi1)
            for b in range(n - a + 1):
                for pi2 in _partitions(b, N):
                    for pi3 in _partitions(n - a - b, N):
                        yield VectorPartition(
                            (Partition(pi1), Partition(pi2), Partition(pi3)), "S2", w, len(pi2) - len(pi3)
                        )


@lru_cache(maxsize=4096)
def _ms2(n: int, N: int, cap: int) -> WeightedCount:
    if n > cap:
        raise EnumerationCapExceeded(f"S2 enumeration capped at n={cap}, got n={n}")
    # the triple walk factorizes: tabulate each component once, then combine
    sign = [sum((-1) ** len(x) for x in _distinct(a, 1, N)) for a in range(n + 1)]
    by_len = [Counter(len(x) for x in _partitions(b, N)) for b in range(n + 1)]
    counts: Counter = Counter()
    for a in range(n + 1):
        if not sign[a]:
            continue
        for b in range(n - a + 1):
            c = n - a - b
            for l2, k2 in by_len[b].items():
                for l3, k3 in by_len[c].items():
                    counts[l2 - l3] += sign[a] * k2 * k3
    return WeightedCount.from_counter(counts)


def ms2_counts(n: int, N: int, cap: int = MS2_CAP) -> WeightedCount:
    return WeightedCount(_ms2(n, N, cap))


def count_MS2(m: int, n: int, N: int, cap: int = MS2_CAP) -> int:
    return _ms2(n, N, cap)[m]


# -- self-conjugate S_N ----------------------------------------------------------


def enum_SN(n: int, N: int) -> Iterator[VectorPartition]:
    """Triples (pi1, pi2, pi2) of total size ``n`` with the self-conjugate S_N conditions."""
    for a in range(1, n + 1):
        if (n - a) % 2:
            continue
        for pi1 in _distinct(a, 1, N):
            s1 = pi1[-1]
            w = (-1) ** (len(pi1) - 1)
            for pi2 in _partitions((n - a) // 2, N):
                if pi2 and pi2[-1] < s1:
                    continue
                p2 = Partition(pi2)
                yield VectorPartition((Partition(pi1), p2, p2), "SN", w)


def count_NSC(n: int, N: int) -> int:
    return sum(v.weight for v in enum_SN(n, N))


# -- S3 ------------------------------------------------------------------------


def enum_S3(m: int, N: int) -> Iterator[VectorPartition]:
    for n in range(1, N + 1):
        floor = n * n  # 1 + 3 + ... + (2n-1)
        for a in range(0, m - floor + 1):
            for pi1 in _distinct(a, 2 * N - 2 * n + 2, 2 * N):
                if any(x % 2 for x in pi1):
                    continue
                w1 = (-1) ** len(set(pi1))
                for pi2 in _s3_second(m - a, n):
                    yield VectorPartition((Partition(pi1), Partition(pi2)), "S3", w1 * (-1) ** (n - 1))


def _s3_second(size: int, n: int) -> Iterator[tuple[int, ...]]:
    """Partitions using every odd 1..2n-1 at least once, otherwise only odds <= 2n-1 and copies of 2n."""
    odds = tuple(range(2 * n - 1, 0, -2))
    base = sum(odds)
    extra = size - base
    if extra < 0:
        return
    for k in range(extra // (2 * n) + 1):
        for rest in _partitions(extra - 2 * n * k, 2 * n - 1):
            if any(x % 2 == 0 for x in rest):
                continue
            yield tuple(sorted((2 * n,) * k + odds + rest, reverse=True))


def count_S3(m: int, N: int) -> int:
    return sum(v.weight for v in enum_S3(m, N))


# -- moments ---------------------------------------------------------------------

Route = Literal["gf", "enumeration"]


def rank_moment(k: int, N: int, n: int, route: Route = "gf") -> int:
    if route == "enumeration":
        return _ns1(n, N, None).moment(k)
    return int(gfs.rank_gf(N, n).z_moment(k).scalar(n))


def crank_moment(k: int, N: int, n: int, route: Route = "gf") -> int:
    if route == "enumeration":
        return _ms2(n, N, MS2_CAP).moment(k)
    return int(gfs.crank_gf(N, n).z_moment(k).scalar(n))
