"""Brute-force partition statistics used as ground truth for generating functions.

Everything here works by walking partitions explicitly (or by the memoized
count of the same depth-first tree).  The one exception is ``StatTable`` with
method ``"generating-function"``, which exists for values of ``n`` far beyond
what enumeration can reach and tags every value with the route that produced it.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Literal

__all__ = [
    "Partition",
    "StatTable",
    "enum_partitions",
    "enum_window_distinct",
    "p",
    "spt",
    "lpt",
    "d",
    "d1",
    "sigma_restricted",
    "t",
    "a_compact",
    "ssptd",
    "w_weight",
    "rank",
    "durfee",
    "classical_rank_count",
]


@dataclass(frozen=True)
class Partition:
    """A partition stored as a non-increasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if any(x <= 0 for x in parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(parts, parts[1:])):
            parts = tuple(sorted(parts, reverse=True))
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    @property
    def smallest(self) -> float:
        # +inf for the empty partition so that "s(pi1) <= s(pi2)" holds vacuously
        return self.parts[-1] if self.parts else math.inf

    @property
    def count(self) -> int:
        return len(self.parts)

    @cached_property
    def distinct_count(self) -> int:
        return len(set(self.parts))

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    @property
    def rank(self) -> int:
        return self.largest - self.count

    @property
    def durfee(self) -> int:
        k = 0
        for i, x in enumerate(self.parts, start=1):
            if x >= i:
                k = i
            else:
                break
        return k

    @property
    def is_distinct(self) -> bool:
        return len(set(self.parts)) == len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return "+".join(map(str, self.parts)) if self.parts else "()"


def _partitions(n: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enum_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Every partition of ``n`` with largest part at most ``max_part``, each once."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    for parts in _partitions(n, max_part):
        yield Partition(parts)


def _distinct(n: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n into distinct parts from [lo, hi], largest first."""
    if n == 0:
        yield ()
        return
    for first in range(min(n, hi), lo - 1, -1):
        for rest in _distinct(n - first, lo, first - 1):
            yield (first,) + rest


def enum_distinct(n: int, lo: int = 1, hi: int | None = None) -> Iterator[Partition]:
    if n < 0:
        return
    for parts in _distinct(n, lo, n if hi is None else hi):
        yield Partition(parts)


def enum_window_distinct(n: int, N: int) -> Iterator[Partition]:
    """Nonempty distinct-part partitions of ``n`` with ``l - s <= N - 1``."""
    for s in range(1, n + 1):
        for rest in _distinct(n - s, s + 1, s + N - 1):
            yield Partition(rest + (s,))


@lru_cache(maxsize=None)
def _count(n: int, max_part: int) -> int:
    # number of leaves of the _partitions(n, max_part) tree
    if n == 0:
        return 1
    return sum(_count(n - k, k) for k in range(1, min(n, max_part) + 1))


def p(n: int, N: int) -> int:
    """Partitions of ``n`` with every part at most ``N``."""
    if n < 0:
        return 0
    return _count(n, N)


def spt(n: int, N: int) -> int:
    """Total number of smallest-part occurrences over partitions of ``n`` with parts <= N."""
    return sum(pi.multiplicity(pi.parts[-1]) for pi in enum_partitions(n, N) if pi.parts)


def lpt(n: int, N: int) -> int:
    """Total number of largest-part occurrences over partitions of ``n`` with parts <= N."""
    return sum(pi.multiplicity(pi.parts[0]) for pi in enum_partitions(n, N) if pi.parts)


def _divisors(n: int) -> list[int]:
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def d(n: int, N: int) -> int:
    """Divisors of ``n`` that are at most ``N``."""
    return sum(1 for k in _divisors(n) if k <= N)


def d1(m: int, N: int) -> int:
    """Odd divisors of ``m`` that are at most ``2N - 1``."""
    return sum(1 for k in _divisors(m) if k % 2 == 1 and k <= 2 * N - 1)


def sigma_restricted(k: int, N: int) -> int:
    """Sum of the divisors ``e`` of ``k`` with ``e >= k/N``."""
    return sum(e for e in _divisors(k) if e * N >= k)


def t(n: int, N: int) -> int:
    if n <= 0:
        return 0
    return sum((-1) ** (pi.count - 1) * pi.parts[-1] for pi in enum_window_distinct(n, N))


def a_compact(n: int, N: int) -> int:
    """Partitions of ``n`` with parts <= N in which only the largest part may repeat."""
    if n <= 0:
        return 0
    total = 0
    for pi in enum_partitions(n, N):
        rest = [x for x in pi.parts if x != pi.parts[0]]
        if len(rest) == len(set(rest)):
            total += 1
    return total


Parity = Literal["all", "odd", "even"]


def ssptd(n: int, N: int, parity: Parity = "all") -> int:
    """Sum of smallest parts over the window-restricted distinct partitions of ``n``."""
    if parity not in ("all", "odd", "even"):
        raise ValueError(f"unknown parity {parity!r}")
    if n <= 0:
        return 0
    total = 0
    for pi in enum_window_distinct(n, N):
        if parity == "odd" and pi.count % 2 == 0:
            continue
        if parity == "even" and pi.count % 2 == 1:
            continue
        total += pi.parts[-1]
    return total


def w_weight(m: int, N: int) -> int:
    total = 0
    for pi in enum_partitions(m, N + 1):
        for n in range(1, N + 1):
            if sum(1 for x in pi.parts if x > n) == n:
                total += pi.multiplicity(n) + 1
    return total


def rank(pi: Partition) -> int:
    return pi.rank


def durfee(pi: Partition) -> int:
    return pi.durfee


def classical_rank_count(m: int, n: int) -> int:
    """Number of (unrestricted) partitions of ``n`` with rank ``m``."""
    return sum(1 for pi in enum_partitions(n) if pi.rank == m)


Method = Literal["enumeration", "generating-function"]


class StatTable:
    """Memo table for ``p`` or ``spt`` keyed by ``(n, N)``.

    Each cell is computed by a single route recorded in ``method``.  The
    generating-function route fills a whole row ``n = 0..n_max`` for one ``N``
    at a time; concurrent fills of the same row produce identical values, and
    the lock only protects dictionary updates.
    """

    STATISTICS = ("p", "spt")

    def __init__(self, statistic: str, method: Method = "enumeration"):
        if statistic not in self.STATISTICS:
            raise ValueError(f"unsupported statistic {statistic!r}")
        if method not in ("enumeration", "generating-function"):
            raise ValueError(f"unknown method {method!r}")
        self.statistic = statistic
        self.method = method
        self._values: dict[tuple[int, int], int] = {}
        self._lock = threading.Lock()

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self._values

    def __len__(self) -> int:
        return len(self._values)

    def get(self, n: int, N: int) -> int:
        key = (n, N)
        if key in self._values:
            return self._values[key]
        if self.method == "enumeration":
            value = p(n, N) if self.statistic == "p" else spt(n, N)
            with self._lock:
                return self._values.setdefault(key, value)
        self.fill(N, n)
        return self._values[key]

    def row(self, N: int, n_max: int) -> list[int]:
        if self.method == "generating-function":
            self.fill(N, n_max)
        return [self.get(n, N) for n in range(n_max + 1)]

    def fill(self, N: int, n_max: int) -> None:
        if all((n, N) in self._values for n in range(n_max + 1)):
            return
        if self.method == "enumeration":
            for n in range(n_max + 1):
                self.get(n, N)
            return
        from .gfs import p_series, spt_series

        series = p_series(N, n_max) if self.statistic == "p" else spt_series(N, n_max)
        values = series.scalars()
        with self._lock:
            for n, v in enumerate(values):
                self._values.setdefault((n, N), int(v))
