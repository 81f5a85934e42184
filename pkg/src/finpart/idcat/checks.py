"""Numerical checks that are not identities: the crank-minus-rank moment scan,
the restricted-partition congruence, and the leading-order spt asymptotics."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction

from .. import gfs
from ..parts import StatTable

__all__ = [
    "InvalidModulus",
    "ScanResult",
    "scan_conjecture",
    "CongruenceCase",
    "CongruenceReport",
    "check_congruence",
    "AsymptoticSample",
    "check_asymptotics",
    "decimal_string",
]


class InvalidModulus(ValueError):
    pass


# -- moment scan -------------------------------------------------------------------


@dataclass
class ScanResult:
    k_max: int
    n_max: int
    N_max: int
    margins: dict[tuple[int, int, int], int] = field(default_factory=dict)  # (k, N, n) -> M - N

    @property
    def violations(self) -> list[tuple[int, int, int]]:
        return sorted(key for key, v in self.margins.items() if v <= 0)

    @property
    def all_positive(self) -> bool:
        return not self.violations

    def rows(self) -> list[dict]:
        return [{"k": k, "N": N, "n": n, "margin": v} for (k, N, n), v in sorted(self.margins.items())]


def scan_conjecture(k_max: int, n_max: int, N_max: int) -> ScanResult:
    """``crank_moment - rank_moment`` for even ``k <= k_max``, ``N <= N_max``, ``1 <= n <= n_max``."""
    if k_max < 2 or k_max % 2:
        raise ValueError(f"k_max must be an even number >= 2, got {k_max}")
    if n_max < 1 or N_max < 1:
        raise ValueError("n_max and N_max must be positive")
    result = ScanResult(k_max, n_max, N_max)
    for N in range(1, N_max + 1):
        crank = gfs.crank_gf(N, n_max)
        rank = gfs.rank_gf(N, n_max)
        for k in range(2, k_max + 1, 2):
            cm, rm = crank.z_moment(k), rank.z_moment(k)
            for n in range(1, n_max + 1):
                result.margins[(k, N, n)] = int(cm.scalar(n) - rm.scalar(n))
    return result


# -- congruence --------------------------------------------------------------------


def _is_odd_prime(N: int) -> bool:
    if N < 3 or N % 2 == 0:
        return False
    return all(N % d for d in range(3, math.isqrt(N) + 1, 2))


@dataclass(frozen=True)
class CongruenceCase:
    k: int
    j: int
    n: int
    value: int

    def residue(self, modulus: int) -> int:
        return self.value % modulus


@dataclass
class CongruenceReport:
    N: int
    alpha: int
    k_max: int
    modulus: int
    cases: list[CongruenceCase]

    @property
    def failures(self) -> list[CongruenceCase]:
        return [c for c in self.cases if c.residue(self.modulus)]

    @property
    def passed(self) -> bool:
        return not self.failures


_P_TABLE = StatTable("p", method="generating-function")


def check_congruence(N: int, alpha: int, k_max: int) -> CongruenceReport:
    """Check ``p(L N^(alpha-1) k - j N, N) = 0 mod N^alpha`` with ``L = lcm(1..N)``,
    for ``1 <= k <= k_max`` and ``1 <= j <= (N-1)/2``."""
    if isinstance(N, bool) or not isinstance(N, int) or not _is_odd_prime(N):
        raise InvalidModulus(f"N must be an odd prime, got {N!r}")
    if alpha < 1:
        raise ValueError("alpha must be positive")
    if k_max < 1:
        raise ValueError("k_max must be positive")
    L = math.lcm(*range(1, N + 1))
    step = L * N ** (alpha - 1)
    modulus = N**alpha
    points = [(k, j, step * k - j * N) for k in range(1, k_max + 1) for j in range(1, (N - 1) // 2 + 1)]
    _P_TABLE.fill(N, max(n for _, _, n in points))
    cases = [CongruenceCase(k, j, n, _P_TABLE.get(n, N)) for k, j, n in points]
    return CongruenceReport(N, alpha, k_max, modulus, cases)


# -- asymptotics -------------------------------------------------------------------


def decimal_string(x: Fraction, digits: int = 12) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


@dataclass(frozen=True)
class AsymptoticSample:
    n: int
    spt: int
    ratio: Fraction

    @property
    def deviation(self) -> Fraction:
        return abs(self.ratio - 1)

    @property
    def decimal(self) -> str:
        return decimal_string(self.ratio)


_SPT_TABLE = StatTable("spt", method="generating-function")


def check_asymptotics(N: int, samples: list[int]) -> list[AsymptoticSample]:
    """``spt(n,N) (N!)^2 / n^N`` at each sample ``n``, with spt read off its generating function."""
    if N < 1:
        raise ValueError("N must be positive")
    if not samples or any(n < 1 for n in samples):
        raise ValueError("sample points must be positive integers")
    _SPT_TABLE.fill(N, max(samples))
    scale = math.factorial(N) ** 2
    out = []
    for n in samples:
        value = _SPT_TABLE.get(n, N)
        out.append(AsymptoticSample(n, value, Fraction(value * scale, n**N)))
    return out
