"""Generating functions shared by the oracles, the catalog and the checkers."""

from __future__ import annotations

from functools import lru_cache

from .qformal import Monomial, QSeries, qbinomial

Z = Monomial(1, 1, 0)
ZINV = Monomial(1, -1, 0)


def q_(k: int) -> Monomial:
    return Monomial(1, 0, k)


@lru_cache(maxsize=256)
def p_series(N: int, Q: int) -> QSeries:
    """``1/(q)_N``."""
    return QSeries.one(Q).div_poch(q_(1), N)


@lru_cache(maxsize=256)
def spt_series(N: int, Q: int) -> QSeries:
    """``sum_{n=1}^N q^n / ((1-q^n)^2 (q^{n+1})_{N-n})``."""
    total = QSeries.zero(Q)
    for n in range(1, N + 1):
        if n > Q:
            break
        term = QSeries.from_monomial(q_(n), Q)
        term = term.div_factor(q_(n)).div_factor(q_(n)).div_poch(q_(n + 1), N - n)
        total = total + term
    return total


@lru_cache(maxsize=256)
def rank_gf(N: int, Q: int) -> QSeries:
    """``1 + sum_{j=1}^N [N,j] q^{j^2} (q)_j / ((zq)_j (q/z)_j)``; the constant is the empty object."""
    total = QSeries.one(Q)
    for j in range(1, N + 1):
        if j * j > Q:
            break
        term = qbinomial(N, j, 1, Q).times_monomial(q_(j * j)).mul_poch(q_(1), j)
        term = term.div_poch(Z.shift(1), j).div_poch(ZINV.shift(1), j)
        total = total + term
    return total


@lru_cache(maxsize=256)
def crank_gf(N: int, Q: int) -> QSeries:
    """``(q)_N / ((zq)_N (q/z)_N)``."""
    return QSeries.one(Q).mul_poch(q_(1), N).div_poch(Z.shift(1), N).div_poch(ZINV.shift(1), N)


@lru_cache(maxsize=256)
def nsc_series(N: int, Q: int) -> QSeries:
    """``sum_{n=1}^N q^n (q^{n+1})_{N-n} / (q^{2n}; q^2)_{N-n+1}``."""
    total = QSeries.zero(Q)
    for n in range(1, N + 1):
        if n > Q:
            break
        term = QSeries.from_monomial(q_(n), Q).mul_poch(q_(n + 1), N - n).div_poch(q_(2 * n), N - n + 1, base=2)
        total = total + term
    return total
