"""The identity catalog.

Each entry builds every side of an identity as a ``QSeries`` from a resolved
binding ``e`` (integers for N-like parameters, ``Monomial`` values for the
specialized ones).  Sides listed in one equation must all agree; oracle sides
come from brute-force enumeration and are capped at the order they can reach.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .. import gfs, parts, vparts
from ..qformal import Monomial, QSeries, qbinomial, sum_valuation
from .records import DEFAULT_POOL, FORMAL_Z, IdentityRecord, Param, Side

INF = math.inf
ONE = Monomial(1)
Z_POOL = (FORMAL_Z,) + DEFAULT_POOL
BILATERAL_Z = (FORMAL_Z, 2, Fraction(1, 2), -3)

# caps for oracle sides, chosen so a full run stays within minutes
SCALAR_CAP = 40
NS1_CAP = 18
MS2_CAP = 14


def m_(k: int = 0, c=1, z: int = 0) -> Monomial:
    return Monomial(c, z, k)


def S(Q: int, c=1, z: int = 0, k: int = 0) -> QSeries:
    return QSeries.from_monomial(Monomial(c, z, k), Q)


def qb(N: int, n: int, Q: int, r: int = 1) -> QSeries:
    return qbinomial(N, n, r, Q)


def fsum(Q: int, f: Callable[[int], QSeries], lo: int, hi: int) -> QSeries:
    total = QSeries.zero(Q)
    for n in range(lo, hi + 1):
        total = total + f(n)
    return total


def nonzero(name: str) -> tuple[str, Callable]:
    return (f"{name}=0 forbidden (division by {name})", lambda e: e[name].coeff != 0)


def not_one(name: str, why: str) -> tuple[str, Callable]:
    return (f"{name}=1 forbidden by {why}", lambda e: not (e[name].is_scalar and e[name].coeff == 1))


N_PARAM = Param("N", "int", lo=1, hi=8)


def Np(hi: int = 8, lo: int = 1) -> Param:
    return Param("N", "int", lo=lo, hi=hi)


def oracle(fn: Callable[[dict, int], int], cap: int = SCALAR_CAP, label: str = "oracle") -> Side:
    def build(e, Q):
        return QSeries.from_sequence([fn(e, n) for n in range(Q + 1)], Q)

    return Side(label, build, cap)


def oracle_laurent(fn: Callable[[dict, int], dict], cap: int, label: str) -> Side:
    def build(e, Q):
        return QSeries(Q, {n: fn(e, n) for n in range(Q + 1)})

    return Side(label, build, cap)


# -- shared pieces ---------------------------------------------------------------


def lambert_N(N: int, Q: int, zq: Monomial | None = None) -> QSeries:
    """sum_{n=1}^N (x q^n)/(1 - x q^n) with x = 1 (or the monomial ``zq`` / q)."""
    x = ONE if zq is None else zq

    def term(n):
        t = x.shift(n)
        return S(Q, t.coeff, t.z_exp, t.q_exp).div_factor(t)

    return fsum(Q, term, 1, N)


def running(start: QSeries, step: Callable[[QSeries, int], QSeries]) -> Callable[[int], QSeries]:
    """Term generator ``k -> T_k`` with ``T_k = step(T_{k-1}, k)``; must be called with k = k0, k0+1, ...

    Keeps the q-Pochhammer ratios of a summand incremental, O(Q) per term instead of O(kQ).
    """
    state = {"k": None, "value": start}

    def gen(k: int) -> QSeries:
        if state["k"] is not None:
            if k != state["k"] + 1:
                raise ValueError("running terms must be requested in order")
            state["value"] = step(state["value"], k)
        state["k"] = k
        return state["value"]

    return gen


def fine_F(N: int, n: int, c: Monomial, Q: int) -> QSeries:
    """F(q^N, q^n; c q^n) = sum_k (q^{N+1})_k / (q^{n+1})_k (c q^n)^k."""

    t = c.shift(n)
    term = running(
        QSeries.one(Q), lambda prev, k: (prev * t).mul_factor(m_(N + k)).div_factor(m_(n + k))
    )
    return sum_valuation(term, Q, 0)


def lpt_weight_sum(N: int, Q: int) -> QSeries:
    """sum_{n=1}^N [N,n] q^{n(n+1)} / ((q)_n (1 - q^n))."""
    return fsum(Q, lambda n: (qb(N, n, Q) * S(Q, k=n * (n + 1))).div_poch(m_(1), n).div_factor(m_(n)), 1, N)


def signed_n_sum(N: int, Q: int, c: Monomial | None = None, plus: bool = False) -> QSeries:
    """(1/(q)_N) sum [N,n] (-1)^{n-1} n q^{n(n+1)/2} / (1 - c q^n); no denominator when ``c`` is None."""

    def term(n):
        t = qb(N, n, Q) * S(Q, (-1) ** (n - 1) * n, 0, n * (n + 1) // 2)
        if c is not None:
            t = t.div_factor(c.shift(n))
        return t

    return fsum(Q, term, 1, N).div_poch(m_(1), N)


def nsc_alt(N: int, Q: int) -> QSeries:
    return signed_n_sum(N, Q, m_(0, -1))


def rank_sum(e, Q):
    return gfs.rank_gf(e["N"], Q) - QSeries.one(Q)


def crank(e, Q):
    return gfs.crank_gf(e["N"], Q)


def bilateral(N: int, z: Monomial, Q: int, exponent: Callable[[int], int]) -> QSeries:
    zinv = ONE / z

    def term(n):
        t = qb(N, n, Q) * S(Q, (-1) ** n, 0, exponent(n))
        t = t.mul_poch(m_(1), n).div_poch(m_(1), n + N)
        a = QSeries.one(Q).div_factor(z.shift(n))
        b = S(Q, zinv.coeff, zinv.z_exp, 0).div_factor(zinv.shift(n))
        return t * (a - b)

    one_minus_z = QSeries.one(Q) - S(Q, z.coeff, z.z_exp, z.q_exp)
    return gfs.p_series(N, Q) + one_minus_z * fsum(Q, term, 1, N)


def crank_alt_sum(N: int, z: Monomial, Q: int) -> QSeries:
    """(1-q)/(zq)_N + (1-q) sum_k [N,k] q^k z^{-k} / ((zq^{k+1})_{N-k} (z^{-1} q^{N-k+1})_k)."""
    zinv = ONE / z
    head = QSeries.one(Q).mul_factor(m_(1)).div_poch(z.shift(1), N)

    def term(k):
        t = zinv**k
        return (qb(N, k, Q) * S(Q, t.coeff, t.z_exp, k)).div_poch(z.shift(k + 1), N - k).div_poch(zinv.shift(N - k + 1), k)

    return head + fsum(Q, term, 1, N).mul_factor(m_(1))


def F_fin(N: int, alpha: Monomial, beta: Monomial, tau: Monomial, Q: int, r: int = 1) -> QSeries:
    """Finite Fine function F_N(alpha, beta; tau) in base q^r."""

    def term(n):
        t = tau**n
        s = qb(N, n, Q, r) * S(Q, t.coeff, t.z_exp, t.q_exp)
        s = s.mul_poch(alpha.shift(r), n, r).mul_poch(tau, N - n, r).mul_poch(m_(r), n, r)
        return s.div_poch(beta.shift(r), n, r).div_poch(tau, N, r)

    return fsum(Q, term, 0, N)


def s1_def(N: int, z: Monomial, Q: int) -> QSeries:
    def term(n):
        t = (z.shift(1)) ** n
        s = qb(N, n, Q, 2) * S(Q, t.coeff, t.z_exp, t.q_exp)
        s = s.mul_poch(m_(2), n, 2).mul_poch(m_(2), n - 1, 2).mul_poch(z.shift(1), N - n, 2)
        return s.div_poch(z.shift(2), n, 2).div_poch(z.shift(1), N, 2)

    return fsum(Q, term, 1, N)


def fin_garvan_rhs(N: int, z: Monomial, Q: int) -> QSeries:
    def term(n):
        z1 = z ** (2 * n - 1)
        z2 = z ** (2 * n)
        a = S(Q, z1.coeff, z1.z_exp, n * (2 * n - 1)).mul_poch(m_(1), 2 * n - 2).div_poch(z.shift(1), 2 * n - 1)
        b = S(Q, z2.coeff, z2.z_exp, n * (2 * n + 1)).mul_poch(m_(1), 2 * n - 1).div_poch(z.shift(1), 2 * n)
        return (qb(N, n, Q, 2) * (a + b)).mul_poch(m_(2), n, 2).div_poch(z.shift(2 * N + 1), n, 2)

    return fsum(Q, term, 1, N)


def fin_garvan_lhs(N: int, z: Monomial, Q: int) -> QSeries:
    def term(n):
        t = z**n
        s = qb(N, n, Q, 2) * S(Q, (-1) ** (n - 1) * t.coeff, t.z_exp, n * n)
        return s.mul_poch(m_(2), n, 2).div_poch(z.shift(1), n, 2).div_factor(z.shift(2 * n))

    return fsum(Q, term, 1, N)


def s1_inter(N: int, z: Monomial, Q: int) -> QSeries:
    def term(n):
        t = z**n
        s = qb(N, n, Q, 2) * S(Q, t.coeff, t.z_exp, 2 * n - 1)
        s = s.mul_poch(m_(1), n - 1, 2).mul_poch(m_(2), n, 2).mul_poch(z.shift(2), N - n, 2)
        return s.div_poch(z.shift(1), n, 2).div_poch(z.shift(2), N, 2)

    return fsum(Q, term, 1, N)


def s1_fine(N: int, z: Monomial, Q: int) -> QSeries:
    zq = z.shift(1)
    pre = S(Q, zq.coeff, zq.z_exp, zq.q_exp).mul_factor(m_(2 * N)).div_factor(z.shift(2)).div_factor(z.shift(2 * N - 1))
    return pre * F_fin(N - 1, ONE, z.shift(2), zq, Q, r=2)


def s1_simple(N: int, z: Monomial, Q: int) -> QSeries:
    zq = z.shift(1)
    pre = S(Q, zq.coeff, zq.z_exp, zq.q_exp).mul_poch(m_(2), N, 2).div_poch(z.shift(2), N, 2)

    def term(n):
        return S(Q, k=2 * n).mul_poch(z.shift(2), n, 2).div_poch(m_(2), n, 2).div_factor(z.shift(2 * n + 1))

    return pre * fsum(Q, term, 0, N - 1)


# -- oracle helpers ----------------------------------------------------------------


def _t_shift(e, n):
    N = e["N"]
    return parts.t(n, N) - parts.t(n - N, N)


def _ssptd_shift(parity):
    def fn(e, n):
        N = e["N"]
        return parts.ssptd(n, N, parity) - parts.ssptd(n - N, N, parity)

    return fn


@lru_cache(maxsize=None)
def _p_sigma_conv(n: int, N: int) -> int:
    return sum(parts.p(j, N) * parts.sigma_restricted(n - j, N) for j in range(n))


def _sum_of_tails_lhs(e, n):
    m = e["m"]
    total = 0
    for pi in parts.enum_distinct(n):
        if not pi.parts or pi.largest - pi.smallest > m - 1:
            continue
        xi = max(1, pi.largest - (m - 1))
        inner = sum((-1) ** (j - 1) for j in range(xi, pi.parts[-1] + 1))
        total += (-1) ** pi.count * inner
    return total


def _sum_of_tails_rhs(e, n):
    # half the signed count of overpartitions with largest part <= m
    total = sum((-1) ** pi.count * 2**pi.distinct_count for pi in parts.enum_partitions(n, e["m"]))
    if n == 0:
        return 0
    return Fraction(total, 2)


# -- catalog -----------------------------------------------------------------------


def _build() -> list[IdentityRecord]:
    R: list[IdentityRecord] = []

    def add(id, anchor, params, *equations, constraints=(), tier="core", group="", conditions="", full_limit=None):
        R.append(
            IdentityRecord(
                id=id,
                anchor=anchor,
                params=tuple(params),
                equations=tuple(tuple(eq) for eq in equations),
                constraints=tuple(constraints),
                tier=tier,
                group=group,
                conditions=conditions,
                full_limit=full_limit,
            )
        )

    # ---- group A: divisor-function identities
    kl_lhs = Side(
        "alternating",
        lambda e, Q: sum_valuation(
            lambda n: S(Q, (-1) ** (n - 1), 0, n * (n + 1) // 2).div_factor(m_(n)).div_poch(m_(1), n), Q, 1
        ),
    )
    kl_rhs = Side("lambert", lambda e, Q: sum_valuation(lambda n: S(Q, k=n).div_factor(m_(n)), Q, 1))
    add("kluyver", "Kluyver's divisor identity", [], [kl_lhs, kl_rhs], tier="infinite-truncated", group="A")
    add(
        "uchimura-triple",
        "Uchimura's additional representation of the divisor generating function",
        [],
        [
            Side("uchimura", lambda e, Q: sum_valuation(lambda n: S(Q, n, 0, n).mul_poch(m_(n + 1), INF), Q, 1)),
            kl_lhs,
            kl_rhs,
        ],
        tier="infinite-truncated",
        group="A",
    )
    hamme_rhs = Side(
        "binomial",
        lambda e, Q: fsum(
            Q, lambda n: (qb(e["N"], n, Q) * S(Q, (-1) ** (n - 1), 0, n * (n + 1) // 2)).div_factor(m_(n)), 1, e["N"]
        ),
    )
    lam = Side("lambert", lambda e, Q: lambert_N(e["N"], Q))
    add("hamme", "van Hamme's finite divisor identity", [N_PARAM], [lam, hamme_rhs], group="A")

    def guo_zeng_rhs(e, Q):
        N = e["N"]
        a = sum_valuation(lambda n: S(Q, n, 0, n).mul_poch(m_(n + 1), N - 1), Q, 1)
        b = sum_valuation(lambda n: S(Q, n, 0, n + N).mul_poch(m_(n + 1), N - 1), Q, 1)
        return a - b

    add("guo-zeng", "Guo and Zeng's finite analogue of Uchimura's identity", [N_PARAM], [lam, Side("difference", guo_zeng_rhs)], group="A")
    add(
        "guo-zeng-comb",
        "Guo and Zeng's refinement d(n,N) = t(n,N) - t(n-N,N)",
        [N_PARAM],
        [lam, oracle(lambda e, n: parts.d(n, e["N"]) if n else 0, label="d(n,N)"), oracle(_t_shift, label="t(n,N)-t(n-N,N)")],
        group="A",
    )

    # ---- group B: the three-parameter master identity and its corollaries
    def master_lhs(e, Q):
        N, a, b, c = e["N"], e["a"], e["b"], e["c"]

        def term(n):
            an = a**n
            s = qb(N, n, Q) * S(Q, an.coeff, an.z_exp, an.q_exp)
            s = s.mul_poch(b / a, n).mul_poch(m_(1), n).mul_poch(a, N - n)
            return s.div_factor(c.shift(n)).div_poch(b, n).div_poch(a, N)

        return fsum(Q, term, 1, N)

    def master_rhs(e, Q):
        N, a, b, c = e["N"], e["a"], e["b"], e["c"]

        def term(n):
            cn = c ** (n - 1)
            s = qb(N, n, Q) * S(Q, cn.coeff, cn.z_exp, cn.q_exp)
            s = s.mul_poch(b / c, n - 1).mul_poch(m_(1), n).mul_poch(c.shift(1), N - n)
            s = s.div_poch(b, n - 1).div_poch(c.shift(1), N)
            A, B = a.shift(n - 1), b.shift(n - 1)
            x = S(Q, A.coeff, A.z_exp, A.q_exp).div_factor(A) - S(Q, B.coeff, B.z_exp, B.q_exp).div_factor(B)
            return s * x

        return fsum(Q, term, 1, N)

    add(
        "master-abc",
        "finite analogue of the three-parameter generalization of Ramanujan's Entry 3",
        [N_PARAM, Param("a"), Param("b"), Param("c")],
        [Side("lhs", master_lhs), Side("rhs", master_rhs)],
        constraints=[nonzero("a"), not_one("a", "the (a)_N factor"), not_one("b", "the (b)_n factor"), nonzero("c")],
        group="B",
        conditions="a, b, c != q^{-n}",
    )

    def fgg_lhs(e, Q, c_key="c"):
        N, z = e["N"], e["z"]
        c = e[c_key] if c_key else None

        def term(n):
            zn = z**n
            s = qb(N, n, Q) * S(Q, (-1) ** (n - 1) * zn.coeff, zn.z_exp, n * (n + 1) // 2)
            s = s.mul_poch(m_(1), n).div_poch(z.shift(1), n)
            return s.div_factor(c.shift(n)) if c is not None else s.div_factor(m_(n))

        return fsum(Q, term, 1, N)

    def fgg_rhs(e, Q):
        N, z, c = e["N"], e["z"], e["c"]

        def term(n):
            cq = c.shift(1) ** n
            s = qb(N, n, Q) * S(Q, cq.coeff, cq.z_exp, cq.q_exp)
            s = s.mul_poch(z.shift(1) / c, n - 1).mul_poch(m_(1), n).mul_poch(c.shift(1), N - n)
            return s.div_poch(z.shift(1), n).div_poch(c.shift(1), N)

        return fsum(Q, term, 1, N) * (z / c)

    add(
        "fin-gen-garvan",
        "finite analogue of the generalized Garvan identity",
        [N_PARAM, Param("z", pool=Z_POOL), Param("c")],
        [Side("lhs", fgg_lhs), Side("rhs", fgg_rhs)],
        constraints=[nonzero("c"), nonzero("z")],
        group="B",
        conditions="z, c != q^{-n}",
    )

    def e3_lhs(e, Q):
        a, b, c = e["a"], e["b"], e["c"]

        # ratio_n = (b/a)_n a^n / (b)_n, built one factor at a time
        ratio = running(
            (QSeries.one(Q) * a).mul_factor(b / a).div_factor(b),
            lambda prev, n: (prev * a).mul_factor((b / a).shift(n - 1)).div_factor(b.shift(n - 1)),
        )
        return sum_valuation(lambda n: ratio(n).div_factor(c.shift(n)), Q, 1)

    def e3_rhs(e, Q):
        a, b, c = e["a"], e["b"], e["c"]

        ratio = running(QSeries.one(Q), lambda prev, m: (prev * c).mul_factor((b / c).shift(m - 1)).div_factor(b.shift(m - 1)))

        def term(m):
            s = ratio(m)
            A, B = a.shift(m), b.shift(m)
            return s * (S(Q, A.coeff, A.z_exp, A.q_exp).div_factor(A) - S(Q, B.coeff, B.z_exp, B.q_exp).div_factor(B))

        return sum_valuation(term, Q, 0)

    add(
        "entry3gen",
        "three-parameter generalization of Ramanujan's Entry 3 (a = x q, b = y q)",
        [Param("a", q_shift=1), Param("b", q_shift=1), Param("c")],
        [Side("lhs", e3_lhs), Side("rhs", e3_rhs)],
        constraints=[nonzero("a"), nonzero("c")],
        tier="infinite-truncated",
        group="B",
        conditions="|a| < 1, |b| < 1, |c| <= 1",
    )

    def ggi_lhs(e, Q, with_c=True):
        z = e["z"]
        c = e["c"] if with_c else ONE

        # (-1)^{n-1} z^n q^{n(n+1)/2} / (zq)_n, one factor per step
        ratio = running(
            (QSeries.one(Q) * z.shift(1)).div_factor(z.shift(1)),
            lambda prev, n: (prev * -z.shift(n)).div_factor(z.shift(n)),
        )
        return sum_valuation(lambda n: ratio(n).div_factor(c.shift(n)), Q, 1)

    def ggi_rhs(e, Q):
        z, c = e["z"], e["c"]

        term = running(
            (QSeries.one(Q) * c.shift(1)).div_factor(z.shift(1)),
            lambda prev, n: (prev * c.shift(1)).mul_factor((z.shift(1) / c).shift(n - 2)).div_factor(z.shift(n)),
        )
        return sum_valuation(term, Q, 1) * (z / c)

    add(
        "gen-garvan-inf",
        "generalization of Ramanujan's Entry 4 with an extra parameter c",
        [Param("z", pool=Z_POOL), Param("c")],
        [Side("lhs", ggi_lhs), Side("rhs", ggi_rhs)],
        constraints=[nonzero("c"), nonzero("z")],
        tier="infinite-truncated",
        group="B",
        conditions="|zq| < 1, |c| <= 1",
    )

    def re4_rhs(e, Q):
        z = e["z"]
        return sum_valuation(lambda n: (lambda t: S(Q, t.coeff, t.z_exp, n).div_factor(m_(n)))(z**n), Q, 1)

    add(
        "ram-entry4",
        "Ramanujan's Entry 4 in the Notebooks",
        [Param("z", pool=Z_POOL)],
        [Side("lhs", lambda e, Q: ggi_lhs(e, Q, with_c=False)), Side("rhs", re4_rhs)],
        tier="infinite-truncated",
        group="B",
    )
    add(
        "fin-ram-entry4",
        "finite analogue of Ramanujan's Entry 4",
        [N_PARAM, Param("z", pool=Z_POOL)],
        [Side("lhs", lambda e, Q: fgg_lhs(e, Q, c_key=None)), Side("rhs", lambda e, Q: lambert_N(e["N"], Q, e["z"]))],
        group="B",
    )

    def yanfu_lhs(e, Q):
        N, c = e["N"], e["c"]
        return fsum(
            Q, lambda n: (qb(N, n, Q) * S(Q, (-1) ** (n - 1), 0, n * (n + 1) // 2)).div_factor(c.shift(n)), 1, N
        )

    def yanfu_rhs(e, Q):
        N, c = e["N"], e["c"]
        ratio = QSeries.one(Q).mul_poch(m_(1), N).div_poch(c.shift(1), N)
        return (QSeries.one(Q) - ratio).div_factor(c)

    add(
        "fin-yanfu",
        "finite form of Yan and Fu's identity",
        [N_PARAM, Param("c")],
        [Side("lhs", yanfu_lhs), Side("rhs", yanfu_rhs)],
        constraints=[not_one("c", "the 1/(1-c) factor")],
        group="B",
    )

    def sigma_lhs(e, Q, c=None):
        N = e["N"]
        c = e["c"] if c is None else c

        def term(n):
            s = (qb(N, n, Q) * S(Q, k=n * (n + 1) // 2)).mul_poch(m_(1), n).div_poch(m_(1, -1), n)
            return s.div_factor(c.shift(n))

        return fsum(Q, term, 1, N)

    def sigma_rhs(e, Q):
        N, c = e["N"], e["c"]

        def term(n):
            cq = c.shift(1) ** n
            s = qb(N, n, Q) * S(Q, cq.coeff, cq.z_exp, cq.q_exp)
            s = s.mul_poch(m_(1, -1) / c, n - 1).mul_poch(m_(1), n).mul_poch(c.shift(1), N - n)
            return s.div_poch(m_(1, -1), n).div_poch(c.shift(1), N)

        return fsum(Q, term, 1, N) / c

    def sigma_N(e, Q):
        N = e["N"]
        return fsum(
            Q, lambda n: (qb(N, n, Q) * S(Q, k=n * (n + 1) // 2)).mul_poch(m_(1), n).div_poch(m_(1, -1), n), 0, N
        )

    add(
        "fin-sigma",
        "finite analogue of a generalization of Ramanujan's sigma(q)",
        [N_PARAM, Param("c")],
        [Side("lhs", sigma_lhs), Side("rhs", sigma_rhs)],
        [Side("sigma(q,N)", sigma_N), Side("1+lhs(c=0)", lambda e, Q: QSeries.one(Q) + sigma_lhs(e, Q, c=m_(0, 0)))],
        constraints=[nonzero("c")],
        group="B",
    )

    def e5_lhs(e, Q):
        N, z, c = e["N"], e["z"], e["c"]

        def term(n):
            zq = z.shift(1) ** n
            s = qb(N, n, Q) * S(Q, zq.coeff, zq.z_exp, zq.q_exp)
            s = s.mul_poch(m_(1), n - 1).mul_poch(m_(1), n).mul_poch(z.shift(1), N - n)
            return s.div_poch(z.shift(1), n).div_poch(z.shift(1), N).div_factor(c.shift(n))

        return fsum(Q, term, 1, N)

    def e5_rhs(e, Q):
        N, z, c = e["N"], e["z"], e["c"]

        def term(n):
            cn = c ** (n - 1)
            s = qb(N, n, Q) * S(Q, cn.coeff, cn.z_exp, cn.q_exp + n)
            s = s.mul_poch(z.shift(1) / c, n - 1).mul_poch(m_(1), n).mul_poch(c.shift(1), N - n)
            return s.div_poch(z.shift(1), n).div_poch(c.shift(1), N).div_factor(z.shift(n))

        return fsum(Q, term, 1, N) * z

    add(
        "entry5-fin",
        "finite generalization of Ramanujan's Entry 5",
        [N_PARAM, Param("z", pool=Z_POOL), Param("c")],
        [Side("lhs", e5_lhs), Side("rhs", e5_rhs)],
        constraints=[nonzero("c")],
        group="B",
    )

    def cl_lhs(e, Q):
        return fsum(Q, lambda n: S(Q, k=n).div_factor(m_(2 * n)), 1, e["N"])

    def cl_rhs(e, Q):
        N = e["N"]

        def term(n):
            s = qb(N, n, Q) * S(Q, (-1) ** (n - 1), 0, n)
            s = s.mul_poch(m_(1, -1), n - 1).mul_poch(m_(1, -1), N - n).div_poch(m_(1, -1), N)
            return s.div_factor(m_(n))

        return fsum(Q, term, 1, N)

    add(
        "corteel-lovejoy-gen",
        "generalization of an identity of Corteel and Lovejoy",
        [N_PARAM],
        [Side("lhs", cl_lhs), Side("rhs", cl_rhs)],
        group="B",
    )

    def la_lhs(e, Q):
        N = e["N"]

        def term(n):
            s = qb(N, n, Q) * S(Q, (-1) ** n, 0, n)
            s = s.mul_poch(m_(1), n - 1).mul_poch(m_(1), n).mul_poch(m_(1, -1), N - n)
            return s.div_poch(m_(1, -1), n - 1).div_poch(m_(1, -1), N).div_factor(m_(2 * n))

        return fsum(Q, term, 1, N)

    def la_mid(e, Q):
        N = e["N"]
        return sum_valuation(lambda n: S(Q, n * (-1) ** n, 0, n).mul_factor(m_(N * n)).div_factor(m_(n)), Q, 1)

    def la_rhs(e, Q):
        return fsum(Q, lambda n: S(Q, -1, 0, n).div_factor(m_(n, -1)).div_factor(m_(n, -1)), 1, e["N"])

    add(
        "lambert-alt",
        "alternating Lambert-series corollary of the finite Entry 5",
        [N_PARAM],
        [Side("lhs", la_lhs), Side("series", la_mid), Side("finite", la_rhs)],
        group="B",
    )

    # ---- group C: spt and the derivative identity
    def fgc_lhs(e, Q):
        N, c = e["N"], e["c"]
        first = signed_n_sum(N, Q, c)
        second = fsum(
            Q,
            lambda n: (qb(N, n, Q) * S(Q, k=n * (n + 1))).div_poch(m_(1), n).div_factor(m_(n)) * fine_F(N, n, c, Q),
            1,
            N,
        )
        return first + second

    def fgc_rhs(e, Q):
        N, c = e["N"], e["c"]
        ratio = QSeries.one(Q).mul_poch(m_(1), N).div_poch(c.shift(1), N)
        first = (ratio - QSeries.one(Q)).times_monomial(c).div_factor(c).div_factor(c).div_poch(m_(1), N)
        second = fsum(Q, lambda n: S(Q, k=n).mul_poch(c.shift(1), n).div_poch(m_(1), n).div_factor(m_(n)), 1, N)
        return first + second.div_poch(c, N + 1)

    add(
        "fingenc-master",
        "derivative identity with Fine's function (finite analogue)",
        [N_PARAM, Param("c", pool=DEFAULT_POOL + (0,))],
        [Side("lhs", fgc_lhs), Side("rhs", fgc_rhs)],
        constraints=[not_one("c", "the (1-c) factors")],
        group="C",
        conditions="|q| < 1, |c| < 1/|q|",
    )

    def tail_sum(N, Q):
        """sum_{n=1}^N [N,n] q^{n^2}/(q)_n sum_{k=1}^n q^k/(1-q^k)^2."""

        def inner(n):
            return fsum(Q, lambda k: S(Q, k=k).div_factor(m_(k)).div_factor(m_(k)), 1, n)

        return fsum(Q, lambda n: (qb(N, n, Q) * S(Q, k=n * n)).div_poch(m_(1), n) * inner(n), 1, N)

    def spt_series_rhs(e, Q):
        N = e["N"]
        return sum_valuation(lambda n: S(Q, n, 0, n).mul_factor(m_(N * n)).div_factor(m_(n)), Q, 1).div_poch(m_(1), N)

    add(
        "fin-spt-q",
        "generating-function form of the finite spt identity",
        [N_PARAM],
        [
            Side("lhs", lambda e, Q: signed_n_sum(e["N"], Q, ONE) + tail_sum(e["N"], Q)),
            Side("rhs", spt_series_rhs),
        ],
        group="C",
    )
    add(
        "spt-gf",
        "two generating functions of spt(n,N)",
        [N_PARAM],
        [
            Side("binomial", lambda e, Q: signed_n_sum(e["N"], Q, ONE)),
            Side("product", lambda e, Q: gfs.spt_series(e["N"], Q)),
            oracle(lambda e, n: parts.spt(n, e["N"]), label="spt(n,N)"),
        ],
        group="C",
    )

    def half_moment_gap(e, Q):
        N = e["N"]
        return (gfs.crank_gf(N, Q).z_moment(2) - gfs.rank_gf(N, Q).z_moment(2)).scale(Fraction(1, 2))

    def conv_minus_rank(e, Q):
        N = e["N"]
        conv = QSeries.from_sequence([_p_sigma_conv(n, N) for n in range(Q + 1)], Q)
        return conv - gfs.rank_gf(N, Q).z_moment(2).scale(Fraction(1, 2))

    add(
        "spt-moment",
        "finite analogue of Andrews' spt identity in terms of moments",
        [N_PARAM],
        [
            oracle(lambda e, n: parts.spt(n, e["N"]), label="spt(n,N)"),
            Side("(M2-N2)/2", half_moment_gap),
            Side("conv-N2/2", conv_minus_rank),
        ],
        group="C",
    )

    def sf_lhs(e, Q):
        N, c = e["N"], e["c"]

        def term(n):
            s = S(Q, (-1) ** (n - 1), 0, n * (n + 1) // 2).div_factor(c.shift(n)).div_poch(m_(1), n).div_poch(m_(1), N - n)
            return s * lambert_N(n, Q)

        return fsum(Q, term, 1, N)

    def sf_rhs(e, Q):
        N, c = e["N"], e["c"]
        return fsum(
            Q,
            lambda n: (qb(N, n, Q) * S(Q, k=n * (n + 1))).div_poch(m_(1), n).div_factor(m_(n)) * fine_F(N, n, c, Q),
            1,
            N,
        )

    add(
        "second-fines",
        "Fine-function evaluation used for the derivative identity",
        [N_PARAM, Param("c", pool=DEFAULT_POOL + (1, 0))],
        [Side("lhs", sf_lhs), Side("rhs", sf_rhs)],
        group="C",
        conditions="|cq| < 1",
    )
    add(
        "merca",
        "Merca's identity for the restricted divisor function",
        [N_PARAM],
        [Side("lhs", lambda e, Q: signed_n_sum(e["N"], Q)), lam],
        group="C",
    )

    def qn_rhs(e, Q):
        N = e["N"]
        return fsum(Q, lambda n: qb(N + 1, n, Q) * S(Q, (-1) ** (n - 1) * n, 0, n * (n - 1) // 2), 1, N + 1)

    add(
        "qN-id",
        "expansion of (q)_N from the z-derivative of the finite binomial theorem",
        [N_PARAM],
        [Side("(q)_N", lambda e, Q: QSeries.one(Q).mul_poch(m_(1), e["N"])), Side("sum", qn_rhs)],
        group="C",
    )

    def cm1_extra(N, Q):
        def term(k):
            r = QSeries.one(Q).mul_poch(m_(1, -1), k).div_poch(m_(1), k) - QSeries.one(Q)
            return (qb(N, k, Q) * S(Q, k=k * (k + 1) // 2)).div_factor(m_(k)) * r

        return fsum(Q, term, 1, N).div_poch(m_(1, -1), N).scale(Fraction(1, 2))

    def cm1_rhs_parts(N, Q):
        ratio = QSeries.one(Q).mul_poch(m_(1), N).div_poch(m_(1, -1), N)
        first = (QSeries.one(Q) - ratio).scale(Fraction(1, 4))
        second = fsum(Q, lambda n: S(Q, k=n).mul_poch(m_(1, -1), n).div_poch(m_(1), n).div_factor(m_(n)), 1, N)
        second = second.div_poch(m_(1, -1), N).scale(Fraction(1, 2))
        return first, second

    def cm1_lhs(e, Q):
        N = e["N"]
        return nsc_alt(N, Q) + cm1_extra(N, Q)

    def cm1_rhs(e, Q):
        N = e["N"]
        first, second = cm1_rhs_parts(N, Q)
        return first.div_poch(m_(1), N) + second

    def cm1_final_lhs(e, Q):
        N = e["N"]
        return (gfs.nsc_series(N, Q) + cm1_extra(N, Q)).mul_poch(m_(1), N)

    def cm1_final_rhs(e, Q):
        N = e["N"]
        first, second = cm1_rhs_parts(N, Q)
        return first + second.mul_poch(m_(1), N)

    add(
        "c-neg1",
        "the c = -1 case of the derivative identity and its N_SC form",
        [N_PARAM],
        [Side("lhs", cm1_lhs), Side("rhs", cm1_rhs)],
        [Side("lhs(N_SC)", cm1_final_lhs), Side("rhs", cm1_final_rhs)],
        group="C",
    )
    add(
        "c-zero",
        "the c = 0 case: divisors plus w(m,N) equals lpt(m,N)",
        [N_PARAM],
        [
            Side("lhs", lambda e, Q: lambert_N(e["N"], Q) + lpt_weight_sum(e["N"], Q)),
            Side(
                "rhs",
                lambda e, Q: fsum(Q, lambda n: S(Q, k=n).div_factor(m_(n)).div_poch(m_(1), n), 1, e["N"]),
            ),
            oracle(lambda e, n: parts.d(n, e["N"]) + parts.w_weight(n, e["N"]) if n else 0, label="d+w"),
            oracle(lambda e, n: parts.lpt(n, e["N"]), label="lpt(n,N)"),
        ],
        group="C",
    )

    # ---- group D: finite rank and crank
    add(
        "rank-gf",
        "finite rank generating function for S1 vector partitions",
        [N_PARAM],
        [Side("gf", rank_sum), oracle_laurent(lambda e, n: vparts.ns1_counts(n, e["N"]) if n else {}, NS1_CAP, "N_S1")],
        group="D",
    )
    add(
        "crank-gf",
        "finite crank generating function for S2 vector partitions",
        [Np(5)],
        [Side("gf", crank), oracle_laurent(lambda e, n: vparts.ms2_counts(n, e["N"]), MS2_CAP, "M_S2")],
        group="D",
    )

    def rank_bil_lhs(e, Q):
        N, z = e["N"], e["z"]

        def term(n):
            s = (qb(N, n, Q) * S(Q, k=n * n)).mul_poch(m_(1), n)
            return s.div_poch(z.shift(1), n).div_poch((ONE / z).shift(1), n)

        return fsum(Q, term, 0, N)

    add(
        "rank-bilateral",
        "finite analogue of the bilateral rank series",
        [N_PARAM, Param("z", pool=BILATERAL_Z)],
        [
            Side("lhs", rank_bil_lhs),
            Side("rhs", lambda e, Q: bilateral(e["N"], e["z"], Q, lambda n: n * (3 * n + 1) // 2)),
        ],
        constraints=[nonzero("z"), not_one("z", "the 1/(1-z q^0) pole")],
        group="D",
    )

    def crank_bil_lhs(e, Q):
        N, z = e["N"], e["z"]
        return QSeries.one(Q).mul_poch(m_(1), N).div_poch(z.shift(1), N).div_poch((ONE / z).shift(1), N)

    add(
        "crank-bilateral",
        "finite analogue of the bilateral crank series",
        [N_PARAM, Param("z", pool=BILATERAL_Z)],
        [
            Side("lhs", crank_bil_lhs),
            Side("rhs", lambda e, Q: bilateral(e["N"], e["z"], Q, lambda n: n * (n + 1) // 2)),
        ],
        constraints=[nonzero("z"), not_one("z", "the 1/(1-z q^0) pole")],
        group="D",
    )

    def rank_d2(e, Q):
        N = e["N"]
        return tail_sum(N, Q)

    def sq_lambert(e, Q):
        N = e["N"]
        return fsum(Q, lambda n: S(Q, k=n).div_factor(m_(n)).div_factor(m_(n)), 1, N).div_poch(m_(1), N)

    add(
        "moment-deriv",
        "second z-derivatives of the finite rank and crank generating functions",
        [N_PARAM],
        [Side("sum", rank_d2), Side("d2/2", lambda e, Q: rank_sum(e, Q).d2z_at_one().scale(Fraction(1, 2)))],
        [
            Side("series", spt_series_rhs),
            Side("finite", sq_lambert),
            Side("d2/2", lambda e, Q: crank(e, Q).d2z_at_one().scale(Fraction(1, 2))),
        ],
        group="D",
    )

    def cnzq1(e, Q):
        N, z = e["N"], e["z"]
        return crank_alt_sum(N, z, Q).div_factor(m_(N + 1))

    def cnzq2(e, Q):
        N, z = e["N"], e["z"]
        base = crank_alt_sum(N, z, Q)
        return base + base.times_monomial(m_(N + 1)).div_factor(m_(N + 1))

    add(
        "crank-alt",
        "alternative representations of the finite crank generating function",
        [N_PARAM, Param("z", pool=BILATERAL_Z)],
        [Side("gf", crank_bil_lhs), Side("cnzq1", cnzq1), Side("cnzq2", cnzq2)],
        constraints=[nonzero("z")],
        group="D",
    )

    # ---- group E: compact partitions, N_SC, d(n,N) and tails
    def bc_gf(e, Q):
        return fsum(Q, lambda n: S(Q, k=n).mul_poch(m_(1, -1), n - 1).div_factor(m_(n)), 1, e["N"])

    def bc_ssptd(e, Q):
        N = e["N"]
        a = sum_valuation(lambda n: S(Q, n, 0, n).mul_poch(m_(n + 1, -1), N - 1), Q, 1)
        b = sum_valuation(lambda n: S(Q, n, 0, n).mul_poch(m_(n + 1), N - 1), Q, 1)
        return (a + b).scale(Fraction(1, 2)).mul_factor(m_(N))

    add(
        "beck-chern",
        "finite analogue of the Beck-Chern theorem",
        [N_PARAM],
        [
            oracle(lambda e, n: parts.a_compact(n, e["N"]), label="a(n,N)"),
            Side("gf", bc_gf),
            Side("ssptd_o gf", bc_ssptd),
            oracle(_ssptd_shift("odd"), label="ssptd_o shift"),
        ],
        group="E",
    )
    add(
        "nsc-gf",
        "generating function of N_SC(n,N)",
        [N_PARAM],
        [Side("gf", lambda e, Q: gfs.nsc_series(e["N"], Q)), oracle(lambda e, n: vparts.count_NSC(n, e["N"]) if n else 0, label="N_SC")],
        group="E",
    )
    add(
        "nsc-alt",
        "alternative representation of the N_SC generating function",
        [N_PARAM],
        [Side("gf", lambda e, Q: gfs.nsc_series(e["N"], Q)), Side("binomial", lambda e, Q: nsc_alt(e["N"], Q))],
        group="E",
    )

    def ssptd_sum(N, Q):
        return fsum(Q, lambda n: (qb(N, n, Q) * S(Q, k=n * (n + 1) // 2)).div_factor(m_(n)), 1, N)

    add(
        "nsc-dnN",
        "relation between the N_SC and d(n,N) generating functions",
        [N_PARAM],
        [
            Side(
                "lhs",
                lambda e, Q: gfs.nsc_series(e["N"], Q).mul_poch(m_(1, -1), e["N"]).scale(2) - ssptd_sum(e["N"], Q),
            ),
            lam,
            oracle(lambda e, n: parts.d(n, e["N"]) if n else 0, label="d(n,N)"),
        ],
        group="E",
    )

    def dnn_lhs(e, Q):
        N = e["N"]
        a = fsum(Q, lambda n: S(Q, k=n).mul_poch(m_(1, -1), n).div_poch(m_(1), n).div_factor(m_(n)), 1, N)
        b = fsum(
            Q,
            lambda n: (qb(N, n, Q) * S(Q, k=n * (n + 3) // 2)).mul_poch(m_(1, -1), n - 1).div_poch(m_(1), n).div_factor(m_(n)),
            1,
            N,
        )
        return a - b.scale(2)

    add("dnN-rep", "new representation of the d(n,N) generating function", [N_PARAM], [Side("lhs", dnn_lhs), lam], group="E")

    def fine_eval_lhs(e, Q):
        N = e["N"]
        return sum_valuation(lambda n: S(Q, k=n).mul_poch(m_(0, -1), n).div_poch(m_(N + 1, -1), n), Q, 0)

    def fine_eval_rhs(e, Q):
        N = e["N"]
        r = QSeries.one(Q).mul_poch(m_(0, -1), N) - QSeries.one(Q)
        return r.mul_factor(m_(N, -1)).div_factor(m_(N))

    add(
        "fine-eval",
        "closed form of F(-1/q, -q^N; q)",
        [N_PARAM],
        [Side("F", fine_eval_lhs), Side("closed", fine_eval_rhs)],
        tier="infinite-truncated",
        group="E",
    )

    def se_lhs(e, Q):
        m, N = e["m"], e["N"]
        return fsum(Q, lambda n: S(Q, k=n).mul_poch(m_(0, -1), n).div_poch(m_(N, -1), n + 1), 0, m - 1)

    def se_rhs(e, Q):
        m, N = e["m"], e["N"]
        r = QSeries.one(Q).mul_poch(m_(0, -1), m).div_poch(m_(N, -1), m) - QSeries.one(Q)
        return r.div_factor(m_(N))

    M_PARAM = Param("m", "int", lo=1, hi=8)
    add(
        "sum-explicit",
        "explicit evaluation of a finite sum with (-1)_n",
        [N_PARAM, M_PARAM],
        [Side("sum", se_lhs), Side("closed", se_rhs)],
        group="E",
    )

    def atw_lhs(e, Q):
        m = e["m"]
        # the factored summand (q^{j+1})_{m-1} - 1 has valuation j+1
        return sum_valuation(
            lambda j: (QSeries.one(Q).mul_poch(m_(j + 1), m - 1) - QSeries.one(Q)).scale((-1) ** j), Q, 1
        )

    def atw_rhs(e, Q):
        m = e["m"]
        qm = QSeries.one(Q).mul_poch(m_(1), m - 1)
        return QSeries(Q, {0: Fraction(1, 2)}) + qm.div_poch(m_(0, -1), m) - qm

    add(
        "atw",
        "sum-of-tails identity found along the way to the explicit evaluation",
        [M_PARAM],
        [Side("tails", atw_lhs), Side("closed", atw_rhs)],
        tier="infinite-truncated",
        group="E",
    )

    def sot_lhs(e, Q):
        m = e["m"]
        return sum_valuation(
            lambda j: (QSeries.one(Q).mul_poch(m_(j), m) - QSeries.one(Q)).scale((-1) ** (j - 1)), Q, 1
        )

    def sot_rhs(e, Q):
        m = e["m"]
        r = QSeries.one(Q).mul_poch(m_(1), m).div_poch(m_(1, -1), m) - QSeries.one(Q)
        return r.scale(Fraction(1, 2))

    add(
        "sum-of-tails",
        "generalized sum-of-tails identity with its overpartition interpretation",
        [M_PARAM],
        [
            Side("tails", sot_lhs),
            Side("closed", sot_rhs),
            oracle(_sum_of_tails_lhs, label="distinct-window count"),
            oracle(_sum_of_tails_rhs, label="overpartitions/2"),
        ],
        tier="infinite-truncated",
        group="E",
    )

    def gauss_tails(e, Q):
        return sum_valuation(
            lambda j: (QSeries.one(Q).mul_poch(m_(j), INF) - QSeries.one(Q)).scale((-1) ** (j - 1)), Q, 1
        )

    def gauss_closed(e, Q):
        r = QSeries.one(Q).mul_poch(m_(1), INF).div_poch(m_(1, -1), INF) - QSeries.one(Q)
        return r.scale(Fraction(1, 2))

    def gauss_theta(e, Q):
        return sum_valuation(lambda j: S(Q, (-1) ** j, 0, j * j), Q, 1)

    add(
        "gauss-tails",
        "limiting sum-of-tails identity and Gauss' theta product",
        [],
        [Side("tails", gauss_tails), Side("closed", gauss_closed), Side("theta", gauss_theta)],
        tier="infinite-truncated",
        group="E",
    )
    add(
        "ssptd-gf",
        "generating function of ssptd(n,N) - ssptd(n-N,N)",
        [N_PARAM],
        [Side("gf", lambda e, Q: ssptd_sum(e["N"], Q)), oracle(_ssptd_shift("all"), label="ssptd shift")],
        group="E",
    )

    # ---- group F: base q^2 identities around the finite Garvan identity
    add(
        "fin-garvan",
        "finite analogue of Garvan's identity",
        [N_PARAM, Param("z", pool=Z_POOL)],
        [Side("lhs", lambda e, Q: fin_garvan_lhs(e["N"], e["z"], Q)), Side("rhs", lambda e, Q: fin_garvan_rhs(e["N"], e["z"], Q))],
        constraints=[nonzero("z")],
        group="F",
    )

    def gi_lhs(e, Q):
        z = e["z"]

        def term(n):
            t = z**n
            return S(Q, (-1) ** (n - 1) * t.coeff, t.z_exp, n * n).div_poch(z.shift(1), n, 2).div_factor(z.shift(2 * n))

        return sum_valuation(term, Q, 1)

    def gi_rhs(e, Q):
        z = e["z"]

        def term(n):
            t = z**n
            return S(Q, t.coeff, t.z_exp, n * (n + 1) // 2).mul_poch(m_(1), n - 1).div_poch(z.shift(1), n)

        return sum_valuation(term, Q, 1)

    add(
        "garvan-inf",
        "Garvan's identity",
        [Param("z", pool=Z_POOL)],
        [Side("lhs", gi_lhs), Side("rhs", gi_rhs)],
        constraints=[nonzero("z")],
        tier="infinite-truncated",
        group="F",
        conditions="|z| <= 1",
    )

    def pfd_rhs(e, Q):
        N, a, b, t = e["N"], e["alpha"], e["beta"], e["tau"]
        pre = QSeries.one(Q).mul_factor(t.shift(N)).mul_poch(a.shift(1), N).div_poch(b.shift(1), N)

        def term(n):
            aq = a.shift(1) ** n
            s = qb(N, n, Q) * S(Q, aq.coeff, aq.z_exp, aq.q_exp)
            return s.mul_poch(b / a, n).mul_poch(a.shift(1), N - n).div_poch(a.shift(1), N).div_factor(t.shift(n))

        return pre * fsum(Q, term, 0, N)

    FN_PARAMS = [N_PARAM, Param("alpha"), Param("beta"), Param("tau")]
    Fn = Side("F_N", lambda e, Q: F_fin(e["N"], e["alpha"], e["beta"], e["tau"], Q))
    add(
        "FN-pfd",
        "partial fraction decomposition of the finite Fine function",
        FN_PARAMS,
        [Fn, Side("pfd", pfd_rhs)],
        constraints=[not_one("tau", "the 1/(tau)_N factor"), nonzero("alpha")],
        group="F",
    )

    def rf_rhs(e, Q):
        N, al, be, ta = e["N"], e["alpha"], e["beta"], e["tau"]
        at = al * ta

        def term(n):
            tb = (ta * be) ** n
            s = qb(N, n, Q) * S(Q, tb.coeff, tb.z_exp, tb.q_exp + n * n)
            s = s.mul_poch(al.shift(1), n).mul_poch(m_(1), n).mul_poch((at / be).shift(1), n).mul_poch(at.shift(2), N - 1)
            s = s.mul_factor(at.shift(2 * n + 1))
            return s.div_poch(be.shift(1), n).div_poch(ta, n + 1).div_poch(at.shift(2), N + n)

        return fsum(Q, term, 0, N).mul_factor(ta.shift(N))

    add(
        "rogers-fine-fin",
        "finite analogue of the Rogers-Fine identity",
        FN_PARAMS,
        [Fn, Side("rogers-fine", rf_rhs)],
        constraints=[not_one("tau", "the 1/(tau)_N factor"), nonzero("beta")],
        group="F",
    )
    z_f = [N_PARAM, Param("z", pool=Z_POOL)]
    add(
        "s1-inter",
        "representations of the auxiliary sum S1(z,q,N)",
        z_f,
        [
            Side("definition", lambda e, Q: s1_def(e["N"], e["z"], Q)),
            Side("interchanged", lambda e, Q: s1_inter(e["N"], e["z"], Q)),
            Side("fine", lambda e, Q: s1_fine(e["N"], e["z"], Q)),
            Side("simple", lambda e, Q: s1_simple(e["N"], e["z"], Q)),
        ],
        constraints=[nonzero("z")],
        group="F",
    )
    add(
        "s1-ram",
        "finite analogue of a special case of Entry 1.7.2 of the Lost Notebook",
        z_f,
        [Side("definition", lambda e, Q: s1_def(e["N"], e["z"], Q)), Side("rhs", lambda e, Q: fin_garvan_rhs(e["N"], e["z"], Q))],
        constraints=[nonzero("z")],
        group="F",
    )

    def z1_a(e, Q):
        N = e["N"]
        return fsum(
            Q, lambda n: (qb(N, n, Q, 2) * S(Q, (-1) ** (n - 1), 0, n * n)).mul_poch(m_(2), n - 1, 2).div_poch(m_(1), n, 2), 1, N
        )

    def z1_b(e, Q):
        return fsum(Q, lambda n: S(Q, k=2 * n - 1).div_factor(m_(2 * n - 1)), 1, e["N"])

    def z1_c(e, Q):
        N = e["N"]
        return fsum(
            Q,
            lambda n: (qb(N, n, Q, 2) * S(Q, k=n)).mul_poch(m_(2), n - 1, 2).mul_poch(m_(1), N - n, 2).div_poch(m_(1), N, 2),
            1,
            N,
        )

    def z1_d(e, Q):
        N = e["N"]
        return fsum(
            Q,
            lambda n: (qb(N, n, Q, 2) * S(Q, k=n * (2 * n - 1)))
            .mul_poch(m_(2), n - 1, 2)
            .mul_factor(m_(4 * n - 1))
            .div_poch(m_(2 * N + 1), n, 2)
            .div_factor(m_(2 * n - 1)),
            1,
            N,
        )

    def z1_lh1(e, Q):
        N = e["N"]
        return fsum(
            Q,
            lambda n: S(Q, (-1) ** (n - 1), 0, n * n)
            .mul_poch(m_(2 * N - 2 * n + 2), n, 2)
            .div_factor(m_(2 * n))
            .div_poch(m_(1), n, 2),
            1,
            N,
        )

    add(
        "z1-chain",
        "z = 1 case of the finite Garvan identity and the odd-divisor interpretation",
        [N_PARAM],
        [
            Side("binomial", z1_a),
            Side("lambert", z1_b),
            Side("interchanged", z1_c),
            Side("ramanujan", z1_d),
            Side("S3 gf", z1_lh1),
            oracle(lambda e, n: vparts.count_S3(n, e["N"]) if n else 0, label="S3 count"),
            oracle(lambda e, n: parts.d1(n, e["N"]) if n else 0, label="d1(n,N)"),
        ],
        group="F",
    )

    def zq_a(e, Q):
        N = e["N"]
        r = QSeries.one(Q) - QSeries.one(Q).mul_poch(m_(2), N, 2).div_poch(m_(3), N, 2)
        return r.div_factor(m_(1))

    def zq_b(e, Q):
        N = e["N"]
        return fsum(
            Q, lambda n: (qb(N, n, Q, 2) * S(Q, (-1) ** (n - 1), 0, n * (n + 1))).div_factor(m_(2 * n + 1)), 1, N
        )

    def zq_c(e, Q):
        N = e["N"]
        return fsum(
            Q,
            lambda n: (qb(N, n, Q, 2) * S(Q, k=3 * n - 1)).mul_poch(m_(1), n - 1, 2).mul_poch(m_(3), N - n, 2).div_poch(m_(3), N, 2),
            1,
            N,
        )

    def zq_d(e, Q):
        return fsum(Q, lambda n: S(Q, k=2 * n).mul_poch(m_(2), n - 1, 2).div_poch(m_(3), n, 2), 1, e["N"])

    def zq_e(e, Q):
        N = e["N"]
        s = fsum(
            Q,
            lambda n: (qb(N, n, Q, 2) * S(Q, k=2 * n * n + n - 1))
            .mul_poch(m_(2), n - 1, 2)
            .mul_factor(m_(4 * n))
            .div_poch(m_(2 * N + 2), n, 2)
            .div_factor(m_(2 * n - 1))
            .div_factor(m_(2 * n + 1)),
            1,
            N,
        )
        return s.mul_factor(m_(1))

    add(
        "zq-chain",
        "z = q case of the finite Garvan identity",
        [N_PARAM],
        [Side("product", zq_a), Side("binomial", zq_b), Side("interchanged", zq_c), Side("simple", zq_d), Side("ramanujan", zq_e)],
        group="F",
    )

    # ---- group G: classical identities as a sanity tier
    def qbt_lhs(e, Q):
        a, z = e["a"], e["z"]
        term = running(QSeries.one(Q), lambda prev, n: (prev * z).mul_factor(a.shift(n - 1)).div_factor(m_(n)))
        return sum_valuation(term, Q, 0)

    def qbt_rhs(e, Q):
        a, z = e["a"], e["z"]
        return QSeries.one(Q).mul_poch(a * z, INF).div_poch(z, INF)

    add(
        "q-binomial-thm",
        "the q-binomial theorem (z = x q)",
        [Param("a"), Param("z", q_shift=1)],
        [Side("sum", qbt_lhs), Side("product", qbt_rhs)],
        tier="classical-sanity",
        group="G",
        conditions="|z| < 1",
    )

    def fb_sum(e, Q):
        N, z = e["N"], e["z"]
        return fsum(
            Q, lambda n: qb(N, n, Q) * (lambda t: S(Q, (-1) ** n * t.coeff, t.z_exp, n * (n - 1) // 2))(z**n), 0, N
        )

    def fb_inv_sum(e, Q):
        N, z = e["N"], e["z"]
        return sum_valuation(
            lambda j: qb(N + j - 1, j, Q) * (lambda t: S(Q, t.coeff, t.z_exp, j))(z**j), Q, 0
        )

    add(
        "finite-binomial",
        "finite q-binomial theorem and the expansion of 1/(zq)_N",
        [Np(10), Param("z", pool=Z_POOL)],
        [Side("(z)_N", lambda e, Q: QSeries.one(Q).mul_poch(e["z"], e["N"])), Side("sum", fb_sum)],
        [Side("1/(zq)_N", lambda e, Q: QSeries.one(Q).div_poch(e["z"].shift(1), e["N"])), Side("sum", fb_inv_sum)],
        tier="classical-sanity",
        group="G",
    )

    def chu_lhs(e, Q):
        M, a, d = e["M"], e["a"], e["d"]

        def term(n):
            s = S(Q, (-1) ** n, 0, (M - n) * (M - n - 1) // 2).mul_poch(m_(M - n + 1), n).mul_poch(a, n)
            return s.div_poch(m_(1), n).div_poch(d, n)

        return fsum(Q, term, 0, M)

    def chu_rhs(e, Q):
        M, a, d = e["M"], e["a"], e["d"]
        aM = a**M
        return S(Q, aM.coeff, aM.z_exp, aM.q_exp + M * (M - 1) // 2).mul_poch(d / a, M).div_poch(d, M)

    add(
        "q-chu",
        "q-Chu-Vandermonde summation (both sides times q^{M(M-1)/2})",
        [Param("M", "int", lo=0, hi=8), Param("a"), Param("d")],
        [Side("sum", chu_lhs), Side("closed", chu_rhs)],
        constraints=[nonzero("a"), not_one("d", "the (d)_n factor")],
        tier="classical-sanity",
        group="G",
    )

    def chuv_lhs(e, Q):
        N, a, c = e["N"], e["a"], e["c"]

        def term(n):
            ac = (a * c) ** n
            s = qb(N, n, Q) * S(Q, ac.coeff, ac.z_exp, ac.q_exp + n * (n + 1) // 2)
            return s.mul_poch(m_(0, -1) / a, n).div_poch(c.shift(1), n)

        return fsum(Q, term, 0, N)

    def chuv_rhs(e, Q):
        N, a, c = e["N"], e["a"], e["c"]
        return QSeries.one(Q).mul_poch((a * c * m_(1, -1)), N).div_poch(c.shift(1), N)

    add(
        "chu-variant",
        "a q-Chu-Vandermonde variant with a quadratic exponent",
        [N_PARAM, Param("a"), Param("c")],
        [Side("sum", chuv_lhs), Side("closed", chuv_rhs)],
        constraints=[nonzero("a")],
        tier="classical-sanity",
        group="G",
    )

    def ry_lhs(e, Q):
        N, al, ta = e["N"], e["alpha"], e["tau"]

        def term(n):
            t = ta.shift(1) ** n
            s = qb(N, n, Q) * S(Q, t.coeff, t.z_exp, t.q_exp)
            return s.mul_poch(al * m_(0, -1), n).div_poch(ta.shift(N + 1 - n), n)

        return fsum(Q, term, 0, N)

    def ry_rhs(e, Q):
        N, al, ta = e["N"], e["alpha"], e["tau"]
        return QSeries.one(Q).mul_poch((al * ta * m_(1, -1)), N).div_poch(ta.shift(1), N)

    add(
        "rowell-yee",
        "Rowell and Yee's special case of the finite Heine transformation",
        [N_PARAM, Param("alpha"), Param("tau")],
        [Side("sum", ry_lhs), Side("closed", ry_rhs)],
        tier="classical-sanity",
        group="G",
    )

    def gz_lhs(e, Q):
        N, x = e["N"], e["x"]
        return lambert_N(N, Q) - lambert_N(N - 1, Q, x)

    def gz_rhs(e, Q):
        N, x = e["N"], e["x"]
        head = S(Q, x.coeff, x.z_exp, x.q_exp).div_factor(x)

        def term(k):
            xk = x**k
            s = qb(N, k, Q) * S(Q, xk.coeff, xk.z_exp, xk.q_exp)
            return s.mul_poch(m_(1) / x, k).mul_poch(x, N - k).div_factor(m_(k))

        return head - fsum(Q, term, 1, N).div_poch(x, N)

    add(
        "guo-zhang",
        "Guo and Zhang's consequence of Watson's transformation",
        [N_PARAM, Param("x")],
        [Side("lhs", gz_lhs), Side("rhs", gz_rhs)],
        constraints=[nonzero("x"), not_one("x", "the 1/(1-x) factor")],
        tier="classical-sanity",
        group="G",
    )

    def fl_lhs(e, Q):
        m, z, x = e["m"], e["z"], e["x"]
        mx = x * m_(1, -1)
        return fsum(
            Q, lambda j: (lambda t: S(Q, t.coeff, t.z_exp, t.q_exp))(mx**j).mul_poch(z, j).div_poch(m_(1), j), 0, m
        )

    def fl_rhs(e, Q):
        m, z, x = e["m"], e["z"], e["x"]
        mx = x * m_(1, -1)

        def term(j):
            t = mx**j
            s = qb(m, j, Q) * S(Q, t.coeff, t.z_exp, t.q_exp)
            return s.mul_poch(m_(0, -1) / x, j).div_factor(z.shift(j))

        return fsum(Q, term, 0, m).mul_poch(z, m + 1).div_poch(m_(1), m)

    add(
        "fu-lascoux",
        "Fu and Lascoux's identity",
        [Param("m", "int", lo=0, hi=8), Param("z"), Param("x")],
        [Side("lhs", fl_lhs), Side("rhs", fl_rhs)],
        constraints=[nonzero("x"), not_one("z", "the 1/(1-z) term")],
        tier="classical-sanity",
        group="G",
    )
    return R


@lru_cache(maxsize=1)
def _records() -> tuple[IdentityRecord, ...]:
    return tuple(sorted(_build(), key=lambda r: r.id))


def catalog() -> list[IdentityRecord]:
    return list(_records())


@lru_cache(maxsize=1)
def catalog_map() -> dict[str, IdentityRecord]:
    return {r.id: r for r in _records()}


def lookup(identity: str) -> IdentityRecord | None:
    return catalog_map().get(identity)
