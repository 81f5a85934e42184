"""Catalog record types, parameter grids and the verification driver."""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Any, Callable, Iterable, Literal, Mapping

from ..qformal import Monomial, QSeries, ZLaurent, as_rational, render_rational

__all__ = [
    "DEFAULT_POOL",
    "UnknownIdentity",
    "ConstraintViolated",
    "Param",
    "Side",
    "IdentityRecord",
    "VerificationReport",
    "Binding",
    "parse_value",
    "render_binding",
    "verify",
    "verify_all",
    "perturbed",
    "worker_count",
    "report_key",
]

DEFAULT_POOL: tuple = (2, Fraction(1, 2), Fraction(-1, 3), Fraction(3, 5), -3)

FORMAL_Z = "z"

Tier = Literal["core", "infinite-truncated", "classical-sanity"]
Profile = Literal["quick", "full"]
Binding = Mapping[str, Any]


class UnknownIdentity(KeyError):
    pass


class ConstraintViolated(ValueError):
    pass


def parse_value(text: str) -> int | Fraction | str:
    """Parse a CLI parameter value: an integer, a rational ``p/q``, or ``z`` for formal z."""
    text = text.strip()
    if text == FORMAL_Z:
        return FORMAL_Z
    return as_rational(Fraction(text))


def _render_value(v) -> str | int:
    if isinstance(v, str):
        return v
    if isinstance(v, int):
        return v
    return render_rational(v)


def render_binding(binding: Binding) -> dict[str, str | int]:
    return {k: _render_value(binding[k]) for k in sorted(binding)}


@dataclass(frozen=True)
class Param:
    """A named parameter.

    ``kind`` is ``"int"`` for N-like integers (ranging over ``lo..hi``; the quick
    profile stops at ``min(hi, quick_hi)``) or ``"rational"`` for a specialization
    drawn from ``pool``.  A rational value ``v`` binds the monomial ``v * q**q_shift``;
    the pool entry ``"z"`` stands for the formal variable.
    """

    name: str
    kind: Literal["int", "rational"] = "rational"
    pool: tuple = DEFAULT_POOL
    q_shift: int = 0
    lo: int = 1
    hi: int = 8
    quick_hi: int = 4

    def resolve(self, value):
        if self.kind == "int":
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConstraintViolated(f"{self.name} must be an integer")
            return value
        if value == FORMAL_Z:
            return Monomial(1, 1, self.q_shift)
        return Monomial(as_rational(value), 0, self.q_shift)

    def values(self, profile: Profile) -> list:
        if self.kind == "int":
            hi = self.hi if profile == "full" else min(self.hi, self.quick_hi)
            return list(range(self.lo, hi + 1))
        return list(self.pool)


@dataclass(frozen=True)
class Side:
    """One side of an identity; ``cap`` bounds the order an oracle side can reach."""

    label: str
    build: Callable[[dict, int], QSeries]
    cap: int | None = None

    def series(self, env: dict, Q: int) -> QSeries:
        order = Q if self.cap is None else min(Q, self.cap)
        s = self.build(env, order)
        if s.order < order:
            raise RuntimeError(f"side {self.label!r} returned order {s.order} < {order}")
        return s.truncate(order)


Constraint = tuple[str, Callable[[dict], bool]]


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    anchor: str
    params: tuple[Param, ...]
    equations: tuple[tuple[Side, ...], ...]
    constraints: tuple[Constraint, ...] = ()
    tier: Tier = "core"
    group: str = ""
    conditions: str = ""
    full_limit: int | None = None  # cap on the number of rational combinations in the full grid

    @property
    def lhs(self) -> Side:
        return self.equations[0][0]

    @property
    def rhs(self) -> Side:
        return self.equations[0][1]

    def param(self, name: str) -> Param:
        for p in self.params:
            if p.name == name:
                return p
        raise KeyError(name)

    def resolve(self, binding: Binding) -> dict:
        names = {p.name for p in self.params}
        extra = set(binding) - names
        if extra:
            raise ConstraintViolated(f"unknown parameter(s) for {self.id}: {', '.join(sorted(extra))}")
        missing = names - set(binding)
        if missing:
            raise ConstraintViolated(f"missing parameter(s) for {self.id}: {', '.join(sorted(missing))}")
        env = {p.name: p.resolve(binding[p.name]) for p in self.params}
        for p in self.params:
            if p.kind == "int" and env[p.name] < p.lo:
                raise ConstraintViolated(f"{p.name}={env[p.name]} below minimum {p.lo}")
        for message, ok in self.constraints:
            if not ok(env):
                raise ConstraintViolated(message)
        return env

    def admissible(self, binding: Binding) -> bool:
        try:
            self.resolve(binding)
        except ConstraintViolated:
            return False
        return True

    def grid(self, profile: Profile) -> list[dict]:
        ints = [p for p in self.params if p.kind == "int"]
        rats = [p for p in self.params if p.kind != "int"]
        combos = [
            dict(zip((p.name for p in rats), values)) for values in itertools.product(*(p.values(profile) for p in rats))
        ]
        # all-distinct specializations first: repeated values tend to make sides vanish identically
        combos.sort(key=lambda b: len(b) - len({repr(v) for v in b.values()}))
        out = []
        int_values = list(itertools.product(*(p.values(profile) for p in ints)))
        if profile == "quick":
            # one specialization: the first combination admissible for every integer point
            for b in combos:
                cands = [{**b, **dict(zip((p.name for p in ints), iv))} for iv in int_values]
                if all(self.admissible(c) for c in cands):
                    return cands
            return []
        kept = 0
        for b in combos:
            cands = [{**b, **dict(zip((p.name for p in ints), iv))} for iv in int_values]
            cands = [c for c in cands if self.admissible(c)]
            if not cands:
                continue
            out.extend(cands)
            kept += 1
            if self.full_limit is not None and kept >= self.full_limit:
                break
        return out


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    binding: dict
    order: int
    passed: bool
    mismatch_n: int | None = None
    lhs: ZLaurent | None = None
    rhs: ZLaurent | None = None
    millis: float = 0.0
    detail: str = ""

    def __post_init__(self) -> None:
        if not self.passed and (self.mismatch_n is None or self.lhs is None or self.rhs is None):
            raise ValueError("a failing report must carry the mismatch order and both coefficients")

    def as_dict(self, timing: bool = True) -> dict:
        out = {
            "identity": self.identity,
            "binding": render_binding(self.binding),
            "order": self.order,
            "pass": self.passed,
            "firstMismatch": None
            if self.passed
            else {"n": self.mismatch_n, "lhs": self.lhs.render(), "rhs": self.rhs.render()},
        }
        if timing:
            out["millis"] = round(self.millis, 3)
        return out


def _lookup(identity) -> IdentityRecord:
    if isinstance(identity, IdentityRecord):
        return identity
    from .entries import catalog_map

    try:
        return catalog_map()[identity]
    except KeyError:
        raise UnknownIdentity(identity) from None


def verify(identity: str | IdentityRecord, binding: Binding, Q: int) -> VerificationReport:
    """Build every side of ``identity`` under ``binding`` and compare through ``q^Q``."""
    record = _lookup(identity)
    if Q < 0:
        raise ValueError("order must be non-negative")
    env = record.resolve(binding)
    start = time.perf_counter()
    order = Q
    worst = None
    for ei, equation in enumerate(record.equations):
        built = [side.series(env, Q) for side in equation]
        eq_order = min(s.order for s in built)
        order = min(order, eq_order)
        ref = built[0]
        for si in range(1, len(built)):
            other = built[si]
            for n in range(eq_order + 1):
                a, b = ref.coeff(n), other.coeff(n)
                if a != b:
                    if worst is None or n < worst[0]:
                        label = f"equation {ei}: {equation[0].label} vs {equation[si].label}"
                        worst = (n, a, b, label)
                    break
    millis = (time.perf_counter() - start) * 1000
    if worst is not None:
        n, a, b, label = worst
        return VerificationReport(record.id, dict(binding), order, False, n, a, b, millis, label)
    return VerificationReport(record.id, dict(binding), order, True, millis=millis)


def perturbed(record: IdentityRecord, k: int, side: int = 1, equation: int = 0, amount=1) -> IdentityRecord:
    """Copy of ``record`` with ``amount * q^k`` added to one side builder."""
    eq = list(record.equations[equation])
    target = eq[side]
    base = target.build

    def build(env, Q, _base=base):
        s = _base(env, Q)
        return s + QSeries.from_monomial(Monomial(amount, 0, k), s.order)

    eq[side] = replace(target, build=build, label=target.label + f"+q^{k}")
    equations = list(record.equations)
    equations[equation] = tuple(eq)
    return replace(record, equations=tuple(equations))


def worker_count() -> int:
    raw = os.environ.get("FINPART_THREADS", "0").strip() or "0"
    try:
        n = int(raw)
    except ValueError:
        n = 0
    if n <= 0:
        n = os.cpu_count() or 1
    return n


PROFILE_ORDER = {"quick": 30, "full": 60}


def report_key(report: VerificationReport) -> tuple:
    """Sort key: identity id, then the binding with integers ordered numerically."""
    items = render_binding(report.binding).items()
    return report.identity, tuple((k, 0, v, "") if isinstance(v, int) else (k, 1, 0, v) for k, v in items)


def _run_task(task: tuple[str, dict, int]) -> VerificationReport:
    identity, binding, Q = task
    return verify(identity, binding, Q)


def verify_all(
    profile: Profile = "quick",
    records: Iterable[IdentityRecord] | None = None,
    Q: int | None = None,
    workers: int | None = None,
) -> list[VerificationReport]:
    """Verify every catalog entry over its grid; reports are sorted by identity id.

    The quick profile leaves out the classical-sanity tier.
    """
    from .entries import catalog, catalog_map

    if profile not in PROFILE_ORDER:
        raise ValueError(f"unknown profile {profile!r}")
    Q = PROFILE_ORDER[profile] if Q is None else Q
    recs = list(catalog() if records is None else records)
    if profile == "quick":
        recs = [r for r in recs if r.tier != "classical-sanity"]
    known = catalog_map()
    tasks = []
    local = []
    for r in recs:
        for b in r.grid(profile):
            if known.get(r.id) is r:
                tasks.append((r.id, b, Q))
            else:
                local.append((r, b))
    workers = worker_count() if workers is None else workers
    reports: list[VerificationReport] = [verify(r, b, Q) for r, b in local]
    if workers <= 1 or len(tasks) < 2:
        reports.extend(_run_task(t) for t in tasks)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports.extend(pool.map(_run_task, tasks, chunksize=1))
    reports.sort(key=report_key)
    return reports
