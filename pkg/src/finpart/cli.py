"""Command-line front end: ``finpart <subcommand> ...``.

Exit codes: 0 when everything checked passes, 1 on any mismatch or violated
check, 2 on usage errors (bad flags, unknown identity, rejected binding).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import parts, vparts
from .idcat import (
    ConstraintViolated,
    InvalidModulus,
    UnknownIdentity,
    VerificationReport,
    catalog,
    check_asymptotics,
    check_congruence,
    lookup,
    parse_value,
    render_binding,
    scan_conjecture,
    verify,
    verify_all,
)
from .idcat.checks import decimal_string
from .idcat.records import PROFILE_ORDER, report_key
from .qformal import render_rational

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    pass


STATISTICS: dict[str, Callable[[int, int], int]] = {
    "p": parts.p,
    "spt": parts.spt,
    "lpt": parts.lpt,
    "d": parts.d,
    "d1": parts.d1,
    "sigma": parts.sigma_restricted,
    "t": parts.t,
    "a": parts.a_compact,
    "ssptd": lambda n, N: parts.ssptd(n, N, "all"),
    "ssptd-odd": lambda n, N: parts.ssptd(n, N, "odd"),
    "w": parts.w_weight,
    "nsc": vparts.count_NSC,
    "s3": vparts.count_S3,
}


@dataclass
class RunConfig:
    command: str
    identity: str | None = None
    statistic: str | None = None
    N: list[int] = field(default_factory=list)
    n_max: int | None = None
    order: int | None = None
    params: dict = field(default_factory=dict)
    profile: str = "quick"
    fmt: str = "text"
    output: str | None = None
    timing: bool = True
    method: str = "enumeration"
    k_max: int = 12
    N_max: int = 5
    alpha: int = 1
    samples: list[int] = field(default_factory=list)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(flag: str, minimum: int = 1):
    def conv(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{flag} expects an integer, got {text!r}") from None
        if v < minimum:
            raise argparse.ArgumentTypeError(f"{flag} must be >= {minimum}, got {v}")
        return v

    return conv


def _int_range(text: str) -> list[int]:
    """``"3"`` or ``"1..5"``."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--N expects an integer or a range a..b, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"--N range {text!r} is empty or not positive")
    return list(range(lo, hi + 1))


def _int_list(text: str) -> list[int]:
    try:
        values = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"--samples expects comma-separated integers, got {text!r}") from None
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError("--samples must list positive integers")
    return values


def _binding_item(text: str) -> tuple[str, object]:
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"--param expects name=value, got {text!r}")
    try:
        return name.strip(), parse_value(value)
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"--param {name}: cannot parse {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="finpart", description="Exact checks of finite partition identities.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)

    def common(p, order_default=None):
        p.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
        p.add_argument("--output", "-o", help="write to this file instead of standard output")
        if order_default is not None:
            p.add_argument(
                "--order", "-Q", type=_positive("--order"), default=order_default, help=f"truncation order (default {order_default})"
            )

    p = sub.add_parser("verify", help="verify one identity under one binding")
    p.add_argument("--id", dest="identity", required=True)
    p.add_argument("--N", type=_positive("--N"), help="shorthand for --param N=...")
    p.add_argument("--param", action="append", type=_binding_item, default=[], metavar="NAME=VALUE")
    p.add_argument("--no-timing", dest="timing", action="store_false")
    common(p, order_default=60)

    p = sub.add_parser("verify-all", help="verify every catalog entry over its default grid")
    p.add_argument("--profile", choices=tuple(PROFILE_ORDER), default="quick", help="quick: Q=30, N<=4; full: Q=60, N<=8")
    p.add_argument("--order", "-Q", type=_positive("--order"), default=None, help="override the profile order")
    p.add_argument("--no-timing", dest="timing", action="store_false")
    p.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    p.add_argument("--output", "-o")

    p = sub.add_parser("table", help="tabulate a partition statistic")
    p.add_argument("--fn", dest="statistic", required=True, choices=sorted(STATISTICS))
    p.add_argument("--N", type=_int_range, required=True, help="an integer or a range a..b")
    p.add_argument("--max-n", dest="n_max", type=_positive("--max-n", 0), required=True)
    p.add_argument("--method", choices=("enumeration", "generating-function"), default="enumeration", help="p and spt only")
    common(p)

    p = sub.add_parser("scan-conjecture", help="positivity of crank minus rank moments")
    p.add_argument("--k-max", type=_positive("--k-max", 2), default=12)
    p.add_argument("--n-max", dest="n_max", type=_positive("--n-max"), default=20)
    p.add_argument("--N-max", dest="N_max", type=_positive("--N-max"), default=5)
    common(p)

    p = sub.add_parser("check-congruence", help="the restricted-partition congruence modulo N^alpha")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--alpha", type=_positive("--alpha"), default=1)
    p.add_argument("--k-max", type=_positive("--k-max"), default=200)
    common(p)

    p = sub.add_parser("asymptotics", help="spt(n,N) (N!)^2 / n^N at sample points")
    p.add_argument("--N", type=_positive("--N"), required=True)
    p.add_argument("--samples", type=_int_list, required=True, help="comma-separated n values")
    common(p)

    p = sub.add_parser("list", help="list catalog identities")
    common(p)
    return parser


def parse_args(argv: Sequence[str]) -> RunConfig:
    args = build_parser().parse_args(list(argv))
    if args.command is None:
        raise UsageError("a subcommand is required")
    cfg = RunConfig(command=args.command, fmt=args.fmt, output=args.output)
    if args.command == "verify":
        cfg.identity = args.identity
        cfg.order = args.order
        cfg.timing = args.timing
        cfg.params = dict(args.param)
        if args.N is not None:
            cfg.params["N"] = args.N
    elif args.command == "verify-all":
        cfg.profile, cfg.order, cfg.timing = args.profile, args.order, args.timing
    elif args.command == "table":
        if args.method != "enumeration" and args.statistic not in ("p", "spt"):
            raise UsageError("--method generating-function applies to --fn p and --fn spt only")
        cfg.statistic, cfg.N, cfg.n_max, cfg.method = args.statistic, args.N, args.n_max, args.method
    elif args.command == "scan-conjecture":
        if args.k_max % 2:
            raise UsageError(f"--k-max must be even, got {args.k_max}")
        cfg.k_max, cfg.n_max, cfg.N_max = args.k_max, args.n_max, args.N_max
    elif args.command == "check-congruence":
        cfg.N, cfg.alpha, cfg.k_max = [args.N], args.alpha, args.k_max
    elif args.command == "asymptotics":
        cfg.N, cfg.samples = [args.N], args.samples
    return cfg


# -- rendering ---------------------------------------------------------------------


def _json(obj) -> bytes:
    return (json.dumps(obj, indent=2) + "\n").encode()


def _csv(header: list[str], rows: list[list]) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().encode()


def _binding_text(binding: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in render_binding(binding).items())


REPORT_COLUMNS = ["identity", "binding", "order", "pass", "mismatch_n", "lhs", "rhs", "millis"]


def _sorted_reports(reports: list[VerificationReport]) -> list[VerificationReport]:
    return sorted(reports, key=report_key)


def render_report(reports: list[VerificationReport], fmt: str = "json", timing: bool = True) -> bytes:
    reports = _sorted_reports(reports)
    if fmt == "json":
        return _json([r.as_dict(timing) for r in reports])
    if fmt == "csv":
        cols = REPORT_COLUMNS if timing else REPORT_COLUMNS[:-1]
        rows = []
        for r in reports:
            d = r.as_dict(timing)
            fm = d["firstMismatch"] or {}
            row = [d["identity"], _binding_text(r.binding), d["order"], str(d["pass"]).lower(), fm.get("n", ""), fm.get("lhs", ""), fm.get("rhs", "")]
            if timing:
                row.append(d["millis"])
            rows.append(row)
        return _csv(cols, rows)
    lines = []
    for r in reports:
        status = "PASS" if r.passed else f"FAIL at q^{r.mismatch_n}: {r.lhs.render()} != {r.rhs.render()} ({r.detail})"
        line = f"{r.identity} [{_binding_text(r.binding)}] Q={r.order} {status}"
        if timing:
            line += f" {r.millis:.1f}ms"
        lines.append(line)
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} passed")
    return ("\n".join(lines) + "\n").encode()


def _render_rows(header: list[str], rows: list[list], fmt: str) -> bytes:
    if fmt == "json":
        return _json([dict(zip(header, row)) for row in rows])
    if fmt == "csv":
        return _csv(header, rows)
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(x).rjust(w) for x, w in zip(row, widths)) for row in [header, *rows]]
    return ("\n".join(lines) + "\n").encode()


# -- dispatch ----------------------------------------------------------------------


def _table(cfg: RunConfig) -> tuple[bytes, int]:
    header = ["N", "n", cfg.statistic]
    rows = []
    if cfg.method == "generating-function":
        table = parts.StatTable(cfg.statistic, cfg.method)
        for N in cfg.N:
            rows.extend([N, n, v] for n, v in enumerate(table.row(N, cfg.n_max)))
    else:
        fn = STATISTICS[cfg.statistic]
        for N in cfg.N:
            rows.extend([N, n, fn(n, N)] for n in range(cfg.n_max + 1))
    return _render_rows(header, rows, cfg.fmt), EXIT_OK


def _scan(cfg: RunConfig) -> tuple[bytes, int]:
    result = scan_conjecture(cfg.k_max, cfg.n_max, cfg.N_max)
    rows = [[r["k"], r["N"], r["n"], r["margin"]] for r in result.rows()]
    if cfg.fmt == "text":
        bad = result.violations
        body = f"crank - rank moments: {len(result.margins)} cells, k <= {cfg.k_max}, n <= {cfg.n_max}, N <= {cfg.N_max}\n"
        body += "all margins positive\n" if not bad else "non-positive margins at (k, N, n): " + ", ".join(map(str, bad)) + "\n"
        out = body.encode()
    else:
        out = _render_rows(["k", "N", "n", "margin"], rows, cfg.fmt)
    return out, EXIT_OK if result.all_positive else EXIT_FAIL


def _congruence(cfg: RunConfig) -> tuple[bytes, int]:
    report = check_congruence(cfg.N[0], cfg.alpha, cfg.k_max)
    m = report.modulus
    rows = [[c.k, c.j, c.n, c.value, c.residue(m)] for c in report.cases]
    if cfg.fmt == "text":
        fails = report.failures
        out = f"p(n,{report.N}) mod {m}: {len(report.cases)} cases, {len(fails)} nonzero residues\n"
        out += "".join(f"  n={c.n}: p={c.value} residue {c.residue(m)}\n" for c in fails)
        data = out.encode()
    else:
        data = _render_rows(["k", "j", "n", "p", "residue"], rows, cfg.fmt)
    return data, EXIT_OK if report.passed else EXIT_FAIL


def _asymptotics(cfg: RunConfig) -> tuple[bytes, int]:
    samples = check_asymptotics(cfg.N[0], cfg.samples)
    rows = [[s.n, s.spt, render_rational(s.ratio), s.decimal, decimal_string(s.deviation)] for s in samples]
    return _render_rows(["n", "spt", "ratio", "decimal", "deviation"], rows, cfg.fmt), EXIT_OK


def _list(cfg: RunConfig) -> tuple[bytes, int]:
    rows = [[r.id, r.group, r.tier, ",".join(p.name for p in r.params), r.anchor] for r in catalog()]
    return _render_rows(["id", "group", "tier", "params", "anchor"], rows, cfg.fmt), EXIT_OK


def dispatch(cfg: RunConfig) -> tuple[bytes, int]:
    """Run ``cfg``; returns the rendered output and the exit code."""
    if cfg.command == "verify":
        if lookup(cfg.identity) is None:
            raise UnknownIdentity(cfg.identity)
        report = verify(cfg.identity, cfg.params, cfg.order)
        return render_report([report], cfg.fmt, cfg.timing), EXIT_OK if report.passed else EXIT_FAIL
    if cfg.command == "verify-all":
        reports = verify_all(cfg.profile, Q=cfg.order)
        ok = all(r.passed for r in reports)
        return render_report(reports, cfg.fmt, cfg.timing), EXIT_OK if ok else EXIT_FAIL
    handlers = {
        "table": _table,
        "scan-conjecture": _scan,
        "check-congruence": _congruence,
        "asymptotics": _asymptotics,
        "list": _list,
    }
    return handlers[cfg.command](cfg)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_args(argv)
        data, code = dispatch(cfg)
    except UsageError as exc:
        print(f"finpart: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownIdentity as exc:
        print(f"finpart: unknown identity {exc.args[0]!r}", file=sys.stderr)
        return EXIT_USAGE
    except (ConstraintViolated, InvalidModulus) as exc:
        print(f"finpart: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.output:
        with open(cfg.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
