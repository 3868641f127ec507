"""Command line interface.

    stirconv table   --kind lah --n-max 6 --format csv
    stirconv check   --all --n-max 20 --report report.json
    stirconv transform stirling2 --lambda 1 --mu 1 -i seq.json -o out.json
    stirconv expand  --gf todorov --mu 1/2 --p 1 --order 6
    stirconv explore X_S2_LAH --p 1 --n-max 8

Rationals are read and written as ``num/den`` strings or bare integers.
Negative values that are not plain integers need the ``--opt=-1/2`` form.

Exit codes: 0 success (every verdict as expected), 1 an unexpected verdict
or oracle disagreement, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, TextIO

from . import kernel
from . import series as ser
from .identities import (
    DEFAULT_MU,
    DEFAULT_Z,
    CheckReport,
    ExploreId,
    IdentityId,
    check_grid,
    explore,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class UsageError(Exception):
    pass


def parse_rational(text: str | int) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    m = _RATIONAL_RE.match(str(text))
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(int(m.group(1)), den)


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ------------------------------------------------------------ file formats


@dataclass(frozen=True)
class SequenceFile:
    flavor: ser.Flavor
    terms: tuple[Fraction, ...]

    def to_series(self, order: int | None = None) -> ser.Series:
        order = len(self.terms) - 1 if order is None else order
        return ser.series_new(self.flavor, order, self.terms)

    @classmethod
    def from_series(cls, s: ser.Series) -> SequenceFile:
        return cls(s.flavor, tuple(s.terms()))


def dump_sequence(seq: SequenceFile) -> str:
    obj = {"flavor": seq.flavor.value, "terms": [format_rational(t) for t in seq.terms]}
    return json.dumps(obj) + "\n"


def load_sequence(text: str) -> SequenceFile:
    try:
        obj = json.loads(text)
        flavor = ser.Flavor(obj["flavor"])
        terms = tuple(parse_rational(t) for t in obj["terms"])
    except (ValueError, KeyError, TypeError) as exc:
        raise ValueError(f"bad sequence file: {exc}") from exc
    if not terms:
        raise ValueError("bad sequence file: no terms")
    return SequenceFile(flavor, terms)


def report_record(r: CheckReport) -> dict:
    inst = r.instance
    rec: dict = {"id": inst.id.value, "n": inst.n, "p": inst.p}
    if inst.mu is not None:
        rec["mu"] = format_rational(inst.mu)
    if inst.z is not None:
        rec["z"] = format_rational(inst.z)
    rec.update(
        lhs=format_rational(r.lhs),
        rhs=format_rational(r.rhs),
        **{"pass": r.passed},
        expected=r.expected.value,
    )
    return rec


@contextlib.contextmanager
def _open_out(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc
    with fh:
        yield fh


def _read_in(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _rational_list(values: Sequence[str] | None) -> list[Fraction] | None:
    if values is None:
        return None
    out = []
    for v in values:
        for piece in v.split(","):
            if piece.strip():
                out.append(parse_rational(piece))
    return out


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


# ----------------------------------------------------------------- commands

_TABLE_KINDS = {
    "stirling1": kernel.TriangleKind.STIRLING_SIGNED,
    "stirling1u": kernel.TriangleKind.STIRLING_UNSIGNED,
    "stirling2": kernel.TriangleKind.STIRLING2,
    "lah": kernel.TriangleKind.LAH,
}


def table_rows(kind: str, n_max: int) -> list[list[int]]:
    if kind == "bell":
        return [[kernel.bell(n) for n in range(n_max + 1)]]
    if kind == "binom":
        return [[kernel.binom_int(n, k) for k in range(n + 1)] for n in range(n_max + 1)]
    return [list(r) for r in kernel.triangle(_TABLE_KINDS[kind]).rows(n_max)]


def cmd_table(args: argparse.Namespace) -> int:
    rows = table_rows(args.kind, args.n_max)
    with _open_out(args.out) as fh:
        if args.format == "csv":
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerows(rows)
        else:
            key = "values" if args.kind == "bell" else "rows"
            body = [str(v) for v in rows[0]] if args.kind == "bell" else [[str(v) for v in r] for r in rows]
            fh.write(json.dumps({"kind": args.kind, key: body}) + "\n")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    if args.all:
        ids = list(IdentityId)
    elif args.id:
        try:
            ids = [IdentityId(i) for i in args.id]
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:
        raise UsageError("give --id or --all")
    mu_set = _rational_list(args.mu)
    z_set = _rational_list(args.z)

    records = []
    ok = True
    for ident in ids:
        reports = check_grid(ident, args.n_max, mu_set, z_set, workers=args.jobs)
        failed = sum(not r.passed for r in reports)
        unexpected = [r for r in reports if not r.as_expected]
        ok &= not unexpected
        status = "ok" if not unexpected else "UNEXPECTED"
        print(f"{ident.value:<18} {len(reports):6d} checked {failed:6d} failed  {status}")
        for r in unexpected[:5]:
            i = r.instance
            print(f"    n={i.n} p={i.p} mu={i.mu} z={i.z}: lhs={r.lhs} rhs={r.rhs}")
        records.extend(report_record(r) for r in reports)

    if args.report:
        with _open_out(args.report) as fh:
            fh.write(json.dumps(records, indent=1) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


_TRANSFORMS = {t.value: t for t in ser.TransformName}


def cmd_transform(args: argparse.Namespace) -> int:
    try:
        seq = load_sequence(_read_in(args.input))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    kind = ser.TransformKind(_TRANSFORMS[args.name], args.lam, args.mu)
    order = len(seq.terms) - 1 if args.order is None else args.order
    try:
        a = seq.to_series(order)
        out = ser.apply_transform(kind, a)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    with _open_out(args.out) as fh:
        fh.write(dump_sequence(SequenceFile.from_series(out)))
    return EXIT_OK


def expand_gf(name: str, p: int, order: int, mu: Fraction = Fraction(1)) -> ser.Series:
    if name == "todorov":
        # (1 - (1 - t)^mu)^p / p!
        bp = ser.binomial_power(mu, order)
        reflected = ser.from_coeffs(c * (-1) ** n for n, c in enumerate(bp.coeffs))
        return ser.series_pow(1 - reflected, p) / kernel.factorial(p)
    return ser.kernel_gf(ser.GFKind(name), p, order)


def cmd_expand(args: argparse.Namespace) -> int:
    s = expand_gf(args.gf, args.p, args.order, args.mu)
    terms = s.terms()
    with _open_out(args.out) as fh:
        fh.write(dump_sequence(SequenceFile(s.flavor, tuple(terms))))
    if args.gf == "todorov" and 0 < args.mu < 1:
        start = args.p if args.p > 0 else 0
        stop = args.order if args.p > 0 else 0
        bad = [n for n in range(start, stop + 1) if terms[n] <= 0]
        if bad:
            print(f"non-positive coefficients at n = {bad}", file=sys.stderr)
            return EXIT_FAIL
    return EXIT_OK


def cmd_explore(args: argparse.Namespace) -> int:
    xid = ExploreId(args.xid)
    if args.n_max < args.p:
        raise UsageError("--n-max must be at least --p")
    rows = explore(xid, args.n_max, args.p, mu=args.mu, lam=args.lam, z=args.z)
    with _open_out(args.out) as fh:
        writer = csv.writer(fh, lineterminator="\n")
        header = ["n", "value", "oracle"] + (["poly"] if xid is ExploreId.X_POLY_F else [])
        writer.writerow(header)
        for r in rows:
            line = [r.n, format_rational(r.value), format_rational(r.oracle) if r.oracle is not None else ""]
            if r.poly is not None:
                line.append(" ".join(format_rational(c) for c in r.poly.coeffs))
            writer.writerow(line)
    bad = [r.n for r in rows if not r.agrees]
    if bad:
        print(f"oracle disagreement at n = {bad}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stirconv", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="export a number triangle or the Bell numbers")
    p.add_argument("--kind", required=True, choices=[*_TABLE_KINDS, "binom", "bell"])
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="verify registered identities on a grid")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--id", action="append", choices=[i.value for i in IdentityId], metavar="ID")
    g.add_argument("--all", action="store_true")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument(
        "--mu",
        action="extend",
        nargs="+",
        help="mu values, comma separated or repeated (default: %s)" % ",".join(map(format_rational, DEFAULT_MU)),
    )
    p.add_argument(
        "--z",
        action="extend",
        nargs="+",
        help="z values (default: %s)" % ",".join(map(format_rational, DEFAULT_Z)),
    )
    p.add_argument("--report", default=None, help="write a JSON report here")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("transform", help="apply a series transform to a sequence file")
    p.add_argument("name", choices=list(_TRANSFORMS))
    p.add_argument("--lambda", dest="lam", type=_rational_arg, default=Fraction(1))
    p.add_argument("--mu", type=_rational_arg, default=Fraction(1))
    p.add_argument("--order", type=int, default=None)
    p.add_argument("-i", "--input", default="-")
    p.add_argument("-o", "--out", default="-")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("expand", help="expand a generating function")
    p.add_argument("--gf", required=True, choices=[k.value for k in ser.GFKind] + ["todorov"])
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--mu", type=_rational_arg, default=Fraction(1))
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("explore", help="tabulate an open-problem convolution")
    p.add_argument("xid", choices=[x.value for x in ExploreId])
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--mu", type=_rational_arg, default=Fraction(1))
    p.add_argument("--lambda", dest="lam", type=_rational_arg, default=Fraction(1))
    p.add_argument("--z", type=_rational_arg, default=Fraction(1))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("n_max", "order", "p"):
        if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
            print(f"stirconv: --{name.replace('_', '-')} must be nonnegative", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"stirconv: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
