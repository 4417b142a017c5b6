"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 enumeration
guard exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import factorizations as fz
from .formulas import closed_form
from .partition import format_partition, parse_partition
from .series import (
    DEFAULT_M,
    DEFAULT_N,
    build_phi,
    genus_slice,
    log_phi,
    named_series,
)
from .verify import SUITES, STANDARD_FS

SERIES_COLUMNS = ("partition", "ydeg", "num", "den")
CLOSEDFORM_COLUMNS = ("partition", "genus", "kind", "num", "den", "raw_count")

EPILOG = f"""\
CSV columns:
  series:     {",".join(SERIES_COLUMNS)}
              (coefficient num/den of p_partition y^ydeg z^|partition|)
  closedform: {",".join(CLOSEDFORM_COLUMNS)}
              (num/den is the genus-0 series coefficient)
  oracle:     kind,partition,m,genus,count   (jm: partition,ydeg,num,den)
Partitions are written "3,2,1"; "-" is the empty partition.
Series for --f: exp, geom, one, binom:m, or coefficients "1,1/2,1/6".
Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 guard exceeded.
"""


class _UsageError(Exception):
    pass


def _partition(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contentseries",
        description="Content series, Hurwitz-type counts and their verification.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def caps(p, n=DEFAULT_N, m=DEFAULT_M):
        p.add_argument("-N", type=_nonneg, default=n, help=f"weight cap (default {n})")
        p.add_argument("-M", type=_nonneg, default=m, help=f"y-degree cap (default {m})")

    def fmt(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")

    ser = sub.add_parser("series", help="emit Phi, log Phi or a genus slice", epilog=EPILOG,
                         formatter_class=argparse.RawDescriptionHelpFormatter)
    ser.add_argument("--what", choices=("phi", "psi", "slice"), default="phi")
    ser.add_argument("--genus", type=_nonneg, default=0, help="genus for --what slice")
    ser.add_argument("--f", default="exp")
    caps(ser)
    fmt(ser)

    cf = sub.add_parser("closedform", help="genus-0 closed-form counts", epilog=EPILOG,
                        formatter_class=argparse.RawDescriptionHelpFormatter)
    cf.add_argument("--kind", choices=("hurwitz", "monotone", "hypermap"), required=True)
    cf.add_argument("--m", type=int, default=2, help="number of factors for hypermap")
    cf.add_argument("--partition", type=_partition, required=True)
    fmt(cf)

    orc = sub.add_parser("oracle", help="brute-force factorization counts", epilog=EPILOG,
                         formatter_class=argparse.RawDescriptionHelpFormatter)
    orc.add_argument("--kind", choices=("transpositions", "monotone", "tuples", "jm"), required=True)
    orc.add_argument("--partition", type=_partition, required=True)
    orc.add_argument("--m", type=_nonneg, default=None, help="number of factors")
    orc.add_argument("--genus", type=_nonneg, default=0, help="genus for --kind tuples")
    orc.add_argument("--transitive", action="store_true", help="count transitive factorizations only")
    orc.add_argument("--f", default="exp", help="series for --kind jm")
    orc.add_argument("-M", type=_nonneg, default=DEFAULT_M, help="y-degree cap for --kind jm")
    orc.add_argument("--max-states", type=int, default=fz.DEFAULT_MAX_STATES)
    orc.add_argument("--threads", type=int, default=1)
    fmt(orc)

    ver = sub.add_parser("verify", help="run a verification suite", epilog=EPILOG,
                         formatter_class=argparse.RawDescriptionHelpFormatter)
    ver.add_argument("--suite", choices=tuple(SUITES) + ("all",), required=True)
    ver.add_argument("--f", default=None, help="series for pde/genus0pde (default: the standard four)")
    ver.add_argument("--g", default=None, help="denominator series for the quotient pde")
    ver.add_argument("-N", type=_nonneg, default=None, help="weight cap for pde/genus0pde")
    ver.add_argument("-M", type=_nonneg, default=None, help="y-degree cap for pde")
    return parser


def _series(text: str, K: int):
    try:
        return named_series(text, K)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _emit(rows: list[dict], columns: Sequence[str], fmt: str, out, header: Optional[dict] = None) -> None:
    if fmt == "json":
        payload = dict(header or {})
        payload["rows"] = rows
        json.dump(payload, out, indent=1)
        out.write("\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow(
            format_partition(row[c]) if c == "partition" else row[c] for c in columns
        )


def _cmd_series(args, out) -> int:
    f = _series(args.f, args.M)
    result = build_phi(f, args.N, args.M)
    if args.what != "phi":
        result = log_phi(result)
    if args.what == "slice":
        result = genus_slice(result, args.genus)
    header = {"what": args.what, "f": args.f, "N": args.N, "M": args.M}
    if args.what == "slice":
        header["genus"] = args.genus
    _emit(result.to_json(), SERIES_COLUMNS, args.format, out, header)
    return 0


def _cmd_closedform(args, out) -> int:
    try:
        result = closed_form(args.kind, args.partition, args.m)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    _emit([result.as_row()], CLOSEDFORM_COLUMNS, args.format, out)
    return 0


def _cmd_oracle(args, out) -> int:
    alpha = args.partition
    guard = {"max_states": args.max_states}
    if args.kind == "jm":
        f = _series(args.f, args.M)
        poly = fz.jm_product_expansion(f, alpha.size, args.M, **guard)[alpha]
        rows = [
            {"partition": list(alpha), "ydeg": d, "num": str(c.numerator), "den": str(c.denominator)}
            for d, c in enumerate(poly.coeffs)
            if c
        ]
        _emit(rows, SERIES_COLUMNS, args.format, out, {"kind": "jm", "f": args.f, "M": args.M})
        return 0
    if args.m is None:
        raise _UsageError("--m is required for this oracle")
    if args.kind == "transpositions":
        count = fz.count_transposition_factorizations(alpha, args.m, args.transitive, **guard)
    elif args.kind == "monotone":
        count = fz.count_monotone_factorizations(alpha, args.m, args.transitive, **guard)
    else:
        if args.m < 1:
            raise _UsageError("--m must be at least 1 for tuples")
        count = fz.count_tuple_factorizations(alpha, args.m, args.genus, threads=args.threads, **guard)
    row = {
        "kind": args.kind,
        "partition": list(alpha),
        "m": args.m,
        "genus": args.genus if args.kind == "tuples" else None,
        "count": count,
    }
    _emit([row], ("kind", "partition", "m", "genus", "count"), args.format, out)
    return 0


def _cmd_verify(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        kwargs = {}
        if name in ("pde", "genus0pde"):
            N = args.N if args.N is not None else (4 if name == "pde" else 5)
            K = 2 * N if name == "genus0pde" else (args.M if args.M is not None else 4)
            if args.f is not None:
                kwargs["fs"] = {args.f: _series(args.f, K)}
            kwargs["N"] = N
            if name == "pde":
                kwargs["M"] = args.M if args.M is not None else 4
                if args.g is not None:
                    kwargs["g"] = _series(args.g, kwargs["M"])
                    if kwargs["g"].coeff(0) == 0:
                        raise _UsageError("--g needs a nonzero constant term")
                    kwargs.setdefault("fs", {k: make(K) for k, make in STANDARD_FS.items()})
        report = SUITES[name](**kwargs)
        out.write(report.line() + "\n")
        failed |= not report.ok
    return 1 if failed else 0


COMMANDS = {
    "series": _cmd_series,
    "closedform": _cmd_closedform,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except fz.GuardExceeded as exc:
        print(f"guard exceeded: {exc} (estimate {exc.estimate}; raise --max-states to proceed)", file=sys.stderr)
        return 3


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Run the CLI in-process and capture its standard output."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
