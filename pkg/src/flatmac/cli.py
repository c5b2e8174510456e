"""Command-line interface.

Exit codes: 0 success, 1 size not constructible / input not a maximal flat
antichain, 2 invalid arguments, 3 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import ceil, comb

from . import document, report
from .characterize import flat_conditions
from .errors import (
    FlatMacError,
    LevelRange,
    OutOfLargeRange,
    OutOfLevelRange,
    OutOfTheoremRange,
    SearchTooLarge,
    SizeRange,
    VerificationFailure,
)
from .oracle import enumerate_flat_spectrum
from .planner import construct_in_level, construct_main, interval_level, replay
from .verify import check_maximal_flat

OK, NOT_CONSTRUCTIBLE, BAD_ARGS, VERIFY_FAILED = 0, 1, 2, 3


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _diagnose(n: int, m: int) -> str:
    k = ceil(n / 2)
    if not 1 <= m <= comb(n, k):
        return f"no antichain in B_{n} has {m} members (largest is {comb(n, k)})"
    main, quad, lv12 = flat_conditions(n, m)
    if quad and not main:
        return (f"size {m} is a flat maximal antichain size near the top of B_{n}, "
                "but that range is not constructed here")
    if not (main or quad or lv12):
        return f"no flat maximal antichain in B_{n} has size {m}"
    return f"size {m} is flat-achievable in B_{n} but not by the requested construction"


def cmd_construct(a) -> int:
    try:
        if a.level is None:
            c = construct_main(a.n, a.size)
        else:
            c = construct_in_level(a.n, a.level, a.size)
            r = check_maximal_flat(c.antichain)
            if not r.is_maximal or r.size != a.size:
                raise VerificationFailure(f"level construction of size {a.size} failed verification")
    except VerificationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VERIFY_FAILED
    except LevelRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_ARGS
    except (OutOfTheoremRange, OutOfLevelRange, OutOfLargeRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"note: {_diagnose(a.n, a.size)}", file=sys.stderr)
        return NOT_CONSTRUCTIBLE
    fmt = a.format or "json"
    if fmt == "json":
        text = document.dumps_json(c.antichain, c.trace)
    elif fmt == "text":
        text = document.dumps_text(c.antichain)
    else:
        print("error: construct supports --format json or text", file=sys.stderr)
        return BAD_ARGS
    _emit(text, a.out)
    return OK


def cmd_verify(a) -> int:
    try:
        with open(a.input) if a.input != "-" else sys.stdin as fh:
            A, trace = document.loads(fh.read())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_ARGS
    except FlatMacError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_ARGS
    r = check_maximal_flat(A)
    result = {"n": A.n, "levels": [A.l, A.l + 1], "size": r.size, "is_antichain": r.is_antichain,
              "is_maximal": r.is_maximal, "witness": None}
    if r.witness is not None:
        result["witness"] = [i + 1 for i in range(A.n) if r.witness >> i & 1]
    code = OK if r.is_maximal else NOT_CONSTRUCTIBLE
    if trace is not None:
        try:
            same = replay(trace) == A
        except (FlatMacError, ValueError, IndexError, KeyError):
            same = False
        result["trace_reproduces"] = same
        if not same:
            code = VERIFY_FAILED
    _emit(json.dumps(result) + "\n", a.out)
    return code


def cmd_spectrum(a) -> int:
    if a.level is None:
        print("error: spectrum needs --level", file=sys.stderr)
        return BAD_ARGS
    try:
        if a.mode == "exhaustive":
            sizes = list(enumerate_flat_spectrum(a.n, a.level, workers=a.workers).sizes)
        else:
            sizes = list(interval_level(a.n, a.level))
    except (SearchTooLarge, LevelRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_ARGS
    fmt = a.format or "json"
    if fmt == "json":
        text = json.dumps({"n": a.n, "levels": [a.level, a.level + 1], "mode": a.mode,
                           "sizes": sizes}) + "\n"
    elif fmt == "csv":
        text = "size\n" + "".join(f"{m}\n" for m in sizes)
    else:
        text = " ".join(map(str, sizes)) + "\n"
    _emit(text, a.out)
    return OK


def cmd_table(a) -> int:
    if a.id == "prop-large-flat":
        text = "".join(row + "\n" for row in report.large_flat_table(a.n_min, a.n_max))
    else:
        text = report.flat_table_csv(a.n_min, a.n_max)
    _emit(text, a.out)
    return OK


def cmd_plot(a) -> int:
    if a.level is None:
        print("error: plot needs --level", file=sys.stderr)
        return BAD_ARGS
    try:
        pts = report.plot_points(a.n, a.level)
    except LevelRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_ARGS
    _emit(report.points_csv(pts), a.out)
    if a.figure:
        report.render_figure(pts, a.n, a.level, a.figure)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flatmac",
                                description="Flat maximal antichains in the Boolean lattice.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, size=False):
        sp.add_argument("--n", type=int, required=True, help="ground set size")
        if size:
            sp.add_argument("--size", type=int, required=True, help="target antichain size")
        sp.add_argument("--level", type=int, help="lower level l (antichain on levels l, l+1)")
        sp.add_argument("--format", choices=("json", "text", "csv"))
        sp.add_argument("--out", help="write output to PATH instead of stdout")
        sp.add_argument("--seed", type=int, help="reserved; all commands are deterministic")

    c = sub.add_parser("construct", help="build a verified antichain of a given size")
    common(c, size=True)
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a JSON or text antichain document")
    v.add_argument("--in", dest="input", required=True, help="document path, or - for stdin")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("spectrum", help="sizes on one pair of levels")
    common(s)
    s.add_argument("--mode", choices=("constructive", "exhaustive"), default="constructive")
    s.add_argument("--workers", type=int, default=1, help="processes for the exhaustive sweep")
    s.set_defaults(func=cmd_spectrum)

    t = sub.add_parser("table", help="tabulated size intervals")
    t.add_argument("--id", choices=("prop-large-flat", "prop-flat"), required=True)
    t.add_argument("--n-min", type=int, default=8)
    t.add_argument("--n-max", type=int, default=14)
    t.add_argument("--out")
    t.set_defaults(func=cmd_table)

    pl = sub.add_parser("plot", help="CSV plot data (t,size,kind) and an optional PNG figure")
    common(pl)
    pl.add_argument("--figure", help="also render the plot to this image file")
    pl.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    if hasattr(a, "n") and a.n is not None and not 1 <= a.n <= 64:
        print(f"error: --n must lie in [1, 64], got {a.n}", file=sys.stderr)
        return BAD_ARGS
    try:
        return a.func(a)
    except SizeRange as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NOT_CONSTRUCTIBLE
    except FlatMacError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_ARGS


if __name__ == "__main__":
    sys.exit(main())
