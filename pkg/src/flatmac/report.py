"""Tables and plot data for size spectra, plus an optional rendered figure."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from math import comb

from .planner import construct_in_level, interval_flat, interval_level, table_row, theorem_interval
from .setfam import is_squashed_maximal, squashed_size


@dataclass(frozen=True)
class PlotPoint:
    t: int
    size: int
    kind: str


def squashed_points(n: int, l: int) -> list[PlotPoint]:
    """One dot per squashed maximal flat antichain: number of (l+1)-sets against size."""
    return [PlotPoint(t, squashed_size(n, l, t), "squashed")
            for t in range(comb(n, l + 1) + 1) if is_squashed_maximal(n, l, t)]


def constructed_points(n: int, l: int) -> list[PlotPoint]:
    """One point per size in the constructible range, at its upper-family count."""
    out = []
    for m in interval_level(n, l):
        A = construct_in_level(n, l, m).antichain
        out.append(PlotPoint(len(A.upper), m, "constructed"))
    return out


def plot_points(n: int, l: int) -> list[PlotPoint]:
    return squashed_points(n, l) + constructed_points(n, l)


def points_csv(points: list[PlotPoint]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t", "size", "kind"])
    for p in points:
        w.writerow([p.t, p.size, p.kind])
    return buf.getvalue()


def render_figure(points: list[PlotPoint], n: int, l: int, path: str) -> None:
    """Scatter of size against upper-family count, with the guaranteed interval as horizontal lines."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for kind, style in (("constructed", dict(s=6, c="tab:orange", label="constructed")),
                        ("squashed", dict(s=18, c="tab:blue", label="squashed maximal"))):
        pts = [p for p in points if p.kind == kind]
        ax.scatter([p.t for p in pts], [p.size for p in pts], **style)
    I = interval_flat(n, l)
    for y in (I.lo, I.hi):
        ax.axhline(y, color="grey", lw=0.8, ls="--")
    ax.set_xlabel(f"number of {l + 1}-sets")
    ax.set_ylabel("antichain size")
    ax.set_title(f"flat maximal antichains on levels {l}, {l + 1} of B_{n}")
    ax.legend(loc="best")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _latex_cell(n: int, l: int) -> str:
    if l > (n - 2) / 2:
        return "--"
    I = table_row(n, l)
    return f"$[{I.lo},{I.hi}]$"


def large_flat_table(n_min: int = 8, n_max: int = 14, levels=(2, 3, 4)) -> list[str]:
    """Rows ``$n$ & $[lo,hi]$ & ... \\\\`` of the tabulated intervals."""
    return [" & ".join([f"${n}$"] + [_latex_cell(n, l) for l in levels]) + " \\\\"
            for n in range(n_min, n_max + 1)]


def flat_table_csv(n_min: int, n_max: int) -> str:
    """Per-level guaranteed intervals and the overall target interval, as CSV."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "l", "lo", "hi"])
    for n in range(n_min, n_max + 1):
        for l in range(2, (n - 2) // 2 + 1):
            I = interval_flat(n, l)
            w.writerow([n, l, I.lo, I.hi])
        lo, hi = theorem_interval(n)
        w.writerow([n, "all", lo, hi])
    return buf.getvalue()
