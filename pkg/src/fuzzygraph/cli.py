"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or undefined Wiener index),
2 input error.
"""

from __future__ import annotations

import argparse
import csv
import random
import sys
from dataclasses import astuple, dataclass
from typing import Sequence, TextIO

from .closed_form import (
    CycleSpec,
    corrected_wiener,
    generate_saturated_cycle,
    incorrect_wiener_theorem_star,
)
from .connectivity import classify_edges, strength_matrix
from .graph import FuzzyGraph, GraphError, read_graph
from .indices import NoStrongPathError, connectivity_index, index_report, wiener_index
from .structures import is_fuzzy_tree, maximum_spanning_tree

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2

TOLERANCE = 1e-9
SWEEP_HEADER = ["n", "kappa", "eta", "wi_bruteforce", "wi_corrected", "wi_star", "err_corrected", "err_star"]


@dataclass(frozen=True)
class SweepRow:
    n: int
    kappa: float
    eta: float
    wiener_bruteforce: float
    wiener_corrected: float
    wiener_theorem_star: float
    abs_error_corrected: float
    abs_error_star: float

    @property
    def ok(self) -> bool:
        return self.abs_error_corrected <= TOLERANCE

    def csv_fields(self) -> list[str]:
        return [str(self.n)] + [_num(x) for x in astuple(self)[1:]]


def _num(x: float) -> str:
    return f"{x:.12g}"


def sweep_row(spec: CycleSpec) -> SweepRow:
    brute = wiener_index(generate_saturated_cycle(spec))
    corrected = corrected_wiener(spec)
    star = incorrect_wiener_theorem_star(spec)
    return SweepRow(
        spec.n, spec.kappa, spec.eta, brute, corrected, star,
        abs(brute - corrected), abs(brute - star),
    )


def draw_kappa_eta(rng: random.Random) -> tuple[float, float]:
    """Two uniform draws in (0, 1], ordered so kappa > eta; ties are redrawn."""
    while True:
        a, b = 1.0 - rng.random(), 1.0 - rng.random()
        if a != b:
            return max(a, b), min(a, b)


def sweep_rows(n_max: int, trials: int, seed: int):
    if n_max < 4 or n_max % 2:
        raise GraphError(f"--n-max must be even and at least 4, got {n_max}")
    if trials < 0:
        raise GraphError(f"--trials must be non-negative, got {trials}")
    rng = random.Random(seed)
    for n in range(4, n_max + 1, 2):
        for _ in range(trials):
            kappa, eta = draw_kappa_eta(rng)
            yield sweep_row(CycleSpec(n, kappa, eta))


def _matrix(verts: list[str], cell) -> list[str]:
    cells = [[v] + ["-" if u == v else cell(v, u) for u in verts] for v in verts]
    header = [""] + verts
    widths = [max(len(r[i]) for r in cells + [header]) for i in range(len(header))]
    fmt = lambda row: "  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip()
    return [fmt(header)] + [fmt(r) for r in cells]


def render_analysis(g: FuzzyGraph, out: TextIO) -> int:
    verts = g.sorted_vertices()
    conn = strength_matrix(g)
    labels = classify_edges(g)
    p = lambda *a: print(*a, file=out)

    p(f"vertices: {len(g)}  edges: {len(g.edges)}")
    p()
    p("strength of connectedness CONN(u, v)")
    for line in _matrix(verts, lambda u, v: _num(conn[u, v])):
        p(line)
    p()
    p("edge labels")
    for (u, v), lab in labels.items():
        p(f"{u}-{v}  {_num(g.edges[u, v])}  {lab}")
    p()
    try:
        report = index_report(g)
    except NoStrongPathError as exc:
        p(f"CI: {_num(connectivity_index(g))}")
        p(f"WI: undefined ({exc})")
        return EXIT_VERIFY
    ds = report.ds_table()
    p("geodesic distance d_s(u, v)")
    for line in _matrix(verts, lambda u, v: _num(ds[u, v])):
        p(line)
    p()
    p(f"WI: {_num(report.wiener)}")
    p(f"CI: {_num(report.connectivity)}")
    return EXIT_OK


def cmd_analyze(args, out: TextIO) -> int:
    return render_analysis(read_graph(args.file), out)


def cmd_classify(args, out: TextIO) -> int:
    g = read_graph(args.file)
    for (u, v), lab in classify_edges(g).items():
        print(f"{u}-{v}  {_num(g.edges[u, v])}  {lab}", file=out)
    return EXIT_OK


def cmd_mst(args, out: TextIO) -> int:
    g = read_graph(args.file)
    tree = maximum_spanning_tree(g)
    for u, v in tree.edges:
        print(f"{u}-{v}  {_num(g.edges[u, v])}", file=out)
    print(f"weight: {_num(tree.weight)}", file=out)
    print(f"unique: {'yes' if tree.unique else 'no'}", file=out)
    print(f"fuzzy tree: {'yes' if is_fuzzy_tree(g) else 'no'}", file=out)
    return EXIT_OK


def cmd_verify_cycle(args, out: TextIO) -> int:
    row = sweep_row(CycleSpec(args.n, args.kappa, args.eta))
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    writer.writerow(row.csv_fields())
    return EXIT_OK if row.ok else EXIT_VERIFY


def cmd_sweep(args, out: TextIO) -> int:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in sweep_rows(args.n_max, args.trials, args.seed):
        writer.writerow(row.csv_fields())
        if not row.ok:
            print(
                f"mismatch at n={row.n}: corrected formula off by {row.abs_error_corrected:.3g}",
                file=sys.stderr,
            )
            return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzygraph",
        description="Connectivity, edge classes and Wiener/connectivity indices of fuzzy graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="CONN matrix, edge labels, d_s table, WI and CI")
    p.add_argument("file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="label every edge alpha, beta or delta")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("mst", help="maximum spanning tree and fuzzy-tree test")
    p.add_argument("file")
    p.set_defaults(func=cmd_mst)

    p = sub.add_parser(
        "verify-cycle", help="compare closed forms with the exhaustive WI of one saturated cycle"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kappa", type=float, required=True)
    p.add_argument("--eta", type=float, required=True)
    p.set_defaults(func=cmd_verify_cycle)

    p = sub.add_parser("sweep", help="CSV sweep over even n and random (kappa, eta)")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
