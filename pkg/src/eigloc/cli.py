"""Command-line interface: localize | randic | compare | plot.

Exit codes: 0 success, 1 internal or numerical failure, 2 input/validation
error. Text reports print numbers with 6 significant digits; JSON carries
full precision.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from .matcore import (
    DEFAULT_ROW_SUM_TOL,
    InputError,
    LocalizationError,
    NumericalError,
    StochasticMatrix,
    is_irreducible,
    load_matrix,
    trace,
    validate_stochastic,
)
from .eigsolve import eig_general, eig_symmetric, identify_perron, non_perron
from .randic import (
    Graph,
    NotRegular,
    is_connected,
    load_graph,
    normalized_laplacian_bounds,
    randic_bounds,
    randic_matrix,
    regular_graph_bounds,
    rojo_soto_bound,
    symmetric_randic,
)
from .regions import (
    InclusionRegion,
    contains,
    cvetkovic_disc,
    deflated_region,
    disc_union_in_disc,
    full_inclusion_region,
    inclusion_region_json,
    lili_disc,
    real_interval_hull,
)
from .svgplot import render_region_svg

DEFAULT_SLACK = 1e-8


def _fmt(x: float) -> str:
    return format(float(x), ".6g")


def _fmtz(z: complex) -> str:
    z = complex(z)
    if z.imag == 0.0:
        return _fmt(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{_fmt(z.real)}{sign}{_fmt(abs(z.imag))}i"


def _load_stochastic(args) -> StochasticMatrix:
    dense = load_matrix(args.input)
    return validate_stochastic(dense, args.row_sum_tol)


def _classic_disc_lines(s: StochasticMatrix) -> list[str]:
    cd = cvetkovic_disc(s)
    ld = lili_disc(s)
    return [
        f"cvetkovic disc: gamma = {_fmt(cd.center.real)}, "
        f"center = {_fmt(cd.center.real)}, radius = {_fmt(cd.radius)}",
        f"li-li disc: gamma' = {_fmt(-ld.center.real)}, "
        f"center = {_fmt(ld.center.real)}, radius = {_fmt(ld.radius)}",
    ]


def _header_lines(args, s: StochasticMatrix) -> list[str]:
    lines = [
        f"input: {args.input}",
        f"order: {s.order}",
        f"row-sum tolerance: {_fmt(s.row_sum_tolerance)}",
    ]
    if is_irreducible(s):
        lines.append("irreducible: yes")
    else:
        lines.append("irreducible: no")
        lines.append(
            "warning: matrix is reducible; the unit eigenvalue may not be simple"
        )
    return lines


def cmd_localize(args) -> str:
    s = _load_stochastic(args)
    region = full_inclusion_region(s)
    spectrum = None
    if args.with_eigs:
        spectrum = identify_perron(eig_general(s.inner))
    if args.format == "json":
        eigs = spectrum.values if spectrum is not None else None
        return inclusion_region_json(region, eigenvalues=eigs)
    lines = _header_lines(args, s)
    lines.append("")
    lines.extend(_classic_disc_lines(s))
    lines.append("")
    lines.append("deflation disc groups:")
    for i, group in enumerate(region.groups, start=1):
        lines.append(f"  group i={i} (state {i} removed):")
        for disc, label in zip(group.discs, group.labels):
            lines.append(
                f"    k={label}: center = {_fmtz(disc.center)}, "
                f"radius = {_fmt(disc.radius)}"
            )
    if spectrum is not None:
        lines.append("")
        lines.append("eigenvalues (general solver):")
        for idx, z in enumerate(spectrum.values):
            mark = "  (unit root)" if idx == spectrum.perron_index else ""
            lines.append(f"  {_fmtz(z)}{mark}")
        lines.append("")
        lines.append("membership of non-unit eigenvalues (slack {}):".format(_fmt(args.slack)))
        others = non_perron(spectrum)
        header = "  eigenvalue".ljust(24) + " ".join(
            f"i={i}".ljust(5) for i in range(1, s.order + 1)
        ) + " region"
        lines.append(header)
        for z in others.values:
            cells = []
            for group in region.groups:
                cells.append(("in" if group.contains(z, args.slack) else "out").ljust(5))
            verdict = "in" if contains(region, z, args.slack) else "out"
            lines.append("  " + _fmtz(z).ljust(22) + " ".join(cells) + " " + verdict)
    return "\n".join(lines) + "\n"


def cmd_compare(args) -> str:
    s = _load_stochastic(args)
    region = full_inclusion_region(s)
    cd = cvetkovic_disc(s)
    ld = lili_disc(s)
    lines = _header_lines(args, s)
    lines.append("")
    lines.extend(_classic_disc_lines(s))
    lines.append("")
    lines.append("containment of each deflation group in the classic discs:")
    best = None
    for i in range(1, s.order + 1):
        group = deflated_region(s, i)
        lo, hi = real_interval_hull(group)
        in_cd = disc_union_in_disc(group, cd)
        in_ld = disc_union_in_disc(group, ld)
        width = hi - lo
        if best is None or width < best[1]:
            best = (i, width)
        lines.append(
            f"  group i={i}: hull = [{_fmt(lo)}, {_fmt(hi)}], "
            f"within cvetkovic: {'yes' if in_cd else 'no'}, "
            f"within li-li: {'yes' if in_ld else 'no'}"
        )
    lines.append("")
    lines.append(
        f"tightest group: i={best[0]} (real hull width {_fmt(best[1])})"
    )
    return "\n".join(lines) + "\n"


def cmd_randic(args) -> str:
    g = load_graph(args.input)
    report = randic_bounds(g)
    rho2_lower, rhon_upper = normalized_laplacian_bounds(g)
    rs = rojo_soto_bound(g)
    lines = [
        f"input: {args.input}",
        f"vertices: {g.n}, edges: {len(g.edges)}",
        "degrees: " + " ".join(str(d) for d in g.degrees),
        f"connected: {'yes' if is_connected(g) else 'no'}",
        "",
        "per-vertex terms (alpha_i enters the lower bound, beta_i the upper):",
        "  vertex  alpha_i     beta_i",
    ]
    for v in range(1, g.n + 1):
        lines.append(
            f"  {v:<7d} {_fmt(report.alpha_by_vertex[v - 1]):<11s} "
            f"{_fmt(report.beta_by_vertex[v - 1])}"
        )
    lines.append("")
    lines.append(
        f"eigenvalue bounds: lambda_2 <= {_fmt(report.upper_bound)}, "
        f"lambda_n >= {_fmt(report.lower_bound)}"
    )
    lines.append(
        f"normalized laplacian: rho_2 >= {_fmt(rho2_lower)}, "
        f"rho_n <= {_fmt(rhon_upper)}"
    )
    lines.append(f"rojo-soto modulus bound: |rho_n| <= {_fmt(rs)}")
    lines.append(f"rojo-soto lower bound: {_fmt(-rs)}")
    try:
        regular = regular_graph_bounds(g)
    except NotRegular:
        regular = None
    if regular is not None:
        lines.append("")
        lines.append(f"regular graph (r = {regular.degree}):")
        lines.append(
            f"  corollary bounds (literal): lambda_2 <= {_fmt(regular.upper_bound)}, "
            f"lambda_n >= {_fmt(regular.lower_bound)}"
        )
        lines.append(
            f"  general-bound route:        lambda_2 <= {_fmt(report.upper_bound)}, "
            f"lambda_n >= {_fmt(report.lower_bound)}"
        )
        if (
            regular.lower_bound != report.lower_bound
            or regular.upper_bound != report.upper_bound
        ):
            lines.append(
                "  note: the literal corollary applies its clamp inside the 1/r "
                "scaling, so the two routes differ here; the general route is tighter."
            )
    if args.with_eigs:
        spec = eig_symmetric(symmetric_randic(g))
        lam2 = spec.values[1].real
        lamn = spec.values[-1].real
        gap_u = report.upper_bound - lam2
        gap_l = lamn - report.lower_bound
        tight_u = " (tight)" if abs(gap_u) <= args.slack else ""
        tight_l = " (tight)" if abs(gap_l) <= args.slack else ""
        lines.append("")
        lines.append("oracle spectrum (symmetric solver):")
        lines.append("  " + " ".join(_fmt(z.real) for z in spec.values))
        lines.append(
            f"  lambda_2 = {_fmt(lam2)}, gap to upper bound = {_fmt(gap_u)}{tight_u}"
        )
        lines.append(
            f"  lambda_n = {_fmt(lamn)}, gap to lower bound = {_fmt(gap_l)}{tight_l}"
        )
        rs_gap = lamn - (-rs)
        lines.append(f"  gap to rojo-soto lower bound = {_fmt(rs_gap)}")
    return "\n".join(lines) + "\n"


def cmd_plot(args) -> str:
    s = _load_stochastic(args)
    region = full_inclusion_region(s)
    eigs = None
    if args.with_eigs:
        eigs = eig_general(s.inner).values
    return render_region_svg(region, eigenvalues=eigs)


_COMMANDS = {
    "localize": (cmd_localize, ("text", "json")),
    "randic": (cmd_randic, ("text",)),
    "compare": (cmd_compare, ("text",)),
    "plot": (cmd_plot, ("svg",)),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigloc",
        description=(
            "Localize the non-unit eigenvalues of a stochastic matrix via "
            "deflation disc regions, and compute closed-form spectral bounds "
            "for degree-normalized graph matrices."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    specs = {
        "localize": "report the deflation disc groups and classic single discs of a matrix",
        "randic": "report per-vertex terms and spectral bounds for a graph edge list",
        "compare": "compare each deflation group against the classic single discs",
        "plot": "render the deflation disc groups as an SVG document",
    }
    for name, help_text in specs.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", required=True, help="input file path")
        p.add_argument(
            "--format",
            choices=("text", "json", "svg"),
            default=_COMMANDS[name][1][0],
            help="output format (default: %(default)s)",
        )
        p.add_argument(
            "--with-eigs",
            action="store_true",
            help="also run the eigensolver oracle and report/mark eigenvalues",
        )
        p.add_argument(
            "--row-sum-tol",
            type=float,
            default=DEFAULT_ROW_SUM_TOL,
            help="stochasticity tolerance for matrix inputs (default: %(default)g)",
        )
        p.add_argument(
            "--slack",
            type=float,
            default=DEFAULT_SLACK,
            help="membership slack for disc containment tests (default: %(default)g)",
        )
        p.add_argument(
            "--out",
            default=None,
            help="output file path (default: stdout)",
        )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler, formats = _COMMANDS[args.command]
    try:
        if args.format not in formats:
            raise InputError(
                f"format {args.format!r} is not available for {args.command!r} "
                f"(choose from {', '.join(formats)})"
            )
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            output = handler(args)
        for w in caught:
            print(f"note: {w.message}", file=sys.stderr)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except LocalizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    if args.out is None:
        sys.stdout.write(output)
    else:
        Path(args.out).write_text(output, encoding="utf-8")
    return 0


if __name__ == "__main__":
    sys.exit(main())
