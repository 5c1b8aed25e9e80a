"""Command-line front end.

Subcommands: `analyze` prints the spectral and content quantities of a
graph file, `verify` runs the inequality suites and emits a report,
`gen` writes seeded random instances, and `resistance` prints one
effective resistance. Exit codes: 0 success, 1 failed verification check,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional

from . import errors
from ._version import __version__
from .content import (dirichlet_content_exact, isoperimetric_exact,
                      neumann_content_exact)
from .graph import VertexSet, WeightedGraph, path_graph, random_graph
from .report import VerificationReport, emit_report
from .resistance import effective_resistance
from .rng import Xorshift64Star
from .spectral import dirichlet_eigenvalue, neumann_eigenvalue
from .suite import ALL_SUITES, DEFAULT_SAMPLES, DEFAULT_TOLERANCE, run_suite
from .wgr import parse_wgr, serialize_wgr


class UsageError(Exception):
    pass


def _load(path: str) -> tuple[WeightedGraph, Optional[VertexSet]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return parse_wgr(text)


def _ids_for(graph: WeightedGraph, names_csv: str) -> VertexSet:
    by_name = {graph.label(v): v for v in range(graph.vertex_count)}
    ids = []
    for name in names_csv.split(","):
        name = name.strip()
        if name not in by_name:
            raise UsageError(f"unknown vertex name {name!r}")
        ids.append(by_name[name])
    return VertexSet.of(ids)


def _parse_range(text: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected lo,hi range, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None


def _format_choice(args) -> Optional[str]:
    if getattr(args, "json", False):
        return "json"
    if getattr(args, "csv", False):
        return "csv"
    return None


def _cmd_analyze(args) -> int:
    graph, file_boundary = _load(args.file)
    boundary = _ids_for(graph, args.boundary) if args.boundary else file_boundary

    quantities: dict[str, float] = {}
    witnesses: dict[str, list[int]] = {}
    notes: list[str] = []

    def compute(name, fn):
        try:
            return fn()
        except errors.HardySpectralError as exc:
            notes.append(f"{name} unavailable: {exc}")
            return None

    lam2 = compute("lambda2", lambda: neumann_eigenvalue(graph))
    if lam2 is not None:
        quantities["lambda2"] = lam2.eigenvalue
    psi2 = compute("psi2", lambda: neumann_content_exact(graph))
    if psi2 is not None:
        quantities["psi2"] = psi2.value
        quantities["h2"] = psi2.hardy
        witnesses["psi2_a"] = list(psi2.witness_a.members)
        witnesses["psi2_b"] = list(psi2.witness_b.members)
    phi = compute("phi", lambda: isoperimetric_exact(graph))
    if phi is not None:
        quantities["phi"] = phi.value
        witnesses["phi_a"] = list(phi.witness_a.members)
    if boundary is not None:
        lam = compute("lambda_dirichlet", lambda: dirichlet_eigenvalue(graph, boundary))
        if lam is not None:
            quantities["lambda_dirichlet"] = lam.eigenvalue
        psi = compute("psi_dirichlet", lambda: dirichlet_content_exact(graph, boundary))
        if psi is not None:
            quantities["psi_dirichlet"] = psi.value
            witnesses["psi_dirichlet_a"] = list(psi.witness_a.members)

    fmt = _format_choice(args)
    if fmt is None:
        for name, value in quantities.items():
            print(f"{name} = {value!r}")
        for name, ids in witnesses.items():
            print(f"{name} = {ids}")
        for note in notes:
            print(note, file=sys.stderr)
        return 0
    report = VerificationReport(
        tool_version=__version__, seed=None, tolerance=DEFAULT_TOLERANCE,
        graph_summary={"vertex_count": graph.vertex_count,
                       "edge_count": graph.edge_count,
                       "mass_total": graph.total_mass},
        quantities=quantities, witnesses=witnesses)
    sys.stdout.write(emit_report(report, fmt, include_timing=args.timing))
    for note in notes:
        print(note, file=sys.stderr)
    return 0


def _cmd_verify(args) -> int:
    graph, file_boundary = _load(args.file)
    boundary = _ids_for(graph, args.boundary) if args.boundary else file_boundary
    suites = list(ALL_SUITES) if args.suite in (None, "all") \
        else [s.strip() for s in args.suite.split(",")]
    for s in suites:
        if s not in ALL_SUITES:
            raise UsageError(f"unknown suite {s!r}; known: {', '.join(ALL_SUITES)}, all")
    if boundary is None and any(s in suites for s in ("dirichlet", "path-reduction")):
        boundary = VertexSet.of([0])

    report = run_suite(graph, boundary=boundary, suites=suites,
                       tolerance=args.tolerance, seed=args.seed,
                       samples=args.samples)
    fmt = _format_choice(args) or "json"
    sys.stdout.write(emit_report(report, fmt, include_timing=args.timing))
    return 0 if report.all_hold else 1


def _cmd_gen(args) -> int:
    mass_range = _parse_range(args.mass_range)
    kappa_range = _parse_range(args.kappa_range)
    if args.kind == "path":
        if args.n < 2:
            raise UsageError("a path needs at least 2 vertices")
        rng = Xorshift64Star(args.seed)
        masses = [rng.uniform_in(*mass_range) for _ in range(args.n)]
        kappas = [rng.uniform_in(*kappa_range) for _ in range(args.n - 1)]
        graph = path_graph(masses, kappas)
        text = serialize_wgr(graph, boundary=VertexSet.of([0]))
    else:
        graph = random_graph(args.n, args.p, mass_range, kappa_range, args.seed)
        text = serialize_wgr(graph)
    Path(args.output).write_text(text, encoding="utf-8")
    return 0


def _cmd_resistance(args) -> int:
    graph, _ = _load(args.file)
    a = _ids_for(graph, args.a)
    b = _ids_for(graph, args.b)
    print(repr(effective_resistance(graph, a, b)))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardy-spectral",
        description="Eigenvalue bounds and verification suites for weighted graphs")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format_flags(p):
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--csv", action="store_true", help="emit CSV")
        p.add_argument("--timing", action="store_true",
                       help="include wall-clock timings (breaks byte-for-byte "
                            "reproducibility)")

    p = sub.add_parser("analyze", help="print spectral and content quantities")
    p.add_argument("file")
    p.add_argument("--boundary", help="comma-separated vertex names")
    add_format_flags(p)
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("file")
    p.add_argument("--suite", help="comma-separated suite names or 'all'")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES,
                   help="random draws per randomized suite")
    p.add_argument("--boundary", help="comma-separated vertex names")
    add_format_flags(p)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("gen", help="write a seeded random instance")
    p.add_argument("kind", choices=["path", "random"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5,
                   help="extra-edge probability (random graphs)")
    p.add_argument("--mass-range", default="0.1,10")
    p.add_argument("--kappa-range", default="0.1,10")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("resistance", help="effective resistance between vertex sets")
    p.add_argument("file")
    p.add_argument("--a", required=True, help="comma-separated vertex names")
    p.add_argument("--b", required=True, help="comma-separated vertex names")
    p.set_defaults(fn=_cmd_resistance)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except errors.HardySpectralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
