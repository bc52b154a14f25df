"""Command-line front end: ``picspace <subcommand> <graph-file> [options]``.

Exit status is 0 on success, 1 on domain errors (non-orchard graph, bad
permutation, guard exceeded, ...) and 2 on unreadable input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import homology, orchard, schubert
from .errors import GraphParseError, GuardExceeded, PicspaceError
from .memo import SharedCache
from .multigraph import MAX_PARTITION_VERTICES, read_graph
from .polyring import Poly
from .tutte import MAX_SUBSET_EDGES, tutte, tutte_by_subsets

_SHARED = SharedCache()


def _poly_out(p: Poly, args) -> str:
    if args.json:
        return p.to_json()
    if p.vars == ("q",):
        return f"{p}\ncoefficients: {p.coeffs()}"
    return str(p)


def _warn_force(args, msg):
    if args.force:
        print(f"warning: --force: {msg}", file=sys.stderr)


def _guard_d(args):
    if args.d > homology.MAX_D:
        if not args.force:
            raise GuardExceeded(f"d={args.d} exceeds the cap of {homology.MAX_D} (use --force)")
        _warn_force(args, f"d={args.d} above cap {homology.MAX_D}")


def _cache(args):
    return _SHARED if args.cache == "shared" else None


def cmd_tutte(g, args):
    if args.subsets:
        if g.n_edges > MAX_SUBSET_EDGES:
            _warn_force(args, f"{g.n_edges} edges above subset guard")
        return _poly_out(tutte_by_subsets(g, force=args.force), args)
    return _poly_out(tutte(g, cache=_cache(args)), args)


def cmd_poincare(g, args):
    _guard_d(args)
    if args.closed_form:
        p = homology.poincare_closed_form(g, args.d, force=args.force)
    else:
        p = homology.poincare(g, args.d, cache=_cache(args), force=args.force)
    return _poly_out(p, args)


def _parse_pm(text: str) -> Poly:
    try:
        coeffs = [int(c) for c in text.split(",")]
    except ValueError as exc:
        raise GraphParseError(f"--pm expects comma-separated integers: {exc}") from exc
    return Poly.from_coeffs(coeffs)


def cmd_poincare_manifold(g, args):
    _guard_d(args)
    return _poly_out(homology.poincare_manifold(g, args.d, _parse_pm(args.pm), force=args.force), args)


def cmd_parallel(g, args):
    _guard_d(args)
    verdict = homology.parallel_independent(g, args.d, cache=_cache(args), force=args.force)
    if args.json:
        return json.dumps({
            "independent": verdict.independent,
            "expected_degree": verdict.expected_degree,
            "witness": verdict.witness_polynomial.to_json_obj(),
        })
    return f"{verdict}\nwitness: {verdict.witness_polynomial}\nexpected degree: {verdict.expected_degree}"


def cmd_cellules(g, args):
    _guard_d(args)
    if g.n_vertices > MAX_PARTITION_VERTICES:
        _warn_force(args, f"{g.n_vertices} vertices above partition guard")
    dim, winners = homology.max_cellules(g, args.d, force=args.force)
    if args.json:
        return json.dumps({"max_dimension": dim, "partitions": [[list(b) for b in A.blocks] for A in winners]})
    return "\n".join([f"max dimension: {dim}"] + [str(A) for A in winners])


def cmd_orchard_check(g, args):
    ok = orchard.is_orchard(g)
    if args.json:
        return json.dumps({"orchard": ok})
    return "ORCHARD" if ok else "NOT ORCHARD"


def cmd_ring(g, args):
    _guard_d(args)
    return orchard.build_ring(g, args.d).to_json()


def cmd_pointclass(g, args):
    _guard_d(args)
    pc = orchard.build_ring(g, args.d).point_class()
    return pc.poly.to_json() if args.json else str(pc)


def cmd_intersect(g, args):
    _guard_d(args)
    if not args.conditions:
        raise GraphParseError("intersect needs --conditions FILE")
    try:
        with open(args.conditions, encoding="utf-8") as fh:
            conds = schubert.load_conditions(fh.read())
    except OSError as exc:
        raise GraphParseError(str(exc)) from exc
    ring = orchard.build_ring(g, args.d)
    classes = [schubert.pullback_class(ring, v, e, w) for v, e, w in conds]
    n = schubert.intersection_number(ring, classes)
    return json.dumps({"intersection_number": n}) if args.json else str(n)


COMMANDS = {
    "tutte": (cmd_tutte, "Tutte polynomial T_G(x,y)", False),
    "poincare": (cmd_poincare, "compressed Poincare series of X^d(G)", True),
    "poincare-manifold": (cmd_poincare_manifold, "Poincare series for pictures on a manifold", True),
    "parallel": (cmd_parallel, "generic d-parallel independence of E(G)", True),
    "cellules": (cmd_cellules, "maximal cellule dimension and its partitions", True),
    "orchard-check": (cmd_orchard_check, "is every edge a loop or an isthmus?", False),
    "ring": (cmd_ring, "cohomology ring of an orchard as JSON", True),
    "pointclass": (cmd_pointclass, "reduced class of a point in an orchard's ring", True),
    "intersect": (cmd_intersect, "Schubert intersection number on an orchard", True),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="picspace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text, needs_d) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="graph file (lines 'v ID' and 'e ID U W')")
        p.add_argument("-d", type=int, required=needs_d, default=None, help="ambient dimension, d >= 2")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--force", action="store_true", help="override enumeration guards")
        p.add_argument("--cache", choices=("local", "shared"), default="local")
        if name == "tutte":
            p.add_argument("--subsets", action="store_true", help="use the subset expansion")
        if name == "poincare":
            p.add_argument("--closed-form", action="store_true", help="use the Tutte specialization")
        if name == "poincare-manifold":
            p.add_argument("--pm", required=True, help="Poincare polynomial of M, constant term first")
        if name == "intersect":
            p.add_argument("--conditions", help="JSON list of {vertex, edge, permutation}")
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        g = read_graph(args.graph)
        out = handler(g, args)
    except GraphParseError as exc:
        print(f"picspace: parse error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"picspace: {exc}", file=sys.stderr)
        return 2
    except PicspaceError as exc:
        print(f"picspace: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
