"""Command-line interface.

Exit codes: 0 success, 1 a domain error or failed check, 2 unreadable or
malformed input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from clusterlift.algebra.parse import parse_expression
from clusterlift.cases.diagonal import diagonal_compactification_lift
from clusterlift.cases.fixtures import fixture_names, load_fixture
from clusterlift.cases.toric import toric_lift
from clusterlift.dot import export_dot, export_exchange_graph_dot
from clusterlift.errors import ClusterError, ParseError
from clusterlift.grading import is_degree_configuration, mutate_graded
from clusterlift.io import (
    dumps,
    fan_from_dict,
    fan_to_dict,
    lifted_from_dict,
    lifted_to_dict,
    lifting_from_dict,
    load_json,
    seed_from_dict,
    seed_to_dict,
)
from clusterlift.lifting import cluster_valuation, homogenize, lift_seed
from clusterlift.matrix import is_maximal_rank
from clusterlift.membership import explore_exchange_graph, upper_bound_membership
from clusterlift.seed import apply_sequence, validate_seed

EXIT_OK, EXIT_DOMAIN, EXIT_INPUT = 0, 1, 2


def _load_seed(path: str):
    """A seed document, a lifted document, or a fixture dump (its base seed)."""
    doc = load_json(path)
    if isinstance(doc, dict) and "base" in doc and "lifting" in doc:
        L = lifted_from_dict(doc)
        return L.seed, L.grading
    if isinstance(doc, dict) and "name" in doc and "seed" in doc:
        doc = doc["seed"]
    return seed_from_dict(doc)


def _emit(doc, args) -> None:
    sys.stdout.write(dumps(doc, canonical=args.canonical) + "\n")


def cmd_validate(args) -> int:
    s, grading = _load_seed(args.seed)
    d = validate_seed(s)
    out = {"valid": True, "symmetrizer": d, "maximal_rank": is_maximal_rank(s.matrix)}
    if grading is not None:
        out["grading_valid"] = is_degree_configuration(s, grading)
    _emit(out, args)
    return EXIT_OK if out.get("grading_valid", True) else EXIT_DOMAIN


def _split_seq(text: str) -> list[str]:
    return [k.strip() for k in text.split(",") if k.strip()]


def cmd_mutate(args) -> int:
    s, grading = _load_seed(args.seed)
    seq = _split_seq(args.seq)
    if grading is not None:
        s, grading = mutate_graded(s, grading, seq)
    else:
        s = apply_sequence(s, seq)
    _emit(seed_to_dict(s, grading), args)
    return EXIT_OK


def cmd_lift(args) -> int:
    s, _ = _load_seed(args.seed)
    data = lifting_from_dict(load_json(args.nu))
    _emit(lifted_to_dict(lift_seed(s, data)), args)
    return EXIT_OK


def cmd_explore(args) -> int:
    s, _ = _load_seed(args.seed)
    g = explore_exchange_graph(s, args.cap)
    if args.dot:
        sys.stdout.write(export_exchange_graph_dot(g))
    else:
        _emit(g.to_dict(), args)
    return EXIT_OK


def cmd_check_upper(args) -> int:
    s, _ = _load_seed(args.seed)
    r = upper_bound_membership(parse_expression(args.expr), s)
    _emit({"member": r.member, "exact": r.exact}, args)
    if args.assert_member and not r.member:
        return EXIT_DOMAIN
    return EXIT_OK


def cmd_homogenize(args) -> int:
    L = lifted_from_dict(load_json(args.lifted))
    n, ftilde = homogenize(parse_expression(args.expr), L)
    _emit({"n": n.coords, "ftilde": str(ftilde)}, args)
    return EXIT_OK


def cmd_valuation(args) -> int:
    L = lifted_from_dict(load_json(args.lifted))
    v = cluster_valuation(parse_expression(args.expr), L.seed, args.vertex)
    _emit({"vertex": args.vertex, "valuation": v if v != float("inf") else "inf"}, args)
    return EXIT_OK


def cmd_toric(args) -> int:
    fan = fan_from_dict(load_json(args.fan))
    L, report = toric_lift(fan)
    doc = lifted_to_dict(L)
    doc["fan"] = fan_to_dict(fan)
    doc["cox"] = {
        "description": report.describe(),
        "rank": report.rank,
        "generators": [{"variable": g, "degree": d.coords} for g, d in report.generators],
    }
    _emit(doc, args)
    return EXIT_OK


def cmd_diag(args) -> int:
    s, _ = _load_seed(args.seed)
    L = diagonal_compactification_lift(s, strict=not args.non_strict)
    for n in L.notices:
        print(f"notice: {n}", file=sys.stderr)
    _emit(lifted_to_dict(L), args)
    return EXIT_OK


def cmd_export_dot(args) -> int:
    s, _ = _load_seed(args.seed)
    sys.stdout.write(export_dot(s, always_label=args.always_label))
    return EXIT_OK


def cmd_fixture(args) -> int:
    if args.name == "list":
        _emit({"fixtures": fixture_names()}, args)
        return EXIT_OK
    f = load_fixture(args.name)
    if args.dump:
        doc = {"name": f.name, "description": f.description, "seed": seed_to_dict(f.seed)}
        if f.lifted is not None:
            doc["lifted"] = lifted_to_dict(f.lifted)
        if f.fan is not None:
            doc["fan"] = fan_to_dict(f.fan)
    else:
        doc = {
            "name": f.name,
            "description": f.description,
            "vertices": {v: f.seed.kinds[v].value for v in f.seed.vertices},
            "lifted": f.lifted is not None,
            "expected": sorted(f.expected),
        }
    _emit(doc, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clusterlift", description=__doc__.splitlines()[0])
    p.add_argument("--pretty", dest="canonical", action="store_false", help="indent JSON output")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("validate", help="check a seed and print its symmetrizer")
    c.add_argument("seed")
    c.set_defaults(func=cmd_validate)

    c = sub.add_parser("mutate", help="apply a mutation sequence")
    c.add_argument("seed")
    c.add_argument("--seq", required=True, help="comma-separated vertex ids")
    c.set_defaults(func=cmd_mutate)

    c = sub.add_parser("lift", help="minimal monomial lifting")
    c.add_argument("seed")
    c.add_argument("--nu", required=True, help="lifting data JSON file")
    c.set_defaults(func=cmd_lift)

    c = sub.add_parser("explore", help="breadth-first exchange graph")
    c.add_argument("seed")
    c.add_argument("--cap", type=int, required=True)
    c.add_argument("--dot", action="store_true")
    c.set_defaults(func=cmd_explore)

    c = sub.add_parser("check-upper", help="upper bound membership")
    c.add_argument("seed")
    c.add_argument("--expr", required=True)
    c.add_argument("--assert", dest="assert_member", action="store_true")
    c.set_defaults(func=cmd_check_upper)

    c = sub.add_parser("homogenize", help="homogeneous lift of a polynomial")
    c.add_argument("lifted")
    c.add_argument("--expr", required=True)
    c.set_defaults(func=cmd_homogenize)

    c = sub.add_parser("valuation", help="cluster valuation at a frozen vertex")
    c.add_argument("lifted")
    c.add_argument("--expr", required=True)
    c.add_argument("--vertex", required=True)
    c.set_defaults(func=cmd_valuation)

    c = sub.add_parser("toric", help="Cox ring of a smooth toric variety")
    c.add_argument("fan")
    c.set_defaults(func=cmd_toric)

    c = sub.add_parser("diag-compactify", help="diagonal partial compactification")
    c.add_argument("seed")
    c.add_argument("--non-strict", action="store_true", help="accept seeds not of maximal rank")
    c.set_defaults(func=cmd_diag)

    c = sub.add_parser("export-dot", help="quiver in DOT format")
    c.add_argument("seed")
    c.add_argument("--always-label", action="store_true")
    c.set_defaults(func=cmd_export_dot)

    c = sub.add_parser("fixture", help="built-in examples ('list' for names)")
    c.add_argument("name")
    c.add_argument("--dump", action="store_true")
    c.set_defaults(func=cmd_fixture)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ClusterError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except (KeyError, ValueError) as e:
        print(f"error: invalid input: {e}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
