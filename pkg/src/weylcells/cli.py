"""Command-line surface: exact computations, JSON/text reports, suites.

Every run is reproducible from its arguments; the only persistent state is
the opt-in KL cache file.  Exit status: 0 success, 1 usage error, 2
verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import affine_group as ag
from . import cell_membership as cm
from . import kl_engine as kl
from . import type_a as ta
from . import verify as verify_mod
from .literals import LiteralError, format_element, parse_element, parse_window
from .root_system import FAMILIES, build

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _vector_json(v):
    return [str(Fraction(c)) for c in v]


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=FAMILIES, help="root system family")
    common.add_argument("--rank", type=int, help="root system rank")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true", dest="json_mode")
    mode.add_argument("--text", action="store_false", dest="json_mode")
    common.set_defaults(json_mode=False)
    common.add_argument(
        "--cache",
        default=os.environ.get("WEYLCELLS_CACHE"),
        help="KL table cache file (default: WEYLCELLS_CACHE)",
    )
    common.add_argument("--max-ball", type=int, default=200000,
                        help="cap on enumerated ball elements")
    common.add_argument("--max-states", type=int, default=2**20,
                        help="cap on group-enumeration states in harness runs")

    parser = _Parser(prog="weylcells",
                     description="Exact affine Weyl group computations")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("len", parents=[common], help="length of an element")
    p.add_argument("element")
    p = sub.add_parser("word", parents=[common], help="canonical reduced word")
    p.add_argument("element")
    p = sub.add_parser("mul", parents=[common], help="product of two elements")
    p.add_argument("left")
    p.add_argument("right")
    p = sub.add_parser("inv", parents=[common], help="inverse of an element")
    p.add_argument("element")
    p = sub.add_parser("coords", parents=[common], help="coordinate form")
    p.add_argument("element")
    p = sub.add_parser("signtype", parents=[common], help="sign type and admissibility")
    p.add_argument("element")
    p = sub.add_parser("cell", parents=[common], help="cell-membership verdict")
    p.add_argument("element")
    p.add_argument("--harness", action="store_true",
                   help="also run the conjugation harness (second-lowest translations)")
    p = sub.add_parser("mu", parents=[common],
                       help="two-sided cell partition (family A)")
    p.add_argument("element", help="window [v1,...,vn] or element literal")
    p = sub.add_parser("g2-nf", parents=[common], help="G2 second-lowest normal form")
    p.add_argument("element")
    p = sub.add_parser("kl", parents=[common], help="Kazhdan-Lusztig polynomial")
    p.add_argument("bound", type=int)
    p.add_argument("x")
    p.add_argument("w")
    p = sub.add_parser("ball", parents=[common], help="enumerate a length ball")
    p.add_argument("bound", type=int)
    p = sub.add_parser("cellgraph", parents=[common],
                       help="within-ball cell graph components")
    p.add_argument("bound", type=int)
    p.add_argument("--side", choices=("left", "right"), default="left")
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite")
    return parser


def _require_system(args):
    if args.family is None or args.rank is None:
        raise UsageError("this subcommand needs --family and --rank")
    return build(args.family, args.rank)


def _kl_table(args, system, bound):
    ball = kl.enumerate_ball(system, bound, cap=args.max_ball)
    warnings = []
    table = None
    if args.cache and Path(args.cache).exists():
        with open(args.cache) as fh:
            table, warning = kl.load_cache(fh, ball)
        if warning:
            warnings.append(warning)
    if table is None:
        table = kl.compute_kl_table(ball)
        if args.cache:
            with open(args.cache, "w") as fh:
                kl.save_cache(fh, table)
    return ball, table, warnings


def run(argv) -> tuple[dict, int]:
    """Execute one command; return (report, exit_status)."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    report = {
        "schema": SCHEMA_VERSION,
        "command": {
            "subcommand": args.subcommand,
            "family": args.family,
            "rank": args.rank,
            "output": "json" if args.json_mode else "text",
            "cache": args.cache,
            "max_ball": args.max_ball,
            "max_states": args.max_states,
        },
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S"),
        "results": {},
        "warnings": [],
    }
    results = report["results"]
    status = 0

    if args.subcommand == "len":
        system = _require_system(args)
        g = parse_element(system, args.element)
        results["element"] = format_element(g)
        results["length"] = ag.length(g)

    elif args.subcommand == "word":
        system = _require_system(args)
        g = parse_element(system, args.element)
        gamma, letters = ag.reduced_word(g)
        results["letters"] = list(letters)
        results["gamma"] = format_element(gamma)
        results["gamma_is_identity"] = gamma == ag.identity(system)
        results["length"] = ag.length(g)

    elif args.subcommand == "mul":
        system = _require_system(args)
        g = ag.multiply(parse_element(system, args.left),
                        parse_element(system, args.right))
        results["element"] = format_element(g)
        results["length"] = ag.length(g)

    elif args.subcommand == "inv":
        system = _require_system(args)
        g = ag.inverse(parse_element(system, args.element))
        results["element"] = format_element(g)
        results["length"] = ag.length(g)

    elif args.subcommand == "coords":
        system = _require_system(args)
        g = parse_element(system, args.element)
        results["positive_roots"] = [_vector_json(a) for a in system.positive_roots]
        results["coordinate_form"] = list(ag.coordinate_form(g))

    elif args.subcommand == "signtype":
        system = _require_system(args)
        g = parse_element(system, args.element)
        st = cm.sign_type(g)
        results["sign_type"] = st.serialize()
        results["admissible"] = cm.is_admissible(st)

    elif args.subcommand == "cell":
        system = _require_system(args)
        g = parse_element(system, args.element)
        results["element"] = format_element(g)
        if g.is_translation():
            conjugator, dominant = ag.make_dominant(g)
            if conjugator != ag.identity(system):
                report["warnings"].append(
                    "element was conjugated into the dominant chamber"
                )
                results["dominant_representative"] = format_element(dominant)
            verdict = cm.translation_second_lowest(dominant)
            results["verdict"] = verdict.verdict.value
            results["certificate"] = {
                "criterion": verdict.criterion, **verdict.witness
            }
            if args.harness and verdict.verdict is cm.Verdict.IN_SECOND_LOWEST:
                hr = cm.conjecture_harness(dominant, cap=args.max_states)
                results["harness"] = {
                    "weyl_order": hr.weyl_order,
                    "counts": hr.counts,
                    "consistent": hr.consistent,
                    "entries": [
                        {
                            "conjugator_word": list(e.conjugator_word),
                            "dominant_exponents": list(e.conjugate_exponents),
                            "evidence": {
                                k: (list(v) if isinstance(v, tuple) else v)
                                for k, v in e.evidence.items()
                            },
                        }
                        for e in hr.entries
                    ],
                }
                report["warnings"].extend(hr.warnings)
        elif cm.in_lowest_cell(g):
            results["verdict"] = cm.Verdict.IN_LOWEST.value
            results["certificate"] = {"criterion": "nowhere-zero coordinate form"}
        elif system.family == "G2" and ag.in_affine_part(g):
            nf = cm.g2_normal_form(g)
            if nf is not None:
                results["verdict"] = cm.Verdict.IN_SECOND_LOWEST.value
                results["certificate"] = {
                    "criterion": "G2 second-lowest normal form",
                    "normal_form": [nf.i, nf.j, nf.k],
                }
            else:
                results["verdict"] = cm.Verdict.NOT_IN_EITHER.value
                results["certificate"] = {
                    "criterion": "no G2 normal form and a zero coordinate"
                }
        else:
            results["verdict"] = cm.Verdict.UNKNOWN.value
            results["certificate"] = {
                "criterion": "no implemented criterion decides this element"
            }
            report["warnings"].append(
                "membership criteria beyond the lowest cell apply to "
                "translations (and all of G2's affine part) only"
            )

    elif args.subcommand == "mu":
        system = _require_system(args)
        if system.family != "A":
            raise UsageError("mu requires --family A")
        n = system.rank + 1
        text = args.element.strip()
        if text.startswith("["):
            window = parse_window(text)
            if len(window) != n:
                raise UsageError(
                    f"window needs {n} entries for family A rank {system.rank}"
                )
            p = ta.AffinePermutation(n, tuple(window))
        else:
            p = ta.to_permutation(parse_element(system, text))
        results["window"] = list(p.window)
        results["mu"] = list(ta.mu_partition(p))

    elif args.subcommand == "g2-nf":
        system = _require_system(args)
        if system.family != "G2":
            raise UsageError("g2-nf requires --family G2")
        g = parse_element(system, args.element)
        nf = cm.g2_normal_form(g)
        results["normal_form"] = None if nf is None else [nf.i, nf.j, nf.k]

    elif args.subcommand == "kl":
        system = _require_system(args)
        ball, table, warnings = _kl_table(args, system, args.bound)
        report["warnings"].extend(warnings)
        x = parse_element(system, args.x)
        w = parse_element(system, args.w)
        poly = kl.kl_polynomial(table, x, w)
        results["ball_size"] = len(ball)
        results["polynomial"] = list(poly)
        results["mu"] = kl.mu_coefficient(table, x, w)
        results["edge"] = kl.edge(table, x, w)

    elif args.subcommand == "ball":
        system = _require_system(args)
        layers = ag.affine_ball_layers(system, args.bound, cap=args.max_ball)
        results["bound"] = args.bound
        results["layer_sizes"] = [len(layer) for layer in layers]
        results["size"] = sum(len(layer) for layer in layers)

    elif args.subcommand == "cellgraph":
        system = _require_system(args)
        ball, table, warnings = _kl_table(args, system, args.bound)
        report["warnings"].extend(warnings)
        graph = kl.cell_graph(table, args.side)
        results["side"] = args.side
        results["truncated"] = graph.truncated
        results["components"] = [
            [format_element(ball.elements[v]) for v in comp]
            for comp in graph.components
        ]
        report["warnings"].append(
            "components are within-ball approximations; edges leaving the "
            "ball are unknown"
        )

    elif args.subcommand == "verify":
        try:
            checks = verify_mod.run_suite(args.suite)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        results["suite"] = args.suite
        results["checks"] = [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in checks
        ]
        results["passed"] = sum(c.passed for c in checks)
        results["total"] = len(checks)
        if results["passed"] != results["total"]:
            status = 2

    return report, status


def _print_text(report: dict, stream) -> None:
    results = report["results"]
    if "checks" in results:
        for c in results["checks"]:
            mark = "PASS" if c["passed"] else "FAIL"
            detail = f"  [{c['detail']}]" if c["detail"] and not c["passed"] else ""
            print(f"{mark}  {c['name']}{detail}", file=stream)
        print(f"{results['passed']}/{results['total']} checks passed", file=stream)
    else:
        for key, value in results.items():
            print(f"{key}: {value}", file=stream)
    for w in report["warnings"]:
        print(f"warning: {w}", file=stream)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        report, status = run(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except LiteralError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if report["command"]["output"] == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        _print_text(report, sys.stdout)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
