"""Command-line front end: JSON specs in, deterministic JSON (or a flat table) out.

Every run emits a report with the command echo, sha256 digests of the file
inputs, the truncation degree used (when one applies) and the results; two
runs on identical inputs produce identical bytes.  Exit codes: 0 success,
2 invalid input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import action, chern, curve, gkm, rootsystems
from .errors import InputError, InternalError
from .exactalg import Poly, format_fraction


def _sha256(path: str) -> str:
    with open(path, "rb") as handle:
        return hashlib.sha256(handle.read()).hexdigest()


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _poly_json(p: Poly) -> list[str]:
    return [format_fraction(c) for c in p.coeffs]


def _component_json(comp) -> dict:
    return {
        "index": comp.index,
        "degrees": list(comp.degrees),
        "chart_coords": [_poly_json(p) for p in comp.chart_coords],
        "homogeneous_coords": [_poly_json(p) for p in comp.homog_coords],
    }


def _report(subcommand: str, options: dict, inputs: dict, result: dict,
            max_degree: int | None) -> dict:
    return {
        "command": subcommand,
        "options": options,
        "inputs": {name: {"path": path, "sha256": _sha256(path)}
                   for name, path in inputs.items()},
        "result": result,
        "max_degree": max_degree,
        "exact_arithmetic": True,
    }


def _parse_int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise InputError(f"bad {what} list {text!r}: expected comma-separated integers") from exc


# ---------------------------------------------------------------------------
# subcommands


def cmd_poincare(args) -> dict:
    if args.degrees is not None and args.family is not None:
        raise InputError("choose either --family/--rank or --degrees, not both")
    if args.degrees is not None:
        degrees = _parse_int_list(args.degrees, "degree")
        poly = rootsystems.poincare_from_degrees(degrees)
        options = {"degrees": degrees}
        result = {"poly": list(poly.coeffs)}
    else:
        if args.family is None or args.rank is None:
            raise InputError("poincare needs --family and --rank, or --degrees")
        rs = rootsystems.positive_roots(args.family, args.rank)
        poly = rootsystems.km_poincare(rs)
        options = {"family": args.family, "rank": args.rank}
        result = {"poly": list(poly.coeffs),
                  "weyl_order": poly.value_at_one,
                  "heights": sorted(rootsystems.heights(rs))}
    return _report("poincare", options, {}, result, None)


def cmd_action(args) -> dict:
    model = action.model_from_json(_load_json(args.spec))
    inputs = {"spec": args.spec}
    options = {"what": args.what}
    if args.what == "validate":
        result = {"valid": True,
                  "model": action.model_to_json(model),
                  "big_cell_degrees": action.big_cell_degrees(model)}
    elif args.what == "fixed-points":
        result = {"fixed_points": [list(p) for p in action.fixed_points(model)]}
    else:  # curve
        comps = [action.component_parametrization(model, j)
                 for j in range(1, model.n + 2)]
        result = {"components": [_component_json(c) for c in comps]}
    return _report("action", options, inputs, result, None)


def cmd_curve(args) -> dict:
    model = action.model_from_json(_load_json(args.spec))
    ring = curve.build_curve_ring(model)
    bound = args.max_degree if args.max_degree is not None else curve.default_degree_bound(ring)
    inputs = {"spec": args.spec}
    options = {"what": args.what, "components": args.components}
    if args.what == "ring":
        result = {
            "generators": [g.to_json() for g in ring.algebra.generators],
            "hilbert": ring.algebra.hilbert_function(bound),
            "betti": curve.betti_numbers(ring, bound),
            "truncation_degree": bound,
        }
    elif args.what == "betti":
        result = {"betti": curve.betti_numbers(ring, bound), "truncation_degree": bound}
    elif args.what == "restrict":
        if args.components is None:
            raise InputError("curve restrict needs --components")
        subset = _parse_int_list(args.components, "component")
        sub = curve.restrict(ring, subset)
        result = {
            "components": sorted(set(subset)),
            "generators": [g.to_json() for g in sub.generators],
            "hilbert": sub.hilbert_function(bound),
            "truncation_degree": bound,
        }
    else:  # ideal
        if args.components is None:
            raise InputError("curve ideal needs --components")
        subset = _parse_int_list(args.components, "component")
        dims = curve.ideal_hilbert(ring, subset, bound)
        result = {
            "components": sorted(set(subset)),
            "ideal_hilbert": dims,
            "stabilized_rank": ring.r - len(set(subset)),
            "truncation_degree": bound,
        }
    return _report("curve", options, inputs, result, bound)


def cmd_principal(args) -> dict:
    model = action.model_from_json(_load_json(args.spec))
    ring = curve.build_curve_ring(model)
    graph = gkm.GKMGraph.from_json(_load_json(args.gkm))
    verdict = gkm.principal_verdict(ring, graph, args.max_degree)
    result = {
        "verdict": verdict.to_json(),
        "gkm_ordinary_betti": gkm.gkm_ordinary_betti(graph),
    }
    return _report("principal", {"max_degree": args.max_degree},
                   {"spec": args.spec, "gkm": args.gkm}, result, verdict.bound)


def cmd_chern(args) -> dict:
    model = action.model_from_json(_load_json(args.spec))
    ring = curve.build_curve_ring(model)
    inputs = {"spec": args.spec}
    bundles = []
    for idx, spec in enumerate(args.bundle or []):
        if spec == "tangent":
            bundles.append(("tangent", chern.tangent_bundle(model)))
        else:
            bundles.append((spec, chern.bundle_from_json(_load_json(spec))))
            inputs[f"bundle{idx}"] = spec
    if not bundles:
        raise InputError("chern needs at least one --bundle (a JSON path or 'tangent')")
    per_bundle = []
    for name, bundle in bundles:
        entry = {"bundle": name, "k": args.k,
                 "tuple": chern.chern_tuple(bundle, args.k, ring).to_json()}
        if args.test_membership:
            entry["membership"] = chern.chern_membership(bundle, args.k, ring)
        per_bundle.append(entry)
    result: dict = {"bundles": per_bundle}
    bound = None
    if args.gkm is not None:
        graph = gkm.GKMGraph.from_json(_load_json(args.gkm))
        inputs["gkm"] = args.gkm
        generators = []
        for name, bundle in bundles:
            if set(bundle.fibres) != set(graph.vertices):
                raise InputError(f"bundle {name} fixed points {sorted(bundle.fibres)} "
                                 f"do not match graph vertices {list(graph.vertices)}")
            for k in range(1, bundle.rank + 1):
                generators.append(chern.chern_tuple(bundle, k, ring))
        verdict = chern.chern_subalgebra_verdict(generators, graph, args.max_degree)
        result["subalgebra_verdict"] = verdict.to_json()
        bound = verdict.bound
    return _report("chern", {"k": args.k, "test_membership": args.test_membership,
                             "max_degree": args.max_degree}, inputs, result, bound)


# ---------------------------------------------------------------------------
# rendering and entry point


def _flatten(prefix: str, obj, lines: list[str]) -> None:
    if isinstance(obj, dict):
        for key in sorted(obj):
            _flatten(f"{prefix}.{key}" if prefix else str(key), obj[key], lines)
    elif isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            lines.append(f"{prefix} = {' '.join(str(x) for x in obj)}")
        else:
            for i, item in enumerate(obj):
                _flatten(f"{prefix}[{i}]", item, lines)
    else:
        lines.append(f"{prefix} = {obj}")


def _render(report: dict, table: bool) -> str:
    if table:
        lines: list[str] = []
        _flatten("", report, lines)
        return "\n".join(lines)
    return json.dumps(report, indent=2, sort_keys=True)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borelcurve",
        description="Exact equivariant cohomology of regular Borel actions on "
                    "projective space, via the fixed-point curve.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--table", action="store_true",
                        help="flat key = value output instead of JSON")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("poincare", parents=[common],
                       help="Kostant-Macdonald Poincare polynomials")
    p.add_argument("--family", choices=["A", "B", "C", "D", "G2", "F4"])
    p.add_argument("--rank", type=int)
    p.add_argument("--degrees", help="comma-separated positive degrees, e.g. 1,2,3")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("action", parents=[common], help="validate a model and "
                       "list fixed points / curve parametrizations")
    p.add_argument("what", choices=["validate", "fixed-points", "curve"])
    p.add_argument("--spec", required=True, help="action spec JSON")
    p.set_defaults(func=cmd_action)

    p = sub.add_parser("curve", parents=[common], help="curve ring, Betti numbers, "
                       "restrictions and ideals")
    p.add_argument("what", choices=["ring", "betti", "restrict", "ideal"])
    p.add_argument("--spec", required=True)
    p.add_argument("--components", help="comma-separated fixed-point labels, e.g. 2,3")
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("principal", parents=[common],
                       help="decide surjectivity of the restriction map")
    p.add_argument("--spec", required=True)
    p.add_argument("--gkm", required=True, help="congruence graph JSON")
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_principal)

    p = sub.add_parser("chern", parents=[common],
                       help="equivariant Chern class tuples and generation tests")
    p.add_argument("--spec", required=True)
    p.add_argument("--bundle", action="append",
                   help="bundle spec JSON, or 'tangent' (repeatable)")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--test-membership", action="store_true")
    p.add_argument("--gkm", help="congruence graph JSON; compare the subalgebra "
                   "generated by all Chern classes of the given bundles")
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_chern)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except InputError as exc:
        print(json.dumps({"error": str(exc)}, sort_keys=True), file=sys.stderr)
        return 2
    except InternalError as exc:
        print(json.dumps({"internal_error": str(exc)}, sort_keys=True), file=sys.stderr)
        return 3
    print(_render(report, args.table))
    return 0


if __name__ == "__main__":
    sys.exit(main())
