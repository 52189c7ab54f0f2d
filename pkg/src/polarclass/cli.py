"""Command-line front end.

Exit codes: 0 success, 1 self-test failure, 2 malformed input,
3 formula precondition not met, 4 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings
from typing import Any, Sequence

from polarclass import acceptance, class_calculus as cc, curves, scrolls, toric
from polarclass.errors import InputError, PolarClassError
from polarclass.polytope import SCAN_BUDGET_ENV, from_vertices, face_lattice

EXIT_OK, EXIT_SELFTEST, EXIT_INPUT, EXIT_PRECONDITION, EXIT_RESOURCE = 0, 1, 2, 3, 4


# ---------------------------------------------------------------- input parsing

def _reject_float(text: str):
    raise InputError(f"fractional literal {text} not allowed; exact integers only")


def _reject_constant(text: str):
    raise InputError(f"{text} is not an integer")


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_toric_input(text: str) -> dict:
    """Parse and validate a toric input document (JSON)."""
    try:
        doc = json.loads(text, parse_float=_reject_float, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError("top level must be an object")
    unknown = set(doc) - {"vertices", "weights", "order"}
    if unknown:
        raise InputError(f"unknown fields: {sorted(unknown)}")
    verts = doc.get("vertices")
    if not isinstance(verts, list) or not verts:
        raise InputError("'vertices' must be a nonempty array of integer arrays")
    for v in verts:
        if not isinstance(v, list) or not all(_is_int(x) for x in v):
            raise InputError(f"vertex {v!r} is not an array of integers")
    weights = doc.get("weights", {"default": 1, "overrides": []})
    if not isinstance(weights, dict) or set(weights) - {"default", "overrides"}:
        raise InputError("'weights' must be an object with 'default' and 'overrides'")
    default = weights.get("default", 1)
    if not _is_int(default):
        raise InputError("'weights.default' must be an integer")
    overrides = weights.get("overrides", [])
    if not isinstance(overrides, list):
        raise InputError("'weights.overrides' must be an array")
    for o in overrides:
        if (not isinstance(o, dict) or set(o) != {"face_vertices", "eu"} or not _is_int(o["eu"])
                or not isinstance(o["face_vertices"], list)
                or not all(_is_int(i) for i in o["face_vertices"])):
            raise InputError(f"bad weight override {o!r}; need {{'face_vertices': [...], 'eu': int}}")
    order = doc.get("order")
    if order is not None and not _is_int(order):
        raise InputError("'order' must be an integer")
    return {"vertices": verts, "weights": {"default": default, "overrides": overrides}, "order": order}


def _int_list(text: str, what: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"{what} must be a comma-separated list of integers, got {text!r}") from None


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


# ---------------------------------------------------------------- runners

def run_toric(args) -> dict:
    spec = parse_toric_input(_read_input(args.input))
    if args.order is not None:
        spec["order"] = args.order
    P = from_vertices(spec["vertices"])
    W = toric.EulerWeighting(
        spec["weights"]["default"],
        {tuple(o["face_vertices"]): o["eu"] for o in spec["weights"]["overrides"]})
    report = toric.toric_report(P, W)
    results = {
        "ambient_dim": P.ambient_dim,
        "dim": P.dim,
        "vertices": [list(v) for v in P.vertices],
        "faces": [
            {"dim": F.dim, "vertices": list(F.vertex_indices), "normalized_volume": F.normalized_volume,
             "weight": W.weight(P, F.vertex_indices)}
            for F in face_lattice(P).faces
        ],
        **report.to_dict(),
    }
    if spec["order"] is not None:
        results["higher_order"] = {"order": spec["order"],
                                   "degrees": list(toric.higher_order_polar(P, spec["order"]))}
    return {"mode": "toric", "input_echo": spec, "results": results}


def run_curve(args) -> dict:
    kappa = _int_list(args.kappa, "--kappa") if args.kappa is not None else [0] * max(args.n - 1, 0)
    C = curves.CurveData(args.n, args.d, args.g, tuple(kappa))
    results: dict[str, Any] = {"k": args.k, "rank": curves.rank(C, args.k),
                               "strict_dual_ranks": curves.strict_dual_ranks(C)}
    if args.k >= 1:
        results["polar"] = list(curves.polar_degrees_curve(C, args.k))
        results["reciprocal"] = curves.reciprocal_degree_curve(C, args.k)
    echo = {"n": args.n, "d": args.d, "g": args.g, "kappa": kappa, "k": args.k}
    return {"mode": "curve", "input_echo": echo, "results": results}


def run_scroll(args) -> dict:
    if args.elliptic:
        if args.e is None or args.d is None:
            raise InputError("--elliptic needs -e and -d")
        S = scrolls.EllipticScrollSpec(args.e, args.d, args.decomposable)
        order, degree = scrolls.elliptic_dual_degree(S)
        echo = {"elliptic": True, "e": args.e, "d": args.d, "decomposable": args.decomposable}
        results = {"case": scrolls.elliptic_case(S).name, "order": order, "degree": degree,
                   "scroll_degree": S.degree, "n": S.n}
    else:
        if args.type is None or args.order is None:
            raise InputError("rational scrolls need --type and --order (or use --elliptic)")
        S = scrolls.RationalScrollSpec(tuple(_int_list(args.type, "--type")))
        echo = {"type": list(S.type), "order": args.order}
        results = {"order": args.order, "degree": scrolls.rns_dual_degree(S, args.order),
                   "selfdual": scrolls.rns_is_balanced_selfdual(S, args.order),
                   "m": S.m, "d": S.d, "n": S.n}
    return {"mode": "scroll", "input_echo": echo, "results": results}


def run_convert(args) -> dict:
    values = _int_list(args.degrees, "--degrees")
    if not values:
        raise InputError("--degrees must not be empty")
    seq = cc.DegreeSequence.of(values)
    if args.source == "mather":
        mather, polar = seq, cc.polar_from_mather(seq)
        results = {"polar": list(polar)}
    else:
        polar, mather = seq, cc.mather_from_polar(seq)
        results = {"mather": list(mather)}
    results["reciprocal"] = list(cc.reciprocal_from_polar(polar))
    results["ed_degree"] = cc.ed_degree_from_mather(mather)
    if args.delta is not None:
        results["dual_reversal"] = list(cc.dual_degree_reversal(polar, args.delta))
    echo = {"from": args.source, "degrees": values, "delta": args.delta}
    return {"mode": "convert", "input_echo": echo, "results": results}


def run_selftest(args) -> tuple[dict, int]:
    with acceptance.injected_fault(args.inject_fault):
        outcomes = acceptance.run_all()
    results = {
        "checks": [{"number": o.criterion.number, "name": o.criterion.name, "passed": o.passed,
                    "resource_limit": o.resource_error, "detail": o.detail} for o in outcomes],
        "failed": [o.criterion.name for o in outcomes if not o.passed],
    }
    if any(o.resource_error for o in outcomes):
        code = EXIT_RESOURCE
    elif results["failed"]:
        code = EXIT_SELFTEST
    else:
        code = EXIT_OK
    doc = {"mode": "selftest", "input_echo": {"inject_fault": args.inject_fault}, "results": results}
    return doc, code


# ---------------------------------------------------------------- rendering

def render_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> list[str]:
    cells = [list(map(str, headers))] + [[str(x) for x in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return lines


def render_table(doc: dict) -> str:
    mode, res = doc["mode"], doc["results"]
    out: list[str] = []
    if mode == "toric":
        out.append(f"lattice polytope of dimension {res['dim']} in Z^{res['ambient_dim']}, "
                   f"{len(res['vertices'])} vertices")
        rows = [(j, res["vol"][j], res["evol"][j], res["polar"][j], res["reciprocal"][j])
                for j in range(res["m"] + 1)]
        out += _table(["codim", "Vol", "EVol", "polar", "reciprocal"], rows)
        out.append(f"ED degree: {res['ed_degree']}")
        if "higher_order" in res:
            ho = res["higher_order"]
            out.append(f"order-{ho['order']} polar degrees (i = 1..): {', '.join(map(str, ho['degrees']))}")
    elif mode == "curve":
        out.append(f"r_{res['k']} = {res['rank']}")
        if "polar" in res:
            out.append(f"order-{res['k']} polar degrees: {res['polar'][0]}, {res['polar'][1]}")
            out.append(f"order-{res['k']} reciprocal degree: {res['reciprocal']}")
        out.append(f"strict dual ranks: {', '.join(map(str, res['strict_dual_ranks']))}")
    elif mode == "scroll":
        out.append(f"order {res['order']} dual degree: {res['degree']}")
        if "selfdual" in res:
            out.append(f"balanced selfdual: {'true' if res['selfdual'] else 'false'}")
        else:
            out.append(f"case: {res['case']}")
    elif mode == "convert":
        for key in ("polar", "mather", "reciprocal", "dual_reversal"):
            if key in res:
                out.append(f"{key}: {','.join(map(str, res[key]))}")
        out.append(f"ed_degree: {res['ed_degree']}")
    elif mode == "selftest":
        for c in res["checks"]:
            status = "PASS" if c["passed"] else ("LIMIT" if c["resource_limit"] else "FAIL")
            out.append(f"{status:5} {c['number']:2d} {c['name']}: {c['detail']}")
        out.append("all checks passed" if not res["failed"] else f"failed: {', '.join(res['failed'])}")
    for w in doc.get("warnings", []):
        out.append(f"warning: {w}")
    return "\n".join(out)


# ---------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("table", "json"), default="table")
    common.add_argument("--scan-budget", type=int, default=None,
                        help=f"lattice-point scan budget (overrides {SCAN_BUDGET_ENV})")

    parser = argparse.ArgumentParser(
        prog="polarclass", description="Degrees of polar and reciprocal polar classes.")
    sub = parser.add_subparsers(dest="mode", required=True)

    p = sub.add_parser("toric", parents=[common], help="toric variety of a lattice polytope")
    p.add_argument("--input", required=True, help="JSON input file, or - for stdin")
    p.add_argument("--order", type=int, default=None, help="order k for the higher-order formulas")

    p = sub.add_parser("curve", parents=[common], help="projective curve invariants")
    p.add_argument("-n", type=int, required=True, help="ambient projective dimension")
    p.add_argument("-d", type=int, required=True, help="degree")
    p.add_argument("-g", type=int, default=0, help="genus of the normalization")
    p.add_argument("--kappa", default=None, help="stationary indices kappa_0..kappa_{n-2} (default all 0)")
    p.add_argument("-k", type=int, required=True, help="order")

    p = sub.add_parser("scroll", parents=[common], help="rational normal and elliptic scrolls")
    p.add_argument("--type", default=None, help="rational scroll type d_1,...,d_m")
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--elliptic", action="store_true")
    p.add_argument("-e", type=int, default=None, help="Atiyah invariant")
    p.add_argument("-d", type=int, default=None, help="degree of the twisting line bundle")
    p.add_argument("--decomposable", action="store_true")

    p = sub.add_parser("convert", parents=[common], help="polar <-> Mather-Chern degrees")
    p.add_argument("--from", dest="source", choices=("mather", "polar"), required=True)
    p.add_argument("--degrees", required=True, help="comma-separated degrees, codimension 0..m")
    p.add_argument("--delta", type=int, default=None, help="dual defect for degree reversal")

    p = sub.add_parser("selftest", parents=[common], help="run the built-in acceptance checks")
    p.add_argument("--inject-fault", choices=sorted(acceptance.FAULTS), default=None,
                   help="deliberately break a component (harness check)")
    return parser


RUNNERS = {"toric": run_toric, "curve": run_curve, "scroll": run_scroll, "convert": run_convert}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    saved = os.environ.get(SCAN_BUDGET_ENV)
    if args.scan_budget is not None:
        os.environ[SCAN_BUDGET_ENV] = str(args.scan_budget)
    try:
        return _dispatch(args)
    finally:
        if saved is None:
            os.environ.pop(SCAN_BUDGET_ENV, None)
        else:
            os.environ[SCAN_BUDGET_ENV] = saved


def _dispatch(args) -> int:
    code = EXIT_OK
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            if args.mode == "selftest":
                doc, code = run_selftest(args)
            else:
                doc = RUNNERS[args.mode](args)
        except PolarClassError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return exc.exit_code
    doc["warnings"] = [str(w.message) for w in caught]
    print(render_json(doc) if args.output == "json" else render_table(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
