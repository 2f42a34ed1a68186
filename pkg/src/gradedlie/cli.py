"""Command-line front end.  JSON goes to stdout (or ``--out``), logs to stderr.

Exit codes: 0 success, 1 invalid arguments or input, 2 a computed check failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import construct
from .cartantype import k_algebra, w_algebra
from .fgla import (
    GradedLieAlgebra,
    check_antisymmetry,
    check_grading,
    check_jacobi,
    is_fundamental,
    is_nondegenerate,
)
from .prolong import truncated_prolongation, verify_transitive
from .reproduce import TABLES, run_table
from .rootgrade import grade_by_marks

log = logging.getLogger("gradedlie")


class UsageError(Exception):
    pass


class CheckFailed(Exception):
    def __init__(self, payload: dict):
        super().__init__("check failed")
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _degrees(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError("empty degree range")
    return lo, hi


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _read_json(path: str | None) -> dict:
    text = open(path).read() if path and path != "-" else sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"input is not JSON: {exc}")


def _read_algebra(path: str | None) -> GradedLieAlgebra:
    data = _read_json(path)
    if "algebra" in data and "degrees" not in data:
        data = data["algebra"]
    try:
        return GradedLieAlgebra.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"input is not a graded Lie algebra: {exc}")


def _write(payload: dict, path: str | None):
    text = json.dumps(payload, indent=2, sort_keys=False) + "\n"
    if path and path != "-":
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graded_dims(data: dict) -> dict[int, int]:
    """Dimension table from any report this CLI emits, or from an algebra."""
    if "algebra" in data and "graded_dims" not in data:
        data = data["algebra"]
    for key in ("graded_dims", "dims"):
        if key in data:
            return {int(p): int(d) for p, d in data[key].items() if int(d)}
    raise UsageError("input carries no dimension table")


def cmd_build(args) -> dict:
    builders = {
        "free": (construct.free_fgla, 2),
        "universal": (construct.universal_fgla, 2),
        "pp": (construct.free_pseudoproduct_fgla, 3),
        "contact": (construct.contact_algebra, 3),
        "model3": (construct.model_mn3, 2),
    }
    fn, arity = builders[args.kind]
    if len(args.params) != arity:
        raise UsageError(f"build {args.kind} takes {arity} integers")
    try:
        g = fn(*args.params)
    except ValueError as exc:
        raise UsageError(str(exc))
    log.info("built %s%s: dims %s", args.kind, tuple(args.params), g.dims)
    return g.to_dict()


def cmd_prolong(args) -> dict:
    m = _read_algebra(args.input)
    if args.pseudo_product and m.pseudo_product is None:
        raise UsageError("input has no pseudo-product structure")
    try:
        tp = truncated_prolongation(m, args.max_degree, pseudo_product=True if args.pseudo_product else None)
    except ValueError as exc:
        raise UsageError(str(exc))
    out = tp.report()
    out["algebra"] = tp.algebra.to_dict()
    log.info("prolongation layers %s (%s)", tp.layer_dims, tp.status)
    return out


def _result(res) -> dict:
    out = {"ok": bool(res.ok)}
    if not res.ok:
        out["witness"] = _jsonable(res.witness)
        out["detail"] = res.detail
    return out


def _jsonable(x):
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    return str(x)


def cmd_check(args) -> dict:
    g = _read_algebra(args.input)
    results = {
        "antisymmetry": _result(check_antisymmetry(g)),
        "grading": _result(check_grading(g)),
        "jacobi": _result(check_jacobi(g)),
    }
    neg = g.negative_part()
    results["fundamental"] = _result(is_fundamental(neg))
    results["nondegenerate"] = _result(is_nondegenerate(neg))
    if any(p >= 0 for p in g.dims):
        results["transitive"] = _result(verify_transitive(g))
    if g.pseudo_product is not None:
        results["pseudo_product"] = _result(g.pseudo_product.validate(g))
    required = ["antisymmetry", "grading", "jacobi", "pseudo_product"]
    if args.expect_fundamental:
        required.append("fundamental")
    if args.expect_transitive:
        required.append("transitive")
    failed = [k for k in required if k in results and not results[k]["ok"]]
    payload = {"dims": {str(p): d for p, d in sorted(g.dims.items())}, "checks": results, "failed": failed}
    if failed:
        raise CheckFailed(payload)
    return payload


def cmd_simple_gradation(args) -> dict:
    try:
        return grade_by_marks(args.type, args.rank, args.cross).report()
    except ValueError as exc:
        raise UsageError(str(exc))


def cmd_cartan(args) -> dict:
    lo, hi = args.degrees
    try:
        if args.family == "W":
            if args.vars is None:
                raise UsageError("cartan W needs --vars")
            weights = args.weights or [1] * args.vars
            if len(weights) != args.vars:
                raise UsageError("--weights needs one entry per variable")
            g = w_algebra(args.vars, weights, lo, hi)
            name = f"W({args.vars};{tuple(weights)})"
        else:
            if args.n is None:
                raise UsageError("cartan K needs --n")
            g = k_algebra(args.n, lo, hi)
            name = f"K({args.n})"
    except ValueError as exc:
        raise UsageError(str(exc))
    dims = {p: d for p, d in sorted(g.dims.items())}
    return {
        "family": name,
        "degrees": [lo, hi],
        "graded_dims": {str(p): d for p, d in dims.items()},
        "dim_vector": list(dims.values()),
        "algebra": g.to_dict(),
    }


def cmd_compare(args) -> dict:
    a = _graded_dims(_read_json(args.a))
    b = _graded_dims(_read_json(args.b))
    degrees = sorted(set(a) | set(b))
    diff = [p for p in degrees if a.get(p, 0) != b.get(p, 0)]
    payload = {
        "equal": not diff,
        "a": [a.get(p, 0) for p in degrees],
        "b": [b.get(p, 0) for p in degrees],
        "degrees": degrees,
    }
    if diff:
        payload["witness"] = {str(p): [a.get(p, 0), b.get(p, 0)] for p in diff}
        raise CheckFailed(payload)
    return payload


def cmd_reproduce(args) -> dict:
    kw = {}
    if args.max is not None:
        if args.target != "prop8.3":
            raise UsageError("--max applies to prop8.3 only")
        kw["max_mn"] = args.max
    table = run_table(args.target, **kw)
    for r in table["rows"]:
        log.info("%-48s %s", r["case"], "PASS" if r["pass"] else "FAIL")
    if not table["all_pass"]:
        raise CheckFailed(table)
    return table


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gradedlie", description="Fundamental graded Lie algebras and their prolongations.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="construct an FGLA")
    b.add_argument("kind", choices=["free", "universal", "pp", "contact", "model3"])
    b.add_argument("params", type=int, nargs="+")
    b.add_argument("--out")
    b.set_defaults(func=cmd_build)

    pr = sub.add_parser("prolong", help="truncated prolongation of an FGLA")
    pr.add_argument("--max-degree", type=int, required=True)
    pr.add_argument("--pseudo-product", action="store_true", help="restrict degree 0 to the pseudo-product")
    pr.add_argument("--in", dest="input")
    pr.add_argument("--out")
    pr.set_defaults(func=cmd_prolong)

    c = sub.add_parser("check", help="run the structural checks on an algebra")
    c.add_argument("--in", dest="input")
    c.add_argument("--out")
    c.add_argument("--expect-fundamental", action="store_true")
    c.add_argument("--expect-transitive", action="store_true")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("simple-gradation", help="dimension report of a marked Dynkin diagram")
    s.add_argument("--type", required=True)
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--cross", type=_int_list, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_simple_gradation)

    ca = sub.add_parser("cartan", help="truncated W(m; s) or K(n)")
    ca.add_argument("family", choices=["W", "K"])
    ca.add_argument("--vars", type=int)
    ca.add_argument("--weights", type=_int_list)
    ca.add_argument("--n", type=int)
    ca.add_argument("--degrees", type=_degrees, required=True)
    ca.add_argument("--out")
    ca.set_defaults(func=cmd_cartan)

    cm = sub.add_parser("compare", help="compare the graded dimensions of two reports")
    cm.add_argument("a")
    cm.add_argument("b")
    cm.add_argument("--out")
    cm.set_defaults(func=cmd_compare)

    r = sub.add_parser("reproduce", help="run a reproduction table")
    r.add_argument("target", choices=sorted(TABLES))
    r.add_argument("--max", type=int)
    r.add_argument("--out")
    r.set_defaults(func=cmd_reproduce)
    return p


def _join_ranges(argv: list[str]) -> list[str]:
    # "--degrees -2..3" would otherwise read as an unknown option
    out = []
    it = iter(argv)
    for a in it:
        if a == "--degrees":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--degrees={nxt}")
        else:
            out.append(a)
    return out


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _join_ranges(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    logging.basicConfig(
        level=logging.INFO if args.verbose or args.command == "reproduce" else logging.WARNING,
        format="%(message)s",
        stream=sys.stderr,
    )
    try:
        payload = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CheckFailed as exc:
        _write(exc.payload, getattr(args, "out", None))
        return 2
    _write(payload, getattr(args, "out", None))
    return 0


def main():
    sys.exit(run())
