"""Command-line interface.

Verbs: charpoly, spectrum, gcp, corona, lex, verify, fixtures.  Exit codes
form a stable contract: 0 success, 1 internal failure (or verification
mismatch), 2 malformed input, 3 violated route precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ._backend import BACKEND
from .errors import DomainError, PreconditionError, SpecError
from .fixtures import run_fixture_checks
from .joins import JoinSpec, UniversalParams, generalized_corona, lexicographic, universal_matrix
from .oracle import compare, oracle_charpoly
from .polynomials import Polynomial, square_free_decomposition
from .spectra import (
    corona_charpoly,
    generalized_charpoly,
    hgen_join_charpoly,
    hjoin_universal_charpoly,
    hjoin_universal_spectrum_alpha_delta_zero,
    hjoin_universal_spectrum_regular,
    join_charpoly,
    join_spectrum,
    lex_universal_charpoly,
)
from .verification import run_random_suite, verify_spec


def dumps_result(obj) -> str:
    """Canonical JSON emission; re-serializing a parse of this is byte-identical."""
    return json.dumps(obj, indent=2, sort_keys=True)


def _emit(obj, args) -> None:
    text = dumps_result(obj)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _load_spec(path: str) -> JoinSpec:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return JoinSpec.from_json_obj(obj)


def _factored_hint(p: Polynomial) -> list[dict]:
    return [
        {"factor": f.to_strings(), "multiplicity": mult}
        for f, mult in square_free_decomposition(p)
    ]


def _poly_result(route: str, poly: Polynomial, extra: dict | None = None) -> dict:
    obj = {
        "route": route,
        "degree": len(poly.coeffs) - 1,
        "charpoly": poly.to_strings(),
        "factored_hint": _factored_hint(poly),
    }
    if extra:
        obj.update(extra)
    return obj


def _parse_rational(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise SpecError(f"bad {what}: {text!r} is not a rational p/q") from None


def cmd_charpoly(args) -> int:
    spec = _load_spec(args.spec)
    if args.route == "auto":
        route, poly = join_charpoly(spec)
    elif args.route == "subset":
        route, poly = "subset-join", hgen_join_charpoly(spec)
    elif args.route == "universal":
        if spec.universal is None:
            spec = spec.with_universal(UniversalParams.adjacency())
        route, poly = "universal-join", hjoin_universal_charpoly(spec)
    else:  # adjacency
        if spec.subsets is not None:
            raise PreconditionError("adjacency route applies to plain joins; drop 'subsets' or use --route subset")
        route, poly = "adjacency-join", hjoin_universal_charpoly(
            spec.with_universal(UniversalParams.adjacency())
        )
    _emit(_poly_result(route, poly), args)
    return 0


def cmd_spectrum(args) -> int:
    spec = _load_spec(args.spec)
    if args.route == "auto":
        route, report = join_spectrum(spec, tol=args.tol, verify=args.verify)
    elif args.route == "regular":
        route, report = "regular-shortcut", hjoin_universal_spectrum_regular(spec, tol=args.tol)
    else:  # balanced
        route, report = "balanced-shortcut", hjoin_universal_spectrum_alpha_delta_zero(spec, tol=args.tol)
    obj = {
        "route": route,
        "charpoly": report.charpoly.to_strings(),
        "inherited": [[v, m, b] for v, m, b in report.inherited],
        "reduced": [[v, m, b] for v, m, b in report.reduced],
        "coupling": report.coupling.to_strings(),
        "coupling_roots": list(report.coupling_roots),
        "eigenvalues": report.eigenvalues(),
    }
    if report.oracle_verdict is not None:
        obj["oracle"] = {
            "equal": report.oracle_verdict.equal,
            "first_mismatch": report.oracle_verdict.first_mismatch,
            "detail": report.oracle_verdict.detail,
        }
    _emit(obj, args)
    if report.oracle_verdict is not None and not report.oracle_verdict.equal:
        return 1
    return 0


def cmd_gcp(args) -> int:
    spec = _load_spec(args.spec)
    t = _parse_rational(args.t, "t value")
    poly = generalized_charpoly(spec, t)
    _emit(_poly_result("degree-shift", poly, {"t": str(t)}), args)
    return 0


def cmd_corona(args) -> int:
    spec = _load_spec(args.spec)
    if spec.universal is not None or spec.subsets is not None:
        raise PreconditionError("corona route reads host + companion components only")
    poly = corona_charpoly(spec.host, spec.components)
    extra = {}
    if args.verify:
        truth = oracle_charpoly(generalized_corona(spec.host, spec.components).adjacency())
        verdict = compare(poly, truth)
        extra["oracle"] = {"equal": verdict.equal, "first_mismatch": verdict.first_mismatch, "detail": verdict.detail}
    _emit(_poly_result("corona", poly, extra), args)
    if args.verify and not extra["oracle"]["equal"]:
        return 1
    return 0


def cmd_lex(args) -> int:
    with open(args.spec, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SpecError(f"{args.spec}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    # a single inner graph stands for one copy per host vertex
    if isinstance(obj, dict) and isinstance(obj.get("components"), list) and len(obj["components"]) == 1:
        host_n = obj.get("host", {}).get("n") if isinstance(obj.get("host"), dict) else None
        if host_n is None and isinstance(obj.get("host"), str):
            from .graphs import Graph

            host_n = Graph.from_text(obj["host"]).n
        if isinstance(host_n, int):
            obj = dict(obj, components=obj["components"] * host_n)
    spec = JoinSpec.from_json_obj(obj)
    if spec.subsets is not None:
        raise PreconditionError("lexicographic route takes a plain host + one inner graph")
    inners = set(spec.components)
    if len(inners) != 1:
        raise PreconditionError("lexicographic route needs all components identical (or a single one)")
    inner = spec.components[0]
    params = spec.universal if spec.universal is not None else UniversalParams.adjacency()
    poly = lex_universal_charpoly(spec.host, inner, params)
    extra = {}
    if args.verify:
        truth = oracle_charpoly(universal_matrix(lexicographic(spec.host, inner), params))
        verdict = compare(poly, truth)
        extra["oracle"] = {"equal": verdict.equal, "first_mismatch": verdict.first_mismatch, "detail": verdict.detail}
    _emit(_poly_result("lexicographic", poly, extra), args)
    if args.verify and not extra["oracle"]["equal"]:
        return 1
    return 0


def cmd_verify(args) -> int:
    if args.spec:
        cases = [verify_spec(_load_spec(args.spec), name=args.spec)]
    else:
        cases = run_random_suite(args.seed, args.cases)
    passed = sum(1 for c in cases if c.passed)
    if args.json:
        _emit([{"name": c.name, "passed": c.passed, "detail": c.detail} for c in cases], args)
    else:
        for c in cases:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}  {c.detail}")
        print(f"{passed}/{len(cases)} passed  (kernel backend: {BACKEND})")
    return 0 if passed == len(cases) else 1


def cmd_fixtures(args) -> int:
    results = run_fixture_checks(tol=args.tol, with_oracle=not args.no_oracle)
    if args.json:
        _emit(
            [{"name": r.name, "route": r.route, "passed": r.passed, "detail": r.detail} for r in results],
            args,
        )
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            print(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  [{r.route}] {r.detail}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="joinspectra",
        description="Exact characteristic polynomials and spectra of graph joins.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p, spec_required=True):
        if spec_required:
            p.add_argument("spec", help="path to a join spec JSON file")
        p.add_argument("-o", "--output", help="write JSON result to this path instead of stdout")

    p = sub.add_parser("charpoly", help="exact characteristic polynomial of a join spec")
    add_common(p)
    p.add_argument("--route", choices=["auto", "adjacency", "universal", "subset"], default="auto")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("spectrum", help="classified spectrum of a join spec")
    add_common(p)
    p.add_argument("--route", choices=["auto", "regular", "balanced"], default="auto")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--verify", action="store_true", help="also compare against the dense oracle")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("gcp", help="charpoly of A - t*D for the join, at rational t")
    add_common(p)
    p.add_argument("--t", required=True, help="rational value, e.g. 1/2 or -2")
    p.set_defaults(func=cmd_gcp)

    p = sub.add_parser("corona", help="corona charpoly (spec host = base graph, components = companions)")
    add_common(p)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_corona)

    p = sub.add_parser("lex", help="lexicographic-product universal charpoly (delta must be 0)")
    add_common(p)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_lex)

    p = sub.add_parser("verify", help="formula vs oracle, for one spec or a seeded random suite")
    p.add_argument("spec", nargs="?", help="optional spec file; omit to run the random suite")
    p.add_argument("-o", "--output", help="write JSON result to this path instead of stdout")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=50)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixtures", help="run the golden end-to-end fixtures")
    p.add_argument("-o", "--output", help="write JSON result to this path instead of stdout")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-oracle", action="store_true", help="skip dense-oracle comparisons")
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (PreconditionError, DomainError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # noqa: BLE001 - the contract maps everything else to 1
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
