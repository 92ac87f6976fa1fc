"""Command line: ``diffbody verify|search|selftest``.

Exit codes: 0 pass, 1 usage or compute error, 2 violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb, prod
from pathlib import Path
from typing import Sequence

from .constructions import CoordinateSubset, axis_simplex, staircase_antiblocking
from .covers import UniformCover, compositions
from .kernel import BodyFormatError, DimensionCapError, VPolytope, load_body, uncapped
from .mixed_volume import lemma_exact_sequence_check
from .report import VerificationReport, make_report, reports_to_csv, reports_to_json, summarize
from .search import BODY_CLASSES, TARGETS, SearchConfig, search_counterexamples
from .selftest import format_table, run_selftest
from . import verifiers

EXIT_OK, EXIT_ERROR, EXIT_VIOLATION = 0, 1, 2

VERIFIERS = (
    "rogers-shephard", "godbersen", "schneider", "conj1", "conj2", "conj2-reduction",
    "dual-bt", "decomposition", "alesker", "lemma-exact", "vandermonde",
)


class UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _str_list(text: str) -> tuple[str, ...]:
    return tuple(x.strip() for x in text.split(",") if x.strip())


def _parse_cover(text: str) -> list[list[int]]:
    """``"1,2;2;1"`` -> ``[[1, 2], [2], [1]]``; ``-`` or nothing marks an empty block."""
    blocks = []
    for part in text.split(";"):
        part = part.strip()
        blocks.append([] if part in ("", "-") else [int(x) for x in part.split(",")])
    return blocks


def _load_staircase(path: str) -> VPolytope:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise BodyFormatError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    if isinstance(obj, dict):
        obj = obj.get("generators", obj.get("vertices"))
    if not isinstance(obj, list) or not obj:
        raise BodyFormatError(f"{path}: expected a list of generators or an object with \"generators\"")
    return staircase_antiblocking(obj)


def _body_from_args(args) -> VPolytope:
    sources = [args.body, args.simplex, args.staircase]
    if sum(s is not None for s in sources) != 1:
        raise UsageError("give exactly one body source: --body FILE, --simplex c1,...,cn or --staircase FILE")
    if args.body is not None:
        return load_body(args.body)
    if args.simplex is not None:
        return axis_simplex(args.simplex)
    return _load_staircase(args.staircase)


def _need(args, name: str):
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"--{name.replace('_', '-')} is required for this verifier")
    return val


def _vandermonde_reports(n: int, p: int, k: int | None) -> list[VerificationReport]:
    first = sum(comb(p * n, j) * comb(n, j) for j in range(n + 1))
    out = [make_report("vandermonde-1", {"n": n, "p": p}, first, comb(p * n + n, n), kind="identity",
                       expected_equality=True, proven=True)]
    for kk in ([k] if k is not None else range(n + 1)):
        lhs = sum(prod(comb(n, ki) for ki in ks) for ks in compositions(kk, p))
        out.append(make_report("vandermonde-2", {"n": n, "p": p, "k": kk}, lhs, comb(p * n, kk),
                               kind="identity", expected_equality=True, proven=True))
    return out


def _run_verifier(args) -> list[VerificationReport]:
    name = args.verifier
    if name == "vandermonde":
        return _vandermonde_reports(_need(args, "n"), args.p or 1, args.k)
    if name == "lemma-exact":
        bodies = [load_body(f) for f in (args.body_list or [])]
        subs = [load_body(f) for f in (args.sub_body or [])]
        sigma = _need(args, "sigma")
        n = args.n or (bodies[0].ambient_dim if bodies else None)
        if n is None:
            raise UsageError("--n is required when no --body is given")
        return [lemma_exact_sequence_check(CoordinateSubset.of(n, sigma), bodies, subs)]

    K = _body_from_args(args)
    if name == "rogers-shephard":
        return [verifiers.check_rogers_shephard(K)]
    if name == "godbersen":
        return [verifiers.check_godbersen(K, _need(args, "k"))]
    if name == "schneider":
        return [verifiers.check_schneider(K, _need(args, "p"))]
    if name == "conj1":
        return [verifiers.check_conjecture1(K, _need(args, "p"), _need(args, "k"))]
    if name == "conj2":
        kvec = _need(args, "kvec")
        return [verifiers.check_conjecture2(K, args.p or len(kvec), kvec)]
    if name == "conj2-reduction":
        kvec = _need(args, "kvec")
        return [verifiers.check_conjecture2_reduction(K, args.p or len(kvec), kvec)]
    if name == "dual-bt":
        blocks = _parse_cover(_need(args, "cover"))
        n = K.ambient_dim
        p = args.p or sum(1 in b for b in blocks)
        return [verifiers.check_dual_bt(K, UniformCover.of(n, p, blocks))]
    if name == "decomposition":
        Ls = [load_body(f) for f in args.L] if args.L else [K] * (args.p or 1)
        return [verifiers.check_decomposition(K, Ls)]
    if name == "alesker":
        parts = _need(args, "parts")
        return [verifiers.alesker_coefficient(K, args.p or len(parts) - 1, parts)]
    raise UsageError(f"unknown verifier {name!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    reports = _run_verifier(args)
    text = reports_to_csv(reports) if args.format == "csv" else reports_to_json(reports)
    _emit(text, args.out)
    for r in reports:
        print(f"{r.name} {json.dumps(r.params)}: {r.status}", file=sys.stderr)
    return EXIT_VIOLATION if any(r.failed for r in reports) else EXIT_OK


def cmd_search(args) -> int:
    k_spec = args.kvec if args.kvec is not None else (args.k_list or ())
    config = SearchConfig(
        target=args.target,
        body_class=args.body_class,
        n=args.n,
        p=args.p,
        k_spec=k_spec,
        trials=args.trials,
        seed=args.seed,
        grid_q=args.grid_q,
        out_format=args.format,
        force=args.force,
    )
    reports = search_counterexamples(config)
    summary = summarize(reports, config.trials)
    if config.out_format == "csv":
        text = reports_to_csv(reports)
    else:
        text = reports_to_json(reports, summary)
    _emit(text, args.out)
    print(
        f"{summary['trials']} trials, {summary['reports']} reports, {summary['violations']} violations, "
        f"{summary['equalities']} equalities, min gap {summary['min_gap']}",
        file=sys.stderr,
    )
    return EXIT_VIOLATION if summary["violations"] else EXIT_OK


def cmd_selftest(args) -> int:
    results = run_selftest(quick=args.quick, fault=args.inject_fault)
    print(format_table(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diffbody", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--force", action="store_true", help="lift the pn <= 8 dimension cap")

    v = sub.add_parser("verify", parents=[common], help="run one verifier on one body")
    v.add_argument("verifier", choices=VERIFIERS)
    v.add_argument("--body", help="body JSON file")
    v.add_argument("--simplex", type=_str_list, help="axis simplex lengths c1,...,cn")
    v.add_argument("--staircase", help="JSON list of anti-blocking generators")
    v.add_argument("--k", type=int)
    v.add_argument("--p", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--kvec", type=_int_list, help="k_1,...,k_p")
    v.add_argument("--parts", type=_int_list, help="k_0,...,k_p for the Alesker coefficient")
    v.add_argument("--cover", help='blocks separated by ";", e.g. "1,2;2;1" ("-" for an empty block)')
    v.add_argument("--L", action="append", help="anti-blocking body JSON for the decomposition (repeat p times)")
    v.add_argument("--sigma", type=_int_list, help="coordinate subset for lemma-exact, e.g. 2 or 1,3")
    v.add_argument("--body-list", action="append", help="lemma-exact: body in R^n (repeat)")
    v.add_argument("--sub-body", action="append", help="lemma-exact: body in E_sigma coordinates (repeat)")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", parents=[common], help="seeded random counterexample search")
    s.add_argument("--target", choices=TARGETS, required=True)
    s.add_argument("--class", dest="body_class", choices=BODY_CLASSES, default="antiblocking")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, default=1)
    s.add_argument("--k", dest="k_list", type=_int_list, help="k values (godbersen, conj1); default all")
    s.add_argument("--kvec", type=_int_list, help="k_1,...,k_p (conj2); default all")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--grid-q", type=int, default=4)
    s.set_defaults(func=cmd_search)

    t = sub.add_parser("selftest", help="run the built-in identity suite")
    t.add_argument("--quick", action="store_true", help="skip the pn = 6 cases")
    t.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    t.set_defaults(func=cmd_selftest, force=False)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        if args.force:
            with uncapped():
                return args.func(args)
        return args.func(args)
    except (UsageError, BodyFormatError, DimensionCapError, ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
