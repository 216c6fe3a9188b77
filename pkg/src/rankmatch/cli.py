"""Command-line front end.

Exit codes: 0 pass, 1 suite failure, 2 parse error, 3 hypothesis violation,
4 bad invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import graph as graphs
from .errors import HypothesisViolation, ParseError, SpaceTooLarge
from .matrix import det, is_alternating, pfaffian_elimination, rank
from .space import (
    DEFAULT_CAP,
    canonicalize,
    leading_graph,
    max_rank_member,
    parse_matrix,
    parse_space,
)
from .theorem import (
    WitnessNotFound,
    hypothesis_guard,
    verify_all,
    verify_cor3,
    verify_counterexamples_f2,
    verify_erdos_gallai,
    verify_thm1,
    verify_thm2,
    verify_thm4,
    verify_thm5,
    witness_search_alt,
    witness_search_ws,
)

EXIT_PASS, EXIT_FAIL, EXIT_PARSE, EXIT_HYPOTHESIS, EXIT_USAGE = 0, 1, 2, 3, 4

VERIFY_SUITES = ("thm1", "thm2", "cor3", "thm4", "thm5", "erdos-gallai", "counterexamples", "all")
COMPUTE_KINDS = ("rank", "det", "pf", "mu", "nu", "ua", "us")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--file", type=Path)
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--p", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--trials", type=int, default=200)
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--loops", action="store_true", help="erdos-gallai: graphs with loops")
    common.add_argument("--json", action="store_true")

    parser = _Parser(prog="rankmatch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    info = sub.add_parser("info", parents=[common], help="summarise a space file")
    info.set_defaults(handler=cmd_info)
    verify = sub.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("suite", choices=VERIFY_SUITES)
    verify.set_defaults(handler=cmd_verify)
    compute = sub.add_parser("compute", parents=[common], help="compute a single quantity")
    compute.add_argument("kind", choices=COMPUTE_KINDS)
    compute.set_defaults(handler=cmd_compute)
    return parser


def _read(path: Path | None) -> str:
    if path is None:
        raise UsageError("--file is required")
    try:
        return path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2) if args.json else text)


def _matrix_text(M) -> str:
    return "\n".join("  " + " ".join(map(str, row)) for row in M.rows)


def cmd_info(args) -> int:
    S = parse_space(_read(args.file))
    hypothesis_guard(S)
    canon = canonicalize(S)
    G = leading_graph(canon)
    v, m = graphs.nu(G), graphs.mu(G)
    rho_text, rho, witness = "?", None, None
    try:
        rho, witness = max_rank_member(canon, args.cap)
        rho_text = str(rho)
    except SpaceTooLarge:
        result = None
        if is_alternating(canon.base) and canon.kind == "alternating":
            result = witness_search_alt(canon)
        elif canon.spec.p >= 3 and canon.kind != "general":
            result = witness_search_ws(canon)
        if result is not None:
            witness = result.matrix
            rho_text = f">={result.achieved_rank}"
    edges = " ".join("{" + ",".join(map(str, e)) + "}" for e in G.sorted_edges())
    text = f"dim={canon.d} G={{ {edges} }} nu={v} mu={m} rho={rho_text}"
    if witness is not None:
        text += f"\nwitness (rank {rank(witness)}):\n" + _matrix_text(witness)
    payload = {
        "dim": canon.d,
        "graph": [list(e) for e in G.sorted_edges()],
        "nu": v,
        "mu": m,
        "rho": rho_text,
        "rho_exact": rho is not None,
        "witness": [list(r) for r in witness.rows] if witness is not None else None,
    }
    _emit(args, payload, text)
    return EXIT_PASS


def _pick(value, default):
    return default if value is None else value


def cmd_verify(args) -> int:
    suite = args.suite
    common = {"trials": args.trials, "seed": args.seed, "cap": args.cap, "workers": args.workers}
    try:
        if suite == "all":
            reports = verify_all(**common)
        elif suite == "counterexamples":
            reports = [verify_counterexamples_f2()]
        elif suite == "thm1":
            reports = [verify_thm1(_pick(args.n, 5), _pick(args.p, 3), _pick(args.d, 4), **common)]
        elif suite == "thm2":
            reports = [verify_thm2(_pick(args.n, 6), _pick(args.p, 2), _pick(args.d, 5), **common)]
        elif suite == "cor3":
            if args.p not in (None, 2):
                raise UsageError("cor3 is a statement about GF(2); --p must be 2")
            reports = [verify_cor3(_pick(args.n, 4), _pick(args.d, 3), **common)]
        elif suite == "thm4":
            reports = [verify_thm4(_pick(args.n, 5), args.k, _pick(args.p, 2), **common)]
        elif suite == "thm5":
            reports = [verify_thm5(_pick(args.n, 4), args.k, _pick(args.p, 3), **common)]
        else:
            n = _pick(args.n, 5 if args.loops else 6)
            reports = [verify_erdos_gallai(n, args.loops, args.trials, args.seed)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    failed = any(r.failed for r in reports)
    payload = {
        "suite": suite,
        "verdict": "FAIL" if failed else "PASS",
        "reports": [r.to_dict() for r in reports],
    }
    text = "\n".join(r.to_text() for r in reports) + f"\n{'FAIL' if failed else 'PASS'}"
    _emit(args, payload, text)
    return EXIT_FAIL if failed else EXIT_PASS


def _load_matrix(args):
    text = _read(args.file)
    if any(line.split()[:1] == ["kind"] for line in text.splitlines()):
        return parse_space(text).base
    return parse_matrix(text)


def cmd_compute(args) -> int:
    kind = args.kind
    if kind in ("ua", "us"):
        if args.n is None or args.k is None:
            raise UsageError(f"compute {kind} needs --n and --k")
        try:
            value = graphs.u_a(args.n, args.k) if kind == "ua" else graphs.u_s(args.n, args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif kind in ("mu", "nu"):
        try:
            G = graphs.parse_graph(_read(args.file), args.n)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        value = graphs.mu(G) if kind == "mu" else graphs.nu(G)
    else:
        M = _load_matrix(args)
        if kind == "rank":
            value = rank(M)
        elif kind == "det":
            if not M.is_square:
                raise UsageError("det needs a square matrix")
            value = det(M).value
        else:
            if M.n_rows % 2 or not is_alternating(M):
                raise HypothesisViolation("pf needs an alternating matrix of even order")
            value = pfaffian_elimination(M).value
    _emit(args, {"kind": kind, "value": value}, str(value))
    return EXIT_PASS


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.trials < 0 or args.cap < 1 or args.workers < 1:
            raise UsageError("--trials must be >= 0, --cap and --workers >= 1")
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (HypothesisViolation, WitnessNotFound) as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        if getattr(exc, "member", None) is not None:
            print(_matrix_text(exc.member), file=sys.stderr)
        return EXIT_HYPOTHESIS


if __name__ == "__main__":
    raise SystemExit(main())
