"""Command-line front end: ``s7omega {check,cohomology,order,verify,family}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .cohomology import cohomology_report, order_cross_check
from .exceptions import ArgumentError, BudgetExceededError, CrossCheckError
from .families import bgmr_family, random_valid_omega
from .omega import OmegaMatrix, check_condition, sign_epsilon
from .trees import EdgeWeights, laplacian_minor
from .validation import (
    MatrixParseError,
    check_ordering,
    format_matrix_json,
    format_matrix_text,
    parse_inline_matrix,
    parse_matrix_text,
)
from .verify import SCOPES, run_suites

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_CROSSCHECK = 3

log = logging.getLogger("s7omega")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated list of integers") from None


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH", help="matrix file (text or JSON); '-' reads stdin")
    src.add_argument("--matrix", metavar="SPEC", help='inline matrix, e.g. "4 2; 1 0; 0 1; 1 2; 3 1"')


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def _add_tree_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tree-budget", type=int, metavar="N",
                   help="enumerate trees only when k+2 <= N (default: $S7_TREE_BUDGET or 9)")
    p.add_argument("--ordering", metavar="a1,a2,...", help="vertex ordering for the Laplacian minor")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="s7omega", description="Integer cohomology of S^7_Omega.")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="test the reduction condition")
    _add_input(p)
    _add_format(p)

    p = sub.add_parser("cohomology", help="full cohomology report")
    _add_input(p)
    _add_format(p)
    _add_tree_opts(p)

    p = sub.add_parser("order", help="four-way order ledger")
    _add_input(p)
    _add_format(p)
    _add_tree_opts(p)

    p = sub.add_parser("verify", help="run property suites on generated matrices")
    p.add_argument("scope", nargs="?", default="all", choices=("all",) + SCOPES)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, metavar="N")
    p.add_argument("--k", type=int, metavar="N")
    p.add_argument("--bound", type=int, metavar="N")
    _add_format(p)

    p = sub.add_parser("family", help="emit a matrix from a generator")
    p.add_argument("kind", choices=("bgmr", "random"))
    p.add_argument("--a", type=_int_list, metavar="a1,a2,...")
    p.add_argument("--b", type=_int_list, metavar="b1,b2,...")
    p.add_argument("--k", type=int, metavar="N")
    p.add_argument("--bound", type=int, default=5, metavar="N")
    p.add_argument("--seed", type=int)
    _add_format(p)
    return parser


def _read_omega(args) -> OmegaMatrix:
    if args.matrix is not None:
        return parse_inline_matrix(args.matrix)
    if args.input == "-":
        return parse_matrix_text(sys.stdin.read())
    try:
        with open(args.input, encoding="utf-8") as fh:
            return parse_matrix_text(fh.read())
    except OSError as exc:
        raise MatrixParseError(f"cannot read {args.input}: {exc.strerror}") from None


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _minor_lines(omega: OmegaMatrix) -> list[str]:
    return [f"  Δ_{p}{q} = {d}" for (p, q), d in sorted(omega.minors.items())]


def _sign_lines(omega: OmegaMatrix) -> list[str]:
    eps = sign_epsilon(omega)
    return [f"  ε^{p}_{q} = {eps(p, q):+d}" for p, q in sorted(omega.minors)]


def _ledger_lines(ledger) -> list[str]:
    tree = "skipped (budget)" if ledger.tree_sum is None else str(ledger.tree_sum)
    return [
        f"  tree sum          {tree}",
        f"  |det M|           {ledger.det_m}",
        f"  SNF product       {ledger.snf_product}",
        f"  |relations det|   {ledger.relations_det}",
        f"  agree             {'yes' if ledger.agree else 'NO'}",
    ]


def _matrix_lines(rows) -> list[str]:
    width = max((len(str(x)) for r in rows for x in r), default=1)
    return ["  [" + " ".join(str(x).rjust(width) for x in r) + "]" for r in rows]


def cmd_check(args) -> int:
    omega = _read_omega(args)
    report = check_condition(omega)
    if args.format == "json":
        _emit(json.dumps({
            "valid": report.valid,
            "nonzero_ok": report.nonzero_ok,
            "gcd_ok": report.gcd_ok,
            "failing_pairs": [list(pq) for pq in report.failing_pairs],
            "failing_rows": [{"p": p, "gcd": str(g)} for p, g in report.failing_rows],
            "minors": {f"{p},{q}": str(d) for (p, q), d in sorted(omega.minors.items())},
        }))
    else:
        lines = [f"Omega ({omega.n} x {omega.k})"] + _matrix_lines(omega.entries) + ["minors:"]
        lines += _minor_lines(omega)
        lines.append(f"condition: {report.describe()}")
        _emit("\n".join(lines))
    return EXIT_OK if report.valid else EXIT_INVALID


def _require_valid(omega: OmegaMatrix) -> int | None:
    report = check_condition(omega)
    if not report.valid:
        print(f"s7omega: invalid Omega: {report.describe()}", file=sys.stderr)
        return EXIT_INVALID
    return None


def cmd_cohomology(args) -> int:
    omega = _read_omega(args)
    if (code := _require_valid(omega)) is not None:
        return code
    ordering = check_ordering(args.ordering, omega.n)
    report = cohomology_report(omega, args.tree_budget, ordering)
    if args.format == "json":
        _emit(json.dumps(report.to_dict(), sort_keys=True))
    else:
        k = omega.k
        groups = {0: "Z", 2: f"Z^{k}", 4: f"G_Ω = {report.torsion}", 5: f"Z^{k}", 7: "Z"}
        lines = [f"Omega ({omega.n} x {k})"] + _matrix_lines(omega.entries)
        lines += ["minors:"] + _minor_lines(omega)
        lines += ["signs:"] + _sign_lines(omega)
        lines.append("cohomology:")
        lines += [f"  H^{i} = {groups.get(i, '0')}" for i in range(8)]
        lines.append(f"|G_Ω| = {report.order}  (bound (k+2)^k = {(k + 2) ** k}: {'ok' if report.bound_ok else 'VIOLATED'})")
        if report.k1_r is not None:
            lines.append(f"k = 1 closed form r = {report.k1_r}")
        lines += ["order ledger:"] + _ledger_lines(report.order_ledger)
        lines.append("cup products x_i x_j in G_Ω:")
        lines += [f"  x{i} x{j} -> {list(e.residues)}" for (i, j), e in sorted(report.cup_table.items())]
        lines.append(f"p1 = {report.p1_polynomial} -> {list(report.p1.residues)}")
        lines += [f"diagnostic: {d}" for d in report.diagnostics]
        _emit("\n".join(lines))
    return EXIT_OK if report.valid else EXIT_CROSSCHECK


def cmd_order(args) -> int:
    omega = _read_omega(args)
    if (code := _require_valid(omega)) is not None:
        return code
    ordering = check_ordering(args.ordering, omega.n)
    ledger = order_cross_check(omega, args.tree_budget, ordering)
    if args.format == "json":
        _emit(json.dumps(ledger.as_dict(), sort_keys=True))
    else:
        M = laplacian_minor(EdgeWeights.from_omega(omega), ordering)
        lines = ["minors:"] + _minor_lines(omega)
        lines += ["Laplacian minor M:"] + _matrix_lines(M.tolist())
        lines += ["order of G_Ω:"] + _ledger_lines(ledger)
        _emit("\n".join(lines))
    return EXIT_OK if ledger.agree else EXIT_CROSSCHECK


def cmd_verify(args) -> int:
    results = run_suites(args.scope, args.seed, args.count, args.k, args.bound)
    if args.format == "json":
        _emit(json.dumps([
            {"suite": r.name, "passed": r.passed, "total": r.total, "failures": r.failures}
            for r in results
        ]))
    else:
        lines = []
        for r in results:
            lines.append(r.line())
            lines += [f"  failed: {f}" for f in r.failures]
        _emit("\n".join(lines))
    return EXIT_OK if all(r.ok for r in results) else EXIT_CROSSCHECK


def cmd_family(args) -> int:
    if args.kind == "bgmr":
        if args.a is None or args.b is None:
            raise ArgumentError("bgmr needs --a and --b")
        omega = bgmr_family((args.a, args.b))
    else:
        if args.k is None:
            raise ArgumentError("random needs --k")
        omega = random_valid_omega(args.k, args.bound, args.seed)
    _emit(format_matrix_json(omega) if args.format == "json" else format_matrix_text(omega))
    return EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "cohomology": cmd_cohomology,
    "order": cmd_order,
    "verify": cmd_verify,
    "family": cmd_family,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"s7omega: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING - 10 * args.verbose, format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except CrossCheckError as exc:
        print(f"s7omega: cross-check failed: {exc}", file=sys.stderr)
        return EXIT_CROSSCHECK
    except (ArgumentError, BudgetExceededError, ValueError) as exc:
        print(f"s7omega: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
