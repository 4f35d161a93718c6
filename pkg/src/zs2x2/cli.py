"""Command-line front end: ``zs2x2 solve|verify|br|leader|batch``.

Exit codes: 0 success, 1 input error, 2 verification mismatch.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence, TextIO

from .equilibrium import CASE_ORDER, ClassificationError, classify
from .game import MixedStrategy, PayoffMatrix, best_response_col, best_response_row
from .leadership import leader_curve, leader_optimum, leader_payoff
from .numeric import RationalParseError, rat_parse
from .oracle import verify

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH = 0, 1, 2


class InputError(Exception):
    pass


@dataclass(frozen=True)
class GameDocument:
    matrix: PayoffMatrix
    id: Optional[str] = None
    description: Optional[str] = None

    def echo(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.matrix.rows()]


def _entry(value: Any, i: int, j: int) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InputError(
            f"entry ({i},{j}): expected a rational string, got {json.dumps(value)}"
        )
    try:
        return rat_parse(value) if isinstance(value, str) else Fraction(value)
    except RationalParseError as exc:
        raise InputError(f"entry ({i},{j}): {exc}") from None


def _matrix(rows: Any) -> PayoffMatrix:
    if not isinstance(rows, list) or len(rows) != 2 or any(
        not isinstance(r, list) or len(r) != 2 for r in rows
    ):
        raise InputError("matrix must have exactly 2 rows of 2 entries")
    return PayoffMatrix.from_rows(
        [[_entry(v, i + 1, j + 1) for j, v in enumerate(r)] for i, r in enumerate(rows)]
    )


def document_from_obj(obj: Any) -> GameDocument:
    if not isinstance(obj, dict) or "matrix" not in obj:
        raise InputError("game document must be an object with a 'matrix' field")
    for key in ("id", "description"):
        if key in obj and not isinstance(obj[key], str):
            raise InputError(f"'{key}' must be a string")
    return GameDocument(_matrix(obj["matrix"]), obj.get("id"), obj.get("description"))


def parse_csv(text: str) -> GameDocument:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    return GameDocument(_matrix([[c.strip() for c in ln.split(",")] for ln in lines]))


def parse_document(text: str) -> GameDocument:
    """JSON game document or a bare two-line CSV, detected by the first character."""
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from None
        return document_from_obj(obj)
    return parse_csv(text)


def parse_batch(text: str) -> list[GameDocument]:
    try:
        items = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None
    if not isinstance(items, list):
        raise InputError("batch file must contain a JSON list of game documents")
    docs = []
    for k, item in enumerate(items):
        try:
            docs.append(document_from_obj(item))
        except InputError as exc:
            raise InputError(f"game {k}: {exc}") from None
    return docs


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _use_color() -> bool:
    return os.environ.get("ZS2X2_COLOR", "0") == "1"


def _hl(text: str, code: str = "1;36") -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if _use_color() else text


def _dump(obj: Any, out: TextIO, compact: bool = False) -> None:
    if compact:
        out.write(json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":")))
    else:
        out.write(json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2))
    out.write("\n")


def solve_report(doc: GameDocument, check: bool = False, grid: Optional[int] = None) -> dict:
    m = doc.matrix
    eq = classify(m)
    lead = leader_optimum(m)
    report: dict[str, Any] = {
        "matrix": doc.echo(),
        "case": eq.label.value,
        "condition": eq.condition,
        "cardinality": eq.cardinality.value,
        "row_set": eq.row_set.as_strings(),
        "col_set": eq.col_set.as_strings(),
        "value": str(eq.value),
        "leader": {"minimizers": lead.minimizers.as_strings(), "value": str(lead.value)},
    }
    if doc.id is not None:
        report["id"] = doc.id
    if doc.description is not None:
        report["description"] = doc.description
    if check:
        checks = verify(m, grid=grid)
        report["verify"] = {"checks": checks, "agrees": all(checks.values())}
    return report


def _interval_text(pair: Sequence[str]) -> str:
    lo, hi = pair
    return f"{{{lo}}}" if lo == hi else f"[{lo},{hi}]"


def _matrix_text(rows: list[list[str]]) -> str:
    return "[" + ", ".join("[" + ", ".join(r) + "]" for r in rows) + "]"


def render_solve(rep: dict, out: TextIO) -> None:
    if "id" in rep:
        out.write(f"id: {rep['id']}\n")
    if "description" in rep:
        out.write(f"description: {rep['description']}\n")
    out.write(f"game: {_matrix_text(rep['matrix'])}\n")
    out.write(f"case: {_hl(rep['case'])}\n")
    out.write(f"condition: {rep['condition']}\n")
    out.write(f"cardinality: {rep['cardinality']}\n")
    out.write(f"P1(a1): {_interval_text(rep['row_set'])}\n")
    out.write(f"P2(a1): {_interval_text(rep['col_set'])}\n")
    out.write(f"value: {rep['value']}\n")
    lead = rep["leader"]
    out.write(
        f"leader (player 2 commits): min value {lead['value']} "
        f"at P2(a1) in {_interval_text(lead['minimizers'])}\n"
    )
    if "verify" in rep:
        v = rep["verify"]
        parts = " ".join(f"{k}={'ok' if ok else 'FAIL'}" for k, ok in v["checks"].items())
        verdict = "agree" if v["agrees"] else _hl("MISMATCH", "1;31")
        out.write(f"oracle: {verdict} ({parts})\n")


def _emit_solve(rep: dict, fmt: str, out: TextIO) -> None:
    if fmt == "machine":
        _dump(rep, out)
    else:
        render_solve(rep, out)


def cmd_solve(args, out: TextIO) -> int:
    doc = parse_document(_read(args.game))
    try:
        rep = solve_report(doc, check=args.verify, grid=args.grid)
    except (ClassificationError, AssertionError) as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    _emit_solve(rep, args.format, out)
    if args.verify and not rep["verify"]["agrees"]:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_br(args, out: TextIO) -> int:
    doc = parse_document(_read(args.game))
    try:
        prob = rat_parse(args.prob)
        strategy = MixedStrategy(prob)
    except (RationalParseError, ValueError) as exc:
        raise InputError(f"--prob: {exc}") from None
    if args.player == 1:
        br = best_response_row(doc.matrix, strategy)
    else:
        br = best_response_col(doc.matrix, strategy)
    if args.format == "machine":
        _dump(
            {
                "matrix": doc.echo(),
                "player": args.player,
                "opponent_prob": str(prob),
                "best_response": [str(br.lo), str(br.hi)],
                "branch": br.branch,
            },
            out,
        )
    else:
        out.write(f"{br} ({br.branch})\n")
    return EXIT_OK


def cmd_leader(args, out: TextIO) -> int:
    doc = parse_document(_read(args.game))
    m = doc.matrix
    if args.samples is not None:
        if args.samples < 1:
            raise InputError("--samples must be >= 1")
        out.write("beta,value\n")
        for k in range(args.samples + 1):
            beta = Fraction(k, args.samples)
            out.write(f"{beta},{leader_payoff(m, MixedStrategy(beta))}\n")
        return EXIT_OK
    curve = leader_curve(m)
    opt = leader_optimum(m)
    if args.format == "machine":
        _dump(
            {
                "matrix": doc.echo(),
                "breakpoints": [str(b) for b in curve.breakpoints],
                "segments": [
                    {
                        "slope": str(s.slope),
                        "intercept": str(s.intercept),
                        "domain": s.domain.as_strings(),
                    }
                    for s in curve.segments
                ],
                "minimizers": opt.minimizers.as_strings(),
                "value": str(opt.value),
            },
            out,
        )
        return EXIT_OK
    out.write(f"game: {_matrix_text(doc.echo())}\n")
    bps = ", ".join(str(b) for b in curve.breakpoints) or "none"
    out.write(f"breakpoints: {bps}\n")
    for k, seg in enumerate(curve.segments, 1):
        out.write(
            f"segment {k}: slope {seg.slope}, intercept {seg.intercept} on {seg.domain}\n"
        )
    out.write(f"minimizers: {opt.minimizers}\n")
    out.write(f"min value: {opt.value}\n")
    return EXIT_OK


def cmd_batch(args, out: TextIO) -> int:
    docs = parse_batch(_read(args.path))
    counts: Counter = Counter()
    mismatches = 0
    for k, doc in enumerate(docs):
        try:
            rep = solve_report(doc, check=args.verify, grid=args.grid)
        except (ClassificationError, AssertionError) as exc:
            print(f"game {k}: internal consistency error: {exc}", file=sys.stderr)
            mismatches += 1
            continue
        counts[rep["case"]] += 1
        if args.verify and not rep["verify"]["agrees"]:
            mismatches += 1
        if args.format == "machine":
            _dump(rep, out, compact=True)
        else:
            if k:
                out.write("\n")
            render_solve(rep, out)
    ordered = {str(label): counts[label.value] for label in CASE_ORDER if counts[label.value]}
    if args.format == "machine":
        _dump(
            {"summary": {"games": len(docs), "cases": ordered, "mismatches": mismatches}},
            out,
            compact=True,
        )
    else:
        if docs:
            out.write("\n")
        line = f"{len(docs)} games"
        if ordered:
            line += ": " + ", ".join(f"{k}={v}" for k, v in ordered.items())
        if args.verify:
            line += f"; {mismatches} mismatches"
        out.write(line + "\n")
    return EXIT_MISMATCH if mismatches else EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default="text")

    parser = _Parser(prog="zs2x2", description="Exact solver for 2x2 zero-sum games.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def game_arg(p):
        p.add_argument("game", help="game document (JSON or 2-line CSV); '-' for stdin")

    for name in ("solve", "verify"):
        p = sub.add_parser(name, parents=[common], help=f"{name} a game")
        game_arg(p)
        if name == "solve":
            p.add_argument("--verify", action="store_true", help="cross-check with the oracles")
        p.add_argument("--grid", type=int, metavar="N", help="also scan the N-grid for equilibria")
        p.set_defaults(func=cmd_solve)
        if name == "verify":
            p.set_defaults(verify=True)

    p = sub.add_parser("br", parents=[common], help="best response to an opponent mixture")
    game_arg(p)
    p.add_argument("--player", type=int, choices=(1, 2), required=True)
    p.add_argument("--prob", required=True, help="opponent's probability of a1, e.g. 1/2")
    p.set_defaults(func=cmd_br)

    p = sub.add_parser("leader", parents=[common], help="player 2 commits first")
    game_arg(p)
    p.add_argument("--samples", type=int, metavar="N", help="emit N+1 beta,value CSV rows")
    p.set_defaults(func=cmd_leader)

    p = sub.add_parser("batch", parents=[common], help="solve a JSON list of games")
    p.add_argument("path")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--grid", type=int, metavar="N")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    out = out if out is not None else sys.stdout
    if getattr(args, "grid", None) is not None and args.grid < 1:
        print("zs2x2: error: --grid must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"zs2x2: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
