"""Command line front end: ``schubdual {dual,enumerate,check,quiver}``.

Exit codes: 0 success (or suitable), 3 unsuitable, 1 failed check,
64 unreadable input, 65 index/space mismatch, 66 space too large.
Set ``SCHUBDUAL_LOG=debug`` (or info, warning) for diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time

import numpy as np

from . import suites
from .dualcore import METHODS, dual_of
from .errors import (
    BadParity,
    CaseMismatch,
    InvalidParams,
    ParseError,
    SchubDualError,
    TooLarge,
)
from .quiver import build_hasse, emit, subquiver_qw
from .rootsys import A, E6, Case, Dspin, all_indices, build_root_datum, index_from_word, parse_index, parse_ints

log = logging.getLogger("schubdual")

EXIT_OK, EXIT_FAIL, EXIT_UNSUITABLE = 0, 1, 3
EXIT_PARSE, EXIT_MISMATCH, EXIT_TOO_LARGE = 64, 65, 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; this tool reserves 64 for that
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_space(text: str) -> Case:
    """``a:R,N`` | ``d:P`` | ``e6:K`` with K in {1, 3}."""
    tag, sep, rest = text.strip().lower().partition(":")
    if not sep:
        raise ParseError(f"space {text!r} should look like a:R,N, d:P or e6:K")
    nums = parse_ints(rest)
    if tag == "a" and len(nums) == 2:
        return A(*nums)
    if tag == "d" and len(nums) == 1:
        return Dspin(nums[0])
    if tag == "e6" and len(nums) == 1:
        if nums[0] not in (1, 3):
            raise InvalidParams("e6:K takes K = 1 or 3 (the other nodes are their mirrors)")
        return E6(nums[0])
    raise ParseError(f"cannot read space {text!r}")


def _dynkin(case: Case, v) -> list[int]:
    datum = build_root_datum(case)
    return [int(x) for x in (datum.cartan @ np.asarray(v)) // datum.denom]


def _read_index(case: Case, args):
    if args.word is not None:
        return index_from_word(case, parse_ints(args.word))
    if args.index is not None:
        return parse_index(case, args.index)
    return None


def _method(case: Case, requested: str | None) -> str:
    if requested is None:
        return "oracle" if case.family == "E6" else "closed-form"
    if requested == "closed-form" and case.family == "E6":
        raise InvalidParams("E6 has no closed form; use --method oracle")
    return requested


def result_document(case: Case, idx, outcome, method: str) -> dict:
    doc = {"space": case.spec, "index": str(idx), "suitable": outcome.suitable}
    if outcome.suitable:
        doc["dual"] = str(outcome.dual)
    doc["lowest_weight"] = _dynkin(outcome.dual.case, outcome.lowest_weight) if outcome.suitable else None
    doc["witness"] = [str(t) for t in outcome.witness] if outcome.witness else None
    doc["method"] = method
    return doc


# ---------------------------------------------------------------- commands


def cmd_dual(args) -> int:
    case = parse_space(args.space)
    idx = _read_index(case, args)
    if idx is None:
        raise ParseError("dual needs --index or --word")
    method = _method(case, args.method)
    out = dual_of(case, idx, method, args.backend, not args.unsigned_rule)
    print(json.dumps(result_document(case, idx, out, method), indent=2))
    return EXIT_OK if out.suitable else EXIT_UNSUITABLE


def cmd_enumerate(args) -> int:
    case = parse_space(args.space)
    method = _method(case, args.method)
    rows = []
    for idx in all_indices(case):
        out = dual_of(case, idx, method, args.backend, not args.unsigned_rule)
        if args.suitable_only and not out.suitable:
            continue
        rows.append((str(idx), out.suitable, str(out.dual) if out.suitable else None))
    if args.format == "json":
        doc = [{"index": i, "suitable": s, "dual": d} for i, s, d in rows]
        print(json.dumps(doc, indent=2))
    else:
        print("#index\tsuitable\tdual")
        for i, s, d in rows:
            print(f"{i}\t{str(s).lower()}\t{d or ''}")
    return EXIT_OK


def cmd_check(args) -> int:
    case = parse_space(args.space) if args.space else None
    if args.suite in ("biduality", "equivalence") and case is None:
        raise ParseError(f"suite {args.suite!r} needs --space")
    t0 = time.perf_counter()
    results = suites.run(args.suite, case, args.backend, not args.unsigned_rule, args.seed)
    for r in results:
        print(r.render())
    ok = all(r.ok for r in results)
    log.info("suite %s finished in %.2fs", args.suite, time.perf_counter() - t0)
    print(f"{'pass' if ok else 'FAIL'}: {sum(r.ok for r in results)}/{len(results)} properties")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_quiver(args) -> int:
    case = parse_space(args.space)
    q = build_hasse(build_root_datum(case))
    idx = _read_index(case, args)
    marked = subquiver_qw(q, idx) if idx is not None else None
    sys.stdout.write(emit(q, marked, args.format).rstrip("\n") + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="schubdual", description="Dual Schubert varieties in the fundamental cases.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def space(sp, required=True):
        sp.add_argument("--space", required=required, help="a:R,N | d:P | e6:K (K = 1 or 3)")

    def engine(sp):
        sp.add_argument("--backend", choices=("numba", "numpy"), default=None)
        sp.add_argument(
            "--unsigned-rule",
            action="store_true",
            help="E6 node 3: use the polarization rule without sign cancellation",
        )

    def index(sp):
        sp.add_argument("--index", help='"2,4,5", "+-++-" or an E6 word')
        sp.add_argument("--word", help="reduced word, comma separated node numbers")

    d = sub.add_parser("dual", help="dual of one Schubert variety")
    space(d)
    index(d)
    d.add_argument("--method", choices=METHODS)
    engine(d)
    d.set_defaults(func=cmd_dual)

    e = sub.add_parser("enumerate", help="every coset with its dual")
    space(e)
    e.add_argument("--suitable-only", action="store_true")
    e.add_argument("--format", choices=("json", "tsv"), default="json")
    e.add_argument("--method", choices=METHODS)
    engine(e)
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("check", help="run a verification suite")
    space(c, required=False)
    c.add_argument("--suite", choices=suites.SUITES, required=True)
    c.add_argument("--seed", type=int, default=0)
    engine(c)
    c.set_defaults(func=cmd_check)

    q = sub.add_parser("quiver", help="tangent Hasse quiver, with Q_w marked")
    space(q)
    index(q)
    q.add_argument("--format", default="ascii", help="ascii | dot | json")
    q.set_defaults(func=cmd_quiver)
    return p


def _join_values(argv: list[str]) -> list[str]:
    # "--index --+++" would otherwise be read as two options
    out, it = [], iter(argv)
    for tok in it:
        if tok in ("--index", "--word"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _exit_code(exc: SchubDualError) -> int:
    if isinstance(exc, TooLarge):
        return EXIT_TOO_LARGE
    if isinstance(exc, (CaseMismatch, BadParity)):
        return EXIT_MISMATCH
    return EXIT_PARSE


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get("SCHUBDUAL_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr, format="%(levelname)s %(message)s")
    argv = _join_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_PARSE
    except SchubDualError as exc:
        print(f"schubdual: {type(exc).__name__}: {exc}", file=sys.stderr)
        return _exit_code(exc)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
