"""Command-line front end.

    stab --degree 6 --kind perm-conj --object "(1 2)(3 6 5)"
    normaliser --degree 6 --gens "(1 2 3)(4 5 6)" "(1 4)(2 5)"

Exit status: 0 on success, 1 when a requested transporter is empty or a
refiner check fails, 2 on usage errors.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Any, List, Optional, Sequence, Tuple

from .config import Settings
from .encoders.factory import Query, encode_source, refiner_for
from .errors import RefineryError, UnsupportedQuery
from .models import QueryVerb, SourceKind, Verb
from .objects.literals import objects_from_text, parse_literal
from .objects.text_format import dump_object
from .oracle.brute import OracleConfig, brute_transporter
from .perms.groups import GroupCoset, group_order
from .perms.permutation import parse_perm
from .refiners.checks import check_perfect, check_sound
from .search.engine import SolveResult
from .search.groups import conjugacy_transporter, is_two_closed, normaliser, two_closure_result
from .search.queries import solve_query

logger = logging.getLogger(__name__)


class UsageError(RefineryError):
    """Missing or contradictory command-line options"""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="refinery", description="Backtrack search for permutation groups")
    parser.add_argument("--log-level", default=None, help="Logging level (default from settings)")
    verbs = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name: Verb, help_text: str) -> argparse.ArgumentParser:
        sub = verbs.add_parser(name.value, help=help_text)
        sub.add_argument("--degree", type=int, required=True, help="Size of the domain {1..n}")
        sub.add_argument("--output", help="Write the output to this file instead of stdout")
        return sub

    def objects(sub: argparse.ArgumentParser, transport: bool) -> None:
        sub.add_argument("--kind", required=True, choices=[k.value for k in SourceKind] + ["set"])
        sub.add_argument("--object", "--from", dest="source", help="Object literal")
        sub.add_argument("--file", nargs="+", help="Object files in the text format")
        sub.add_argument("--gens", nargs="+", help="Group generators in cycle notation")
        if transport:
            sub.add_argument("--to", dest="target", help="Target object literal")
            sub.add_argument("--to-file", nargs="+", help="Target object files")
            sub.add_argument("--to-gens", nargs="+", help="Target group generators")

    objects(verb(Verb.STAB, "Stabiliser of an object"), transport=False)
    objects(verb(Verb.TRANSPORT, "Transporter between two objects"), transport=True)
    for name, text in ((Verb.TWO_CLOSURE, "2-closure of a group"), (Verb.IS_TWO_CLOSED, "Whether a group is 2-closed")):
        verb(name, text).add_argument("--gens", nargs="+", required=True)
    sub = verb(Verb.NORMALISER, "Normaliser of a group in Sym(n)")
    sub.add_argument("--gens", nargs="+", required=True)
    sub.add_argument("--cap", type=int, default=None)
    sub = verb(Verb.CONJUGATE, "Elements conjugating one group onto another")
    sub.add_argument("--gens", nargs="+", required=True)
    sub.add_argument("--to-gens", nargs="+", required=True)
    sub.add_argument("--cap", type=int, default=None)
    objects(verb(Verb.ENCODE, "Print the stack an object is encoded as"), transport=False)
    sub = verb(Verb.CHECK_REFINER, "Check the refiner of a query for soundness and perfectness")
    objects(sub, transport=True)
    sub.add_argument("--samples", type=int, default=None)
    sub.add_argument("--seed", type=int, default=None)
    sub = verb(Verb.ORACLE, "Brute-force transporter by enumerating Sym(n)")
    objects(sub, transport=True)
    return parser


def _gens(texts: Sequence[str], degree: int) -> tuple:
    return tuple(parse_perm(t, degree) for t in texts)


def _from_files(paths: Sequence[str], kind: SourceKind, degree: int) -> Any:
    return objects_from_text([Path(p).read_text(encoding="utf-8") for p in paths], kind, degree)


def _object(args, kind: SourceKind, literal: Optional[str], files, gens, role: str) -> Any:
    if kind == SourceKind.GROUP:
        if not gens:
            raise UsageError(f"--{role}gens is required for group queries")
        return _gens(gens, args.degree)
    if files:
        return _from_files(files, kind, args.degree)
    if literal is None:
        raise UsageError(f"an object literal or file is required for the {role or 'source'} side")
    return parse_literal(literal, kind, args.degree)


def _query(args, transport: bool) -> Query:
    kind = SourceKind(args.kind)
    source = _object(args, kind, args.source, args.file, args.gens, "")
    has_target = transport and (
        getattr(args, "target", None) is not None or getattr(args, "to_file", None) or getattr(args, "to_gens", None)
    )
    if not has_target:
        if args.verb == Verb.TRANSPORT.value:
            raise UsageError("transport needs --to, --to-file or --to-gens")
        return Query(QueryVerb.STABILISER, kind, args.degree, source)
    target = _object(args, kind, args.target, args.to_file, args.to_gens, "to-")
    return Query(QueryVerb.TRANSPORTER, kind, args.degree, source, target)


def coset_lines(coset: GroupCoset, order: Optional[int] = None, show_order: bool = True) -> List[str]:
    """``rep``/``gen`` lines and the order, or ``empty``"""
    if coset.empty:
        return ["empty"]
    lines = []
    if coset.representative is not None and not coset.representative.is_identity():
        lines.append(f"rep {coset.representative}")
    lines += [f"gen {g}" for g in coset.generators]
    if show_order:
        lines.append(f"order={order if order is not None else coset.order()}")
    return lines


def _solve_lines(result: SolveResult, perfect: Optional[bool] = None) -> List[str]:
    order = result.order() if result.exact and not result.empty else None
    lines = coset_lines(result.coset, order, show_order=result.exact)
    lines.append(f"nodes={result.tree_nodes}")
    if perfect is not None:
        lines += [f"perfect={_flag(perfect)}", f"exact={_flag(result.exact)}"]
    return lines


def _flag(value: bool) -> str:
    return str(value).lower()


def _run_verb(args, settings: Settings) -> Tuple[int, List[str]]:
    verb = Verb(args.verb)
    if verb in (Verb.STAB, Verb.TRANSPORT):
        q = _query(args, transport=verb == Verb.TRANSPORT)
        r = refiner_for(q)
        result = solve_query(q, settings.enumeration_cap)
        status = 1 if verb == Verb.TRANSPORT and result.empty else 0
        return status, _solve_lines(result, r.perfect)
    if verb == Verb.TWO_CLOSURE:
        result = two_closure_result(_gens(args.gens, args.degree), args.degree)
        return 0, _solve_lines(result)
    if verb == Verb.IS_TWO_CLOSED:
        gens = _gens(args.gens, args.degree)
        closure = two_closure_result(gens, args.degree)
        closed = is_two_closed(gens, args.degree)
        return 0, [f"two-closed={_flag(closed)}", f"order={group_order(gens, degree=args.degree)}", f"closure-order={closure.order()}"]
    if verb in (Verb.NORMALISER, Verb.CONJUGATE):
        gens = _gens(args.gens, args.degree)
        cap = args.cap if args.cap is not None else settings.normaliser_cap
        if verb == Verb.NORMALISER:
            found = normaliser(gens, args.degree, cap)
        else:
            found = conjugacy_transporter(gens, _gens(args.to_gens, args.degree), args.degree, cap)
        lines = coset_lines(found.coset, show_order=found.exact)
        lines += [f"exact={_flag(found.exact)}", f"nodes={found.tree_nodes}"]
        return (1 if verb == Verb.CONJUGATE and found.empty else 0), lines
    if verb == Verb.ENCODE:
        q = _query(args, transport=False)
        stack = encode_source(q.kind, q.source, q.degree)
        lines = [f"kind={stack.kind.value}", f"length={len(stack)}"]
        lines += [dump_object(entry, q.degree) for entry in stack.entries]
        lines.append(f"perfect={_flag(refiner_for(q).perfect)}")
        return 0, lines
    if verb == Verb.CHECK_REFINER:
        q = _query(args, transport=True)
        r = refiner_for(q)
        config = OracleConfig(max_degree=settings.oracle_cap, seed=settings.oracle_seed)
        reports = [check_sound(r, args.samples, args.seed, config)]
        if r.perfect:
            reports.append(check_perfect(r, args.samples, args.seed, config))
        lines = [f"perfect={_flag(r.perfect)}"]
        for report in reports:
            lines.append(f"check={report.check}")
            lines += report.lines()
        return (0 if all(rep.passed for rep in reports) else 1), lines
    if verb == Verb.ORACLE:
        q = _query(args, transport=True)
        if q.kind == SourceKind.GROUP:
            raise UnsupportedQuery("the oracle compares objects, use conjugate for groups")
        config = OracleConfig(max_degree=settings.oracle_cap, seed=settings.oracle_seed)
        coset = brute_transporter(q.source, q.image, q.degree, config=config)
        status = 1 if q.verb == QueryVerb.TRANSPORTER and coset.empty else 0
        return status, coset_lines(coset)
    raise UsageError(f"unknown verb {args.verb}")


def _emit(lines: List[str], output: Optional[str]) -> None:
    text = "\n".join(lines) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns the exit status"""
    settings = Settings()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=(args.log_level or settings.log_level).upper(), stream=sys.stderr)
    logger.info(f"Running {args.verb} on degree {args.degree}")
    try:
        status, lines = _run_verb(args, settings)
    except (RefineryError, OSError) as e:
        logger.error(f"{args.verb} failed: {e}")
        sys.stderr.write(f"error: {e}\n")
        return 2
    _emit(lines, args.output)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
