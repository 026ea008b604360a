"""Line-oriented text format for points, partitions, digraphs and extended graphs.

    # comment
    point n=5 3
    partition n=5 | 1 2 | 3 4 5
    digraph n=3 extra=4
    v 1 w:point
    a 1 4 b:black

``v`` and ``a`` lines belong to the most recent ``digraph`` declaration. A
digraph declaration carrying ``extra=`` (possibly with no points) describes an
extended graph over {1..n}; otherwise a labelled digraph on {1..n}.
"""
import logging
from typing import Any, Dict, List, Optional, Tuple

from .digraphs import LabelledDigraph
from .extended import ExtendedGraph
from .partitions import OrderedPartition
from .validation import validate
from ..errors import ParseError

logger = logging.getLogger(__name__)


def _int(token: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {line_no}: expected an integer, got {token!r}")


def _degree(token: str, line_no: int) -> int:
    if not token.startswith("n="):
        raise ParseError(f"line {line_no}: expected n=<degree>, got {token!r}")
    return _int(token[2:], line_no)


def _parse_partition(tokens: List[str], line_no: int) -> OrderedPartition:
    if not tokens:
        raise ParseError(f"line {line_no}: partition without n=")
    n = _degree(tokens[0], line_no)
    cells, current = [], None
    for token in tokens[1:]:
        if token == "|":
            if current is not None:
                cells.append(current)
            current = []
        elif current is None:
            raise ParseError(f"line {line_no}: cells must start with '|'")
        else:
            current.append(_int(token, line_no))
    if current is not None:
        cells.append(current)
    return validate(OrderedPartition(tuple(frozenset(c) for c in cells)), n)


class _DigraphBlock:
    def __init__(self, n: int, extra: Optional[List[int]], line_no: int):
        self.n = n
        self.extra = extra
        self.line_no = line_no
        self.vertex_labels: Dict[int, str] = {}
        self.arc_labels: Dict[Tuple[int, int], str] = {}

    def build(self) -> Any:
        vertices = list(range(1, self.n + 1)) + list(self.extra or [])
        digraph = LabelledDigraph(vertices, self.arc_labels.keys(), self.vertex_labels, self.arc_labels)
        if self.extra is None:
            return validate(digraph, self.n)
        return validate(ExtendedGraph(self.n, digraph), self.n)


def _open_digraph(tokens: List[str], line_no: int) -> _DigraphBlock:
    if not tokens:
        raise ParseError(f"line {line_no}: digraph without n=")
    n = _degree(tokens[0], line_no)
    extra = None
    if len(tokens) > 1:
        if not tokens[1].startswith("extra="):
            raise ParseError(f"line {line_no}: expected extra=, got {tokens[1]!r}")
        first = tokens[1][len("extra="):]
        extra = ([_int(first, line_no)] if first else []) + [_int(t, line_no) for t in tokens[2:]]
    return _DigraphBlock(n, extra, line_no)


def parse_objects(text: str) -> List[Any]:
    """Every object declared in ``text``, in order"""
    objects: List[Any] = []
    block: Optional[_DigraphBlock] = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, *tokens = line.split()
        if head in ("v", "a"):
            if block is None:
                raise ParseError(f"line {line_no}: {head!r} outside a digraph")
            if head == "v" and len(tokens) == 2:
                block.vertex_labels[_int(tokens[0], line_no)] = tokens[1]
            elif head == "a" and len(tokens) == 3:
                block.arc_labels[(_int(tokens[0], line_no), _int(tokens[1], line_no))] = tokens[2]
            else:
                raise ParseError(f"line {line_no}: malformed {head!r} line")
            continue
        if block is not None:
            objects.append(block.build())
            block = None
        if head == "point":
            if len(tokens) != 2:
                raise ParseError(f"line {line_no}: expected point n=<degree> <point>")
            objects.append(validate(_int(tokens[1], line_no), _degree(tokens[0], line_no)))
        elif head == "partition":
            objects.append(_parse_partition(tokens, line_no))
        elif head == "digraph":
            block = _open_digraph(tokens, line_no)
        else:
            raise ParseError(f"line {line_no}: unknown declaration {head!r}")
    if block is not None:
        objects.append(block.build())
    logger.debug(f"Parsed {len(objects)} objects")
    return objects


def _dump_digraph(header: str, digraph: LabelledDigraph) -> str:
    lines = [header]
    lines += [f"v {v} {digraph.vertex_labels[v]}" for v in sorted(digraph.vertices)]
    lines += [f"a {a} {b} {label}" for (a, b), label in sorted(digraph.arc_labels.items())]
    return "\n".join(lines)


def dump_object(obj: Any, n: Optional[int] = None) -> str:
    """The text declaration of a point, partition, labelled digraph or extended graph"""
    if isinstance(obj, int):
        if n is None:
            raise ParseError("a point needs its degree")
        return f"point n={n} {obj}"
    if isinstance(obj, OrderedPartition):
        cells = " ".join("| " + " ".join(str(p) for p in sorted(cell)) for cell in obj.cells)
        return f"partition n={obj.degree} {cells}".rstrip()
    if isinstance(obj, ExtendedGraph):
        extra = " ".join(str(v) for v in sorted(obj.extra))
        return _dump_digraph(f"digraph n={obj.n} extra={extra}".rstrip(), obj.representative)
    if isinstance(obj, LabelledDigraph):
        degree = n if n is not None else max(obj.vertices, default=0)
        return _dump_digraph(f"digraph n={degree}", obj)
    raise ParseError(f"no text form for {type(obj).__name__}")
