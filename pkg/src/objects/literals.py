"""Inline object literals used on the command line and in benchmark files.

Sets ``{1,2}``, lists ``[1,2]``, set families ``{{1},{2,3}}``, ordered
partitions ``[{1,2}|{3}]`` and permutations in cycle notation
``(1 2)(3 6 5)``. Literals nest, so ``[{1,2},3]`` is a list holding a set and
a point, and ``[(1 2),(3 4)]`` a list of permutations.
"""
import re
from typing import Any, List, Optional, Sequence, Tuple

from .digraphs import Digraph, Graph, LabelledDigraph
from .partitions import OrderedPartition
from .stacks import Stack, lift, stack_concat
from .text_format import parse_objects
from .validation import validate
from ..errors import ParseError
from ..models import SourceKind, StackKind
from ..perms.permutation import Permutation, parse_perm

_TOKEN = re.compile(r"\s*(?:(\d+)|(\(\s*\))|(\((?:[^()]*)\)(?:\s*\([^()]*\))*)|([{}\[\],|]))")

# Kinds that only the file format can express.
FILE_ONLY = frozenset(
    {
        SourceKind.GRAPH,
        SourceKind.DIGRAPH,
        SourceKind.LABELLED_DIGRAPH,
        SourceKind.SET_OF_DIGRAPHS,
        SourceKind.SET_OF_STACKS,
    }
)


class _Parser:
    def __init__(self, text: str, degree: int, one_cell_partitions: bool = False):
        self.text = text
        self.degree = degree
        self.one_cell_partitions = one_cell_partitions
        self.depth = 0
        self.tokens = self._tokenise(text)
        self.position = 0

    def _tokenise(self, text: str) -> List[Tuple[str, str]]:
        tokens, index = [], 0
        while index < len(text):
            if text[index:].strip() == "":
                break
            match = _TOKEN.match(text, index)
            if match is None:
                raise ParseError(f"unexpected character at {index} in {text!r}")
            number, ident, cycles, symbol = match.groups()
            if number is not None:
                tokens.append(("int", number))
            elif ident is not None or cycles is not None:
                tokens.append(("perm", ident or cycles))
            else:
                tokens.append(("sym", symbol))
            index = match.end()
        return tokens

    def peek(self) -> Tuple[str, str]:
        if self.position >= len(self.tokens):
            return ("end", "")
        return self.tokens[self.position]

    def take(self, symbol: Optional[str] = None) -> Tuple[str, str]:
        token = self.peek()
        if token[0] == "end" or (symbol is not None and token != ("sym", symbol)):
            raise ParseError(f"expected {symbol or 'a value'} in {self.text!r}")
        self.position += 1
        return token

    def parse(self) -> Any:
        value = self.value()
        if self.peek()[0] != "end":
            raise ParseError(f"trailing input in {self.text!r}")
        return value

    def value(self) -> Any:
        kind, text = self.take()
        if kind == "int":
            return int(text)
        if kind == "perm":
            return parse_perm(text, self.degree)
        if text == "{":
            return frozenset(self.sequence("}"))
        if text == "[":
            self.depth += 1
            try:
                return self.bracket()
            finally:
                self.depth -= 1
        raise ParseError(f"unexpected {text!r} in {self.text!r}")

    def sequence(self, close: str) -> List[Any]:
        items = []
        if self.peek() == ("sym", close):
            self.take(close)
            return items
        while True:
            items.append(self.value())
            _, text = self.take()
            if text == close:
                return items
            if text != ",":
                raise ParseError(f"expected ',' or {close!r} in {self.text!r}")

    def bracket(self) -> Any:
        """A list, or an ordered partition when cells are separated by '|'"""
        if self.peek() == ("sym", "]"):
            self.take("]")
            return ()
        first = self.value()
        single = self.one_cell_partitions and self.depth == 1 and self.peek() == ("sym", "]")
        if self.peek() == ("sym", "|") or single:
            cells = [first]
            while self.peek() == ("sym", "|"):
                self.take("|")
                cells.append(self.value())
            self.take("]")
            if not all(isinstance(c, frozenset) for c in cells):
                raise ParseError(f"partition cells must be sets in {self.text!r}")
            return OrderedPartition(tuple(cells))
        items = [first]
        while self.peek() == ("sym", ","):
            self.take(",")
            items.append(self.value())
        self.take("]")
        return tuple(items)


def parse_literal(text: str, kind: SourceKind, degree: int) -> Any:
    """Parse and validate a literal of the given source kind over {1..degree}"""
    kind = SourceKind(kind)
    if kind in FILE_ONLY:
        raise ParseError(f"{kind.value} objects are read from files, not literals")
    value = _Parser(text, degree, kind == SourceKind.ORDERED_PARTITION).parse()
    return _check(kind, value, degree)


def _points(value: Any, degree: int) -> None:
    if isinstance(value, (frozenset, tuple)):
        for item in value:
            _points(item, degree)
    elif isinstance(value, OrderedPartition):
        validate(value, degree)
    elif isinstance(value, int):
        validate(value, degree)


def _check(kind: SourceKind, value: Any, degree: int) -> Any:
    shapes = {
        SourceKind.POINT: lambda v: isinstance(v, int),
        SourceKind.POINT_LIST: lambda v: isinstance(v, tuple) and all(isinstance(p, int) for p in v),
        SourceKind.SUBSET: lambda v: isinstance(v, frozenset) and all(isinstance(p, int) for p in v),
        SourceKind.ORDERED_PARTITION: lambda v: isinstance(v, OrderedPartition),
        SourceKind.PERM_CONJ: lambda v: isinstance(v, Permutation),
        SourceKind.PERM_LIST: lambda v: isinstance(v, tuple) and all(isinstance(g, Permutation) for g in v),
        SourceKind.GROUP: lambda v: isinstance(v, tuple) and all(isinstance(g, Permutation) for g in v),
        SourceKind.SET_OF_LISTS: lambda v: isinstance(v, frozenset) and all(isinstance(m, tuple) for m in v),
        SourceKind.LIST: lambda v: isinstance(v, tuple),
    }
    families = (SourceKind.DISTINCT_SIZES, SourceKind.DISJOINT_SETS, SourceKind.UNORDERED_PARTITION, SourceKind.SET_OF_SETS)
    if kind in families:
        ok = isinstance(value, frozenset) and all(isinstance(m, frozenset) for m in value)
    else:
        ok = shapes[kind](value)
    if not ok:
        raise ParseError(f"literal is not a {kind.value}")
    _points(value, degree)
    return value


def _order_key(value: Any) -> tuple:
    if isinstance(value, int):
        return (0, value)
    if isinstance(value, frozenset):
        return (1, len(value), sorted(_order_key(v) for v in value))
    if isinstance(value, tuple):
        return (2, len(value), [_order_key(v) for v in value])
    return (3, str(value))


def format_literal(value: Any) -> str:
    """The literal text of a value; reparses to an equal value"""
    if isinstance(value, int):
        return str(value)
    if isinstance(value, frozenset):
        return "{" + ",".join(format_literal(v) for v in sorted(value, key=_order_key)) + "}"
    if isinstance(value, tuple):
        return "[" + ",".join(format_literal(v) for v in value) + "]"
    if isinstance(value, (OrderedPartition, Permutation)):
        return str(value)
    raise ParseError(f"no literal form for {type(value).__name__}")


def _document_stack(found: List[Any], degree: int) -> Stack:
    """One document as a stack of labelled digraphs; points and partitions are lifted"""
    kinds = {StackKind.POINT: int, StackKind.PARTITION: OrderedPartition, StackKind.DIGRAPH: LabelledDigraph}
    stack = Stack.empty(StackKind.DIGRAPH, degree)
    for obj in found:
        kind = next((k for k, t in kinds.items() if isinstance(obj, t)), None)
        if kind is None:
            raise ParseError(f"stacks hold points, partitions and digraphs, not {type(obj).__name__}")
        stack = stack_concat(stack, lift(Stack(kind, degree, [obj]), StackKind.DIGRAPH))
    return stack


def objects_from_text(texts: Sequence[str], kind: SourceKind, degree: int) -> Any:
    """A source object read from text-format documents.

    Each document is one stack for ``set-of-stacks``; the digraphs of all
    documents form the set for ``set-of-digraphs``; every other kind expects
    exactly one declaration.
    """
    kind = SourceKind(kind)
    if kind == SourceKind.SET_OF_STACKS:
        return frozenset(_document_stack(parse_objects(text), degree) for text in texts)
    found: List[Any] = [obj for text in texts for obj in parse_objects(text)]
    digraphs = [obj for obj in found if isinstance(obj, LabelledDigraph)]
    if kind == SourceKind.SET_OF_DIGRAPHS:
        return frozenset(validate(d, degree) for d in digraphs)
    if len(found) != 1:
        raise ParseError(f"expected one object for {kind.value}, found {len(found)}")
    obj = found[0]
    if kind in FILE_ONLY and not isinstance(obj, LabelledDigraph):
        raise ParseError(f"{kind.value} objects are declared as digraphs")
    if kind in (SourceKind.POINT, SourceKind.ORDERED_PARTITION):
        return _check(kind, obj, degree)
    if kind not in FILE_ONLY:
        raise ParseError(f"{kind.value} objects are given as literals, not files")
    validate(obj, degree)
    if kind == SourceKind.DIGRAPH:
        return Digraph(degree, frozenset(obj.arcs))
    if kind == SourceKind.GRAPH:
        return Graph(degree, frozenset(frozenset(a) for a in obj.arcs if a[0] != a[1]))
    return obj
