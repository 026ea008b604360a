import enum


class StackKind(str, enum.Enum):
    POINT = "point"
    PARTITION = "ordered-partition"
    DIGRAPH = "labelled-digraph"
    EXTENDED = "extended-graph"

    @property
    def rank(self) -> int:
        """Position in the point < partition < digraph < extended hierarchy"""
        return list(StackKind).index(self)


class TargetMode(str, enum.Enum):
    EMPTY = "empty"
    SUBGROUP = "subgroup"
    COSET = "coset"
    PREDICATE = "predicate"


class QueryVerb(str, enum.Enum):
    STABILISER = "stabiliser"
    TRANSPORTER = "transporter"


class SourceKind(str, enum.Enum):
    POINT = "point"
    POINT_LIST = "point-list"
    SUBSET = "subset"
    ORDERED_PARTITION = "ordered-partition"
    DISTINCT_SIZES = "distinct-sizes"
    LIST = "list"
    GRAPH = "graph"
    DIGRAPH = "digraph"
    LABELLED_DIGRAPH = "labelled-digraph"
    DISJOINT_SETS = "disjoint-sets"
    UNORDERED_PARTITION = "unordered-partition"
    PERM_CONJ = "perm-conj"
    PERM_LIST = "perm-list"
    SET_OF_SETS = "set-of-sets"
    SET_OF_LISTS = "set-of-lists"
    SET_OF_DIGRAPHS = "set-of-digraphs"
    SET_OF_STACKS = "set-of-stacks"
    GROUP = "group"

    @classmethod
    def _missing_(cls, value):
        if value == "set":
            return cls.SUBSET
        return None


class SubsetShape(str, enum.Enum):
    EMPTY = "empty"
    SUBGROUP = "subgroup"
    COSET = "coset"
    OTHER = "other"


class Verb(str, enum.Enum):
    STAB = "stab"
    TRANSPORT = "transport"
    TWO_CLOSURE = "two-closure"
    IS_TWO_CLOSED = "is-two-closed"
    NORMALISER = "normaliser"
    CONJUGATE = "conjugate"
    ENCODE = "encode"
    CHECK_REFINER = "check-refiner"
    ORACLE = "oracle"
