# Label namespaces. Omega vertices use "w:" labels and extra vertices "b:"
# labels, so no transporter of extended graphs can move Omega off itself.
WHITE = "w:white"
BLACK = "b:black"
PLAIN = "x"
HASH = "hash"
ANCHOR = "anchor"
# Fills vertices that an entry of a combined stack does not own.
ABSENT = "b:absent"

RESERVED = frozenset({HASH, ANCHOR, ABSENT})


def point_label(marked: bool) -> str:
    return "w:point" if marked else "w:rest"


def cell_label(index: int) -> str:
    return f"w:cell{index}"
