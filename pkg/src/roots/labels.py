"""
The 40 labels indexing the coordinates y1..y40 and their A2 x A2 x A2 root triples.

A label is either a split ``(abc,def)`` of {1..6} into two triples or a
cyclically ordered triple of disjoint pairs ``(ab,cd,ef)``. Each label picks
three mutually orthogonal A2 subsystems of E6; reflections permute these
triples, which gives the action of W(E6) on the coordinates.
"""
import itertools
import logging
from functools import lru_cache
from typing import Dict, FrozenSet, List, Sequence, Tuple

from ..algebra import QMatrix
from ..errors import ConstructionFailure, NoMatch, ParseError
from .root_system import RootVec, canonical_root_name, reflect, root

logger = logging.getLogger(__name__)

SPLIT = "split"
CYCLE = "cycle"

A2Block = FrozenSet[RootVec]
A2Triple = FrozenSet[A2Block]


class Label:
    """A split or pair-cycle label in canonical form.

    Splits list the part containing 1 first; pair cycles are rotated so the
    pair containing 1 comes first. Both keep every part sorted.
    """

    __slots__ = ("kind", "parts")

    def __init__(self, kind: str, parts: Sequence[Sequence[int]]):
        parts = [tuple(sorted(int(i) for i in part)) for part in parts]
        flat = sorted(i for part in parts for i in part)
        if flat != [1, 2, 3, 4, 5, 6]:
            raise ParseError(f"Label parts must partition 1..6, got {parts}")
        if kind == SPLIT:
            if [len(p) for p in parts] != [3, 3]:
                raise ParseError("A split has two parts of size 3")
            parts.sort(key=lambda p: 1 not in p)
        elif kind == CYCLE:
            if [len(p) for p in parts] != [2, 2, 2]:
                raise ParseError("A pair cycle has three parts of size 2")
            start = next(i for i, p in enumerate(parts) if 1 in p)
            parts = parts[start:] + parts[:start]
        else:
            raise ParseError(f"Unknown label kind {kind!r}")
        self.kind = kind
        self.parts = tuple(parts)

    @classmethod
    def parse(cls, text: str) -> "Label":
        """Parse ``(156,234)`` or ``(12,56,34)``."""
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError(f"Labels are written in parentheses: {text!r}")
        chunks = [c.strip() for c in body[1:-1].split(",")]
        if not all(c.isdigit() for c in chunks):
            raise ParseError(f"Invalid label {text!r}")
        parts = [[int(d) for d in c] for c in chunks]
        kind = SPLIT if len(parts) == 2 else CYCLE
        return cls(kind, parts)

    def __str__(self) -> str:
        return "(" + ",".join("".join(str(i) for i in p) for p in self.parts) + ")"

    def __repr__(self) -> str:
        return f"Label{self}"

    def __eq__(self, other) -> bool:
        return isinstance(other, Label) and (self.kind, self.parts) == (other.kind, other.parts)

    def __hash__(self) -> int:
        return hash((self.kind, self.parts))

    def root_blocks(self) -> List[Tuple[str, str, str]]:
        """The three A2 blocks as triples of root names."""
        def name(*indices):
            return canonical_root_name("r" + "".join(str(i) for i in indices))

        if self.kind == SPLIT:
            (a, b, c), (d, e, f) = self.parts
            return [
                (name(a, b), name(b, c), name(a, c)),
                (name(d, e), name(e, f), name(d, f)),
                ("r", name(a, b, c), name(d, e, f)),
            ]
        blocks = []
        for k, (a, b) in enumerate(self.parts):
            c, d = self.parts[(k + 1) % 3]
            blocks.append((name(a, b), name(a, c, d), name(b, c, d)))
        return blocks

    def triple(self) -> A2Triple:
        return frozenset(
            frozenset(root(n).normalized() for n in block) for block in self.root_blocks()
        )


# Coordinate order y1..y40
Y_LABELS = (
    "(156,234)", "(123,456)", "(124,356)", "(145,236)", "(146,235)",
    "(134,256)", "(135,246)", "(136,245)", "(125,346)", "(126,345)",
    "(12,56,34)", "(16,23,45)", "(15,23,46)", "(13,56,24)", "(15,24,36)",
    "(16,24,35)", "(15,34,26)", "(16,34,25)", "(12,36,45)", "(12,35,46)",
    "(13,26,45)", "(13,25,46)", "(13,24,56)", "(15,46,23)", "(16,45,23)",
    "(12,34,56)", "(13,46,25)", "(13,45,26)", "(12,46,35)", "(12,45,36)",
    "(14,35,26)", "(14,36,25)", "(14,25,36)", "(14,26,35)", "(16,25,34)",
    "(15,26,34)", "(16,35,24)", "(15,36,24)", "(14,56,23)", "(14,23,56)",
)

SPLIT_INDICES = tuple(range(10))


def coordinate_labels() -> List[Label]:
    return [Label.parse(text) for text in Y_LABELS]


def _check_block(block: A2Block) -> None:
    u, v, w = list(block)
    for a, b, c in ((u, v, w), (v, w, u), (w, u, v)):
        if abs(a.inner(b)) != 1 or reflect(a, b).normalized() != c:
            raise ConstructionFailure(f"Block {sorted(x.coords for x in block)} is not an A2 system")


@lru_cache(maxsize=1)
def build_label_catalog() -> Dict[Label, A2Triple]:
    """Build the 40 label triples in coordinate order and check their structure.

    Raises:
        ConstructionFailure: If a block is not A2, blocks are not orthogonal,
            the nine roots do not span E, triples repeat, or some root is
            not in exactly 10 triples
    """
    catalog: Dict[Label, A2Triple] = {}
    usage: Dict[RootVec, int] = {}
    for label in coordinate_labels():
        triple = label.triple()
        blocks = list(triple)
        for block in blocks:
            _check_block(block)
        for b1, b2 in itertools.combinations(blocks, 2):
            if any(u.inner(v) for u in b1 for v in b2):
                raise ConstructionFailure(f"Blocks of {label} are not mutually orthogonal")
        vectors = [u.coords for block in blocks for u in block]
        if QMatrix(vectors).rank() != 6:
            raise ConstructionFailure(f"Roots of {label} do not span E")
        if triple in catalog.values():
            raise ConstructionFailure(f"Label {label} repeats an earlier triple")
        catalog[label] = triple
        for block in blocks:
            for u in block:
                usage[u] = usage.get(u, 0) + 1
    if len(catalog) != 40 or len(usage) != 36 or set(usage.values()) != {10}:
        raise ConstructionFailure("Every root must lie in exactly 10 of the 40 triples")
    logger.debug("Label catalog built with %d triples", len(catalog))
    return catalog


@lru_cache(maxsize=1)
def _triple_index() -> Dict[A2Triple, Label]:
    return {triple: label for label, triple in build_label_catalog().items()}


def label_action(g: str, label: Label) -> Label:
    """Image of a label under the reflection in the root named ``g``.

    Raises:
        NoMatch: If the reflected triple is not in the catalog
    """
    u = root(g)
    triple = build_label_catalog().get(label) or label.triple()
    image = frozenset(frozenset(reflect(u, v).normalized() for v in block) for block in triple)
    try:
        return _triple_index()[image]
    except KeyError:
        raise NoMatch(f"Reflection {g} maps {label} outside the label catalog")


def label_orbit(label: Label, reflections: Sequence[str]) -> List[Label]:
    """Orbit of a label under the group generated by the given reflections (BFS order)."""
    seen = [label]
    known = {label}
    frontier = [label]
    while frontier:
        nxt = []
        for current in frontier:
            for g in reflections:
                image = label_action(g, current)
                if image not in known:
                    known.add(image)
                    seen.append(image)
                    nxt.append(image)
        frontier = nxt
    return seen
