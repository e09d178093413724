"""
The 36 positive roots of E6 in doubled coordinates and the reflections they define.

Roots live in the 6-dimensional subspace E of R^8 spanned by e1..e5 and
e8 - e7 - e6. Every coordinate of a root is an integer or a half-integer,
so vectors are stored doubled as 8 integers and the inner product divides
the integer dot product by 4.
"""
import itertools
import logging
from functools import lru_cache
from typing import Dict, List, Tuple

import numpy as np

from ..errors import ConstructionFailure, ParseError, ZeroVector

logger = logging.getLogger(__name__)

INDICES = (1, 2, 3, 4, 5, 6)

# Auxiliary vectors used to write the roots down; not roots of the catalog
AUXILIARY_VECTORS = {
    "r0": (1, 1, 1, 1, 1, -1, 1, 1),
    "rtilde": (0, 0, 0, 0, 0, 2, -2, -2),
}


class RootVec:
    """A vector of E with doubled integer coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != 8:
            raise ValueError("Root vectors have 8 doubled coordinates")
        self.coords = coords

    def inner(self, other: "RootVec") -> int:
        dot = int(np.dot(np.array(self.coords, dtype=np.int64), np.array(other.coords, dtype=np.int64)))
        if dot % 4:
            raise ValueError(f"Inner product of {self} and {other} is not an integer")
        return dot // 4

    def __neg__(self) -> "RootVec":
        return RootVec(-c for c in self.coords)

    def __add__(self, other: "RootVec") -> "RootVec":
        return RootVec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "RootVec") -> "RootVec":
        return RootVec(a - b for a, b in zip(self.coords, other.coords))

    def __eq__(self, other) -> bool:
        return isinstance(other, RootVec) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return f"RootVec({self.coords})"

    def in_subspace(self) -> bool:
        """True when the vector lies in E (last two coordinates equal minus the sixth)."""
        return self.coords[6] == -self.coords[5] and self.coords[7] == -self.coords[5]

    def normalized(self) -> "RootVec":
        """Representative of the pair {v, -v} whose first nonzero coordinate is positive."""
        for c in self.coords:
            if c:
                return self if c > 0 else -self
        raise ZeroVector("The zero vector has no sign normalization")


def reflect(v: RootVec, u: RootVec) -> RootVec:
    """Apply the reflection s_v to u.

    Args:
        v: Mirror root with <v,v> = 2
        u: Vector to reflect

    Returns:
        u - <u,v> v
    """
    if not any(v.coords):
        raise ZeroVector("Cannot reflect in the zero vector")
    k = u.inner(v)
    return RootVec(a - k * b for a, b in zip(u.coords, v.coords))


def canonical_root_name(text: str) -> str:
    """Normalize a root name: ``r``, ``r12`` .. ``r56`` or ``r123`` .. ``r456``.

    Indices are sorted, so ``r21`` and ``r12`` name the same root.
    """
    text = text.strip()
    if not text.startswith("r"):
        raise ParseError(f"Root names start with 'r': {text!r}")
    digits = text[1:]
    if not digits:
        return "r"
    if not digits.isdigit() or len(digits) not in (2, 3):
        raise ParseError(f"Invalid root name {text!r}")
    indices = sorted(int(d) for d in digits)
    if len(set(indices)) != len(indices) or not all(1 <= i <= 6 for i in indices):
        raise ParseError(f"Root indices must be distinct and between 1 and 6: {text!r}")
    return "r" + "".join(str(i) for i in indices)


def root_indices(name: str) -> Tuple[int, ...]:
    return tuple(int(d) for d in canonical_root_name(name)[1:])


def _doubled_vector(name: str) -> RootVec:
    indices = root_indices(name)
    base = list(AUXILIARY_VECTORS["r0"])
    if not indices:
        return RootVec([-1, -1, -1, -1, -1, -1, 1, 1])
    if len(indices) == 2:
        i, j = indices
        if i == 1:
            base[j - 2] -= 2
            return RootVec(base)
        coords = [0] * 8
        coords[i - 2] = 2
        coords[j - 2] = -2
        return RootVec(coords)
    i, j, k = indices
    if i == 1:
        coords = [0] * 8
        coords[j - 2] = -2
        coords[k - 2] = -2
        return RootVec(coords)
    for m in (i, j, k):
        base[m - 2] -= 2
    return RootVec(base)


def root_names() -> List[str]:
    """The 36 positive root names in catalog order: r, then pairs, then triples."""
    names = ["r"]
    names += ["r%d%d" % pair for pair in itertools.combinations(INDICES, 2)]
    names += ["r%d%d%d" % triple for triple in itertools.combinations(INDICES, 3)]
    return names


def orthogonality_expected(a: str, b: str) -> bool:
    """Pairs of root names the catalog guarantees to be orthogonal.

    r is orthogonal to every r_ij; r_ij is orthogonal to r_kl and r_klm when the
    index sets are disjoint and to every r_ijk containing it; two triples
    sharing exactly one index are orthogonal.
    """
    ia, ib = set(root_indices(a)), set(root_indices(b))
    if len(ia) > len(ib):
        ia, ib = ib, ia
    if not ia:
        return len(ib) == 2
    if len(ia) == 2:
        return not (ia & ib) or ia <= ib
    return len(ib) == 3 and len(ia & ib) == 1


@lru_cache(maxsize=1)
def build_root_catalog() -> Dict[str, RootVec]:
    """Build and validate the 36 positive roots.

    Returns:
        Map root name -> doubled root vector, in catalog order

    Raises:
        ConstructionFailure: If a norm, the orthogonality pattern or the
            E6 Cartan matrix of the simple roots is wrong
    """
    catalog = {name: _doubled_vector(name) for name in root_names()}
    names = list(catalog)
    coords = np.array([catalog[n].coords for n in names], dtype=np.int64)
    gram = coords @ coords.T
    if np.any(gram % 4):
        raise ConstructionFailure("Catalog inner products are not integral")
    gram //= 4
    if not all(v.in_subspace() for v in catalog.values()):
        raise ConstructionFailure("Every root must lie in the subspace E")
    if not np.all(np.diag(gram) == 2):
        raise ConstructionFailure("Every root must have norm 2")
    for a, b in itertools.combinations(range(len(names)), 2):
        if orthogonality_expected(names[a], names[b]) and gram[a, b] != 0:
            raise ConstructionFailure(f"{names[a]} and {names[b]} should be orthogonal")
        if abs(gram[a, b]) > 1:
            raise ConstructionFailure(f"{names[a]} and {names[b]} are proportional")
    if len(set(catalog.values())) != 36:
        raise ConstructionFailure("Root catalog has duplicate vectors")
    simple = [catalog[n] for n in SIMPLE_ROOTS]
    cartan = np.array([[a.inner(b) for b in simple] for a in simple], dtype=np.int64)
    if not np.array_equal(cartan, E6_CARTAN):
        raise ConstructionFailure("Simple roots do not have the E6 Cartan matrix")
    logger.debug("Root catalog built with %d positive roots", len(catalog))
    return catalog


# s12, s23, s34, s45, s56 form the A5 chain; s123 hangs off s34
SIMPLE_ROOTS = ("r12", "r23", "r34", "r45", "r56", "r123")

E6_CARTAN = np.array([
    [2, -1, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0],
    [0, -1, 2, -1, 0, -1],
    [0, 0, -1, 2, -1, 0],
    [0, 0, 0, -1, 2, 0],
    [0, 0, -1, 0, 0, 2],
], dtype=np.int64)


def root(name: str) -> RootVec:
    return build_root_catalog()[canonical_root_name(name)]


def reflection_images(reflection: str) -> Dict[str, str]:
    """Action of a simple reflection on root names modulo sign."""
    catalog = build_root_catalog()
    by_vector = {v.normalized(): n for n, v in catalog.items()}
    u = root(reflection)
    return {name: by_vector[reflect(u, v).normalized()] for name, v in catalog.items()}
