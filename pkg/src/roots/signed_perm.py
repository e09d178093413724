"""
Signed permutations of the 40 coordinates and the Weyl group they generate.

A signed permutation T acts on a point P of Q^40 by
``(T P)[a] = sign[a] * P[target[a]]``. The map g -> T_g induced by the
generators satisfies ``y(g x) = c_g(x) * T_g y(x)``, and products multiply
as operators: ``(A * B) P = A (B P)``.
"""
import logging
from collections import deque
from typing import Callable, Hashable, Iterable, List, Sequence, Tuple

import numpy as np

from ..algebra import primitive_integer_vector
from ..errors import BudgetExceeded, UnknownGenerator
from .labels import SPLIT_INDICES, build_label_catalog, coordinate_labels, label_action

logger = logging.getLogger(__name__)

# Generator names and the reflection each one stands for
GENERATOR_ROOTS = {
    "s12": "r12",
    "s23": "r23",
    "s34": "r34",
    "s45": "r45",
    "s56": "r56",
    "s123": "r123",
    "sr": "r",
}

# The birational maps s1..s6 of the coordinate chart realize these reflections
MAP_ALIASES = {
    "s1": "s12",
    "s2": "s23",
    "s3": "s34",
    "s4": "s45",
    "s5": "s56",
    "s6": "s123",
}

SIMPLE_GENERATORS = ("s12", "s23", "s34", "s45", "s56", "s123")


class SignedPerm40:
    """A permutation of 40 coordinates with a sign attached to each slot."""

    __slots__ = ("target", "signs", "_hash")

    def __init__(self, target: Sequence[int], signs: Sequence[int]):
        target, signs = tuple(target), tuple(signs)
        if sorted(target) != list(range(len(target))) or len(signs) != len(target):
            raise ValueError("target must be a permutation of 0..n-1")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")
        self.target = target
        self.signs = signs
        self._hash = hash((target, signs))

    @classmethod
    def identity(cls, n: int = 40) -> "SignedPerm40":
        return cls(range(n), [1] * n)

    @classmethod
    def from_signed_targets(cls, rows: Sequence[int]) -> "SignedPerm40":
        """Build from a printed table: entry ``+-b`` at position a means y_a -> +-y_b (1-based)."""
        return cls([abs(r) - 1 for r in rows], [1 if r > 0 else -1 for r in rows])

    def to_signed_targets(self) -> List[int]:
        return [s * (t + 1) for t, s in zip(self.target, self.signs)]

    def __mul__(self, other: "SignedPerm40") -> "SignedPerm40":
        t_a, s_a = self.target, self.signs
        t_b, s_b = other.target, other.signs
        return SignedPerm40(
            [t_b[t_a[a]] for a in range(len(t_a))],
            [s_a[a] * s_b[t_a[a]] for a in range(len(t_a))],
        )

    def inverse(self) -> "SignedPerm40":
        n = len(self.target)
        target = [0] * n
        signs = [1] * n
        for a, (t, s) in enumerate(zip(self.target, self.signs)):
            target[t] = a
            signs[t] = s
        return SignedPerm40(target, signs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SignedPerm40) and self.target == other.target
                and self.signs == other.signs)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SignedPerm40({self.to_signed_targets()})"

    def is_identity(self) -> bool:
        return all(t == a for a, t in enumerate(self.target)) and all(s == 1 for s in self.signs)

    def order(self) -> int:
        power, k = self, 1
        while not power.is_identity():
            power, k = power * self, k + 1
        return k

    def apply_to_point(self, values: Sequence) -> List:
        return [s * values[t] for t, s in zip(self.target, self.signs)]

    def apply_to_form(self, coeffs: Sequence) -> List:
        """Coefficients of the linear form ``F(T P)`` given those of ``F``."""
        result = [0] * len(coeffs)
        for a, c in enumerate(coeffs):
            if c:
                result[self.target[a]] += c * self.signs[a]
        return result

    def apply_to_monomial(self, indices: Sequence[int]) -> Tuple[int, Tuple[int, ...]]:
        """Image of the monomial prod P[i] as (sign, sorted indices)."""
        sign = 1
        for i in indices:
            sign *= self.signs[i]
        return sign, tuple(sorted(self.target[i] for i in indices))

    def perm80(self) -> Tuple[int, ...]:
        """Unsigned permutation of the 80 coordinates y_a (index a) and y_-a (index 40 + a)."""
        n = len(self.target)
        image = [0] * (2 * n)
        for a, (t, s) in enumerate(zip(self.target, self.signs)):
            image[a] = t if s > 0 else n + t
            image[n + a] = n + t if s > 0 else t
        return tuple(image)

    def restrict(self, indices: Sequence[int]) -> Tuple[int, ...]:
        """Unsigned action on a subset of coordinates that the element preserves."""
        position = {a: k for k, a in enumerate(indices)}
        try:
            return tuple(position[self.target[a]] for a in indices)
        except KeyError:
            raise ValueError("Element does not preserve the given coordinates")


def resolve_generator(name: str) -> str:
    key = name.strip().lower()
    key = MAP_ALIASES.get(key, key)
    if key not in GENERATOR_ROOTS:
        raise UnknownGenerator(f"Unknown generator '{name}'")
    return key


def signed_perm(name: str) -> SignedPerm40:
    """Signed permutation induced by a reflection on the 40 label triples.

    Args:
        name: s12, s23, s34, s45, s56, s123 or sr (s1..s6 are accepted as aliases)

    Returns:
        T with target[a] = index of g.label_a and sign -1 exactly when the
        image label differs from the source label
    """
    g = GENERATOR_ROOTS[resolve_generator(name)]
    labels = coordinate_labels()
    index = {label: k for k, label in enumerate(labels)}
    build_label_catalog()
    target, signs = [], []
    for a, label in enumerate(labels):
        image = index[label_action(g, label)]
        target.append(image)
        signs.append(1 if image == a else -1)
    return SignedPerm40(target, signs)


def simple_generators() -> List[SignedPerm40]:
    return [signed_perm(name) for name in SIMPLE_GENERATORS]


def random_elements(rng: np.random.RandomState, count: int, length: int = 24,
                    generators: Sequence[SignedPerm40] = None) -> List[SignedPerm40]:
    """Random group elements as products of ``length`` random generators."""
    generators = list(generators or simple_generators())
    elements = []
    for _ in range(count):
        element = SignedPerm40.identity(len(generators[0].target))
        for k in rng.randint(0, len(generators), size=length):
            element = element * generators[int(k)]
        elements.append(element)
    return elements


def enumerate_group(generators: Sequence[SignedPerm40], budget: int = 200000) -> Tuple[int, List[SignedPerm40]]:
    """Closure of the generators by breadth-first multiplication.

    Args:
        generators: Group generators
        budget: Maximum number of elements before giving up

    Returns:
        (order, elements in discovery order, identity first)

    Raises:
        BudgetExceeded: If the closure grows past ``budget``
    """
    n = len(generators[0].target) if generators else 40
    identity = SignedPerm40.identity(n)
    elements = [identity]
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in generators:
            product = current * g
            if product not in seen:
                seen.add(product)
                elements.append(product)
                queue.append(product)
                if len(elements) > budget:
                    raise BudgetExceeded(f"Group closure exceeded {budget} elements")
    logger.info("Group closure reached %d elements", len(elements))
    return len(elements), elements


def split_projection_order(elements: Iterable[SignedPerm40]) -> int:
    """Order of the image of a group of split-preserving elements in S10."""
    return len({e.restrict(SPLIT_INDICES) for e in elements})


def _canonical_form(vector):
    return primitive_integer_vector(vector)


def orbit(seed: Hashable, generators: Sequence[SignedPerm40],
          act: Callable = None, canonical: Callable = None, budget: int = 1000000) -> List:
    """Orbit of a seed under the group generated by ``generators``.

    Args:
        seed: Object to move (a 40-vector of form coefficients by default)
        generators: Group generators
        act: ``act(g, item)`` returning the image; defaults to the action on
            linear forms
        canonical: Normalization applied to every image (scalar multiples
            identified); defaults to the primitive integer vector

    Returns:
        Orbit members in discovery order

    Raises:
        BudgetExceeded: If the orbit grows past ``budget``
    """
    act = act or (lambda g, item: g.apply_to_form(item))
    canonical = canonical or _canonical_form
    start = canonical(seed)
    members = [start]
    known = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for g in generators:
            image = canonical(act(g, current))
            if image not in known:
                known.add(image)
                members.append(image)
                queue.append(image)
                if len(members) > budget:
                    raise BudgetExceeded(f"Orbit exceeded {budget} members")
    return members
