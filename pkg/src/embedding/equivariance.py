"""
Symbolic verification of the transformation tables of the embedding.

For a generator g, each y_a composed with g is factored once and matched
against the 40 factored table entries, which recovers the signed
permutation T_g and the cofactor c_g without expanding any product.
"""
import logging
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from ..algebra import Factored, MPoly
from ..errors import IdentityFailure
from ..models import EquivarianceReport
from ..roots import SignedPerm40, signed_perm
from .generators import generator_map
from .projective import Proj39
from .table import build_embedding_table, eval_phi

logger = logging.getLogger(__name__)

FactorKey = FrozenSet[Tuple[MPoly, int]]


def _factor_index(values: Sequence[Factored]) -> Dict[FactorKey, int]:
    index = {}
    for a, value in enumerate(values):
        index[frozenset(value.factors.items())] = a
    return index


def extract_signed_permutation(name: str) -> Tuple[SignedPerm40, Factored]:
    """Recover T_g and c_g from the composites y_a o g.

    The cofactor is read off the first row using the printed target of y1
    and must then explain every other row.

    Raises:
        IdentityFailure: If some composite is not c_g times a signed table entry
    """
    table = build_embedding_table()
    gmap = generator_map(name)
    cache: Dict[MPoly, Factored] = {}
    composites = [f.compose(gmap.rmap, cache) for f in table.factored]
    first_target = gmap.table.target[0]
    cofactor = composites[0] / (table.factored[first_target] * gmap.table.signs[0])
    index = _factor_index(table.factored)
    targets, signs = [], []
    for a, composite in enumerate(composites):
        quotient = composite / cofactor
        b = index.get(frozenset(quotient.factors.items()))
        if b is None:
            raise IdentityFailure(f"{gmap.name}: y{a + 1} o g is not c_g times any table entry", index=a + 1)
        sign = quotient.constant / table.factored[b].constant
        if sign not in (1, -1):
            raise IdentityFailure(f"{gmap.name}: y{a + 1} o g has ratio {sign} to y{b + 1}", index=a + 1)
        targets.append(b)
        signs.append(int(sign))
        logger.debug("%s: y%d -> %+d c y%d", gmap.name, a + 1, int(sign), b + 1)
    return SignedPerm40(targets, signs), cofactor


def _mismatches(found: SignedPerm40, expected: SignedPerm40) -> List[int]:
    rows_found = found.to_signed_targets()
    rows_expected = expected.to_signed_targets()
    return [a + 1 for a, (u, v) in enumerate(zip(rows_found, rows_expected)) if u != v]


def verify_equivariance(name: str, strict: bool = False) -> EquivarianceReport:
    """Check the 40 rows of a generator's transformation table symbolically.

    Args:
        name: s1..s6 or sr
        strict: Raise on the first row that disagrees with the printed table

    Returns:
        The extracted table compared with the printed table and with the
        signed permutation of the corresponding reflection

    Raises:
        IdentityFailure: If a row fails to match any entry, or in strict mode
            if it disagrees with the printed table
    """
    gmap = generator_map(name)
    found, cofactor = extract_signed_permutation(gmap.name)
    printed = _mismatches(found, gmap.table)
    combinatorial = _mismatches(found, signed_perm(gmap.reflection))
    if strict and printed:
        raise IdentityFailure(f"{gmap.name}: row y{printed[0]} disagrees with the printed table",
                              index=printed[0])
    report = EquivarianceReport(
        generator=gmap.name,
        rows_checked=len(found.target),
        cofactor=cofactor.to_text(),
        cofactor_matches=cofactor == gmap.cofactor,
        printed_mismatches=printed,
        combinatorial_mismatches=combinatorial,
        signed_targets=found.to_signed_targets(),
    )
    logger.info("Equivariance of %s: %s", gmap.name, "pass" if report.passed else "fail")
    return report


def equivariant_at(name: str, point: Sequence, perm: Optional[SignedPerm40] = None) -> bool:
    """phi(g x) equals the signed permutation image of phi(x) projectively."""
    gmap = generator_map(name)
    perm = perm or signed_perm(gmap.reflection)
    image = eval_phi(gmap(point))
    table = build_embedding_table()
    return image == Proj39(perm.apply_to_point(table.evaluate(point)))
