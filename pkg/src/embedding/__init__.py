"""
The 40 embedding polynomials, their matrix-minor form, the birational
generators of the chart and the transformation tables.
"""

from .projective import ProjectivePoint, Proj39
from .table import (
    X,
    EmbeddingTable,
    PointM,
    build_embedding_table,
    discriminant,
    eval_phi,
    phi80,
    projection_p4,
    sample_points,
)
from .matrix import (
    Matrix36,
    column_transposition_check,
    matrix_from_point,
    normalize_matrix,
    phi_from_matrix,
)
from .generators import GeneratorMap, MAP_NAMES, coxeter_relation_holds, generator_map, resolve_association_reading
from .equivariance import equivariant_at, extract_signed_permutation, verify_equivariance

__all__ = [
    "X",
    "EmbeddingTable",
    "GeneratorMap",
    "MAP_NAMES",
    "Matrix36",
    "PointM",
    "ProjectivePoint",
    "Proj39",
    "build_embedding_table",
    "column_transposition_check",
    "coxeter_relation_holds",
    "discriminant",
    "equivariant_at",
    "eval_phi",
    "extract_signed_permutation",
    "generator_map",
    "matrix_from_point",
    "normalize_matrix",
    "phi80",
    "phi_from_matrix",
    "projection_p4",
    "resolve_association_reading",
    "sample_points",
    "verify_equivariance",
]
