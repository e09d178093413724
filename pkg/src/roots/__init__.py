"""
E6 root combinatorics: roots, the 40 coordinate labels and the signed
permutation action of the Weyl group on them.
"""

from .root_system import RootVec, build_root_catalog, reflect, reflection_images, root
from .labels import Label, Y_LABELS, build_label_catalog, coordinate_labels, label_action, label_orbit
from .signed_perm import (
    SIMPLE_GENERATORS,
    SignedPerm40,
    enumerate_group,
    orbit,
    random_elements,
    resolve_generator,
    signed_perm,
    simple_generators,
    split_projection_order,
)

__all__ = [
    "RootVec",
    "Label",
    "SignedPerm40",
    "Y_LABELS",
    "SIMPLE_GENERATORS",
    "build_root_catalog",
    "build_label_catalog",
    "coordinate_labels",
    "enumerate_group",
    "label_action",
    "label_orbit",
    "orbit",
    "random_elements",
    "reflect",
    "reflection_images",
    "resolve_generator",
    "root",
    "signed_perm",
    "simple_generators",
    "split_projection_order",
]
