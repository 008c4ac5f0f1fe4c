from .labels import (
    CreaseLabel,
    OrthantLabel,
    ReflectionSet,
    Sign,
    crease_labels,
    crease_sign,
    crease_sign_by_folding,
    reflected_sign,
)
from .pattern import (
    CreasePattern,
    FaceId,
    build_S1,
    coarsen,
    orthant_reflection,
    reflect,
    refines,
)
from .recursion import face_count, generate_recursive, unfold
from .strip import (
    Orientation,
    StripPile,
    fold_strip,
    paperfolding_sequence,
    simulate_strip_fold,
)

__all__ = [
    "CreaseLabel",
    "CreasePattern",
    "FaceId",
    "Orientation",
    "OrthantLabel",
    "ReflectionSet",
    "Sign",
    "StripPile",
    "build_S1",
    "coarsen",
    "crease_labels",
    "crease_sign",
    "crease_sign_by_folding",
    "face_count",
    "fold_strip",
    "generate_recursive",
    "orthant_reflection",
    "paperfolding_sequence",
    "reflect",
    "reflected_sign",
    "refines",
    "simulate_strip_fold",
    "unfold",
]
