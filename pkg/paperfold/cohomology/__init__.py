from .approximant import (
    ApproximantComplex,
    CellComplex,
    CollaredSubstitution,
    ap_complex,
    collar_letters,
)
from .direct_limit import DirectLimitResult, direct_limit
from .groups import (
    DirectLimitGroup,
    EndomorphismOnGroups,
    FinitelyGeneratedGroup,
    invariant_factors,
)
from .pipeline import (
    CohomologyGroup,
    cohomology_of_complex,
    hull_cohomology,
    paperfolding_cohomology,
)
from .smith import SmithDecomposition, smith_decomposition, smith_normal_form

__all__ = [
    "ApproximantComplex",
    "CellComplex",
    "CohomologyGroup",
    "CollaredSubstitution",
    "DirectLimitGroup",
    "DirectLimitResult",
    "EndomorphismOnGroups",
    "FinitelyGeneratedGroup",
    "SmithDecomposition",
    "ap_complex",
    "cohomology_of_complex",
    "collar_letters",
    "direct_limit",
    "hull_cohomology",
    "invariant_factors",
    "paperfolding_cohomology",
    "smith_decomposition",
    "smith_normal_form",
]
