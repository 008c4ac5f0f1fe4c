from .complexity import (
    ComplexityRow,
    ComplexityTable,
    GrowthReport,
    StabilizedCount,
    complexity_table,
    count_patterns,
    count_stabilized,
    formula_value,
    growth_bound_check,
    letter_blocks,
    p2_closed_form,
    window_keys,
)
from .spectral import (
    CoincidenceReport,
    SubstitutionMatrix,
    coincidence_persists,
    find_coincidence,
    is_primitive,
    seed_covers_alphabet,
    substitution_matrix,
)

__all__ = [
    "CoincidenceReport",
    "ComplexityRow",
    "ComplexityTable",
    "GrowthReport",
    "StabilizedCount",
    "SubstitutionMatrix",
    "coincidence_persists",
    "complexity_table",
    "count_patterns",
    "count_stabilized",
    "find_coincidence",
    "formula_value",
    "growth_bound_check",
    "is_primitive",
    "letter_blocks",
    "p2_closed_form",
    "seed_covers_alphabet",
    "substitution_matrix",
    "window_keys",
]
