from .block import BlockSubstitution, SymbolicPattern, expand_pattern
from .letters import Letter, alphabet_size
from .rule import (
    EquivalenceReport,
    PaperfoldingRule,
    check_parity,
    derive_rule,
    equivalence_check,
    from_creases,
    seed,
    substitute,
    to_creases,
)

__all__ = [
    "BlockSubstitution",
    "EquivalenceReport",
    "Letter",
    "PaperfoldingRule",
    "SymbolicPattern",
    "alphabet_size",
    "check_parity",
    "derive_rule",
    "equivalence_check",
    "expand_pattern",
    "from_creases",
    "seed",
    "substitute",
    "to_creases",
]
