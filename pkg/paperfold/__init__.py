from .creases import CreasePattern, FaceId, Sign, generate_recursive
from .exceptions import CellBudgetExceeded, InconclusiveLimitError, ParityError
from .fold import RecursiveFolding, SubstitutionFolding
from .substitution import SymbolicPattern, derive_rule, seed, substitute

__all__ = [
    "CellBudgetExceeded",
    "CreasePattern",
    "FaceId",
    "InconclusiveLimitError",
    "ParityError",
    "RecursiveFolding",
    "Sign",
    "SubstitutionFolding",
    "SymbolicPattern",
    "derive_rule",
    "generate_recursive",
    "seed",
    "substitute",
]
