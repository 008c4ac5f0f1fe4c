# encoding: utf-8
""" Default bounds shared by the generators and the analyses. """
import warnings

from .exceptions import CellBudgetExceeded

__all__ = [
    "DEFAULT_CELL_BUDGET",
    "DEFAULT_STRIP_FOLDS",
    "DEFAULT_PRIMITIVITY_STEPS",
    "DEFAULT_COINCIDENCE_STEPS",
    "DEFAULT_STABILIZATION_STEPS",
    "check_cell_budget",
    "validate_cell_budget",
]

DEFAULT_CELL_BUDGET = 2 ** 26
DEFAULT_STRIP_FOLDS = 20
DEFAULT_PRIMITIVITY_STEPS = 8
DEFAULT_COINCIDENCE_STEPS = 6
DEFAULT_STABILIZATION_STEPS = 20


def check_cell_budget(cells: int, budget: int, what: str) -> None:
    """Raise `CellBudgetExceeded` when `cells` is over `budget`."""
    if cells > budget:
        raise CellBudgetExceeded(cells, budget, what)


def validate_cell_budget(cell_budget: int) -> None:
    if not isinstance(cell_budget, int) or cell_budget < 1:
        raise ValueError(
            """The cell budget must be a strictly positive integer, got {}.
            It bounds the number of unit cells any single request is allowed
            to materialize.""".format(
                cell_budget
            )
        )
    if cell_budget > 2 ** 30:
        warnings.warn(
            """You set a cell budget of {} cells. Patterns this large need
            several gigabytes of memory; the default is {}.""".format(
                cell_budget, DEFAULT_CELL_BUDGET
            )
        )
