# encoding: utf-8
""" Errors raised by paperfold when a computation cannot proceed. """

__all__ = ["CellBudgetExceeded", "ParityError", "InconclusiveLimitError"]


class CellBudgetExceeded(RuntimeError):
    """Raised when a request would materialize more unit cells than allowed.

    Attributes
    ----------
    cells: int
        The number of cells the request needed.
    budget: int
        The configured maximum.
    """

    def __init__(self, cells: int, budget: int, what: str) -> None:
        self.cells = cells
        self.budget = budget
        super(CellBudgetExceeded, self).__init__(
            "{} needs {} unit cells, which is more than the cell budget of {}. "
            "Ask for a smaller generation or raise `cell_budget`.".format(
                what, cells, budget
            )
        )


class ParityError(ValueError):
    """Raised when a letter's parity bits disagree with its cell position."""


class InconclusiveLimitError(RuntimeError):
    """Raised when a direct limit could not be brought to normal form.

    The partial result, including the presentation of the free part, is
    available as the `result` attribute.
    """

    def __init__(self, message: str, result=None) -> None:
        self.result = result
        super(InconclusiveLimitError, self).__init__(message)
