# encoding: utf-8
from abc import ABC, abstractmethod
import itertools as it
import warnings
from typing import Generator, List

from ..creases import CreasePattern
from ..limits import DEFAULT_CELL_BUDGET, check_cell_budget, validate_cell_budget


class Folder(ABC):
    """Defines a common interface for all the ways to build paperfolding structures.

    Examples
    --------

    Any class that inherits from `Folder` can be instantiated directly with
    the dimension of the sheet.

    >>> from paperfold.fold import RecursiveFolding
    >>> folder = RecursiveFolding(2)

    We also provide an `in_dimension` classmethod for API sugar magic.

    >>> folder = RecursiveFolding.in_dimension(2)

    Folders refuse to materialize more unit cells than their cell budget.
    The budget can be changed with:

    >>> folder = RecursiveFolding.in_dimension(2).configure(cell_budget=2 ** 20)

    One can get a single generation with the `generate` method, or the first
    generations with `generations`.

    >>> pattern = folder.generate(4)
    >>> patterns = folder.generations(5)

    Attribute
    ---------
    d: int
        The dimension of the sheet.
    cell_budget: int
        The largest number of unit cells any generation may span.
    """

    #: The generation `patterns()` starts with.
    first_generation = 0

    def __init__(self, d: int, cell_budget: int = DEFAULT_CELL_BUDGET) -> None:
        self.d = d
        self.cell_budget = cell_budget
        self.validate_input_parameters()

    @classmethod
    def in_dimension(cls, d: int) -> "Folder":
        """Fold a sheet of dimension `d`.

        Returns
        -------
        Folder
            A new folder with the default configuration.
        """
        return cls(d)

    def configure(self, cell_budget: int = DEFAULT_CELL_BUDGET) -> "Folder":
        """Modify the folder's configuration."""
        self.cell_budget = cell_budget
        self.validate_input_parameters()
        return self

    def validate_input_parameters(self) -> None:
        """Validate the values of the input parameters.

        We validate when the configuration changes so that iterating over
        the generations does not check them again.
        """
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError(
                """You are trying to fold a sheet of dimension {}. The
                dimension counts the axes of the sheet, it must be a strictly
                positive integer.""".format(
                    self.d
                )
            )
        if self.d > 4:
            warnings.warn(
                """You are folding a sheet of dimension {}. Generations grow
                by a factor 2^{} in size and only the first few fit in any
                reasonable cell budget.""".format(
                    self.d, self.d
                )
            )
        validate_cell_budget(self.cell_budget)

    def generation_cells(self, n: int) -> int:
        """Number of unit cells spanned by generation n."""
        return 2 ** (n * self.d)

    @abstractmethod
    def patterns(self) -> Generator[CreasePattern, None, None]:
        """Yield the successive generations, starting with `first_generation`.

        The generator stops when the next generation would exceed the
        cell budget.
        """
        pass

    def generate(self, n: int) -> CreasePattern:
        """Return generation `n`.

        Raises
        ------
        ValueError
            If `n` comes before the first generation this folder can build.
        CellBudgetExceeded
            If generation `n` spans more unit cells than the budget.
        """
        if n < self.first_generation:
            raise ValueError(
                """{} builds generations from {} on, you asked for generation
                {}.""".format(
                    type(self).__name__, self.first_generation, n
                )
            )
        check_cell_budget(
            self.generation_cells(n), self.cell_budget, "S_{}({})".format(self.d, n)
        )
        return next(it.islice(self.patterns(), n - self.first_generation, None))

    def generations(self, count: int) -> List[CreasePattern]:
        """The first `count` generations, fewer if the budget runs out."""
        return list(it.islice(self.patterns(), count))
