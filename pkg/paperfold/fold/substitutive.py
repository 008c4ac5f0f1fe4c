# encoding: utf-8
""" Fold by substitution, growing the structure from its centre. """
import itertools as it
from typing import Generator

from ..creases import CreasePattern
from ..limits import DEFAULT_CELL_BUDGET, check_cell_budget
from ..substitution import SymbolicPattern, derive_rule, seed, substitute, to_creases
from .folder import Folder

__all__ = ["SubstitutionFolding"]


class SubstitutionFolding(Folder):
    """Build the central part of S_d(n) for n = 2, 3, … with the substitution.

    The seed is the central 2×…×2 block of semi-cubes of S_d(2). Every
    substitution step doubles it, so generation n gives the creases owned by
    the cells of [-2^(n-2), 2^(n-2))^d: all of S_d(n) except its outermost
    layer of faces.

    Examples
    --------
    >>> folder = SubstitutionFolding.in_dimension(1)
    >>> "".join(str(s) for s in folder.generate(3).signs())
    '-++-'
    """

    first_generation = 2

    def __init__(self, d: int, cell_budget: int = DEFAULT_CELL_BUDGET) -> None:
        super(SubstitutionFolding, self).__init__(d, cell_budget)
        self.rule = derive_rule(d)

    def generation_cells(self, n: int) -> int:
        return 2 ** ((n - 1) * self.d)

    def symbols(self) -> Generator[SymbolicPattern, None, None]:
        """Yield the letters of every generation instead of its creases."""
        pattern = seed(self.d)
        n = self.first_generation
        while self.generation_cells(n) <= self.cell_budget:
            yield pattern
            pattern = substitute(pattern, self.rule)
            n += 1

    def patterns(self) -> Generator[CreasePattern, None, None]:
        for pattern in self.symbols():
            yield to_creases(pattern)

    def generate_symbols(self, n: int) -> SymbolicPattern:
        """The letters of generation `n`, see `generate`."""
        if n < self.first_generation:
            raise ValueError(
                "The substitution starts from generation {}, got {}.".format(
                    self.first_generation, n
                )
            )
        check_cell_budget(
            self.generation_cells(n), self.cell_budget, "The letters of S_{}({})".format(self.d, n)
        )
        return next(it.islice(self.symbols(), n - self.first_generation, None))
