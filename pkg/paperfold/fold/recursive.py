# encoding: utf-8
""" Fold by repeated unfolding. """
from typing import Generator

from ..creases import CreasePattern, unfold
from .folder import Folder

__all__ = ["RecursiveFolding"]


class RecursiveFolding(Folder):
    """Build S_d(0), S_d(1), … by unfolding one more d-fold at a time.

    Generation n + 1 is made of 2^d mirrored copies of generation n, one in
    every orthant, and the creases of the first d-fold on the central
    hyperplanes.

    Examples
    --------
    >>> folder = RecursiveFolding.in_dimension(1)
    >>> "".join(str(s) for s in folder.generate(3).signs())
    '--++-++'
    """

    first_generation = 0

    def patterns(self) -> Generator[CreasePattern, None, None]:
        pattern = CreasePattern.empty(self.d)
        n = 0
        while self.generation_cells(n) <= self.cell_budget:
            yield pattern
            pattern = unfold(pattern)
            n += 1
