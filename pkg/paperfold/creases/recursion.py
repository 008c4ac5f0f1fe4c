# encoding: utf-8
""" The paperfolding structures S_d(n), built generation by generation.

After the first d-fold the sheet is a stack of 2^d copies of a smaller
sheet, each lying in its orthant mirrored along the axes where the orthant
is negative. Unfolding therefore gives S_d(n + 1) as the creases of the first
d-fold, spread over the whole central slabs, together with a mirrored copy
of S_d(n) in each orthant.
"""
import functools

import numpy as np

from ..limits import DEFAULT_CELL_BUDGET, check_cell_budget
from .labels import OrthantLabel
from .pattern import CreasePattern, build_S1, orthant_reflection

__all__ = ["generate_recursive", "unfold", "face_count"]


def generate_recursive(
    d: int, n: int, cell_budget: int = DEFAULT_CELL_BUDGET
) -> CreasePattern:
    """Return S_d(n), centered at the origin with extent 2^(n-1).

    Argument
    --------
    d: int
        Dimension of the sheet.
    n: int
        Number of d-folds. S_d(0) is the empty pattern.
    cell_budget: int
        Largest number of unit cells, (2^n)^d, we accept to materialize.

    Raises
    ------
    CellBudgetExceeded
        When (2^n)^d is larger than `cell_budget`.

    Examples
    --------
    >>> [str(s) for s in generate_recursive(1, 2).signs()]
    ['-', '+', '+']
    """
    if d < 1:
        raise ValueError("The dimension must be at least 1, got {}.".format(d))
    if n < 0:
        raise ValueError("The number of folds cannot be negative, got {}.".format(n))
    check_cell_budget(2 ** (n * d), cell_budget, "S_{}({})".format(d, n))
    return _generate(d, n)


@functools.lru_cache(maxsize=4)
def _generate(d: int, n: int) -> CreasePattern:
    if n == 0:
        return CreasePattern.empty(d)
    if n == 1:
        return build_S1(d)
    return unfold(_generate(d, n - 1))


def unfold(previous: CreasePattern) -> CreasePattern:
    """Build the next generation from `previous` = S_d(n).

    The copy in orthant φ is the mirrored pattern translated by h·φ where h
    is the extent of `previous`. Copies only overlap on their own boundary
    planes, which carry no crease.
    """
    d, half = previous.d, previous.extent
    if half == 0:
        return build_S1(d)
    h = 2 * half
    result = CreasePattern.empty(d, h)
    grids = [np.zeros(result.grid_shape(axis), dtype=np.int8) for axis in range(1, d + 1)]

    for phi in OrthantLabel.all(d):
        copy = orthant_reflection(phi, previous)
        for axis in range(1, d + 1):
            window = []
            for i, s in enumerate(phi.signs, start=1):
                length = 2 * half + 1 if i == axis else 2 * half
                start = h if s > 0 else h - length + (1 if i == axis else 0)
                window.append(slice(start, start + length))
            grids[axis - 1][tuple(window)] += copy.grids[axis - 1]

    # The creases of the first d-fold extend across the whole central slab.
    side = np.where(np.arange(-h, h) >= 0, 1, -1).astype(np.int8)
    for axis in range(1, d + 1):
        slab = np.ones((2 * h,) * (d - 1), dtype=np.int8)
        for i in range(1, axis):
            shape = [1] * (d - 1)
            shape[i - 1] = 2 * h
            slab = slab * side.reshape(shape)
        index = [slice(None)] * d
        index[axis - 1] = h  # type: ignore
        grids[axis - 1][tuple(index)] = slab

    return CreasePattern(d, h, grids)


def face_count(d: int, n: int) -> int:
    """Number of creases of S_d(n), from F(n+1) = d·2^(d-1)·2^(n(d-1)) + 2^d·F(n)."""
    count = 0
    for m in range(n):
        count = d * 2 ** (d - 1) * 2 ** (m * (d - 1)) + 2 ** d * count
    return count
