# encoding: utf-8
""" Pattern complexity of the paperfolding structures.

A cubic n-pattern is everything one sees through a half-open window of n
semi-cubes along every axis: the signs of all the faces whose lowest corner
lies in the window box, one per owned face of each of its n^d cells. In
dimension one this is the usual factor complexity of the paperfolding
sequence.

We count the distinct windows of S_d(m) for growing m, and stop once one
more generation brings no new pattern.
"""
import functools
import logging
import math
import warnings
from typing import List, NamedTuple, Optional, Set

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..creases import CreasePattern, generate_recursive
from ..limits import DEFAULT_CELL_BUDGET
from ..substitution import derive_rule, seed, substitute

__all__ = [
    "StabilizedCount",
    "ComplexityRow",
    "ComplexityTable",
    "GrowthReport",
    "window_keys",
    "count_patterns",
    "count_stabilized",
    "p2_closed_form",
    "formula_value",
    "letter_blocks",
    "growth_bound_check",
    "complexity_table",
]

logger = logging.getLogger(__name__)


def window_keys(pattern: CreasePattern, n: int) -> Set[bytes]:
    """The canonical keys of all n-windows lying fully inside `pattern`.

    Windows start at x ∈ [-h + 1, h - n]^d so that every face with lowest
    corner in [x, x + n)^d is an interior face of the pattern. The key packs
    the signs of these faces, axis by axis, in C order.

    Raises
    ------
    ValueError
        If no window of side n fits.
    """
    d, h = pattern.d, pattern.extent
    if n < 1:
        raise ValueError("Windows have a side of at least 1, got {}.".format(n))
    if 2 * h - n < 1:
        raise ValueError(
            """A window of side {} does not fit inside a pattern of extent {}:
            use a later generation.""".format(
                n, h
            )
        )
    inner = (slice(1, 2 * h),) * d
    views = [sliding_window_view(grid[inner] > 0, (n,) * d) for grid in pattern.grids]
    keys: Set[bytes] = set()
    # A few slabs of window positions at a time keep the copies small.
    per_slab = int(np.prod(views[0].shape[1:d]))
    chunk = max(1, 2 ** 16 // per_slab)
    for start in range(0, views[0].shape[0], chunk):
        rows = [view[start : start + chunk].reshape(-1, n ** d) for view in views]
        packed = np.packbits(np.concatenate(rows, axis=1), axis=1)
        keys.update(bytes(row) for row in np.unique(packed, axis=0))
    return keys


def count_patterns(
    d: int, n: int, m: int, cell_budget: int = DEFAULT_CELL_BUDGET
) -> int:
    """Number of distinct n-patterns that occur in S_d(m)."""
    if 2 ** m < n:
        raise ValueError(
            """Generation {} is {} cells wide, too small for windows of side
            {}.""".format(
                m, 2 ** m, n
            )
        )
    return len(window_keys(generate_recursive(d, m, cell_budget), n))


class StabilizedCount(NamedTuple):
    """The number of n-patterns once it stopped growing with the generation.

    When the cell budget ran out first, `stabilized` is false, `count` is the
    last count obtained, at generation `m`, and `previous` the one before.
    """

    d: int
    n: int
    count: int
    m: int
    stabilized: bool = True
    previous: Optional[int] = None


@functools.lru_cache(maxsize=256)
def count_stabilized(
    d: int, n: int, cell_budget: int = DEFAULT_CELL_BUDGET
) -> StabilizedCount:
    """Count n-patterns in S_d(m), increasing m until the count is stable.

    The first generation tried is the smallest with 2^m ≥ 4n; the count is
    accepted when generation m + 1 gives the same number. Generation m + 1
    contains a translated copy of generation m, so counts never decrease.

    Examples
    --------
    >>> count_stabilized(1, 2).count
    4
    """
    m = max(1, math.ceil(math.log2(4 * n)))
    previous: Optional[int] = None
    current = count_patterns(d, n, m, cell_budget)
    while 2 ** ((m + 1) * d) <= cell_budget:
        following = count_patterns(d, n, m + 1, cell_budget)
        logger.debug("%d-patterns in S_%d(%d): %d", n, d, m + 1, following)
        if following == current:
            return StabilizedCount(d, n, current, m)
        m, previous, current = m + 1, current, following

    warnings.warn(
        """The number of {}-patterns in dimension {} did not stabilize within
        the cell budget: {} at generation {} after {} at the generation
        before.""".format(
            n, d, current, m, previous
        )
    )
    return StabilizedCount(d, n, current, m, False, previous)


def p2_closed_form(n: int) -> int:
    """The conjectured number of n-patterns in dimension two, for n ≥ 3.

    >>> p2_closed_form(3)
    184
    """
    if n < 3:
        raise ValueError(
            "The closed form for two-dimensional patterns holds for n ≥ 3, got {}.".format(n)
        )
    power = 2 ** ((n - 1).bit_length() - 1)
    return 12 * n * n - 4 - 16 * power * power + 24 * n * power


def formula_value(d: int, n: int) -> Optional[int]:
    """The known or conjectured pattern count, when there is one."""
    if d == 1 and n >= 7:
        return 4 * n
    if d == 2 and n >= 3:
        return p2_closed_form(n)
    return None


def letter_blocks(d: int, cell_budget: int = DEFAULT_CELL_BUDGET) -> int:
    """Number of distinct 2×…×2 blocks of letters in the paperfolding structure.

    Blocks are collected from the substitution grown out of the seed, one
    step at a time, until a step brings no new block.
    """
    rule = derive_rule(d)
    pattern = substitute(seed(d), rule)
    found: Set[bytes] = set()
    while True:
        pattern = substitute(pattern, rule)
        windows = sliding_window_view(pattern.cells, (2,) * d).reshape(-1, 2 ** d)
        blocks = {bytes(row) for row in np.unique(windows.astype(np.int16), axis=0)}
        if blocks <= found:
            return len(found)
        found |= blocks
        if pattern.cells.size * 2 ** d > cell_budget:
            raise RuntimeError(
                "The set of letter blocks did not close within the cell budget."
            )


class GrowthReport(NamedTuple):
    """Pattern counts against the bound C·n^d.

    Attributes
    ----------
    constant: int
        C, the number of distinct 2^d blocks of letters times 2^d.
    ratios: list of (n, count, count / n^d)
    """

    d: int
    constant: int
    ratios: List[tuple]

    @property
    def max_ratio(self) -> float:
        return max(ratio for _, _, ratio in self.ratios)

    @property
    def holds(self) -> bool:
        return all(count <= self.constant * n ** self.d for n, count, _ in self.ratios)


def growth_bound_check(
    d: int, n_max: int, cell_budget: int = DEFAULT_CELL_BUDGET
) -> GrowthReport:
    """Compare the number of n-patterns with C·n^d for n = 1..n_max.

    An n-window always fits in a 2×…×2 block of supertiles of order k with
    2^k ≥ n, and there are at most 2^(kd) ≤ (2n)^d windows in such a block.
    """
    constant = 2 ** d * letter_blocks(d, cell_budget)
    ratios = []
    for n in range(1, n_max + 1):
        count = count_stabilized(d, n, cell_budget).count
        ratios.append((n, count, count / n ** d))
    return GrowthReport(d, constant, ratios)


class ComplexityRow(NamedTuple):
    n: int
    count: int
    stabilized: bool
    m: int
    formula_value: Optional[int]

    @property
    def match(self) -> Optional[bool]:
        if self.formula_value is None:
            return None
        return self.count == self.formula_value


class ComplexityTable(NamedTuple):
    """Pattern counts for n = 1..n_max in one dimension."""

    d: int
    rows: List[ComplexityRow]

    def to_csv(self) -> str:
        lines = ["d,n,count,formula_value,match"]
        for row in self.rows:
            value = "" if row.formula_value is None else str(row.formula_value)
            match = "" if row.match is None else str(row.match).lower()
            lines.append("{},{},{},{},{}".format(self.d, row.n, row.count, value, match))
        return "\n".join(lines) + "\n"


def complexity_table(
    d: int, n_max: int, cell_budget: int = DEFAULT_CELL_BUDGET
) -> ComplexityTable:
    """Count n-patterns for every n up to `n_max`.

    Counts that disagree with the closed forms are reported with a warning:
    the enumeration is what we trust.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1, got {}.".format(n_max))
    rows = []
    for n in range(1, n_max + 1):
        result = count_stabilized(d, n, cell_budget)
        row = ComplexityRow(n, result.count, result.stabilized, result.m, formula_value(d, n))
        if row.match is False:
            warnings.warn(
                """Enumeration finds {} distinct {}-patterns in dimension {}
                where the closed form predicts {}: the formula is refuted at
                this size.""".format(
                    row.count, n, d, row.formula_value
                )
            )
        rows.append(row)
    return ComplexityTable(d, rows)
