# encoding: utf-8
""" The paperfolding substitution and its link with the recursion.

Doubling the sheet before one more d-fold turns every semi-cube into a
2×…×2 block. The lower faces of the block are the faces of the original
semi-cube, so they keep their signs. The faces inside the block are the
creases of the new fold, mirrored along every axis where the reference
point of the semi-cube has an even coordinate: this is all the
information needed, and it only depends on the letter.
"""
import itertools as it
import warnings
from typing import NamedTuple, Optional, Sequence

import numpy as np

from ..creases import (
    CreaseLabel,
    CreasePattern,
    FaceId,
    ReflectionSet,
    Sign,
    generate_recursive,
    reflected_sign,
)
from ..exceptions import ParityError
from ..limits import DEFAULT_CELL_BUDGET, check_cell_budget
from .block import BlockSubstitution, SymbolicPattern, expand_pattern
from .letters import Letter, alphabet_size

__all__ = [
    "PaperfoldingRule",
    "EquivalenceReport",
    "derive_rule",
    "seed",
    "substitute",
    "to_creases",
    "from_creases",
    "check_parity",
    "equivalence_check",
]


class PaperfoldingRule(BlockSubstitution):
    """The block substitution on the 4^d semi-cube letters.

    On top of the checks of `BlockSubstitution` it refuses patterns whose
    letters carry the wrong parity for their position.
    """

    def letter(self, code: int) -> Letter:
        return Letter.from_code(self.d, code)

    def validate(self, pattern: SymbolicPattern) -> None:
        super(PaperfoldingRule, self).validate(pattern)
        check_parity(pattern)


def derive_rule(d: int) -> PaperfoldingRule:
    """Derive the substitution for d-dimensional paperfolding.

    The child at offset δ of a letter with face signs c and parity p has
    parity δ. Along an axis k with δ_k = 0 it inherits c_k. Along an axis
    with δ_k = 1 its lower face is the crease of the new fold labelled σ,
    σ_k = 0 and σ_i = 2δ_i - 1, reflected along the axes where p is even.

    Examples
    --------
    >>> derive_rule(1).images.tolist()
    [[0, 3], [0, 1], [2, 3], [2, 1]]
    """
    if d < 1:
        raise ValueError("The dimension must be at least 1, got {}.".format(d))
    if d > 4:
        warnings.warn(
            """You are deriving the paperfolding substitution in dimension {}.
            Its alphabet has {} letters and every further analysis grows
            accordingly.""".format(
                d, alphabet_size(d)
            )
        )

    images = np.zeros((alphabet_size(d),) + (2,) * d, dtype=np.int32)
    for code in range(alphabet_size(d)):
        letter = Letter.from_code(d, code)
        mirrored = ReflectionSet(i + 1 for i, p in enumerate(letter.parity) if p == 0)
        for delta in it.product((0, 1), repeat=d):
            signs = []
            for k in range(d):
                if delta[k] == 0:
                    signs.append(letter.face_signs[k])
                    continue
                sigma = CreaseLabel(0 if i == k else 2 * delta[i] - 1 for i in range(d))
                signs.append(reflected_sign(mirrored, sigma))
            images[(code,) + delta] = Letter(signs, delta).code
    return PaperfoldingRule(images)


def check_parity(pattern: SymbolicPattern) -> None:
    """Raise `ParityError` unless every letter knows the parity of its own position."""
    for axis in range(1, pattern.d + 1):
        bits = (pattern.cells >> (axis - 1)) & 1
        expected = np.mod(pattern.positions(axis), 2)
        wrong = np.argwhere(bits != expected)
        if wrong.size:
            position = tuple(int(i) + o for i, o in zip(wrong[0], pattern.origin))
            raise ParityError(
                """The letter at cell {} says its coordinate along axis {} is
                {}, which is wrong. The pattern was corrupted or assembled
                with the wrong origin.""".format(
                    position, axis, "odd" if bits[tuple(wrong[0])] else "even"
                )
            )


def substitute(pattern: SymbolicPattern, rule: BlockSubstitution) -> SymbolicPattern:
    """Apply `rule` once; the origin doubles and cell x becomes the block at 2x + δ.

    Raises
    ------
    ParityError
        If `rule` is the paperfolding substitution and the letters of
        `pattern` do not match the parity of their positions.
    """
    return expand_pattern(pattern, rule)


def _extent(origin: Sequence[int], shape: Sequence[int]) -> int:
    return max(max(-o, o + s) for o, s in zip(origin, shape)) if origin else 0


def to_creases(pattern: SymbolicPattern) -> CreasePattern:
    """The creases owned by the cells of `pattern`.

    Each cell contributes its d lower faces. The upper faces of the box
    belong to cells that are not there, so they are absent.
    """
    d = pattern.d
    h = _extent(pattern.origin, pattern.shape)
    result = CreasePattern.empty(d, h)
    window = tuple(slice(o + h, o + s + h) for o, s in zip(pattern.origin, pattern.shape))
    grids = []
    for axis in range(1, d + 1):
        grid = np.zeros(result.grid_shape(axis), dtype=np.int8)
        crest = (pattern.cells >> (d + axis - 1)) & 1
        grid[window] = np.where(crest == 1, -1, 1)
        grids.append(grid)
    return CreasePattern(d, h, grids)


def from_creases(
    pattern: CreasePattern, origin: Sequence[int], shape: Sequence[int]
) -> SymbolicPattern:
    """Read the letters of a box of cells off a crease pattern.

    Raises
    ------
    ValueError
        If a lower face of one of the cells carries no crease.
    """
    d, h = pattern.d, pattern.extent
    if len(origin) != d or len(shape) != d:
        raise ValueError("The box must have {} coordinates.".format(d))
    if _extent(origin, shape) > h:
        raise ValueError(
            "The box at {} of shape {} does not fit in extent {}.".format(
                tuple(origin), tuple(shape), h
            )
        )
    window = tuple(slice(o + h, o + s + h) for o, s in zip(origin, shape))
    codes = np.zeros(tuple(shape), dtype=np.int32)
    for axis in range(1, d + 1):
        signs = pattern.grids[axis - 1][window]
        if np.any(signs == 0):
            raise ValueError(
                """Some cells of the box have no crease on their lower face
                perpendicular to axis {}, so they are not semi-cubes of a
                paperfolding structure.""".format(
                    axis
                )
            )
        codes |= (signs < 0).astype(np.int32) << (d + axis - 1)
        positions = np.arange(shape[axis - 1]) + origin[axis - 1]
        broadcast = [1] * d
        broadcast[axis - 1] = shape[axis - 1]
        codes |= (np.mod(positions, 2).astype(np.int32) << (axis - 1)).reshape(broadcast)
    return SymbolicPattern(origin, codes)


def seed(d: int) -> SymbolicPattern:
    """The central 2×…×2 block of semi-cubes of S_d(2)."""
    return from_creases(generate_recursive(d, 2), (-1,) * d, (2,) * d)


class EquivalenceReport(NamedTuple):
    """Outcome of comparing the substitution with the recursion.

    `mismatch` is the first face, in (axis, corner) order, where the two
    disagree, with the sign each side put there (None for an empty face).
    """

    d: int
    steps: int
    faces_compared: int
    mismatch: Optional[FaceId] = None
    expected: Optional[Sign] = None
    found: Optional[Sign] = None

    @property
    def equal(self) -> bool:
        return self.mismatch is None


def equivalence_check(
    d: int, k: int, cell_budget: int = DEFAULT_CELL_BUDGET
) -> EquivalenceReport:
    """Compare k substitution steps from the seed with S_d(k + 2).

    Both sides are restricted to the faces owned by the cells of the box
    [-2^k, 2^k)^d.
    """
    if k < 0:
        raise ValueError("The number of steps cannot be negative, got {}.".format(k))
    check_cell_budget(2 ** ((k + 1) * d), cell_budget, "The substitution window")
    rule = derive_rule(d)
    pattern = seed(d)
    for _ in range(k):
        pattern = substitute(pattern, rule)
    found = to_creases(pattern)
    reference = generate_recursive(d, k + 2, cell_budget).window(2 ** k)

    e = reference.extent
    compared = 0
    for axis in range(1, d + 1):
        ours = found.grids[axis - 1][(slice(0, 2 * e),) * d]
        theirs = reference.grids[axis - 1][(slice(0, 2 * e),) * d]
        compared += ours.size
        wrong = np.argwhere(ours != theirs)
        if wrong.size:
            index = tuple(int(i) for i in wrong[0])
            return EquivalenceReport(
                d,
                k,
                compared,
                FaceId(axis, tuple(i - e for i in index)),
                Sign(int(theirs[index])) if theirs[index] else None,
                Sign(int(ours[index])) if ours[index] else None,
            )
    return EquivalenceReport(d, k, compared)
