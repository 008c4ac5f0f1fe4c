# encoding: utf-8
""" Block substitutions of constant length 2 in every direction.

A block substitution maps each letter of a finite alphabet {0, .., m-1} to a
2×…×2 block of letters. Applied to a box of letters it replaces every cell x
by the block of its letter, placed at cells 2x + δ.
"""
from typing import Iterable, Mapping, Sequence, Set, Tuple

import numpy as np

__all__ = ["BlockSubstitution", "SymbolicPattern", "expand_pattern"]


def _interleave(expanded: np.ndarray, lead: int, d: int) -> np.ndarray:
    """Merge the block axes of `expanded` into the box axes they refine.

    `expanded` has shape lead_axes + (s_1, .., s_d) + (2,) * d and the result
    has shape lead_axes + (2·s_1, .., 2·s_d).
    """
    order = list(range(lead))
    for i in range(d):
        order += [lead + i, lead + d + i]
    shape = expanded.shape[:lead] + tuple(2 * s for s in expanded.shape[lead : lead + d])
    return expanded.transpose(order).reshape(shape)


class BlockSubstitution(object):
    """A substitution sending every letter to a 2×…×2 block.

    Attributes
    ----------
    d: int
        Dimension of the blocks.
    images: numpy.ndarray
        Array of shape (m,) + (2,) * d; `images[a][δ]` is the child of letter
        `a` at offset δ.

    Examples
    --------
    The Thue–Morse substitution:

    >>> rule = BlockSubstitution.from_mapping(1, {0: [0, 1], 1: [1, 0]})
    >>> rule.expand(np.array([0, 1])).tolist()
    [0, 1, 1, 0]
    """

    def __init__(self, images: np.ndarray) -> None:
        images = np.asarray(images)
        if images.ndim < 2 or any(s != 2 for s in images.shape[1:]):
            raise ValueError(
                """The images of a block substitution are stored in an array of
                shape (m, 2, .., 2), got shape {}.""".format(
                    images.shape
                )
            )
        if not np.issubdtype(images.dtype, np.integer):
            raise ValueError("Letters are integers, got dtype {}.".format(images.dtype))
        size = images.shape[0]
        if images.size and (images.min() < 0 or images.max() >= size):
            raise ValueError(
                """Every image must use letters of the alphabet 0..{}. The
                substitution has to be total on its alphabet.""".format(
                    size - 1
                )
            )
        self.images = images.astype(np.int32)
        self.images.flags.writeable = False
        self.d = images.ndim - 1

    @classmethod
    def from_mapping(
        cls, d: int, mapping: Mapping[int, Sequence]
    ) -> "BlockSubstitution":
        size = len(mapping)
        images = np.zeros((size,) + (2,) * d, dtype=np.int32)
        for letter in range(size):
            images[letter] = np.asarray(mapping[letter]).reshape((2,) * d)
        return cls(images)

    @property
    def size(self) -> int:
        """Number of letters in the alphabet."""
        return self.images.shape[0]

    @property
    def volume(self) -> int:
        """Number of cells in an image block."""
        return 2 ** self.d

    def image(self, letter: int) -> np.ndarray:
        return self.images[letter]

    def expand(self, block: np.ndarray) -> np.ndarray:
        """Apply the substitution once to a box of letters."""
        block = np.asarray(block)
        if block.ndim != self.d:
            raise ValueError(
                "Expected a {}-dimensional box of letters, got {} dimensions.".format(
                    self.d, block.ndim
                )
            )
        return _interleave(self.images[block], 0, self.d)

    def expand_many(self, blocks: np.ndarray) -> np.ndarray:
        """Apply the substitution once to each box of a stack, shape (n,) + box."""
        blocks = np.asarray(blocks)
        if blocks.ndim != self.d + 1:
            raise ValueError(
                "Expected a stack of {}-dimensional boxes, got {} dimensions.".format(
                    self.d, blocks.ndim
                )
            )
        return _interleave(self.images[blocks], 1, self.d)

    def power(self, k: int) -> np.ndarray:
        """The images of every letter under k applications, shape (m,) + (2^k,) * d."""
        if k < 0:
            raise ValueError("Cannot iterate a substitution {} times.".format(k))
        blocks = np.arange(self.size, dtype=np.int32).reshape((self.size,) + (1,) * self.d)
        for _ in range(k):
            blocks = _interleave(self.images[blocks], 1, self.d)
        return blocks

    def validate(self, pattern: "SymbolicPattern") -> None:
        """Check that `pattern` can be fed to this substitution."""
        if pattern.d != self.d:
            raise ValueError(
                "A {}-dimensional substitution cannot act on a {}-dimensional pattern.".format(
                    self.d, pattern.d
                )
            )
        if pattern.cells.size and (
            pattern.cells.min() < 0 or pattern.cells.max() >= self.size
        ):
            raise ValueError(
                "The pattern uses letters outside the alphabet 0..{}.".format(self.size - 1)
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlockSubstitution):
            return NotImplemented
        return np.array_equal(self.images, other.images)

    __hash__ = None  # type: ignore

    def __repr__(self) -> str:
        return "{}(d={}, size={})".format(type(self).__name__, self.d, self.size)


class SymbolicPattern(object):
    """A box of letters placed on the integer grid.

    Attributes
    ----------
    d: int
        Dimension.
    origin: tuple of int
        Position of the cell with the smallest coordinates.
    cells: numpy.ndarray
        The letters, `cells[x - origin]` being the letter at cell x.
    """

    def __init__(self, origin: Iterable[int], cells: np.ndarray) -> None:
        self.origin: Tuple[int, ...] = tuple(int(o) for o in origin)
        cells = np.array(cells, dtype=np.int32)
        if cells.ndim != len(self.origin):
            raise ValueError(
                "The origin {} does not match a box of {} dimensions.".format(
                    self.origin, cells.ndim
                )
            )
        cells.flags.writeable = False
        self.cells = cells
        self.d = cells.ndim

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.cells.shape

    def letter_at(self, position: Sequence[int]) -> int:
        index = tuple(x - o for x, o in zip(position, self.origin))
        if any(i < 0 for i in index):
            raise IndexError(position)
        return int(self.cells[index])

    def letters(self) -> Set[int]:
        return set(np.unique(self.cells).tolist())

    def positions(self, axis: int) -> np.ndarray:
        """Absolute coordinate along `axis` (1-based) of every cell, broadcastable to `cells`."""
        shape = [1] * self.d
        shape[axis - 1] = self.shape[axis - 1]
        return (np.arange(self.shape[axis - 1]) + self.origin[axis - 1]).reshape(shape)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymbolicPattern):
            return NotImplemented
        return self.origin == other.origin and np.array_equal(self.cells, other.cells)

    __hash__ = None  # type: ignore

    def __repr__(self) -> str:
        return "SymbolicPattern(origin={}, shape={})".format(self.origin, self.shape)


def expand_pattern(
    pattern: SymbolicPattern, rule: BlockSubstitution, times: int = 1
) -> SymbolicPattern:
    """Substitute `times` times without any check beyond `rule.validate`."""
    rule.validate(pattern)
    cells = pattern.cells
    origin = pattern.origin
    for _ in range(times):
        cells = rule.expand(cells)
        origin = tuple(2 * o for o in origin)
    return SymbolicPattern(origin, cells)
