# encoding: utf-8
""" A physical simulation of folding a strip of paper.

The strip is made of 2^n unit cells at positions -2^(n-1) .. 2^(n-1) - 1.
Each fold lifts the left half and lays it, upside down, on top of the right
half. We follow every cell: where it lies, whether it faces up, and its
layer in the pile counted from the bottom.
"""
import enum
from collections import OrderedDict
from typing import Dict, NamedTuple

import numpy as np

from ..limits import DEFAULT_STRIP_FOLDS
from .pattern import CreasePattern

__all__ = [
    "Orientation",
    "StripPile",
    "fold_strip",
    "simulate_strip_fold",
    "paperfolding_sequence",
]


class Orientation(enum.Enum):
    UP = "up"
    DOWN = "down"


class StripPile(NamedTuple):
    """The state of every cell after folding, indexed like `positions`.

    Attributes
    ----------
    positions: numpy.ndarray
        Original position of each cell.
    slot: numpy.ndarray
        Where the cell ends up along the folded strip.
    face_down: numpy.ndarray
        Boolean, true for cells that were turned over an odd number of times.
    layer: numpy.ndarray
        Height of the cell in its pile, 0 being the bottom.
    """

    positions: np.ndarray
    slot: np.ndarray
    face_down: np.ndarray
    layer: np.ndarray


def fold_strip(n: int, bound: int = DEFAULT_STRIP_FOLDS) -> StripPile:
    """Fold a strip of 2^n cells n times, left onto right, upwards.

    When a half of length L/2 is folded onto the other, the cell at slot s
    of the left half lands on slot L - 1 - s, counted from the left of the
    full strip, and the piles it belonged to are turned over: a layer at
    height t in a pile of height H ends up at height 2H - 1 - t.
    """
    if not 0 <= n <= bound:
        raise ValueError(
            """The strip simulation accepts between 0 and {} folds, got {}.
            Raise `bound` if you really need more.""".format(
                bound, n
            )
        )
    length = 2 ** n
    positions = np.arange(length, dtype=np.int64) - length // 2
    slot = np.arange(length, dtype=np.int64)
    face_down = np.zeros(length, dtype=bool)
    layer = np.zeros(length, dtype=np.int64)

    height = 1
    while length > 1:
        half = length // 2
        left = slot < half
        slot = np.where(left, length - 1 - slot - half, slot - half)
        face_down = np.where(left, ~face_down, face_down)
        layer = np.where(left, 2 * height - 1 - layer, layer)
        length, height = half, 2 * height

    return StripPile(positions, slot, face_down, layer)


def simulate_strip_fold(n: int, bound: int = DEFAULT_STRIP_FOLDS) -> Dict[int, Orientation]:
    """Return the orientation of every cell of a strip folded n times.

    Examples
    --------
    >>> [o.value for o in simulate_strip_fold(2).values()]
    ['down', 'up', 'down', 'up']
    """
    pile = fold_strip(n, bound)
    orientations = OrderedDict()  # type: Dict[int, Orientation]
    for position, down in zip(pile.positions.tolist(), pile.face_down.tolist()):
        orientations[position] = Orientation.DOWN if down else Orientation.UP
    return orientations


def paperfolding_sequence(pattern: CreasePattern, two_sided: bool = False) -> str:
    """Read a one-dimensional crease pattern as a word over {+, -}.

    Each generation is the previous one with a mirrored copy in front of it,
    so reading from the right end of the sheet gives words that extend each
    other: the one-sided paperfolding sequence. The two-sided reading is the
    whole sheet from left to right, the first crease sitting at its centre.

    Examples
    --------
    >>> from paperfold.creases import generate_recursive
    >>> paperfolding_sequence(generate_recursive(1, 3))
    '++-++--'
    >>> paperfolding_sequence(generate_recursive(1, 3), two_sided=True)
    '--++-++'
    """
    if pattern.d != 1:
        raise ValueError(
            "Only one-dimensional patterns read as sequences, got d={}.".format(pattern.d)
        )
    signs = [s for s in pattern.grids[0].tolist() if s != 0]
    if not two_sided:
        signs = signs[::-1]
    return "".join("+" if s > 0 else "-" for s in signs)
