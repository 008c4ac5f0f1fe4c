# encoding: utf-8
""" Substitution matrices, primitivity and coincidences.

These checks work for any block substitution, not only the paperfolding
one. A coincidence, a power k and a position at which the k-th images of
all the letters agree, certifies that a primitive substitution of constant
length has pure point dynamical spectrum.
"""
from typing import List, NamedTuple, Optional, Tuple

import numpy as np
import sympy

from ..limits import (
    DEFAULT_CELL_BUDGET,
    DEFAULT_COINCIDENCE_STEPS,
    DEFAULT_PRIMITIVITY_STEPS,
    check_cell_budget,
)
from ..substitution import BlockSubstitution, SymbolicPattern, substitute

__all__ = [
    "SubstitutionMatrix",
    "CoincidenceReport",
    "substitution_matrix",
    "is_primitive",
    "seed_covers_alphabet",
    "find_coincidence",
    "coincidence_persists",
]


class SubstitutionMatrix(object):
    """Letter counts of a substitution: entry (j, i) counts j in the image of i.

    Attributes
    ----------
    entries: numpy.ndarray
        The m×m matrix of counts.
    """

    def __init__(self, entries: np.ndarray) -> None:
        entries = np.asarray(entries, dtype=np.int64)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ValueError(
                "A substitution matrix is square, got shape {}.".format(entries.shape)
            )
        if np.any(entries < 0):
            raise ValueError("Letter counts cannot be negative.")
        entries.flags.writeable = False
        self.entries = entries

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def column_sums(self) -> np.ndarray:
        return self.entries.sum(axis=0)

    def perron_eigenvalue(self) -> int:
        """The dominant eigenvalue, equal to the common column sum.

        A nonnegative matrix whose columns all sum to s has spectral radius
        s, with the all-ones row vector as a left eigenvector.
        """
        sums = self.column_sums()
        if sums.size == 0 or np.any(sums != sums[0]):
            raise ValueError(
                """The columns of this matrix have different sums {}: it does
                not come from a substitution of constant length.""".format(
                    sums.tolist()
                )
            )
        return int(sums[0])

    def letter_frequencies(self) -> List[sympy.Rational]:
        """The Perron eigenvector, normalized to sum to one, as exact rationals.

        Raises
        ------
        ValueError
            If the Perron eigenvalue is not simple, in which case frequencies
            depend on the starting letter.
        """
        eigenvalue = self.perron_eigenvalue()
        matrix = sympy.Matrix(self.entries.tolist()) - eigenvalue * sympy.eye(self.size)
        kernel = matrix.nullspace()
        if len(kernel) != 1:
            raise ValueError(
                """The eigenvalue {} has a {}-dimensional eigenspace; letter
                frequencies are only defined for primitive substitutions.""".format(
                    eigenvalue, len(kernel)
                )
            )
        vector = kernel[0]
        total = sum(vector)
        return [v / total for v in vector]


def substitution_matrix(rule: BlockSubstitution) -> SubstitutionMatrix:
    """Count how often each letter occurs in each image.

    Examples
    --------
    >>> from paperfold.substitution import derive_rule
    >>> substitution_matrix(derive_rule(1)).column_sums().tolist()
    [2, 2, 2, 2]
    """
    m = rule.size
    entries = np.zeros((m, m), dtype=np.int64)
    images = rule.images.reshape(m, -1)
    for letter in range(m):
        entries[:, letter] = np.bincount(images[letter], minlength=m)
    return SubstitutionMatrix(entries)


def is_primitive(
    rule: BlockSubstitution, k_max: int = DEFAULT_PRIMITIVITY_STEPS
) -> Tuple[bool, int]:
    """Find the smallest k ≤ k_max such that every k-th image contains every letter.

    Only the support of the matrix powers matters, so we iterate with
    booleans and never let the counts grow.

    Returns
    -------
    (True, k) for the smallest such k, (False, k_max) if there is none.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1, got {}.".format(k_max))
    support = (substitution_matrix(rule).entries > 0).astype(np.int64)
    power = support.copy()
    for k in range(1, k_max + 1):
        if np.all(power > 0):
            return True, k
        power = ((power @ support) > 0).astype(np.int64)
    return False, k_max


def seed_covers_alphabet(
    rule: BlockSubstitution,
    seed: SymbolicPattern,
    k: int,
    cell_budget: int = DEFAULT_CELL_BUDGET,
) -> bool:
    """Whether k substitution steps from `seed` produce every letter."""
    check_cell_budget(
        seed.cells.size * rule.volume ** k, cell_budget, "{} substitution steps".format(k)
    )
    pattern = seed
    for _ in range(k):
        pattern = substitute(pattern, rule)
    return len(pattern.letters()) == rule.size


class CoincidenceReport(NamedTuple):
    """Where the k-th images of all letters agree.

    Attributes
    ----------
    found: bool
    k: int
        The power at which the search stopped.
    position: tuple of int
        The lexicographically first agreeing position.
    letter: int
        The common letter at `position`.
    positions: tuple of tuple of int
        Every agreeing position at power k, in lexicographic order.
    """

    found: bool
    k: int
    position: Optional[Tuple[int, ...]] = None
    letter: Optional[int] = None
    positions: Tuple[Tuple[int, ...], ...] = ()

    @property
    def far_corner(self) -> Optional[Tuple[int, ...]]:
        """The corner (2^k - 1, .., 2^k - 1) if it is a coincidence."""
        if not self.found or not self.positions:
            return None
        corner = (2 ** self.k - 1,) * len(self.positions[0])
        return corner if corner in self.positions else None

    def to_json(self) -> dict:
        if not self.found:
            return {"coincidence": None, "k": self.k}
        return {
            "coincidence": {
                "k": self.k,
                "position": list(self.position),
                "letter": self.letter,
                "positions": [list(p) for p in self.positions],
            }
        }


def find_coincidence(
    rule: BlockSubstitution, k_max: int = DEFAULT_COINCIDENCE_STEPS
) -> CoincidenceReport:
    """Search k = 1..k_max for positions where all k-th images agree.

    Examples
    --------
    >>> thue_morse = BlockSubstitution.from_mapping(1, {0: [0, 1], 1: [1, 0]})
    >>> find_coincidence(thue_morse).found
    False
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1, got {}.".format(k_max))
    for k in range(1, k_max + 1):
        images = rule.power(k)
        agree = np.all(images == images[:1], axis=0)
        if np.any(agree):
            positions = tuple(tuple(int(i) for i in p) for p in np.argwhere(agree))
            first = positions[0]
            return CoincidenceReport(
                True, k, first, int(images[(0,) + first]), positions
            )
    return CoincidenceReport(False, k_max)


def coincidence_persists(rule: BlockSubstitution, report: CoincidenceReport) -> bool:
    """Check that every coincidence (k, t) gives coincidences at (k + 1, 2t + δ).

    The common letter at 2t + δ must be the child at δ of the common letter
    at t.
    """
    if not report.found:
        return False
    current = rule.power(report.k)
    following = rule.power(report.k + 1)
    for position in report.positions:
        common = current[(0,) + position]
        for offset in np.ndindex(*(2,) * rule.d):
            child = tuple(2 * t + o for t, o in zip(position, offset))
            column = following[(slice(None),) + child]
            if np.any(column != rule.images[(common,) + offset]):
                return False
    return True
