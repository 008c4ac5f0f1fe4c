# encoding: utf-8
""" Finitely generated abelian groups, their endomorphisms and direct limits.

Groups are kept in invariant-factor form: Z/t_1 ⊕ … ⊕ Z/t_s ⊕ Z^r with
t_1 | t_2 | … | t_s and every t_i > 1. Coordinates always list the torsion
generators first, in that order, then the free ones.
"""
import re
from typing import Iterable, List, Tuple

import numpy as np

from .smith import as_integer_matrix, smith_decomposition

__all__ = [
    "FinitelyGeneratedGroup",
    "EndomorphismOnGroups",
    "DirectLimitGroup",
    "invariant_factors",
]


def invariant_factors(orders: Iterable[int]) -> Tuple[int, ...]:
    """Invariant factors > 1 of a product of cyclic groups of the given orders.

    >>> invariant_factors([4, 6])
    (2, 12)
    """
    orders = [abs(int(t)) for t in orders]
    if any(t == 0 for t in orders):
        raise ValueError("Cyclic orders must be nonzero, got {}.".format(orders))
    orders = [t for t in orders if t > 1]
    if not orders:
        return ()
    diagonal = np.diag(np.array(orders, dtype=object))
    factors = smith_decomposition(diagonal).invariant_factors
    return tuple(f for f in factors if f > 1)


class FinitelyGeneratedGroup(object):
    """Z/t_1 ⊕ … ⊕ Z/t_s ⊕ Z^r.

    Attributes
    ----------
    free_rank: int
    torsion: tuple of int
        The invariant factors, each dividing the next.
    """

    def __init__(self, free_rank: int = 0, torsion: Iterable[int] = ()) -> None:
        if free_rank < 0:
            raise ValueError("The free rank cannot be negative, got {}.".format(free_rank))
        torsion = tuple(int(t) for t in torsion)
        if any(t < 2 for t in torsion) or any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError(
                """Torsion must be given by invariant factors t_1 | t_2 | … all
                larger than one, got {}. Use `invariant_factors` to normalize
                arbitrary cyclic orders.""".format(
                    torsion
                )
            )
        self.free_rank = free_rank
        self.torsion = torsion

    @property
    def generators(self) -> int:
        return len(self.torsion) + self.free_rank

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitelyGeneratedGroup):
            return NotImplemented
        return self.free_rank == other.free_rank and self.torsion == other.torsion

    def __hash__(self) -> int:
        return hash((self.free_rank, self.torsion))

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else "Z^{}".format(self.free_rank))
        parts += ["Z/{}".format(t) for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return "FinitelyGeneratedGroup({!r})".format(str(self))


class EndomorphismOnGroups(object):
    """An endomorphism of a finitely generated abelian group, as an integer matrix.

    Column j holds the image of the j-th generator. The matrix has to map
    the relations into relations: a torsion generator of order t_j goes to
    an element of order dividing t_j, in particular into the torsion.

    Attributes
    ----------
    group: FinitelyGeneratedGroup
    matrix: numpy.ndarray
    """

    def __init__(self, group: FinitelyGeneratedGroup, matrix) -> None:
        n = group.generators
        matrix = as_integer_matrix(matrix, (n, n)) if n else np.zeros((0, 0), dtype=np.int64)
        if matrix.shape != (n, n):
            raise ValueError(
                "An endomorphism of {} is a {}×{} matrix, got shape {}.".format(
                    group, n, n, matrix.shape
                )
            )
        s = len(group.torsion)
        if np.any(matrix[s:, :s] != 0):
            raise ValueError(
                "The matrix sends torsion elements of {} to elements of infinite order.".format(
                    group
                )
            )
        for j, order in enumerate(group.torsion):
            for i, modulus in enumerate(group.torsion):
                if (int(matrix[i, j]) * order) % modulus:
                    raise ValueError(
                        """Generator {} has order {} but its image has a
                        coordinate of order larger than that modulo {}: the
                        matrix is not well defined on {}.""".format(
                            j, order, modulus, group
                        )
                    )
        reduced = matrix.astype(object)
        for i, modulus in enumerate(group.torsion):
            reduced[i, :] = reduced[i, :] % modulus
        self.group = group
        self.matrix = as_integer_matrix(reduced, (n, n))

    @property
    def torsion_block(self) -> np.ndarray:
        s = len(self.group.torsion)
        return self.matrix[:s, :s]

    @property
    def free_block(self) -> np.ndarray:
        s = len(self.group.torsion)
        return self.matrix[s:, s:]

    def __repr__(self) -> str:
        return "EndomorphismOnGroups(group={!r}, matrix={})".format(
            str(self.group), self.matrix.tolist()
        )


_SUMMAND = re.compile(r"^Z(?:\^(\d+)|\[1/(\d+)\]|/(\d+))?$")


class DirectLimitGroup(object):
    """Z^r ⊕ Z[1/m_1] ⊕ … ⊕ torsion: the limit of a group under an endomorphism.

    Localized summands are kept in ascending order of m and torsion in
    invariant-factor form, so that equal groups compare equal. They print
    with the localized summands first, largest m first, then the free part,
    then the torsion.

    Examples
    --------
    >>> print(DirectLimitGroup(3, [2, 4, 2], [2]))
    Z[1/4] + Z[1/2] + Z[1/2] + Z^3 + Z/2
    """

    def __init__(
        self,
        free_rank: int = 0,
        localized_summands: Iterable[int] = (),
        torsion: Iterable[int] = (),
    ) -> None:
        localized = tuple(sorted(int(m) for m in localized_summands))
        if free_rank < 0:
            raise ValueError("The free rank cannot be negative, got {}.".format(free_rank))
        if any(m < 2 for m in localized):
            raise ValueError(
                "Localized summands Z[1/m] need m ≥ 2, got {}.".format(localized)
            )
        self.free_rank = free_rank
        self.localized_summands: Tuple[int, ...] = localized
        self.torsion: Tuple[int, ...] = invariant_factors(torsion)

    @classmethod
    def parse(cls, text: str) -> "DirectLimitGroup":
        """Read a group written as in `str`, e.g. 'Z[1/2] + Z^2 + Z/2'."""
        text = text.strip()
        if text == "0":
            return cls()
        free_rank, localized, torsion = 0, [], []  # type: int, List[int], List[int]
        for summand in text.split("+"):
            match = _SUMMAND.match(summand.strip())
            if match is None:
                raise ValueError(
                    """Cannot read {!r} as a summand: write Z, Z^r, Z[1/m] or
                    Z/t, separated by ' + '.""".format(
                        summand.strip()
                    )
                )
            power, inverted, order = match.groups()
            if inverted:
                localized.append(int(inverted))
            elif order:
                torsion.append(int(order))
            else:
                free_rank += int(power) if power else 1
        return cls(free_rank, localized, torsion)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectLimitGroup):
            return NotImplemented
        return (
            self.free_rank == other.free_rank
            and self.localized_summands == other.localized_summands
            and self.torsion == other.torsion
        )

    def __hash__(self) -> int:
        return hash((self.free_rank, self.localized_summands, self.torsion))

    def __str__(self) -> str:
        parts = ["Z[1/{}]".format(m) for m in reversed(self.localized_summands)]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else "Z^{}".format(self.free_rank))
        parts += ["Z/{}".format(t) for t in self.torsion]
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return "DirectLimitGroup({!r})".format(str(self))
