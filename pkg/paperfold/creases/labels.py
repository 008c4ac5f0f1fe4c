# encoding: utf-8
""" Signs and labels of the creases made by a single d-fold.

A d-fold folds the paper once along every axis, in order. The creases it
leaves in the unfolded sheet sit in the coordinate hyperplanes, one per
sector of such a hyperplane, and a sector is labelled by a vector σ with
a single zero at the position of the axis the crease is perpendicular to.
"""
import enum
import itertools as it
from typing import Iterable, List, Tuple

__all__ = [
    "Sign",
    "CreaseLabel",
    "ReflectionSet",
    "OrthantLabel",
    "crease_labels",
    "crease_sign",
    "crease_sign_by_folding",
    "reflected_sign",
]


class Sign(enum.IntEnum):
    """The orientation of a crease: valleys are `+`, crests are `-`."""

    VALLEY = 1
    CREST = -1

    def __neg__(self) -> "Sign":
        return Sign(-int(self))

    def __str__(self) -> str:
        return "+" if self is Sign.VALLEY else "-"

    @classmethod
    def parse(cls, symbol: str) -> "Sign":
        if symbol == "+":
            return cls.VALLEY
        if symbol == "-":
            return cls.CREST
        raise ValueError(
            "A crease sign is written '+' or '-', got {!r}.".format(symbol)
        )


class CreaseLabel(object):
    """A sector of a coordinate hyperplane, as a vector over {-1, 0, +1}.

    The unique zero sits at the position of the axis the crease is
    perpendicular to; the other entries give the sign of the coordinates
    in the sector.

    Attributes
    ----------
    components: tuple of int
        The vector σ.
    """

    __slots__ = ("components",)

    def __init__(self, components: Iterable[int]) -> None:
        components = tuple(int(c) for c in components)
        if any(c not in (-1, 0, 1) for c in components):
            raise ValueError(
                """The components of a crease label must be -1, 0 or +1, got {}.""".format(
                    components
                )
            )
        if components.count(0) != 1:
            raise ValueError(
                """A crease label has exactly one zero component, the axis
                the crease is perpendicular to. Got {} with {} zeros.""".format(
                    components, components.count(0)
                )
            )
        self.components = components

    @property
    def d(self) -> int:
        return len(self.components)

    @property
    def axis(self) -> int:
        """The 1-based axis of the crease."""
        return self.components.index(0) + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, CreaseLabel):
            return NotImplemented
        return self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return "CreaseLabel({})".format(self.components)


class ReflectionSet(object):
    """The axes along which a copy of the first generation was mirrored.

    Reflections along different axes commute and each is an involution, so
    any sequence of reflections reduces to a strictly increasing set of
    axes.

    Attributes
    ----------
    axes: tuple of int
        Strictly increasing 1-based axes.
    """

    __slots__ = ("axes",)

    def __init__(self, axes: Iterable[int] = ()) -> None:
        axes = tuple(int(a) for a in axes)
        if any(a < 1 for a in axes):
            raise ValueError(
                "Reflection axes are numbered from 1, got {}.".format(axes)
            )
        if any(b <= a for a, b in zip(axes, axes[1:])):
            raise ValueError(
                """The axes of a reflection set must be strictly increasing,
                got {}. Use `ReflectionSet.from_sequence` to reduce an
                arbitrary sequence of reflections.""".format(
                    axes
                )
            )
        self.axes = axes

    @classmethod
    def from_sequence(cls, sequence: Iterable[int]) -> "ReflectionSet":
        """Reduce a sequence of reflections to the axes used an odd number of times.

        >>> ReflectionSet.from_sequence([2, 1, 2, 3, 3, 3]).axes
        (1, 3)
        """
        counts: dict = {}
        for axis in sequence:
            counts[axis] = counts.get(axis, 0) ^ 1
        return cls(sorted(a for a, odd in counts.items() if odd))

    def count_at_least(self, k: int) -> int:
        """Number of reflections along an axis ≥ k."""
        return sum(1 for a in self.axes if a >= k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReflectionSet):
            return NotImplemented
        return self.axes == other.axes

    def __hash__(self) -> int:
        return hash(self.axes)

    def __repr__(self) -> str:
        return "ReflectionSet({})".format(self.axes)


class OrthantLabel(object):
    """One of the 2^d orthants, given by the sign of each coordinate."""

    __slots__ = ("signs",)

    def __init__(self, signs: Iterable[int]) -> None:
        signs = tuple(int(s) for s in signs)
        if not signs or any(s not in (-1, 1) for s in signs):
            raise ValueError(
                "An orthant label is a non-empty vector of ±1, got {}.".format(signs)
            )
        self.signs = signs

    @property
    def d(self) -> int:
        return len(self.signs)

    @property
    def reflections(self) -> ReflectionSet:
        """The axes to mirror to carry the positive orthant onto this one."""
        return ReflectionSet(i + 1 for i, s in enumerate(self.signs) if s < 0)

    @classmethod
    def all(cls, d: int) -> List["OrthantLabel"]:
        return [cls(signs) for signs in it.product((1, -1), repeat=d)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrthantLabel):
            return NotImplemented
        return self.signs == other.signs

    def __hash__(self) -> int:
        return hash(self.signs)

    def __repr__(self) -> str:
        return "OrthantLabel({})".format(self.signs)


def crease_labels(d: int) -> List[CreaseLabel]:
    """Enumerate the d·2^(d-1) labels of the first generation, axis by axis."""
    if d < 1:
        raise ValueError("The dimension must be at least 1, got {}.".format(d))
    labels = []
    for k in range(d):
        for signs in it.product((1, -1), repeat=d - 1):
            components: Tuple[int, ...] = signs[:k] + (0,) + signs[k:]
            labels.append(CreaseLabel(components))
    return labels


def crease_sign(sigma: CreaseLabel) -> Sign:
    """Return the sign of a crease of the first generation.

    The fold along axis k happens after the folds along axes 1..k-1, each
    of which turned the negative half upside down. The crease is therefore
    a valley unless an odd number of the preceding coordinates is negative.

    Examples
    --------
    >>> str(crease_sign(CreaseLabel((-1, 0))))
    '-'
    """
    k = sigma.axis
    product = 1
    for component in sigma.components[: k - 1]:
        product *= component
    return Sign(product)


def crease_sign_by_folding(sigma: CreaseLabel) -> Sign:
    """Follow the folds one at a time instead of taking the product.

    The fold along axis j creates a valley in the top layer. Every fold
    along a later axis leaves it facing up on the positive side and turns
    it over on the negative side.
    """
    sign = Sign.VALLEY
    for component in sigma.components[: sigma.axis - 1]:
        if component < 0:
            sign = -sign
    return sign


def reflected_sign(a: ReflectionSet, sigma: CreaseLabel) -> Sign:
    """Sign of the crease labelled σ in the first generation mirrored along `a`.

    Each reflection swaps valleys and crests, and a reflection along an
    axis i < k also moves the crease to the sector with σ_i negated, which
    is accounted for by the product. Only reflections along axes ≥ k change
    the sign seen at a fixed label.

    Raises
    ------
    ValueError
        If `a` names an axis that the label does not have.
    """
    if a.axes and a.axes[-1] > sigma.d:
        raise ValueError(
            """The reflection set {} mentions axes beyond the dimension {} of
            the crease label {}.""".format(
                a.axes, sigma.d, sigma.components
            )
        )
    sign = crease_sign(sigma)
    if a.count_at_least(sigma.axis) % 2 == 1:
        sign = -sign
    return sign
