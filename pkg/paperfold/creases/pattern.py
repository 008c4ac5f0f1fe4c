# encoding: utf-8
""" Crease patterns on the integer grid.

A crease is a unit (d-1)-face of the grid, perpendicular to one axis. We
address it by that axis and by its lowest corner: the face `(k, c)` lies in
the hyperplane x_k = c_k and spans [c_i, c_i + 1] along every other axis.

Patterns are centered at the origin and stored densely, one int8 array per
axis. The array for axis k has 2h + 1 entries along k (corners -h..h) and 2h
entries along the other axes (corners -h..h-1); an entry is +1 for a valley,
-1 for a crest and 0 when the face carries no crease.
"""
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .labels import OrthantLabel, Sign, crease_labels, crease_sign

__all__ = [
    "FaceId",
    "CreasePattern",
    "build_S1",
    "reflect",
    "orthant_reflection",
    "coarsen",
    "refines",
]


class FaceId(NamedTuple):
    """A unit face, perpendicular to `axis` (1-based), with lowest corner `corner`."""

    axis: int
    corner: Tuple[int, ...]


class CreasePattern(object):
    """A finite set of signed unit faces, supported in the box [-h, h]^d.

    Patterns are immutable: the grids are flagged read-only and every
    transformation returns a new pattern.

    Attributes
    ----------
    d: int
        The dimension of the sheet.
    extent: int
        The half-width h of the box the pattern lives in.
    grids: tuple of numpy.ndarray
        One int8 array per axis, see the module documentation.
    """

    def __init__(
        self, d: int, extent: int, grids: Optional[Sequence[np.ndarray]] = None
    ) -> None:
        if d < 1:
            raise ValueError("The dimension must be at least 1, got {}.".format(d))
        if extent < 0:
            raise ValueError("The extent cannot be negative, got {}.".format(extent))
        self.d = d
        self.extent = extent

        if grids is None:
            grids = [np.zeros(self.grid_shape(axis), dtype=np.int8) for axis in range(1, d + 1)]
        if len(grids) != d:
            raise ValueError(
                "A {}-dimensional pattern needs {} grids, got {}.".format(d, d, len(grids))
            )

        frozen = []
        for axis, grid in enumerate(grids, start=1):
            grid = np.array(grid, dtype=np.int8)
            if grid.shape != self.grid_shape(axis):
                raise ValueError(
                    """The grid of faces perpendicular to axis {} should have
                    shape {} for extent {}, got {}.""".format(
                        axis, self.grid_shape(axis), extent, grid.shape
                    )
                )
            grid.flags.writeable = False
            frozen.append(grid)
        self.grids: Tuple[np.ndarray, ...] = tuple(frozen)

    def grid_shape(self, axis: int) -> Tuple[int, ...]:
        h = self.extent
        return tuple(2 * h + 1 if i == axis else 2 * h for i in range(1, self.d + 1))

    @classmethod
    def empty(cls, d: int, extent: int = 0) -> "CreasePattern":
        return cls(d, extent)

    @classmethod
    def from_faces(
        cls, d: int, extent: int, faces: Mapping[FaceId, Sign]
    ) -> "CreasePattern":
        """Build a pattern from a map of faces to signs.

        Raises
        ------
        ValueError
            If a face lies outside the box or names an axis out of range.
        """
        pattern = cls(d, extent)
        grids = [np.zeros(pattern.grid_shape(axis), dtype=np.int8) for axis in range(1, d + 1)]
        for face, sign in faces.items():
            index = pattern.index(face)
            grids[face.axis - 1][index] = int(sign)
        return cls(d, extent, grids)

    def index(self, face: FaceId) -> Tuple[int, ...]:
        """Array index of `face` in the grid of its axis."""
        if not 1 <= face.axis <= self.d or len(face.corner) != self.d:
            raise ValueError(
                "{} is not a face of a {}-dimensional pattern.".format(face, self.d)
            )
        h = self.extent
        for i, c in enumerate(face.corner, start=1):
            upper = h if i == face.axis else h - 1
            if not -h <= c <= upper:
                raise ValueError(
                    "{} lies outside the box of half-width {}.".format(face, h)
                )
        return tuple(c + h for c in face.corner)

    @property
    def faces(self) -> Dict[FaceId, Sign]:
        """The creases as a map, in increasing (axis, corner) order."""
        faces = {}
        for axis, grid in enumerate(self.grids, start=1):
            for index in zip(*np.nonzero(grid)):
                corner = tuple(int(i) - self.extent for i in index)
                faces[FaceId(axis, corner)] = Sign(int(grid[index]))
        return faces

    def items(self) -> Iterator[Tuple[FaceId, Sign]]:
        return iter(self.faces.items())

    def get(self, face: FaceId, default: Optional[Sign] = None) -> Optional[Sign]:
        try:
            index = self.index(face)
        except ValueError:
            return default
        value = self.grids[face.axis - 1][index]
        return Sign(int(value)) if value else default

    def __getitem__(self, face: FaceId) -> Sign:
        sign = self.get(face)
        if sign is None:
            raise KeyError(face)
        return sign

    def __contains__(self, face) -> bool:
        return self.get(face) is not None

    def __len__(self) -> int:
        return sum(int(np.count_nonzero(grid)) for grid in self.grids)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CreasePattern):
            return NotImplemented
        return (
            self.d == other.d
            and self.extent == other.extent
            and all(np.array_equal(a, b) for a, b in zip(self.grids, other.grids))
        )

    __hash__ = None  # type: ignore

    def __repr__(self) -> str:
        return "CreasePattern(d={}, extent={}, faces={})".format(
            self.d, self.extent, len(self)
        )

    def signs(self) -> List[Sign]:
        """The signs in (axis, corner) order; for d = 1 this reads the sheet left to right."""
        return list(self.faces.values())

    def window(self, extent: int) -> "CreasePattern":
        """Keep the faces owned by the cells of the central box [-e, e)^d.

        A cell owns its d lower faces, so faces on the lower boundary of the
        box stay and faces on its upper boundary are dropped.
        """
        if not 0 <= extent <= self.extent:
            raise ValueError(
                "Cannot cut a window of extent {} out of a pattern of extent {}.".format(
                    extent, self.extent
                )
            )
        h, e = self.extent, extent
        grids = []
        for axis, grid in enumerate(self.grids, start=1):
            window = tuple(
                slice(h - e, h + e + 1) if i == axis else slice(h - e, h + e)
                for i in range(1, self.d + 1)
            )
            cut = grid[window].copy()
            upper = [slice(None)] * self.d
            upper[axis - 1] = 2 * e  # type: ignore
            cut[tuple(upper)] = 0
            grids.append(cut)
        return CreasePattern(self.d, extent, grids)


def build_S1(d: int) -> CreasePattern:
    """The creases of a single d-fold: one unit face per label of the first generation.

    Examples
    --------
    >>> build_S1(1).signs()
    [<Sign.VALLEY: 1>]
    >>> len(build_S1(3))
    12
    """
    faces = {}
    for sigma in crease_labels(d):
        k = sigma.axis
        corner = tuple(0 if s >= 0 else -1 for s in sigma.components)
        faces[FaceId(k, corner)] = crease_sign(sigma)
    return CreasePattern.from_faces(d, 1, faces)


def reflect(p: CreasePattern, axis: int) -> CreasePattern:
    """Mirror the pattern through x_axis = 0 and swap valleys and crests.

    A face perpendicular to `axis` keeps its place on the mirror image of
    its hyperplane, x_axis ↦ -x_axis; any other face with lowest corner c
    along `axis` ends up with lowest corner -c - 1. Both are a flip of the
    centered arrays.
    """
    if not 1 <= axis <= p.d:
        raise ValueError(
            "Cannot reflect a {}-dimensional pattern along axis {}.".format(p.d, axis)
        )
    grids = [-np.flip(grid, axis=axis - 1) for grid in p.grids]
    return CreasePattern(p.d, p.extent, grids)


def orthant_reflection(phi: OrthantLabel, p: CreasePattern) -> CreasePattern:
    """Compose the reflections along the axes where φ is negative."""
    if phi.d != p.d:
        raise ValueError(
            "The orthant label {} does not match the dimension {}.".format(phi.signs, p.d)
        )
    for axis in phi.reflections.axes:
        p = reflect(p, axis)
    return p


def coarsen(p: CreasePattern) -> CreasePattern:
    """Sample a pattern on the even sub-grid and shrink it by a factor of two.

    Folding is scale-invariant, so the first n folds of a sheet leave the
    same creases as n folds of a sheet half its size, scaled up. This
    recovers generation n from generation n + 1.
    """
    if p.extent % 2:
        raise ValueError(
            "Only patterns of even extent can be coarsened, got {}.".format(p.extent)
        )
    grids = []
    for axis, grid in enumerate(p.grids, start=1):
        grids.append(grid[tuple(slice(None, None, 2) for _ in range(p.d))])
    return CreasePattern(p.d, p.extent // 2, grids)


def refines(fine: CreasePattern, coarse: CreasePattern) -> bool:
    """Check that every face of `coarse`, scaled by two, carries one sign in `fine`.

    The scaled face (k, c) covers the 2^(d-1) unit faces with lowest corners
    2c + δ, δ_k = 0 and δ_i ∈ {0, 1} otherwise.
    """
    if fine.d != coarse.d or fine.extent != 2 * coarse.extent:
        return False
    for axis, grid in enumerate(fine.grids, start=1):
        expected = coarse.grids[axis - 1]
        for i in range(1, fine.d + 1):
            if i != axis:
                expected = np.repeat(expected, 2, axis=i - 1)
        own = [slice(None)] * fine.d
        own[axis - 1] = slice(None, None, 2)
        if not np.array_equal(grid[tuple(own)], expected):
            return False
    return True
