# encoding: utf-8
""" Anderson–Putnam approximants of block substitution tilings.

Every letter is a unit cube. A collared tile is a legal 3×…×3 patch of
letters, standing for the central cube together with all its neighbours.
The approximant glues one copy of every collared tile, a cube with its
faces, edges and vertices, and identifies two faces of two tiles whenever
the two tiles occur next to each other and share that face in some legal
2×…×2 block of collared tiles. The substitution maps each tile onto the
2^d tiles of its image, which gives a cellular self-map of the complex.

Cells of a cube are written (axes, corner): the cube spanned by the unit
vectors of `axes`, placed at `corner`, a 0/1 vector which is 0 on `axes`.
"""
import itertools as it
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from ..analysis.spectral import is_primitive
from ..substitution import (
    BlockSubstitution,
    PaperfoldingRule,
    SymbolicPattern,
    expand_pattern,
    seed as paperfolding_seed,
)
from .smith import integer_product

__all__ = [
    "CollaredSubstitution",
    "CellComplex",
    "ApproximantComplex",
    "collar_letters",
    "ap_complex",
]


def _boxes(cells: np.ndarray, side: int, lead: int) -> np.ndarray:
    """Every side×…×side box of the trailing axes, as a flat stack."""
    d = cells.ndim - lead
    view = sliding_window_view(cells, (side,) * d, axis=tuple(range(lead, lead + d)))
    return view.reshape((-1,) + (side,) * d)


def _unique(boxes: np.ndarray) -> np.ndarray:
    if len(boxes) == 0:
        return boxes
    flat = np.ascontiguousarray(boxes.reshape(len(boxes), -1))
    return np.unique(flat, axis=0).reshape((-1,) + boxes.shape[1:])


def _key(box: np.ndarray) -> bytes:
    return np.ascontiguousarray(box, dtype=np.int32).tobytes()


class CollaredSubstitution(BlockSubstitution):
    """A block substitution on collared tiles.

    Attributes
    ----------
    base: BlockSubstitution
        The substitution on bare letters.
    patches: numpy.ndarray
        Shape (c,) + (3,) * d, the 3×…×3 patch of bare letters of each
        collared tile.
    blocks: numpy.ndarray
        Shape (b,) + (2,) * d, every legal 2×…×2 block of collared tiles.
    """

    def __init__(
        self,
        images: np.ndarray,
        base: BlockSubstitution,
        patches: np.ndarray,
        blocks: np.ndarray,
    ) -> None:
        super(CollaredSubstitution, self).__init__(images)
        self.base = base
        self.patches = patches
        self.blocks = blocks

    def underlying(self) -> np.ndarray:
        """The bare letter at the centre of every collared tile."""
        return self.patches[(slice(None),) + (1,) * self.d]


def _legal_windows(
    rule: BlockSubstitution, start: SymbolicPattern, budget: int
) -> np.ndarray:
    """All legal 4×…×4 windows: those of `start` closed under substitution.

    A 4-window of a substituted pattern lies inside the image of at most
    three consecutive parents per axis, hence inside the image of a legal
    4-window of the parent pattern.
    """
    d = rule.d
    known = _unique(_boxes(start.cells, 4, 0))
    seen = {_key(w) for w in known}
    frontier = known
    while len(frontier):
        candidates = _unique(_boxes(rule.expand_many(frontier), 4, 1))
        fresh = [w for w in candidates if _key(w) not in seen]
        seen.update(_key(w) for w in fresh)
        if len(seen) > budget:
            raise RuntimeError(
                """More than {} distinct 4^{} windows were found without the
                set closing under substitution. Either the seed is not legal
                for this substitution or the tiling is not repetitive.""".format(
                    budget, d
                )
            )
        frontier = np.array(fresh, dtype=np.int32).reshape((-1,) + (4,) * d)
        known = np.concatenate([known, frontier])
    return known


def collar_letters(
    rule: BlockSubstitution,
    seed: Optional[SymbolicPattern] = None,
    window_budget: int = 2 ** 20,
) -> CollaredSubstitution:
    """Decorate every letter with its neighbours and induce the substitution on them.

    Parameters
    ----------
    rule: BlockSubstitution
        A primitive substitution.
    seed: SymbolicPattern, optional
        A legal pattern whose substitution images generate the tiling. It
        defaults to the standard seed for the paperfolding substitution and
        is required for any other substitution.
    window_budget: int
        How many distinct 4×…×4 windows may be collected before we give up.

    Raises
    ------
    ValueError
        If the substitution is not primitive or no seed is available.
    RuntimeError
        If the legal windows do not close within `window_budget`.
    """
    primitive, _ = is_primitive(rule)
    if not primitive:
        raise ValueError(
            """Collaring needs a primitive substitution: the legal patches of a
            non-primitive one depend on where we start."""
        )
    if seed is None:
        if not isinstance(rule, PaperfoldingRule):
            raise ValueError(
                "Pass a legal seed pattern to collar a substitution other than paperfolding."
            )
        seed = paperfolding_seed(rule.d)
    d = rule.d

    start = seed
    while min(start.shape) < 4:
        start = expand_pattern(start, rule)
    windows = _legal_windows(rule, start, window_budget)

    patches = _unique(_boxes(windows, 3, 1))
    index: Dict[bytes, int] = {_key(p): i for i, p in enumerate(patches)}

    offsets = list(it.product((0, 1), repeat=d))
    expanded = rule.expand_many(patches)
    images = np.zeros((len(patches),) + (2,) * d, dtype=np.int32)
    for delta in offsets:
        window = (slice(None),) + tuple(slice(1 + o, 4 + o) for o in delta)
        for tile, child in enumerate(expanded[window]):
            try:
                images[(tile,) + delta] = index[_key(child)]
            except KeyError:
                raise RuntimeError(
                    "The image of a collared tile contains a patch that is not legal."
                )

    blocks = np.zeros((len(windows),) + (2,) * d, dtype=np.int32)
    for delta in offsets:
        window = (slice(None),) + tuple(slice(o, o + 3) for o in delta)
        blocks[(slice(None),) + delta] = [index[_key(p)] for p in windows[window]]
    return CollaredSubstitution(images, rule, patches, _unique(blocks))


class CellComplex(object):
    """A finite cell complex given by its boundary matrices.

    Attributes
    ----------
    sizes: list of int
        Number of q-cells for q = 0..dimension.
    boundaries: list of numpy.ndarray
        `boundaries[q - 1]` is ∂_q, of shape (sizes[q - 1], sizes[q]).

    Examples
    --------
    The circle with one vertex and one edge:

    >>> CellComplex([1, 1], [[[0]]]).euler_characteristic
    0
    """

    def __init__(self, sizes: Sequence[int], boundaries: Sequence) -> None:
        self.sizes = [int(s) for s in sizes]
        if len(boundaries) != len(self.sizes) - 1:
            raise ValueError(
                "A complex with cells in dimensions 0..{} has {} boundary maps, got {}.".format(
                    len(self.sizes) - 1, len(self.sizes) - 1, len(boundaries)
                )
            )
        self.boundaries = []
        for q, boundary in enumerate(boundaries, start=1):
            shape = (self.sizes[q - 1], self.sizes[q])
            matrix = np.asarray(boundary, dtype=np.int64)
            if matrix.size == 0:
                matrix = matrix.reshape(shape)
            if matrix.shape != shape:
                raise ValueError(
                    "∂_{} has shape {}, expected {}.".format(q, matrix.shape, shape)
                )
            self.boundaries.append(matrix)
        self.check()

    @property
    def dimension(self) -> int:
        return len(self.sizes) - 1

    def boundary(self, q: int) -> np.ndarray:
        """∂_q : C_q → C_{q-1}; zero outside 1..dimension."""
        if 1 <= q <= self.dimension:
            return self.boundaries[q - 1]
        rows = self.sizes[q - 1] if 0 < q <= self.dimension + 1 else 0
        columns = self.sizes[q] if 0 <= q <= self.dimension else 0
        return np.zeros((rows, columns), dtype=np.int64)

    def coboundary(self, q: int) -> np.ndarray:
        """δ_q : C^q → C^{q+1}, the transpose of ∂_{q+1}."""
        return self.boundary(q + 1).T

    def check(self) -> None:
        """Raise ValueError unless ∂_{q-1}∘∂_q = 0 for every q."""
        for q in range(2, self.dimension + 1):
            product = integer_product(self.boundary(q - 1), self.boundary(q))
            if np.any(product != 0):
                raise ValueError(
                    "∂_{}∘∂_{} is not zero: these matrices do not form a chain complex.".format(
                        q - 1, q
                    )
                )

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** q * s for q, s in enumerate(self.sizes))

    def __repr__(self) -> str:
        return "CellComplex(sizes={})".format(self.sizes)


class _Face(NamedTuple):
    axes: Tuple[int, ...]
    corner: Tuple[int, ...]


def _cube_faces(d: int) -> List[_Face]:
    faces = []
    for q in range(d + 1):
        for axes in it.combinations(range(d), q):
            for corner in it.product((0, 1), repeat=d):
                if not any(corner[i] for i in axes):
                    faces.append(_Face(axes, corner))
    return faces


def _face_boundary(face: _Face) -> List[Tuple[int, _Face]]:
    """∂(axes, v) = Σ_j (-1)^j [(axes - i, v + e_i) - (axes - i, v)], i = axes[j]."""
    terms = []
    for j, i in enumerate(face.axes):
        sign = (-1) ** j
        rest = face.axes[:j] + face.axes[j + 1 :]
        upper = tuple(1 if k == i else v for k, v in enumerate(face.corner))
        terms.append((sign, _Face(rest, upper)))
        terms.append((-sign, _Face(rest, face.corner)))
    return terms


def _face_children(face: _Face) -> List[Tuple[int, ...]]:
    """Offsets of the children of a tile whose copy of `face` covers `face`."""
    choices = [(0, 1) if k in face.axes else (v,) for k, v in enumerate(face.corner)]
    return list(it.product(*choices))


class _Partition(object):
    """Union-find over 0..n-1."""

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x != y:
            self.parent[max(x, y)] = min(x, y)


class ApproximantComplex(NamedTuple):
    """The approximant and the self-map induced by the substitution.

    Attributes
    ----------
    complex: CellComplex
    chain_maps: list of numpy.ndarray
        `chain_maps[q]` sends q-cells to q-chains, column j holding the
        image of cell j.
    cells: list of list of (int, tuple, tuple)
        For each dimension, one representative (tile, axes, corner) per cell.
    """

    complex: CellComplex
    chain_maps: List[np.ndarray]
    cells: List[List[Tuple[int, Tuple[int, ...], Tuple[int, ...]]]]


def ap_complex(collared: CollaredSubstitution) -> ApproximantComplex:
    """Glue the collared tiles along the faces they share in legal blocks.

    Raises
    ------
    ArithmeticError
        If the substitution does not induce a well defined cellular map,
        which means the collars do not force the borders.
    """
    d = collared.d
    faces = _cube_faces(d)
    position = {face: i for i, face in enumerate(faces)}
    per_tile = len(faces)
    tiles = collared.size

    # Cells of the block that sit at the same place, grouped once.
    groups: Dict[tuple, List[Tuple[Tuple[int, ...], int]]] = {}
    for delta in it.product((0, 1), repeat=d):
        for f, face in enumerate(faces):
            place = (face.axes, tuple(o + v for o, v in zip(delta, face.corner)))
            groups.setdefault(place, []).append((delta, f))
    shared = [members for members in groups.values() if len(members) > 1]

    partition = _Partition(tiles * per_tile)
    for block in collared.blocks:
        for members in shared:
            (delta, f), rest = members[0], members[1:]
            first = int(block[delta]) * per_tile + f
            for other_delta, g in rest:
                partition.union(first, int(block[other_delta]) * per_tile + g)

    cell_of = np.zeros(tiles * per_tile, dtype=np.int64)
    representatives: List[List[Tuple[int, Tuple[int, ...], Tuple[int, ...]]]] = [
        [] for _ in range(d + 1)
    ]
    members_of: List[List[List[int]]] = [[] for _ in range(d + 1)]
    numbering: Dict[int, int] = {}
    for node in range(tiles * per_tile):
        tile, f = divmod(node, per_tile)
        q = len(faces[f].axes)
        root = partition.find(node)
        if root not in numbering:
            numbering[root] = len(representatives[q])
            representatives[q].append((tile, faces[f].axes, faces[f].corner))
            members_of[q].append([])
        cell_of[node] = numbering[root]
        members_of[q][numbering[root]].append(node)
    sizes = [len(cells) for cells in representatives]

    boundaries = []
    for q in range(1, d + 1):
        matrix = np.zeros((sizes[q - 1], sizes[q]), dtype=np.int64)
        for j, (tile, axes, corner) in enumerate(representatives[q]):
            for sign, face in _face_boundary(_Face(axes, corner)):
                matrix[cell_of[tile * per_tile + position[face]], j] += sign
        boundaries.append(matrix)

    chain_maps = []
    for q in range(d + 1):
        matrix = np.zeros((sizes[q], sizes[q]), dtype=np.int64)
        for j, nodes in enumerate(members_of[q]):
            images = set()
            for node in nodes:
                tile, f = divmod(node, per_tile)
                image = sorted(
                    int(cell_of[int(collared.images[(tile,) + delta]) * per_tile + f])
                    for delta in _face_children(faces[f])
                )
                images.add(tuple(image))
            if len(images) != 1:
                raise ArithmeticError(
                    """The substitution sends two copies of the same {}-cell to
                    different chains; collaring did not force the borders.""".format(
                        q
                    )
                )
            for i in images.pop():
                matrix[i, j] += 1
        chain_maps.append(matrix)

    cells = CellComplex(sizes, boundaries)
    for q in range(1, d + 1):
        lhs = integer_product(cells.boundary(q), chain_maps[q])
        rhs = integer_product(chain_maps[q - 1], cells.boundary(q))
        if np.any(lhs != rhs):
            raise ArithmeticError(
                "The induced map does not commute with ∂_{}.".format(q)
            )
    return ApproximantComplex(cells, chain_maps, representatives)
