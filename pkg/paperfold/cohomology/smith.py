# encoding: utf-8
""" Smith normal form of integer matrices.

The reduction works on numpy arrays of int64 as long as no operation can
overflow, and moves the whole computation to arrays of Python integers
(dtype=object) as soon as one might. Results are therefore exact whatever
the size of the entries.
"""
from typing import List, NamedTuple

import numpy as np

__all__ = [
    "SmithDecomposition",
    "smith_decomposition",
    "smith_normal_form",
    "as_integer_matrix",
    "integer_product",
]

_LIMIT = float(2 ** 62)


def _largest(array: np.ndarray) -> float:
    if array.size == 0:
        return 0.0
    return float(np.max(np.abs(array)))


def as_integer_matrix(matrix, shape=None) -> np.ndarray:
    """Convert to an int64 array when the entries allow it, to Python integers otherwise.

    `shape` is used for empty matrices, whose shape numpy cannot infer from
    nested lists.
    """
    if isinstance(matrix, np.ndarray) and matrix.dtype != object:
        array = matrix.astype(np.int64)
        return array.reshape(shape) if shape is not None and array.size == 0 else array
    array = np.array(matrix, dtype=object)
    if array.size == 0:
        return np.zeros(shape if shape is not None else array.shape, dtype=np.int64)
    if array.ndim != 2:
        raise ValueError("Expected a matrix, got an array of shape {}.".format(array.shape))
    array = np.vectorize(int, otypes=[object])(array)
    if _largest(array) < _LIMIT:
        return array.astype(np.int64)
    return array


def integer_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of two integer matrices.

    The product is taken in int64 when the entries are small enough for the
    result to fit, with Python integers otherwise.
    """
    inner = a.shape[1] if a.ndim == 2 else a.shape[0]
    if a.dtype != object and b.dtype != object:
        if _largest(a) * _largest(b) * max(inner, 1) < _LIMIT:
            return a @ b
    result = a.astype(object) @ b.astype(object)
    if isinstance(result, np.ndarray) and result.size == 0:
        return result.astype(np.int64)
    return as_integer_matrix(result) if np.ndim(result) == 2 else result


class SmithDecomposition(NamedTuple):
    """U·M·V = D with U and V unimodular and D diagonal, d_1 | d_2 | ….

    The inverses of U and V are tracked along the way.
    """

    left: np.ndarray
    diagonal: np.ndarray
    right: np.ndarray
    left_inverse: np.ndarray
    right_inverse: np.ndarray

    @property
    def invariant_factors(self) -> List[int]:
        factors = []
        for i in range(min(self.diagonal.shape)):
            value = int(self.diagonal[i, i])
            if value == 0:
                break
            factors.append(value)
        return factors

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


class _Reduction(object):
    """The state of an ongoing reduction: the matrix and the four transforms."""

    _names = ("D", "U", "Uinv", "V", "Vinv")

    def __init__(self, matrix: np.ndarray) -> None:
        m, n = matrix.shape
        self.D = matrix.copy()
        self.U = np.eye(m, dtype=np.int64).astype(matrix.dtype)
        self.Uinv = self.U.copy()
        self.V = np.eye(n, dtype=np.int64).astype(matrix.dtype)
        self.Vinv = self.V.copy()

    @property
    def exact(self) -> bool:
        return self.D.dtype == object

    def _make_room(self, bound: float) -> None:
        if not self.exact and bound >= _LIMIT:
            for name in self._names:
                setattr(self, name, getattr(self, name).astype(object))

    def swap_rows(self, i: int, j: int) -> None:
        if i != j:
            self.D[[i, j], :] = self.D[[j, i], :]
            self.U[[i, j], :] = self.U[[j, i], :]
            self.Uinv[:, [i, j]] = self.Uinv[:, [j, i]]

    def swap_columns(self, i: int, j: int) -> None:
        if i != j:
            self.D[:, [i, j]] = self.D[:, [j, i]]
            self.V[:, [i, j]] = self.V[:, [j, i]]
            self.Vinv[[i, j], :] = self.Vinv[[j, i], :]

    def eliminate_column(self, t: int) -> None:
        """Subtract multiples of row t from the rows below it."""
        q = self.D[t + 1 :, t] // self.D[t, t]
        rows = np.nonzero(q != 0)[0]
        q = q[rows]
        rows = rows + t + 1
        if not self.exact:
            top, spread = _largest(q), float(np.abs(q.astype(np.float64)).sum())
            self._make_room(
                max(
                    top * _largest(self.D[t]) + _largest(self.D[rows]),
                    top * _largest(self.U[t]) + _largest(self.U[rows]),
                    spread * _largest(self.Uinv[:, rows]) + _largest(self.Uinv[:, t]),
                )
            )
            q = q.astype(self.D.dtype)
        self.D[rows, :] -= np.outer(q, self.D[t, :])
        self.U[rows, :] -= np.outer(q, self.U[t, :])
        self.Uinv[:, t] += self.Uinv[:, rows] @ q

    def eliminate_row(self, t: int) -> None:
        """Subtract multiples of column t from the columns to its right."""
        q = self.D[t, t + 1 :] // self.D[t, t]
        columns = np.nonzero(q != 0)[0]
        q = q[columns]
        columns = columns + t + 1
        if not self.exact:
            top, spread = _largest(q), float(np.abs(q.astype(np.float64)).sum())
            self._make_room(
                max(
                    top * _largest(self.D[:, t]) + _largest(self.D[:, columns]),
                    top * _largest(self.V[:, t]) + _largest(self.V[:, columns]),
                    spread * _largest(self.Vinv[columns]) + _largest(self.Vinv[t]),
                )
            )
            q = q.astype(self.D.dtype)
        self.D[:, columns] -= np.outer(self.D[:, t], q)
        self.V[:, columns] -= np.outer(self.V[:, t], q)
        self.Vinv[t, :] += q @ self.Vinv[columns, :]

    def add_row(self, source: int, target: int) -> None:
        if not self.exact:
            self._make_room(
                max(
                    _largest(self.D[source]) + _largest(self.D[target]),
                    _largest(self.U[source]) + _largest(self.U[target]),
                    _largest(self.Uinv[:, source]) + _largest(self.Uinv[:, target]),
                )
            )
        self.D[target, :] += self.D[source, :]
        self.U[target, :] += self.U[source, :]
        self.Uinv[:, source] -= self.Uinv[:, target]

    def negate_row(self, t: int) -> None:
        self.D[t, :] = -self.D[t, :]
        self.U[t, :] = -self.U[t, :]
        self.Uinv[:, t] = -self.Uinv[:, t]

    def choose_pivot(self, t: int) -> bool:
        """Bring an entry of smallest magnitude of D[t:, t:] to (t, t).

        Among those, take the one whose row and column have the fewest other
        nonzero entries, which limits fill-in on sparse boundary matrices.
        """
        block = self.D[t:, t:]
        support = block != 0
        if not support.any():
            return False
        magnitude = np.where(support, np.abs(block), 0)
        smallest = magnitude[support].min()
        rows, columns = np.nonzero(magnitude == smallest)
        cost = (support.sum(axis=1)[rows] - 1) * (support.sum(axis=0)[columns] - 1)
        best = int(np.argmin(cost))
        self.swap_rows(t, t + int(rows[best]))
        self.swap_columns(t, t + int(columns[best]))
        return True

    def choose_pivot_in_cross(self, t: int) -> None:
        """Bring the smallest nonzero entry of row t or column t to (t, t)."""
        candidates = [
            (abs(int(v)), 0, t + 1 + i) for i, v in enumerate(self.D[t + 1 :, t]) if v != 0
        ]
        candidates += [
            (abs(int(v)), 1, t + 1 + j) for j, v in enumerate(self.D[t, t + 1 :]) if v != 0
        ]
        _, in_row, index = min(candidates)
        if in_row:
            self.swap_columns(t, index)
        else:
            self.swap_rows(t, index)

    def run(self) -> None:
        m, n = self.D.shape
        for t in range(min(m, n)):
            if not self.choose_pivot(t):
                break
            while True:
                if np.any(self.D[t + 1 :, t] != 0):
                    self.eliminate_column(t)
                if np.any(self.D[t, t + 1 :] != 0):
                    self.eliminate_row(t)
                if np.any(self.D[t + 1 :, t] != 0) or np.any(self.D[t, t + 1 :] != 0):
                    self.choose_pivot_in_cross(t)
                    continue
                rows, _ = np.nonzero(self.D[t + 1 :, t + 1 :] % self.D[t, t] != 0)
                if rows.size:
                    self.add_row(t + 1 + int(rows[0]), t)
                    continue
                break
            if self.D[t, t] < 0:
                self.negate_row(t)


def smith_decomposition(matrix, shape=None) -> SmithDecomposition:
    """Reduce an integer matrix to Smith normal form, keeping the transforms.

    Examples
    --------
    >>> smith_decomposition([[2, 0], [0, 3]]).invariant_factors
    [1, 6]
    """
    reduction = _Reduction(as_integer_matrix(matrix, shape))
    reduction.run()
    return SmithDecomposition(
        reduction.U, reduction.D, reduction.V, reduction.Uinv, reduction.Vinv
    )


def smith_normal_form(matrix):
    """Return (U, D, V) with U·M·V = D, U and V unimodular."""
    result = smith_decomposition(matrix)
    return result.left, result.diagonal, result.right
