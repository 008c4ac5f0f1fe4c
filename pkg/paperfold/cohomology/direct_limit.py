# encoding: utf-8
""" Direct limits Z^n → Z^n → … under a repeated endomorphism.

The torsion of the limit is the part of the torsion on which the
endomorphism eventually acts bijectively. The torsion-free part is computed
on the eventual image lattice L, where the endomorphism acts injectively by
a matrix B. When the characteristic polynomial of B splits over the
integers into factors x - λ and cyclotomic polynomials, L contains the sum
of the generalized eigenlattices with finite index, and the limit is Z for
every eigenvalue of modulus one and Z[1/|λ|] for every other eigenvalue,
counted with multiplicity, as soon as it splits along the eigenvalues.

Everything else is returned as a presentation, the lattice and B, to be
compared with a candidate answer.
"""
from typing import FrozenSet, List, NamedTuple, Optional, Tuple

import numpy as np
import sympy

from ..limits import DEFAULT_STABILIZATION_STEPS
from .groups import DirectLimitGroup, EndomorphismOnGroups, invariant_factors
from .smith import as_integer_matrix, integer_product, smith_decomposition

__all__ = ["DirectLimitResult", "direct_limit"]


class DirectLimitResult(NamedTuple):
    """The outcome of `direct_limit`.

    Attributes
    ----------
    group: DirectLimitGroup or None
        The limit in normal form, None when it could not be certified.
    conclusive: bool
    torsion: tuple of int
        Invariant factors of the torsion of the limit, always computed.
    lattice: numpy.ndarray
        Basis, as columns, of the eventual image of the free quotient.
    matrix: numpy.ndarray
        The endomorphism restricted to `lattice`, in that basis.
    candidate_match: bool or None
        Whether the presentation agrees with the candidate on every
        invariant that was compared, when a candidate was given.
    """

    group: Optional[DirectLimitGroup]
    conclusive: bool
    torsion: Tuple[int, ...]
    lattice: np.ndarray
    matrix: np.ndarray
    candidate_match: Optional[bool] = None


def _column_basis(matrix: np.ndarray) -> np.ndarray:
    """A basis of the lattice spanned by the columns of `matrix`."""
    rows = matrix.shape[0]
    if matrix.shape[1] == 0:
        return np.zeros((rows, 0), dtype=np.int64)
    decomposition = smith_decomposition(matrix)
    rank = decomposition.rank
    factors = np.array(decomposition.invariant_factors, dtype=object)
    basis = decomposition.left_inverse[:, :rank].astype(object) * factors
    return as_integer_matrix(basis, (rows, rank))


def _reduce_rows(matrix: np.ndarray, moduli: Tuple[int, ...]) -> np.ndarray:
    reduced = matrix.astype(object)
    for i, modulus in enumerate(moduli):
        reduced[i, :] = reduced[i, :] % modulus
    return as_integer_matrix(reduced, matrix.shape)


def _image_in_torsion(power: np.ndarray, orders: Tuple[int, ...]) -> Tuple[int, Tuple[int, ...]]:
    """Order and invariant factors of the image of `power` in ⊕ Z/t_i.

    The image is K / DZ^s where K is spanned by the columns of `power` and
    of D = diag(t). With K = W·Z^s, the quotient is Z^s / (W^-1 D).
    """
    s = len(orders)
    diagonal = np.diag(np.array(orders, dtype=object))
    stacked = np.concatenate([power.astype(object), diagonal], axis=1)
    decomposition = smith_decomposition(stacked)
    factors = decomposition.invariant_factors
    relations = integer_product(decomposition.left, as_integer_matrix(diagonal)).astype(object)
    for i, factor in enumerate(factors):
        relations[i, :] = relations[i, :] // factor
    image = invariant_factors(smith_decomposition(relations).invariant_factors) if s else ()
    order = 1
    for t in image:
        order *= t
    return order, image


def _torsion_limit(e: EndomorphismOnGroups) -> Tuple[Tuple[int, ...], int]:
    """Iterate on the torsion until the image stops shrinking."""
    orders = e.group.torsion
    if not orders:
        return (), 0
    block = e.torsion_block
    power = np.eye(len(orders), dtype=np.int64)
    order = 1
    for t in orders:
        order *= t
    image = orders
    steps = 0
    while True:
        power = _reduce_rows(integer_product(block, power), orders)
        following, candidate = _image_in_torsion(power, orders)
        steps += 1
        if following == order:
            return image, steps - 1
        order, image = following, candidate


def _eventual_lattice(block: np.ndarray) -> np.ndarray:
    """A basis of A^j Z^r for the first j at which A stops losing rank."""
    r = block.shape[0]
    lattice = np.eye(r, dtype=np.int64)
    while lattice.shape[1]:
        image = _column_basis(integer_product(block, lattice))
        if image.shape[1] == lattice.shape[1]:
            break
        lattice = image
    return lattice


def _restrict(block: np.ndarray, lattice: np.ndarray) -> np.ndarray:
    """The matrix B with lattice·B = block·lattice."""
    rank = lattice.shape[1]
    if rank == 0:
        return np.zeros((0, 0), dtype=np.int64)
    decomposition = smith_decomposition(lattice)
    image = integer_product(decomposition.left, integer_product(block, lattice)).astype(object)
    factors = decomposition.invariant_factors
    if any(image[rank:].flat):
        raise ArithmeticError("The image lattice is not invariant under the endomorphism.")
    for i, factor in enumerate(factors):
        if any(x % factor for x in image[i]):
            raise ArithmeticError("The endomorphism does not preserve the image lattice.")
        image[i] = image[i] // factor
    return as_integer_matrix(
        integer_product(decomposition.right.astype(object), image[:rank]), (rank, rank)
    )


def _evaluate(polynomial: sympy.Poly, matrix: sympy.Matrix) -> sympy.Matrix:
    result = sympy.zeros(*matrix.shape)
    for coefficient in polynomial.all_coeffs():
        result = result * matrix + coefficient * sympy.eye(matrix.shape[0])
    return result


def _kernel(matrix: sympy.Matrix) -> np.ndarray:
    """A basis of the integer kernel, saturated by construction."""
    decomposition = smith_decomposition(np.array(matrix.tolist(), dtype=object))
    return decomposition.right[:, decomposition.rank :]


class _Spectrum(NamedTuple):
    units: int
    localized: List[int]
    lattices: List[np.ndarray]
    supports: List[FrozenSet[int]]
    split: bool


def _spectrum(matrix: np.ndarray) -> _Spectrum:
    """Split the characteristic polynomial of `matrix` and its eigenlattices.

    Every eigenlattice comes with the primes dividing its eigenvalue, empty
    for eigenvalues of modulus one.
    """
    x = sympy.Symbol("x")
    B = sympy.Matrix(matrix.tolist())
    _, factors = sympy.factor_list(B.charpoly(x).as_expr(), x)
    units, localized, lattices, supports = 0, [], [], []
    for factor, multiplicity in factors:
        polynomial = sympy.Poly(factor, x)
        degree = polynomial.degree()
        support: FrozenSet[int] = frozenset()
        if degree == 1:
            leading, constant = polynomial.all_coeffs()
            root = sympy.Rational(-constant, leading)
            if not root.is_integer or root == 0:
                return _Spectrum(0, [], [], [], False)
            if abs(root) == 1:
                units += multiplicity
            else:
                localized += [int(abs(root))] * multiplicity
                support = frozenset(sympy.primefactors(int(abs(root))))
        elif polynomial.is_cyclotomic:
            units += degree * multiplicity
        else:
            return _Spectrum(0, [], [], [], False)
        lattices.append(_kernel(_evaluate(polynomial, B) ** multiplicity))
        supports.append(support)
    return _Spectrum(units, localized, lattices, supports, True)


def _certified(matrix: np.ndarray, spectrum: _Spectrum, k_stab: int) -> bool:
    """Whether the limit is the sum of the limits on the eigenlattices.

    The limit G contains the limit of the eigenlattices with finite index.
    The image of G along the eigenvalues of modulus one is free, so that part
    always splits off. The rest is p-divisible for every prime p dividing a
    remaining eigenvalue; when those eigenvalues all have the same primes it
    is a free module over Z[1/p, ...] and the limit is certified. Otherwise
    some B^k, k ≤ k_stab, has to make the projection onto every group of
    eigenvalues integral.
    """
    W = sympy.Matrix(np.concatenate(spectrum.lattices, axis=1).tolist())
    if W.shape[0] != W.shape[1] or W.det() == 0:
        return False
    classes = {support for support in spectrum.supports if support}
    if len(classes) <= 1:
        return True

    inverse = W.inv()
    columns = [
        support
        for lattice, support in zip(spectrum.lattices, spectrum.supports)
        for _ in range(lattice.shape[1])
    ]
    projections = []
    for support in classes:
        mask = sympy.diag(*[1 if c == support else 0 for c in columns])
        projections.append(W * mask * inverse)

    B = sympy.Matrix(matrix.tolist())
    power = sympy.eye(B.shape[0])
    for _ in range(k_stab + 1):
        if all(entry.is_integer for P in projections for entry in power * P):
            return True
        power = power * B
    return False


def _compare_presentations(
    matrix: np.ndarray, torsion: Tuple[int, ...], candidate: DirectLimitGroup, k_stab: int
) -> bool:
    """Compare coker(B^k) with the candidate's own model for k ≤ k_stab."""
    rank = matrix.shape[0]
    if candidate.torsion != torsion:
        return False
    if candidate.free_rank + len(candidate.localized_summands) != rank:
        return False
    model = [1] * candidate.free_rank + list(candidate.localized_summands)
    B = sympy.Matrix(matrix.tolist()) if rank else None
    power = sympy.eye(rank) if rank else None
    for k in range(1, k_stab + 1):
        if not rank:
            break
        power = power * B
        ours = invariant_factors(
            smith_decomposition(np.array(power.tolist(), dtype=object)).invariant_factors
        )
        theirs = invariant_factors(m ** k for m in model)
        if ours != theirs:
            return False
    return True


def direct_limit(
    e: EndomorphismOnGroups,
    k_stab: int = DEFAULT_STABILIZATION_STEPS,
    candidate: Optional[DirectLimitGroup] = None,
) -> DirectLimitResult:
    """Normal form of the direct limit of `e.group` under repeated application of `e`.

    Argument
    --------
    e: EndomorphismOnGroups
    k_stab: int
        Largest power of the restricted endomorphism tried to certify the
        eigenlattice decomposition.
    candidate: DirectLimitGroup, optional
        Compared with the presentation when no normal form can be certified.

    Examples
    --------
    >>> from paperfold.cohomology.groups import FinitelyGeneratedGroup
    >>> doubling = EndomorphismOnGroups(FinitelyGeneratedGroup(1), [[2]])
    >>> print(direct_limit(doubling).group)
    Z[1/2]
    """
    if k_stab < 1:
        raise ValueError("k_stab must be at least 1, got {}.".format(k_stab))
    torsion, _ = _torsion_limit(e)
    lattice = _eventual_lattice(e.free_block)
    matrix = _restrict(e.free_block, lattice)

    if matrix.shape[0] == 0:
        return DirectLimitResult(DirectLimitGroup(0, (), torsion), True, torsion, lattice, matrix)

    spectrum = _spectrum(matrix)
    if spectrum.split and _certified(matrix, spectrum, k_stab):
        group = DirectLimitGroup(spectrum.units, spectrum.localized, torsion)
        return DirectLimitResult(group, True, torsion, lattice, matrix)

    match = None
    if candidate is not None:
        match = _compare_presentations(matrix, torsion, candidate, k_stab)
    return DirectLimitResult(None, False, torsion, lattice, matrix, match)
