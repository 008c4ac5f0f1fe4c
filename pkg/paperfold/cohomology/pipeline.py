# encoding: utf-8
""" Cohomology of cell complexes and of substitution tiling spaces.

The Čech cohomology of the tiling space is the direct limit of the
cohomology of the approximant under the map the substitution induces.
"""
import logging
from typing import List, NamedTuple, Optional, Sequence

import numpy as np

from ..exceptions import InconclusiveLimitError
from ..limits import DEFAULT_STABILIZATION_STEPS
from ..substitution import BlockSubstitution, SymbolicPattern, derive_rule
from .approximant import CellComplex, ap_complex, collar_letters
from .direct_limit import DirectLimitResult, direct_limit
from .groups import DirectLimitGroup, EndomorphismOnGroups, FinitelyGeneratedGroup
from .smith import integer_product, smith_decomposition

__all__ = [
    "CohomologyGroup",
    "cohomology_of_complex",
    "hull_cohomology",
    "paperfolding_cohomology",
]

logger = logging.getLogger(__name__)


class CohomologyGroup(NamedTuple):
    """H^q of a complex, with cocycles representing its generators.

    Attributes
    ----------
    degree: int
    group: FinitelyGeneratedGroup
    generators: numpy.ndarray
        One cocycle per generator, as columns, torsion generators first.
    endomorphism: EndomorphismOnGroups or None
        The map induced by the cellular self-map, when one was given.
    """

    degree: int
    group: FinitelyGeneratedGroup
    generators: np.ndarray
    endomorphism: Optional[EndomorphismOnGroups] = None


def _check_cochain_map(
    complex_: CellComplex, chain_maps: Sequence[np.ndarray]
) -> None:
    if len(chain_maps) != complex_.dimension + 1:
        raise ValueError(
            "Expected one chain map per dimension 0..{}, got {}.".format(
                complex_.dimension, len(chain_maps)
            )
        )
    for q, (size, matrix) in enumerate(zip(complex_.sizes, chain_maps)):
        if np.shape(matrix) != (size, size):
            raise ValueError(
                "The chain map in degree {} must be {}×{}, got shape {}.".format(
                    q, size, size, np.shape(matrix)
                )
            )
    for q in range(1, complex_.dimension + 1):
        lhs = integer_product(complex_.boundary(q), np.asarray(chain_maps[q]))
        rhs = integer_product(np.asarray(chain_maps[q - 1]), complex_.boundary(q))
        if np.any(lhs != rhs):
            raise ValueError(
                "The given maps do not commute with ∂_{}, they are not a chain map.".format(q)
            )


def cohomology_of_complex(
    complex_: CellComplex, chain_maps: Optional[Sequence[np.ndarray]] = None
) -> List[CohomologyGroup]:
    """H^q = ker δ_q / im δ_{q-1} for q = 0..dimension, with δ_q = ∂_{q+1}^T.

    Cocycles are Z^z = ker δ_q, with z coordinates read off the Smith form
    of δ_q; the coboundaries form the lattice X·Z^n inside it and a second
    Smith reduction, of X, gives the invariant factors and the generators.
    If `chain_maps` are given the transposed maps act on cochains and their
    action on the generators is returned as an endomorphism.

    Examples
    --------
    >>> circle = CellComplex([1, 1], [[[0]]])
    >>> [str(h.group) for h in cohomology_of_complex(circle)]
    ['Z', 'Z']
    """
    if chain_maps is not None:
        _check_cochain_map(complex_, chain_maps)

    result = []
    for q in range(complex_.dimension + 1):
        size = complex_.sizes[q]
        cocycles = smith_decomposition(complex_.coboundary(q))
        rank = cocycles.rank
        kernel = cocycles.right[:, rank:]
        coordinates = cocycles.right_inverse[rank:, :]

        previous = complex_.coboundary(q - 1)
        relations = smith_decomposition(
            integer_product(coordinates, previous), (size - rank, previous.shape[1])
        )
        factors = relations.invariant_factors
        z = size - rank
        keep = [i for i, f in enumerate(factors) if f > 1] + list(range(len(factors), z))
        torsion = [factors[i] for i in keep if i < len(factors)]
        group = FinitelyGeneratedGroup(z - len(factors), torsion)
        generators = integer_product(kernel, relations.left_inverse[:, keep])

        endomorphism = None
        if chain_maps is not None:
            cochains = np.asarray(chain_maps[q], dtype=np.int64).T
            image = integer_product(cochains, generators)
            in_cocycles = integer_product(coordinates, image)
            matrix = integer_product(relations.left, in_cocycles)[keep]
            endomorphism = EndomorphismOnGroups(group, _reduce(matrix, torsion))
        result.append(CohomologyGroup(q, group, generators, endomorphism))
    return result


def _reduce(matrix: np.ndarray, torsion: Sequence[int]) -> np.ndarray:
    reduced = matrix.astype(object)
    for i, modulus in enumerate(torsion):
        reduced[i, :] = reduced[i, :] % modulus
    return reduced


def hull_cohomology(
    rule: BlockSubstitution,
    seed: Optional[SymbolicPattern] = None,
    k_stab: int = DEFAULT_STABILIZATION_STEPS,
) -> List[DirectLimitResult]:
    """The direct limit of the approximant cohomology in every degree.

    Parameters
    ----------
    rule: BlockSubstitution
        A primitive substitution in dimension one or two.
    seed: SymbolicPattern, optional
        See `collar_letters`.
    k_stab: int
        See `direct_limit`.
    """
    if rule.d > 2:
        raise ValueError(
            """Cohomology is computed for one- and two-dimensional tilings
            only, got dimension {}.""".format(
                rule.d
            )
        )
    collared = collar_letters(rule, seed)
    logger.info("%d collared tiles, %d legal blocks", collared.size, len(collared.blocks))
    approximant = ap_complex(collared)
    logger.info("Approximant cells by dimension: %s", approximant.complex.sizes)
    groups = cohomology_of_complex(approximant.complex, approximant.chain_maps)
    for h in groups:
        logger.info("H^%d of the approximant: %s", h.degree, h.group)
    return [direct_limit(h.endomorphism, k_stab) for h in groups]


def paperfolding_cohomology(
    d: int, k_stab: int = DEFAULT_STABILIZATION_STEPS
) -> List[DirectLimitGroup]:
    """Čech cohomology groups H^0..H^d of the d-dimensional paperfolding tiling space.

    Raises
    ------
    ValueError
        Unless d is 1 or 2.
    InconclusiveLimitError
        If some degree has no certified normal form; the partial result is
        attached to the exception.
    """
    if d not in (1, 2):
        raise ValueError(
            "Paperfolding cohomology is available for d = 1 and d = 2, got {}.".format(d)
        )
    results = hull_cohomology(derive_rule(d), k_stab=k_stab)
    for q, result in enumerate(results):
        if not result.conclusive:
            raise InconclusiveLimitError(
                """The direct limit in degree {} could not be brought to normal
                form: the restricted endomorphism {} does not split over the
                integers within {} steps.""".format(
                    q, result.matrix.tolist(), k_stab
                ),
                result,
            )
    return [result.group for result in results]
