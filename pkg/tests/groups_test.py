# encoding: utf-8
import unittest

import numpy as np

from paperfold.cohomology import (
    DirectLimitGroup,
    EndomorphismOnGroups,
    FinitelyGeneratedGroup,
    direct_limit,
    invariant_factors,
)


class FinitelyGeneratedGroupTest(unittest.TestCase):
    def test_invariant_factors(self):
        test_cases = (
            {"orders": [4, 6], "expected": (2, 12)},
            {"orders": [2, 3], "expected": (6,)},
            {"orders": [1, 1], "expected": ()},
            {"orders": [2, 2, 4], "expected": (2, 2, 4)},
        )
        for case in test_cases:
            self.assertEqual(invariant_factors(case["orders"]), case["expected"])

        with self.assertRaises(ValueError):
            invariant_factors([0, 2])

    def test_printing(self):
        test_cases = (
            {"group": FinitelyGeneratedGroup(), "expected": "0"},
            {"group": FinitelyGeneratedGroup(1), "expected": "Z"},
            {"group": FinitelyGeneratedGroup(2, (2,)), "expected": "Z^2 + Z/2"},
        )
        for case in test_cases:
            self.assertEqual(str(case["group"]), case["expected"])

    def test_invalid_groups(self):
        with self.assertRaises(ValueError):
            FinitelyGeneratedGroup(-1)
        with self.assertRaises(ValueError):
            FinitelyGeneratedGroup(0, (4, 2))
        with self.assertRaises(ValueError):
            FinitelyGeneratedGroup(0, (1,))


class EndomorphismTest(unittest.TestCase):
    def test_reduction_modulo_torsion(self):
        group = FinitelyGeneratedGroup(1, (3,))
        e = EndomorphismOnGroups(group, [[4, 5], [0, 2]])
        np.testing.assert_array_equal(e.matrix, [[1, 2], [0, 2]])
        np.testing.assert_array_equal(e.torsion_block, [[1]])
        np.testing.assert_array_equal(e.free_block, [[2]])

    def test_ill_defined_maps(self):
        cases = [
            {
                "group": FinitelyGeneratedGroup(1, (2,)),
                "matrix": [[1, 0], [1, 1]],
                "description": "torsion sent to a free element",
            },
            {
                "group": FinitelyGeneratedGroup(0, (2, 4)),
                "matrix": [[1, 0], [1, 1]],
                "description": "element of order 2 sent to one of order 4",
            },
            {
                "group": FinitelyGeneratedGroup(2),
                "matrix": [[1]],
                "description": "wrong shape",
            },
        ]
        for case in cases:
            with self.assertRaises(ValueError):
                EndomorphismOnGroups(case["group"], case["matrix"])


class DirectLimitGroupTest(unittest.TestCase):
    def test_printing_order(self):
        group = DirectLimitGroup(3, [2, 4, 2], [2])
        self.assertEqual(str(group), "Z[1/4] + Z[1/2] + Z[1/2] + Z^3 + Z/2")
        self.assertEqual(str(DirectLimitGroup()), "0")
        self.assertEqual(str(DirectLimitGroup(1, [2])), "Z[1/2] + Z")

    def test_parse(self):
        for text in ["Z", "Z[1/2] + Z", "Z[1/4] + Z[1/2] + Z[1/2] + Z^3 + Z/2", "0"]:
            self.assertEqual(str(DirectLimitGroup.parse(text)), text)

        self.assertEqual(DirectLimitGroup.parse("Z + Z + Z[1/3]"), DirectLimitGroup(2, [3]))
        self.assertEqual(DirectLimitGroup.parse("Z/2 + Z/3").torsion, (6,))
        with self.assertRaises(ValueError):
            DirectLimitGroup.parse("Q")
        with self.assertRaises(ValueError):
            DirectLimitGroup(0, [1])


class DirectLimitTest(unittest.TestCase):
    def limit(self, matrix, free_rank=None, torsion=(), **kwargs):
        n = len(matrix)
        group = FinitelyGeneratedGroup(n - len(torsion) if free_rank is None else free_rank, torsion)
        return direct_limit(EndomorphismOnGroups(group, matrix), **kwargs)

    def test_diagonalizable(self):
        test_cases = (
            {"matrix": [[2]], "expected": "Z[1/2]"},
            {"matrix": [[1, 0], [0, 1]], "expected": "Z^2"},
            {"matrix": [[1, 0], [0, 2]], "expected": "Z[1/2] + Z"},
            {"matrix": [[-1, 0], [0, 4]], "expected": "Z[1/4] + Z"},
            # diag(2, 3) in another basis.
            {"matrix": [[2, 1], [0, 3]], "expected": "Z[1/3] + Z[1/2]"},
            # A Jordan block is invertible over Z[1/2] as well.
            {"matrix": [[2, 1], [0, 2]], "expected": "Z[1/2] + Z[1/2]"},
            {"matrix": [[0, 1], [0, 0]], "expected": "0"},
            {"matrix": [[2, 0], [0, 0]], "expected": "Z[1/2]"},
            {"matrix": [[0, -1], [1, 0]], "expected": "Z^2"},
        )
        for case in test_cases:
            result = self.limit(case["matrix"])
            self.assertTrue(result.conclusive)
            self.assertEqual(str(result.group), case["expected"])

    def test_torsion(self):
        test_cases = (
            {"matrix": [[1, 0], [0, 2]], "expected": "Z[1/2] + Z/2"},
            {"matrix": [[0, 0], [0, 2]], "expected": "Z[1/2]"},
        )
        for case in test_cases:
            result = self.limit(case["matrix"], free_rank=1, torsion=(2,))
            self.assertTrue(result.conclusive)
            self.assertEqual(str(result.group), case["expected"])

        result = self.limit([[2]], free_rank=0, torsion=(4,))
        self.assertEqual(result.torsion, ())
        result = self.limit([[3]], free_rank=0, torsion=(4,))
        self.assertEqual(result.torsion, (4,))

    def test_eigenlattices_of_finite_index(self):
        test_cases = (
            # Eigenvalues 2 and -1; the eigenlattices have index 3 in Z^2.
            {"matrix": [[0, 1], [2, 1]], "expected": "Z[1/2] + Z"},
            # Characteristic polynomial (x - 4)(x - 2)^2 (x - 1)^3.
            {
                "matrix": [
                    [1, 0, 0, 0, 0, 0],
                    [0, 1, 0, 0, 0, 0],
                    [-1, 1, 2, 0, 0, 0],
                    [0, 0, 0, 1, 0, 0],
                    [9, 9, 8, 19, 10, 8],
                    [-6, -7, -6, -14, -6, -4],
                ],
                "expected": "Z[1/4] + Z[1/2] + Z[1/2] + Z^3",
            },
        )
        for case in test_cases:
            result = self.limit(case["matrix"])
            self.assertTrue(result.conclusive)
            self.assertEqual(str(result.group), case["expected"])

    def test_eigenvalues_with_different_primes(self):
        # The eigenlattices of 2 and 7 have index 5 and no power of the
        # matrix makes the projections integral.
        result = self.limit([[2, 1], [0, 7]], candidate=DirectLimitGroup(0, [7, 2]))
        self.assertFalse(result.conclusive)
        self.assertTrue(result.candidate_match)

    def test_inconclusive(self):
        fibonacci = [[1, 1], [1, 0]]
        result = self.limit(fibonacci, candidate=DirectLimitGroup(2))
        self.assertFalse(result.conclusive)
        self.assertIsNone(result.group)
        self.assertTrue(result.candidate_match)
        self.assertEqual(result.matrix.shape, (2, 2))

        result = self.limit(fibonacci, candidate=DirectLimitGroup(0, [2, 2]))
        self.assertFalse(result.candidate_match)

    def test_stabilization_steps(self):
        with self.assertRaises(ValueError):
            self.limit([[2]], k_stab=0)


if __name__ == "__main__":
    unittest.main()
