# encoding: utf-8
import unittest

import numpy as np

from paperfold.cohomology import smith_decomposition, smith_normal_form
from paperfold.cohomology.smith import as_integer_matrix, integer_product


def product(*matrices):
    result = matrices[0]
    for matrix in matrices[1:]:
        result = integer_product(result, matrix)
    return result


class SmithTest(unittest.TestCase):
    def assertDecomposition(self, matrix):
        matrix = as_integer_matrix(matrix)
        result = smith_decomposition(matrix)
        m, n = matrix.shape
        np.testing.assert_array_equal(
            product(result.left, matrix, result.right), result.diagonal
        )
        np.testing.assert_array_equal(product(result.left, result.left_inverse), np.eye(m))
        np.testing.assert_array_equal(product(result.right, result.right_inverse), np.eye(n))

        off_diagonal = result.diagonal.copy()
        for i in range(min(m, n)):
            off_diagonal[i, i] = 0
        self.assertFalse(np.any(off_diagonal != 0))

        factors = result.invariant_factors
        self.assertTrue(all(f > 0 for f in factors))
        self.assertTrue(all(b % a == 0 for a, b in zip(factors, factors[1:])))
        self.assertEqual(result.rank, np.linalg.matrix_rank(matrix.astype(float)))
        return result

    def test_known_forms(self):
        test_cases = (
            {"matrix": [[2, 0], [0, 3]], "expected": [1, 6]},
            {"matrix": [[2, 4, 4], [-6, 6, 12], [10, -4, -16]], "expected": [2, 6, 12]},
            {"matrix": [[0, 0], [0, 0]], "expected": []},
            {"matrix": [[1, -1, 0], [0, 1, -1], [-1, 0, 1]], "expected": [1, 1]},
        )
        for case in test_cases:
            result = self.assertDecomposition(case["matrix"])
            self.assertEqual(result.invariant_factors, case["expected"])

    def test_random_matrices(self):
        random = np.random.RandomState(7)
        for _ in range(500):
            shape = tuple(random.randint(1, 9, size=2))
            matrix = random.randint(-4, 5, size=shape)
            self.assertDecomposition(matrix)

    def test_sparse_boundary_like_matrices(self):
        random = np.random.RandomState(11)
        for _ in range(5):
            matrix = random.choice([-1, 0, 0, 0, 1], size=(20, 30))
            self.assertDecomposition(matrix)

    def test_large_entries(self):
        matrix = [[2 ** 40, 3 ** 25], [5 ** 17, 7 ** 14]]
        result = smith_decomposition(matrix)
        self.assertEqual(result.rank, 2)
        determinant = 2 ** 40 * 7 ** 14 - 3 ** 25 * 5 ** 17
        a, b = result.invariant_factors
        self.assertEqual(a * b, abs(determinant))

    def test_empty_matrix(self):
        result = smith_decomposition(np.zeros((0, 3), dtype=np.int64))
        self.assertEqual(result.rank, 0)
        self.assertEqual(result.right.shape, (3, 3))

    def test_normal_form(self):
        left, diagonal, right = smith_normal_form([[4, 6], [6, 9]])
        np.testing.assert_array_equal(diagonal, [[1, 0], [0, 0]])
        np.testing.assert_array_equal(product(left, as_integer_matrix([[4, 6], [6, 9]]), right), diagonal)


if __name__ == "__main__":
    unittest.main()
