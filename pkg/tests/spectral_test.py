# encoding: utf-8
import unittest

import numpy as np
import sympy

from paperfold.analysis import (
    SubstitutionMatrix,
    coincidence_persists,
    find_coincidence,
    is_primitive,
    seed_covers_alphabet,
    substitution_matrix,
)
from paperfold.exceptions import CellBudgetExceeded
from paperfold.substitution import BlockSubstitution, derive_rule, seed


class SubstitutionMatrixTest(unittest.TestCase):
    def test_paperfolding_line(self):
        matrix = substitution_matrix(derive_rule(1))
        expected = [[1, 1, 0, 0], [0, 1, 0, 1], [0, 0, 1, 1], [1, 0, 1, 0]]
        np.testing.assert_array_equal(matrix.entries, expected)
        self.assertEqual(matrix.perron_eigenvalue(), 2)
        self.assertEqual(matrix.letter_frequencies(), [sympy.Rational(1, 4)] * 4)

    def test_column_sums(self):
        for d in range(1, 4):
            matrix = substitution_matrix(derive_rule(d))
            np.testing.assert_array_equal(matrix.column_sums(), [2 ** d] * 4 ** d)
            self.assertEqual(matrix.perron_eigenvalue(), 2 ** d)

        frequencies = substitution_matrix(derive_rule(2)).letter_frequencies()
        self.assertEqual(sum(frequencies), 1)
        self.assertTrue(all(f > 0 for f in frequencies))

    def test_invalid_matrices(self):
        with self.assertRaises(ValueError):
            SubstitutionMatrix([[1, 2, 3]])
        with self.assertRaises(ValueError):
            SubstitutionMatrix([[1, -1], [0, 1]])
        with self.assertRaises(ValueError):
            SubstitutionMatrix([[2, 0], [0, 1]]).perron_eigenvalue()

        identity = BlockSubstitution.from_mapping(1, {0: [0, 0], 1: [1, 1]})
        with self.assertRaises(ValueError):
            substitution_matrix(identity).letter_frequencies()


class PrimitivityTest(unittest.TestCase):
    def test_primitivity(self):
        test_cases = (
            {
                "rule": BlockSubstitution.from_mapping(1, {0: [0, 1], 1: [1, 0]}),
                "expected": (True, 1),
            },
            {"rule": derive_rule(1), "expected": (True, 3)},
            {
                "rule": BlockSubstitution.from_mapping(1, {0: [0, 0], 1: [1, 1]}),
                "expected": (False, 8),
            },
        )
        for case in test_cases:
            self.assertEqual(is_primitive(case["rule"], 8), case["expected"])

        for d in (1, 2, 3):
            primitive, k = is_primitive(derive_rule(d))
            self.assertTrue(primitive)
            self.assertLessEqual(k, 4)

        with self.assertRaises(ValueError):
            is_primitive(derive_rule(1), 0)

    def test_seed_covers_alphabet(self):
        rule = derive_rule(1)
        self.assertFalse(seed_covers_alphabet(rule, seed(1), 0))
        self.assertTrue(seed_covers_alphabet(rule, seed(1), 1))

        for d in (2, 3):
            self.assertTrue(seed_covers_alphabet(derive_rule(d), seed(d), 3))

        rule = derive_rule(2)
        with self.assertRaises(CellBudgetExceeded):
            seed_covers_alphabet(rule, seed(2), 10, cell_budget=2 ** 10)


class CoincidenceTest(unittest.TestCase):
    def test_paperfolding_line(self):
        report = find_coincidence(derive_rule(1))
        self.assertTrue(report.found)
        self.assertEqual(report.k, 2)
        self.assertEqual(report.position, (1,))
        self.assertEqual(report.letter, 3)
        self.assertEqual(report.positions, ((1,), (3,)))
        self.assertEqual(report.far_corner, (3,))
        self.assertTrue(coincidence_persists(derive_rule(1), report))

        document = report.to_json()
        self.assertEqual(document["coincidence"]["positions"], [[1], [3]])

    def test_far_corner_in_every_dimension(self):
        for d in (1, 2, 3):
            rule = derive_rule(d)
            report = find_coincidence(rule, 3)
            self.assertTrue(report.found)
            self.assertEqual(report.k, 2)
            self.assertEqual(report.far_corner, (3,) * d)
            self.assertTrue(coincidence_persists(rule, report))

    def test_no_coincidence(self):
        thue_morse = BlockSubstitution.from_mapping(1, {0: [0, 1], 1: [1, 0]})
        report = find_coincidence(thue_morse, 5)
        self.assertFalse(report.found)
        self.assertEqual(report.k, 5)
        self.assertIsNone(report.far_corner)
        self.assertEqual(report.to_json(), {"coincidence": None, "k": 5})
        self.assertFalse(coincidence_persists(thue_morse, report))

        with self.assertRaises(ValueError):
            find_coincidence(thue_morse, 0)


if __name__ == "__main__":
    unittest.main()
