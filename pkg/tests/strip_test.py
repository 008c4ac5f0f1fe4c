# encoding: utf-8
import unittest

import numpy as np

from paperfold.creases import (
    Orientation,
    build_S1,
    fold_strip,
    generate_recursive,
    paperfolding_sequence,
    simulate_strip_fold,
)


class StripTest(unittest.TestCase):
    def test_orientations(self):
        test_cases = (
            {"n": 0, "expected": ["up"]},
            {"n": 1, "expected": ["down", "up"]},
            {"n": 2, "expected": ["down", "up", "down", "up"]},
        )
        for case in test_cases:
            orientations = simulate_strip_fold(case["n"])
            self.assertEqual([o.value for o in orientations.values()], case["expected"])

        orientations = simulate_strip_fold(2)
        self.assertEqual(list(orientations), [-2, -1, 0, 1])
        self.assertIs(orientations[1], Orientation.UP)

    def test_orientation_follows_parity(self):
        for n in range(2, 13):
            orientations = simulate_strip_fold(n)
            even = {o for p, o in orientations.items() if p % 2 == 0}
            odd = {o for p, o in orientations.items() if p % 2 == 1}
            self.assertEqual(len(even), 1)
            self.assertEqual(len(odd), 1)
            self.assertNotEqual(even, odd)

    def test_pile(self):
        for n in range(6):
            pile = fold_strip(n)
            np.testing.assert_array_equal(pile.slot, np.zeros(2 ** n))
            np.testing.assert_array_equal(np.sort(pile.layer), np.arange(2 ** n))

        pile = fold_strip(1)
        np.testing.assert_array_equal(pile.layer, [1, 0])

    def test_bound(self):
        with self.assertRaises(ValueError):
            fold_strip(3, bound=2)
        with self.assertRaises(ValueError):
            fold_strip(-1)

    def test_paperfolding_sequence(self):
        test_cases = (
            {"n": 1, "expected": "+"},
            {"n": 2, "expected": "++-"},
            {"n": 3, "expected": "++-++--"},
            {"n": 4, "expected": "++-++--+++--+--"},
        )
        for case in test_cases:
            pattern = generate_recursive(1, case["n"])
            self.assertEqual(paperfolding_sequence(pattern), case["expected"])

        # Each generation extends the previous one.
        previous = ""
        for n in range(1, 8):
            word = paperfolding_sequence(generate_recursive(1, n))
            self.assertTrue(word.startswith(previous))
            previous = word

        self.assertEqual(
            paperfolding_sequence(generate_recursive(1, 3), two_sided=True), "--++-++"
        )
        with self.assertRaises(ValueError):
            paperfolding_sequence(build_S1(2))


if __name__ == "__main__":
    unittest.main()
