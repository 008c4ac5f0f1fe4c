# encoding: utf-8
import itertools
import unittest

import numpy as np

from paperfold.creases import Sign, generate_recursive
from paperfold.exceptions import CellBudgetExceeded, ParityError
from paperfold.substitution import (
    Letter,
    SymbolicPattern,
    alphabet_size,
    check_parity,
    derive_rule,
    equivalence_check,
    from_creases,
    seed,
    substitute,
    to_creases,
)

# The two-dimensional substitution as published, letter b_ij with i the
# crease index and j the parity index. Images are written
# (top left, top right, bottom left, bottom right), the top row being the
# children with an odd second coordinate.
PLANE_TABLE = {
    "00": ("01", "13", "00", "02"),
    "01": ("11", "23", "00", "22"),
    "02": ("01", "33", "00", "22"),
    "03": ("11", "03", "00", "02"),
    "10": ("01", "13", "10", "12"),
    "11": ("11", "23", "10", "32"),
    "12": ("01", "33", "10", "32"),
    "13": ("11", "03", "10", "12"),
    "20": ("21", "13", "20", "02"),
    "21": ("31", "23", "20", "22"),
    "22": ("21", "33", "20", "22"),
    "23": ("31", "03", "20", "02"),
    "30": ("21", "13", "30", "12"),
    "31": ("31", "23", "30", "32"),
    "32": ("21", "33", "30", "32"),
    "33": ("31", "03", "30", "12"),
}

# Parity index j: (even, even), (even, odd), (odd, even), (odd, odd).
PARITY_BITS = (0, 2, 1, 3)

# Children in the order of PLANE_TABLE images, as offsets (δ1, δ2).
TABLE_OFFSETS = ((0, 1), (1, 1), (0, 0), (1, 0))


def encode(name, crease_bits):
    i, j = int(name[0]), int(name[1])
    return (crease_bits[i] << 2) | PARITY_BITS[j]


class LetterTest(unittest.TestCase):
    def test_codes(self):
        self.assertEqual(Letter((Sign.CREST,), (1,)).code, 3)
        self.assertEqual(
            Letter.from_code(2, 6), Letter((Sign.CREST, Sign.VALLEY), (0, 1))
        )
        for d in range(1, 4):
            codes = [Letter.from_code(d, c).code for c in range(alphabet_size(d))]
            self.assertEqual(codes, list(range(4 ** d)))

    def test_invalid_letters(self):
        with self.assertRaises(ValueError):
            Letter.from_code(1, 4)
        with self.assertRaises(ValueError):
            Letter((Sign.VALLEY,), (0, 1))
        with self.assertRaises(ValueError):
            Letter((Sign.VALLEY,), (2,))


class DeriveRuleTest(unittest.TestCase):
    def test_line(self):
        rule = derive_rule(1)
        self.assertEqual(rule.images.tolist(), [[0, 3], [0, 1], [2, 3], [2, 1]])

    def test_plane_matches_published_table(self):
        rule = derive_rule(2)
        self.assertEqual(rule.size, 16)

        matches = []
        for crease_bits in itertools.permutations(range(4)):
            images = np.zeros((16, 2, 2), dtype=np.int32)
            for name, children in PLANE_TABLE.items():
                code = encode(name, crease_bits)
                for offset, child in zip(TABLE_OFFSETS, children):
                    images[(code,) + offset] = encode(child, crease_bits)
            if np.array_equal(images, rule.images):
                matches.append(crease_bits)
        # Crease index i = 2·[axis 1 crest] + [axis 2 crest].
        self.assertEqual(matches, [(0, 2, 1, 3)])

    def test_children_carry_their_offset_as_parity(self):
        for d in range(1, 4):
            rule = derive_rule(d)
            for code in range(rule.size):
                for delta in itertools.product((0, 1), repeat=d):
                    child = rule.letter(int(rule.images[(code,) + delta]))
                    self.assertEqual(child.parity, delta)
                    # The lower faces of the block are the faces of the parent.
                    parent = rule.letter(code)
                    for k in range(d):
                        if delta[k] == 0:
                            self.assertIs(child.face_signs[k], parent.face_signs[k])

    def test_invalid_dimension(self):
        with self.assertRaises(ValueError):
            derive_rule(0)
        with self.assertWarns(UserWarning):
            derive_rule(5)


class SeedTest(unittest.TestCase):
    def test_seeds(self):
        line = seed(1)
        self.assertEqual(line.origin, (-1,))
        self.assertEqual(line.cells.tolist(), [3, 0])

        plane = seed(2)
        self.assertEqual(plane.origin, (-1, -1))
        crease_bits = (0, 2, 1, 3)
        expected = [
            [encode("13", crease_bits), encode("32", crease_bits)],
            [encode("01", crease_bits), encode("00", crease_bits)],
        ]
        self.assertEqual(plane.cells.tolist(), expected)

        for d in range(1, 4):
            s = seed(d)
            self.assertEqual(s.shape, (2,) * d)
            check_parity(s)

    def test_substitute(self):
        rule = derive_rule(1)
        pattern = substitute(substitute(seed(1), rule), rule)
        self.assertEqual(pattern.origin, (-4,))
        self.assertEqual(pattern.cells.tolist(), [2, 3, 0, 1, 0, 3, 2, 1])

    def test_parity(self):
        rule = derive_rule(1)
        wrong = SymbolicPattern((0,), [3, 0])
        with self.assertRaises(ParityError):
            check_parity(wrong)
        with self.assertRaises(ParityError):
            substitute(wrong, rule)
        # Parity errors are value errors.
        with self.assertRaises(ValueError):
            substitute(wrong, rule)


class CreaseConversionTest(unittest.TestCase):
    def test_to_creases(self):
        rule = derive_rule(1)
        pattern = to_creases(substitute(substitute(seed(1), rule), rule))
        self.assertEqual(pattern.extent, 4)
        self.assertEqual("".join(str(s) for s in pattern.signs()), "--+++--+")

    def test_from_creases(self):
        reference = generate_recursive(2, 4)
        rule = derive_rule(2)
        grown = substitute(substitute(seed(2), rule), rule)
        read = from_creases(reference, grown.origin, grown.shape)
        self.assertEqual(read, grown)

        with self.assertRaises(ValueError):
            from_creases(generate_recursive(1, 2), (-2,), (1,))
        with self.assertRaises(ValueError):
            from_creases(generate_recursive(1, 2), (-3,), (2,))
        with self.assertRaises(ValueError):
            from_creases(generate_recursive(1, 2), (0, 0), (1, 1))


class EquivalenceTest(unittest.TestCase):
    def test_substitution_reproduces_the_recursion(self):
        for d, k_max in [(1, 8), (2, 5), (3, 3)]:
            for k in range(k_max + 1):
                report = equivalence_check(d, k)
                self.assertTrue(report.equal)
                self.assertIsNone(report.mismatch)
                self.assertEqual(report.steps, k)
                self.assertEqual(report.faces_compared, d * 2 ** ((k + 1) * d))

    def test_limits(self):
        with self.assertRaises(ValueError):
            equivalence_check(1, -1)
        with self.assertRaises(CellBudgetExceeded):
            equivalence_check(2, 5, cell_budget=2 ** 8)


if __name__ == "__main__":
    unittest.main()
