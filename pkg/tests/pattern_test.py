# encoding: utf-8
import unittest

import numpy as np

from paperfold.creases import (
    CreasePattern,
    FaceId,
    OrthantLabel,
    Sign,
    build_S1,
    coarsen,
    face_count,
    generate_recursive,
    orthant_reflection,
    reflect,
    refines,
)
from paperfold.creases.recursion import _generate
from paperfold.exceptions import CellBudgetExceeded


def signs(pattern):
    return "".join(str(s) for s in pattern.signs())


class CreasePatternTest(unittest.TestCase):
    def test_from_faces(self):
        faces = {FaceId(1, (0, -1)): Sign.CREST, FaceId(2, (-1, 1)): Sign.VALLEY}
        pattern = CreasePattern.from_faces(2, 1, faces)
        self.assertEqual(len(pattern), 2)
        self.assertEqual(pattern.faces, faces)
        self.assertIs(pattern[FaceId(1, (0, -1))], Sign.CREST)
        self.assertNotIn(FaceId(1, (1, -1)), pattern)
        self.assertIsNone(pattern.get(FaceId(1, (5, 5))))

        with self.assertRaises(KeyError):
            pattern[FaceId(2, (0, 0))]

    def test_faces_outside_the_box(self):
        cases = [
            {"face": FaceId(1, (2, 0)), "description": "beyond the own axis"},
            {"face": FaceId(1, (0, 1)), "description": "beyond another axis"},
            {"face": FaceId(3, (0, 0)), "description": "no such axis"},
            {"face": FaceId(0, (0, 0)), "description": "axes count from one"},
        ]
        pattern = build_S1(2)
        for case in cases:
            with self.assertRaises(ValueError):
                CreasePattern.from_faces(2, 1, {case["face"]: Sign.VALLEY})
            self.assertIsNone(pattern.get(case["face"]))
            self.assertNotIn(case["face"], pattern)

    def test_immutable(self):
        pattern = build_S1(2)
        with self.assertRaises(ValueError):
            pattern.grids[0][0, 0] = 1

    def test_build_S1(self):
        self.assertEqual(signs(build_S1(1)), "+")
        pattern = build_S1(2)
        expected = {
            FaceId(1, (0, -1)): Sign.VALLEY,
            FaceId(1, (0, 0)): Sign.VALLEY,
            FaceId(2, (-1, 0)): Sign.CREST,
            FaceId(2, (0, 0)): Sign.VALLEY,
        }
        self.assertEqual(pattern.faces, expected)
        for d in range(1, 5):
            self.assertEqual(len(build_S1(d)), d * 2 ** (d - 1))

    def test_reflect(self):
        pattern = reflect(build_S1(2), 2)
        expected = {
            FaceId(1, (0, -1)): Sign.CREST,
            FaceId(1, (0, 0)): Sign.CREST,
            FaceId(2, (-1, 0)): Sign.VALLEY,
            FaceId(2, (0, 0)): Sign.CREST,
        }
        self.assertEqual(pattern.faces, expected)

        for d in range(1, 4):
            p = generate_recursive(d, 2)
            for axis in range(1, d + 1):
                self.assertEqual(reflect(reflect(p, axis), axis), p)

        with self.assertRaises(ValueError):
            reflect(build_S1(2), 3)

    def test_orthant_reflection(self):
        p = generate_recursive(2, 2)
        phi = OrthantLabel((-1, -1))
        self.assertEqual(orthant_reflection(phi, p), reflect(reflect(p, 2), 1))
        self.assertEqual(orthant_reflection(OrthantLabel((1, 1)), p), p)
        with self.assertRaises(ValueError):
            orthant_reflection(OrthantLabel((1,)), p)

    def test_window(self):
        pattern = generate_recursive(1, 3)
        window = pattern.window(2)
        self.assertEqual(window.extent, 2)
        self.assertEqual(signs(window), "-++-")
        self.assertEqual(len(pattern.window(0)), 0)

        with self.assertRaises(ValueError):
            pattern.window(5)


class RecursionTest(unittest.TestCase):
    def test_cache_is_bounded(self):
        for n in range(12):
            generate_recursive(1, n)
        self.assertLessEqual(_generate.cache_info().currsize, 4)

    def test_one_dimension(self):
        test_cases = (
            {"n": 0, "expected": ""},
            {"n": 1, "expected": "+"},
            {"n": 2, "expected": "-++"},
            {"n": 3, "expected": "--++-++"},
            {"n": 4, "expected": "--+--+++--++-++"},
        )
        for case in test_cases:
            self.assertEqual(signs(generate_recursive(1, case["n"])), case["expected"])

    def test_face_count(self):
        test_cases = (
            {"d": 1, "n": 5, "expected": 31},
            {"d": 2, "n": 1, "expected": 4},
            {"d": 2, "n": 2, "expected": 24},
            {"d": 3, "n": 1, "expected": 12},
        )
        for case in test_cases:
            self.assertEqual(face_count(case["d"], case["n"]), case["expected"])

        for d, n in [(1, 6), (2, 4), (3, 3)]:
            self.assertEqual(len(generate_recursive(d, n)), face_count(d, n))

    def test_every_interior_face_is_a_crease(self):
        for d, n in [(1, 5), (2, 3), (3, 2)]:
            pattern = generate_recursive(d, n)
            h = pattern.extent
            for grid in pattern.grids:
                interior = grid[(slice(1, 2 * h),) * d]
                self.assertTrue(np.all(interior != 0))

    def test_generation_refines_the_previous_one(self):
        for d, n_max in [(1, 6), (2, 4), (3, 3)]:
            for n in range(1, n_max):
                fine = generate_recursive(d, n + 1)
                coarse = generate_recursive(d, n)
                self.assertTrue(refines(fine, coarse))
                self.assertEqual(coarsen(fine), coarse)

        self.assertFalse(refines(generate_recursive(2, 3), generate_recursive(1, 2)))
        with self.assertRaises(ValueError):
            coarsen(build_S1(2))

    def test_cell_budget(self):
        with self.assertRaises(CellBudgetExceeded):
            generate_recursive(2, 6, cell_budget=2 ** 10)
        with self.assertRaises(ValueError):
            generate_recursive(0, 2)
        with self.assertRaises(ValueError):
            generate_recursive(1, -1)


if __name__ == "__main__":
    unittest.main()
