# encoding: utf-8
import json
import unittest

from paperfold.creases import Sign, build_S1, generate_recursive
from paperfold.export import (
    RenderStyle,
    dumps,
    loads,
    pattern_from_json,
    pattern_to_json,
    render_svg,
    symbolic_from_json,
    symbolic_to_json,
)
from paperfold.substitution import seed


class SerializeTest(unittest.TestCase):
    def test_pattern_document(self):
        document = pattern_to_json(build_S1(1))
        self.assertEqual(
            document,
            {"d": 1, "extent": 1, "faces": [{"axis": 1, "corner": [0], "sign": "+"}]},
        )
        self.assertEqual(
            dumps(document),
            '{"d": 1, "extent": 1, "faces": [{"axis": 1, "corner": [0], "sign": "+"}]}\n',
        )

        pattern = generate_recursive(2, 3)
        text = dumps(pattern_to_json(pattern))
        self.assertEqual(pattern_from_json(text), pattern)
        # Faces come out in (axis, corner) order.
        faces = json.loads(text)["faces"]
        keys = [(f["axis"], f["corner"]) for f in faces]
        self.assertEqual(keys, sorted(keys))

    def test_malformed_pattern_documents(self):
        cases = [
            {"text": "[1, 2]", "description": "not an object"},
            {"text": '{"d": 1, "extent": 1}', "description": "no faces"},
            {"text": '{"d": "1", "extent": 1, "faces": []}', "description": "d is a string"},
            {
                "text": '{"d": 1, "extent": 1, "faces": [{"axis": 1, "corner": [0, 0], "sign": "+"}]}',
                "description": "corner of the wrong length",
            },
            {
                "text": '{"d": 1, "extent": 1, "faces": [{"axis": 1, "corner": [0], "sign": "x"}]}',
                "description": "unknown sign",
            },
            {
                "text": '{"d": 1, "extent": 1, "faces": [{"axis": 1, "corner": [4], "sign": "+"}]}',
                "description": "outside the box",
            },
            {
                "text": '{"d": 1, "extent": 1, "faces": ['
                '{"axis": 1, "corner": [0], "sign": "+"}, '
                '{"axis": 1, "corner": [0], "sign": "-"}]}',
                "description": "duplicate face",
            },
        ]
        for case in cases:
            with self.assertRaises(ValueError):
                pattern_from_json(case["text"])

    def test_symbolic_document(self):
        document = symbolic_to_json(seed(1))
        self.assertEqual(document, {"d": 1, "origin": [-1], "shape": [2], "letters": [3, 0]})
        self.assertEqual(symbolic_from_json(dumps(symbolic_to_json(seed(2)))), seed(2))

        with self.assertRaises(ValueError):
            symbolic_from_json({"d": 1, "origin": [0], "shape": [1], "letters": [4]})
        with self.assertRaises(ValueError):
            symbolic_from_json({"d": 1, "origin": [0], "shape": [2], "letters": [1]})
        with self.assertRaises(ValueError):
            symbolic_from_json({"d": 0, "origin": [], "shape": [], "letters": []})

    def test_loads(self):
        self.assertEqual(loads('{"a": 1}'), {"a": 1})
        with self.assertRaises(ValueError):
            loads("3")


class SvgTest(unittest.TestCase):
    def test_line_per_crease(self):
        for d, n in [(1, 3), (2, 2), (2, 3)]:
            pattern = generate_recursive(d, n)
            svg = render_svg(pattern)
            self.assertTrue(svg.startswith('<?xml version="1.0" encoding="UTF-8"?>\n<svg'))
            self.assertTrue(svg.endswith("</svg>\n"))
            self.assertEqual(svg.count("<line"), len(pattern))
            crests = sum(1 for s in pattern.signs() if s is Sign.CREST)
            self.assertEqual(svg.count("stroke-dasharray"), crests)

    def test_geometry(self):
        svg = render_svg(build_S1(1), RenderStyle(cell_size=10, margin=5))
        self.assertIn('width="30" height="20"', svg)
        self.assertIn('<line x1="15" y1="15" x2="15" y2="5"', svg)

        pattern = generate_recursive(2, 1)
        svg = render_svg(pattern, RenderStyle(cell_size=10, margin=0.5))
        # The crest on axis 2 runs from (-1, 0) to (0, 0); y points up.
        self.assertIn('<line x1="0.5" y1="10.5" x2="10.5" y2="10.5" stroke="#c0392b"', svg)

    def test_deterministic(self):
        pattern = generate_recursive(2, 3)
        self.assertEqual(render_svg(pattern), render_svg(pattern))

    def test_invalid(self):
        with self.assertRaises(ValueError):
            render_svg(build_S1(3))
        with self.assertRaises(ValueError):
            RenderStyle(cell_size=0)
        with self.assertRaises(ValueError):
            RenderStyle(margin=-1.0)


if __name__ == "__main__":
    unittest.main()
