import unittest

from tracetensor.tracering import CyclicWord
from tracetensor.tracering import cyclic_canonicalize
from tracetensor.tracering import format_word
from tracetensor.tracering import make_word
from tracetensor.tracering import parse_word
from tracetensor.tracering import rotate


class TestCyclicCanonicalize(unittest.TestCase):
    def test_minimal_rotation(self):
        self.assertEqual(cyclic_canonicalize([2, 1, 3]).letters, (1, 3, 2))
        self.assertEqual(cyclic_canonicalize([1, 1]).letters, (1, 1))
        self.assertEqual(cyclic_canonicalize([2, 1, 2, 1, 1]).letters, (1, 1, 2, 1, 2))

    def test_rotations_agree(self):
        w = (1, 2, 3)
        classes = {cyclic_canonicalize(rotate(w, j)) for j in range(3)}
        self.assertEqual(len(classes), 1)
        self.assertNotEqual(CyclicWord((1, 2, 3)), CyclicWord((1, 3, 2)))

    def test_stable_under_rotation(self):
        w = (3, 1, 4, 1, 5, 2)
        base = cyclic_canonicalize(w)
        for j in range(len(w)):
            self.assertEqual(cyclic_canonicalize(rotate(w, j)), base)
            self.assertEqual(cyclic_canonicalize(base), base)

    def test_empty_word_rejected(self):
        with self.assertRaises(ValueError):
            cyclic_canonicalize([])
        with self.assertRaises(ValueError):
            make_word([0, 1])


class TestWordText(unittest.TestCase):
    def test_format(self):
        self.assertEqual(format_word(()), "1")
        self.assertEqual(format_word((1, 3, 3)), "x1*x3^2")
        self.assertEqual(str(CyclicWord((2, 1))), "tr(x1*x2)")

    def test_parse(self):
        self.assertEqual(parse_word("x1*x3^2"), (1, 3, 3))
        self.assertEqual(parse_word("1"), ())
        with self.assertRaises(ValueError):
            parse_word("x1*y2")
