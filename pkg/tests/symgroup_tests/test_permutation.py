import unittest

import pytest

from tracetensor.symgroup import Permutation
from tracetensor.symgroup import compose
from tracetensor.symgroup import direct_product
from tracetensor.symgroup import format_cycles
from tracetensor.symgroup import parse_cycles
from tracetensor.symgroup import parse_index_set
from tracetensor.symgroup import parse_one_line
from tracetensor.symgroup import sign
from tracetensor.symgroup import symmetric_group


class TestPermutation(unittest.TestCase):
    def test_invalid_images(self):
        with self.assertRaises(ValueError):
            Permutation([1, 1, 2])
        with self.assertRaises(ValueError):
            Permutation([0, 1])

    def test_compose_convention(self):
        p = Permutation.from_cycles(3, [(1, 2)])
        q = Permutation.from_cycles(3, [(2, 3)])
        self.assertEqual(compose(p, q), Permutation.from_cycles(3, [(1, 2, 3)]))
        self.assertEqual((p * q)(1), p(q(1)))

    def test_compose_identity_and_inverse(self):
        for p in symmetric_group(4):
            self.assertEqual(compose(Permutation.identity(4), p), p)
            self.assertTrue(compose(p, p.inverse()).is_identity())

    def test_compose_degree_mismatch(self):
        with self.assertRaises(ValueError):
            compose(Permutation.identity(2), Permutation.identity(3))

    def test_sign(self):
        self.assertEqual(sign(Permutation.identity(5)), 1)
        self.assertEqual(sign(Permutation.from_cycles(4, [(1, 2)])), -1)
        seven_cycle = parse_cycles("(1,7,8,4,2,6,3)", 8)
        self.assertEqual(sign(seven_cycle), 1)

    def test_sign_is_multiplicative(self):
        perms = list(symmetric_group(4))
        for p in perms[::3]:
            for q in perms[::5]:
                self.assertEqual(sign(p * q), sign(p) * sign(q))

    def test_cycles_round_trip(self):
        for p in symmetric_group(5):
            self.assertEqual(Permutation.from_cycles(5, p.cycles()), p)

    def test_cycle_type(self):
        p = parse_cycles("(1,3)(2,5,4)", 6)
        self.assertEqual(p.cycle_type(), (3, 2, 1))
        self.assertEqual(p.support(), [1, 2, 3, 4, 5])

    def test_embed_and_restrict(self):
        p = Permutation.from_cycles(2, [(1, 2)])
        q = p.embed(4, offset=2)
        self.assertEqual(q, Permutation.from_cycles(4, [(3, 4)]))
        self.assertEqual(q.restrict([3, 4]), p)
        with self.assertRaises(ValueError):
            q.restrict([2, 3])

    def test_direct_product(self):
        p = Permutation.from_cycles(2, [(1, 2)])
        q = Permutation.from_cycles(3, [(1, 3)])
        self.assertEqual(
            direct_product(p, q), Permutation.from_cycles(5, [(1, 2), (3, 5)]))


class TestNotation(unittest.TestCase):
    def test_format(self):
        self.assertEqual(format_cycles(Permutation.identity(3)), "id")
        p = Permutation([2, 1, 4, 3])
        self.assertEqual(format_cycles(p), "(1,2)(3,4)")
        self.assertEqual(str(parse_cycles("(3,1,2)", 3)), "(1,2,3)")

    def test_parse_products(self):
        # cycles compose right to left
        p = parse_cycles("(1,2)(2,3)", 3)
        self.assertEqual(p, Permutation.from_cycles(3, [(1, 2, 3)]))
        self.assertTrue(parse_cycles("id", 4).is_identity())
        self.assertTrue(parse_cycles("", 4).is_identity())

    def test_parse_errors(self):
        with self.assertRaises(ValueError):
            parse_cycles("(1,2", 3)
        with self.assertRaises(ValueError):
            parse_cycles("(1,a)", 3)
        with self.assertRaises(ValueError):
            parse_cycles("(1,4)", 3)
        with self.assertRaises(ValueError):
            parse_one_line("2,x")
        with self.assertRaises(ValueError):
            parse_index_set("1,,b")

    def test_one_line(self):
        self.assertEqual(parse_one_line("2,1,3"), Permutation.from_cycles(3, [(1, 2)]))
        self.assertEqual(parse_index_set("3, 1,2"), [1, 2, 3])


@pytest.mark.parametrize("m", [1, 2, 3, 4])
class TestSymmetricGroup:
    @pytest.fixture(autouse=True)
    def setUp(self, m):
        self.m = m
        self.perms = list(symmetric_group(m))

    def test_order(self):
        order = 1
        for i in range(2, self.m + 1):
            order *= i
        assert len(self.perms) == order
        assert len(set(self.perms)) == order

    def test_associativity(self):
        sample = self.perms[:6]
        for p in sample:
            for q in sample:
                for r in sample:
                    assert (p * q) * r == p * (q * r)

    def test_conjugate(self):
        for p in self.perms:
            for g in self.perms[:4]:
                c = p.conjugate(g)
                assert c == g * p * g.inverse()
                assert c.cycle_type() == p.cycle_type()
