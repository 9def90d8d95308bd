import unittest

import numpy as np
import pytest

from tracetensor.symgroup import GroupAlgebraElement
from tracetensor.symgroup import Permutation
from tracetensor.symgroup import parse_cycles
from tracetensor.symgroup import symmetric_group
from tracetensor.testing import assert_elements_equal
from tracetensor.testing import random_twisted_element
from tracetensor.tracering import TraceScalar
from tracetensor.twisted import TwistedElement
from tracetensor.twisted import from_group_algebra
from tracetensor.twisted import outer_product
from tracetensor.twisted import permutation_element
from tracetensor.twisted import scalar
from tracetensor.twisted import tensor_monomial
from tracetensor.twisted import tw_mul
from tracetensor.twisted import unit

L = TraceScalar.lam()


class TestNormalForm(unittest.TestCase):
    def test_unit(self):
        a = tensor_monomial([(1,), (2, 1)]) * parse_cycles("(1,2)", 2)
        self.assertEqual(tw_mul(unit(2), a), a)
        self.assertEqual(tw_mul(a, unit(2)), a)

    def test_commuting_relation(self):
        s = permutation_element(parse_cycles("(1,2)", 2))
        x = tensor_monomial([(1,), ()])
        expected = TwistedElement(2, {(((), (1,)), parse_cycles("(1,2)", 2)): 1})
        self.assertEqual(tw_mul(s, x), expected)

    def test_tensor_words_multiply_slotwise(self):
        a = tensor_monomial([(1,), (2,)])
        b = tensor_monomial([(2,), (1, 1)])
        self.assertEqual(a * b, tensor_monomial([(1, 2), (2, 1, 1)]))

    def test_arity_mismatch(self):
        with self.assertRaises(ValueError):
            tw_mul(unit(2), unit(3))
        with self.assertRaises(ValueError):
            TwistedElement(2, {(((1,),), Permutation.identity(2)): 1})

    def test_zero_terms_dropped(self):
        a = tensor_monomial([(1,)])
        self.assertFalse(a - a)
        self.assertEqual(len(a * 0), 0)

    def test_group_algebra_embedding(self):
        g = GroupAlgebraElement(3, {parse_cycles("(1,2)", 3): 2,
                                    parse_cycles("(2,3)", 3): -1})
        h = GroupAlgebraElement(3, {parse_cycles("(1,2,3)", 3): 1,
                                    Permutation.identity(3): 3})
        self.assertEqual(from_group_algebra(g * h),
                         from_group_algebra(g) * from_group_algebra(h))

    def test_scalar(self):
        a = tensor_monomial([(1,), ()])
        self.assertEqual(scalar(2, L) * a, a.scale(L))
        self.assertEqual(L * a, a * L)

    def test_conjugation_is_place_permutation(self):
        words = [(1,), (2, 1), ()]
        for sigma in symmetric_group(3):
            conj = tensor_monomial(words).conjugate(sigma)
            inv = sigma.inverse()
            moved = [words[inv(i) - 1] for i in range(1, 4)]
            self.assertEqual(conj, tensor_monomial(moved))

    def test_rename_and_variables(self):
        a = tensor_monomial([(1, 2), (3,)], TraceScalar.trace((2,)))
        b = a.rename_variables({2: 5})
        self.assertEqual(b.variables(), {1, 3, 5})
        self.assertEqual(b.degree_in(5), {2})
        self.assertTrue(tensor_monomial([(1, 2), (3,)]).is_multilinear(3))
        self.assertFalse(a.is_multilinear(3))

    def test_specialize(self):
        a = tensor_monomial([(1,)], L - 1)
        self.assertEqual(a.specialize_lambda(1), TwistedElement(1))
        self.assertFalse(a.specialize_lambda(3).has_lambda())


class TestOuterProduct(unittest.TestCase):
    def test_pad(self):
        a = tensor_monomial([(1,), (2,)]) * parse_cycles("(1,2)", 2)
        padded = outer_product(a, unit(1))
        expected = tensor_monomial([(1,), (2,), ()]) * parse_cycles("(1,2)", 3)
        self.assertEqual(padded, expected)

    def test_scalar_factor(self):
        a = tensor_monomial([(1,), (2,)])
        t = scalar(0, TraceScalar.trace((3,)))
        self.assertEqual(outer_product(t, a), a.scale(TraceScalar.trace((3,))))

    def test_embedding(self):
        a = permutation_element(parse_cycles("(1,2)", 2))
        b = permutation_element(parse_cycles("(1,2)", 2))
        self.assertEqual(
            outer_product(a, b), permutation_element(parse_cycles("(1,2)(3,4)", 4)))


@pytest.mark.parametrize("n,k", [(1, 2), (2, 2), (3, 3)])
class TestAlgebraProperties:
    @pytest.fixture(autouse=True)
    def setUp(self, n, k):
        self.n = n
        self.k = k
        self.rng = np.random.RandomState(n * 7 + k)

    def sample(self, n=None):
        return random_twisted_element(
            self.n if n is None else n, self.k, random_state=self.rng)

    def test_associativity(self):
        for _ in range(30):
            a, b, c = self.sample(), self.sample(), self.sample()
            assert_elements_equal(tw_mul(tw_mul(a, b), c), tw_mul(a, tw_mul(b, c)))

    def test_distributivity(self):
        for _ in range(10):
            a, b, c = self.sample(), self.sample(), self.sample()
            assert_elements_equal(a * (b + c), a * b + a * c)

    def test_outer_product_is_homomorphism(self):
        for _ in range(10):
            a, a2 = self.sample(), self.sample()
            b, b2 = self.sample(2), self.sample(2)
            assert_elements_equal(
                outer_product(a * a2, b * b2),
                outer_product(a, b) * outer_product(a2, b2))

    def test_insertion_order_irrelevant(self):
        a = self.sample()
        terms = list(a.terms.items())
        assert TwistedElement(self.n, dict(reversed(terms))) == a
        rebuilt = TwistedElement(self.n)
        for key, coeff in reversed(terms):
            rebuilt = rebuilt + TwistedElement(self.n, {key: coeff})
        assert rebuilt == a
