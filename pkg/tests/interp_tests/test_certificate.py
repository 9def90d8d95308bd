import json
import logging
import unittest

import numpy as np
import pytest

from tracetensor.chident import F_kd
from tracetensor.interp import CertificateError
from tracetensor.interp import CertificateStep
from tracetensor.interp import DeductionCertificate
from tracetensor.interp import InterpContext
from tracetensor.interp import STEP_KINDS
from tracetensor.interp import apply_step
from tracetensor.interp import interpret
from tracetensor.interp import reduce_to_basic
from tracetensor.interp import replay_certificate
from tracetensor.interp import sample_reduction_problem
from tracetensor.interp import verify_certificate
from tracetensor.symgroup import Permutation
from tracetensor.symgroup import antisymmetrizer
from tracetensor.symgroup import parse_cycles
from tracetensor.testing import assert_elements_equal
from tracetensor.tracering import TraceScalar
from tracetensor.twisted import outer_product
from tracetensor.twisted import scalar
from tracetensor.twisted import tensor_monomial
from tracetensor.twisted import unit
from tracetensor.utils import dumps_json


def tr(*word):
    return TraceScalar.trace(word)


def _round_trip(cert):
    return DeductionCertificate.from_dict(json.loads(dumps_json(cert.to_dict())))


class TestApplyStep(unittest.TestCase):
    def setUp(self):
        self.a = tensor_monomial([(1,), ()]) * parse_cycles("(1,2)", 2)

    def test_pad_identity(self):
        out = apply_step(self.a, CertificateStep("pad-identity", {"count": 2}))
        assert_elements_equal(out, outer_product(self.a, unit(2)))

    def test_multiply_monomial(self):
        right = apply_step(self.a, CertificateStep(
            "right-multiply-monomial", {"slot": 2, "word": [2]}))
        assert_elements_equal(right, self.a * tensor_monomial([(), (2,)]))
        left = apply_step(self.a, CertificateStep(
            "left-multiply-monomial", {"slot": 1, "word": [2, 3]}))
        assert_elements_equal(left, tensor_monomial([(2, 3), ()]) * self.a)

    def test_substitution(self):
        out = apply_step(self.a, CertificateStep(
            "monomial-substitution", {"variable": 1, "word": [2], "side": "left"}))
        assert_elements_equal(out, tensor_monomial([(2, 1), ()]) * parse_cycles("(1,2)", 2))
        out = apply_step(self.a, CertificateStep(
            "monomial-substitution", {"variable": 1, "word": [2], "side": "right"}))
        assert_elements_equal(out, tensor_monomial([(1, 2), ()]) * parse_cycles("(1,2)", 2))

    def test_permutation_move(self):
        s = parse_cycles("(1,2)", 2)
        step = CertificateStep("permutation-factor-move", {"perm": [2, 1], "side": "left"})
        assert_elements_equal(apply_step(self.a, step), s * self.a)
        step = CertificateStep("permutation-factor-move", {"perm": [2, 1], "side": "right"})
        assert_elements_equal(apply_step(self.a, step), tensor_monomial([(1,), ()]))

    def test_trace_factor(self):
        out = apply_step(self.a, CertificateStep(
            "trace-factor-multiply", {"variables": [2, 3]}))
        assert_elements_equal(out, self.a.scale(tr(2) * tr(3)))

    def test_tensor_split(self):
        step = CertificateStep(
            "tensor-split", {"n": 1, "k": 1, "perm": [2, 1], "shift": 1})
        out = apply_step(self.a, step)
        assert_elements_equal(out, outer_product(self.a, tensor_monomial([(2,)])))

    def test_conjugate(self):
        step = CertificateStep(
            "conjugate", {"perm": [2, 1], "variables": [3], "sign": "-1"})
        out = apply_step(self.a, step)
        expected = tensor_monomial([(), (3,)]) * parse_cycles("(1,2)", 2)
        assert_elements_equal(out, -expected)

    def test_kinds(self):
        self.assertEqual(len(STEP_KINDS), 8)
        self.assertIn("conjugate", STEP_KINDS)


class TestMalformedSteps(unittest.TestCase):
    def setUp(self):
        self.a = scalar(2, tr(1))

    def check(self, kind, params):
        with self.assertRaises(CertificateError):
            apply_step(self.a, CertificateStep(kind, params))

    def test_unknown_kind(self):
        self.check("rotate", {})

    def test_bad_parameters(self):
        self.check("pad-identity", {})
        self.check("pad-identity", {"count": -1})
        self.check("pad-identity", {"count": "2"})
        self.check("right-multiply-monomial", {"slot": 3, "word": [1]})
        self.check("left-multiply-monomial", {"slot": 1, "word": [0]})
        self.check("monomial-substitution", {"variable": 1, "word": [2], "side": "up"})
        self.check("permutation-factor-move", {"perm": [1, 2, 3], "side": "left"})
        self.check("permutation-factor-move", {"perm": [1, 1], "side": "left"})
        self.check("conjugate", {"perm": [1, 2], "variables": [1, 1], "sign": "1"})
        self.check("conjugate", {"perm": [1, 2], "variables": [1], "sign": "x"})
        self.check("tensor-split", {"n": 0, "k": 0, "perm": [], "shift": 0})
        self.check("trace-factor-multiply", {"variables": "12"})

    def test_params_must_be_mapping(self):
        self.check("pad-identity", [1])

    def test_certificate_error_is_value_error(self):
        self.assertTrue(issubclass(CertificateError, ValueError))


class TestCertificate(unittest.TestCase):
    def test_trivial(self):
        cert = DeductionCertificate(2, 3, F_kd(2, 3))
        self.assertTrue(verify_certificate(cert))
        self.assertEqual(cert.base, {"k": 2, "d": 3})

    def test_trivial_wrong_target(self):
        cert = DeductionCertificate(2, 3, F_kd(2, 3).scale(2))
        self.assertFalse(verify_certificate(cert))

    def test_invalid_base(self):
        cert = DeductionCertificate(5, 2, F_kd(1, 2))
        with self.assertRaises(CertificateError):
            replay_certificate(cert)

    def test_from_dict_errors(self):
        with self.assertRaises(CertificateError):
            DeductionCertificate.from_dict({"base": {"k": 1}})
        with self.assertRaises(CertificateError):
            DeductionCertificate.from_dict({
                "base": {"k": 1, "d": 1},
                "target": {"n": 1, "terms": []},
                "steps": [{"kind": "pad-identity"}],
            })

    def test_antisymmetrizer_even_degree(self):
        ctx = InterpContext(1, 2)
        cert = reduce_to_basic(Permutation.identity(3), [1, 2, 3], ctx, 2)
        self.assertEqual(cert.steps, [])
        self.assertEqual((cert.base_k, cert.base_d), (2, 2))
        self.assertTrue(verify_certificate(cert))

    def test_antisymmetrizer_odd_degree(self):
        ctx = InterpContext(2, 1)
        cert = reduce_to_basic(Permutation.identity(3), [1, 2, 3], ctx, 2)
        self.assertEqual(len(cert.steps), 1)
        step = cert.steps[0]
        self.assertEqual(step.kind, "conjugate")
        self.assertEqual(step.params["sign"], "-1")
        self.assertTrue(verify_certificate(cert))

    def test_reduction_with_outside_cycles(self):
        ctx = InterpContext(3, 3)
        sigma = parse_cycles("(1,4,5)(2,6)", 6)
        cert = reduce_to_basic(sigma, [1, 3], ctx, 1)
        target = interpret(sigma * antisymmetrizer(6, [1, 3]), ctx)
        assert_elements_equal(cert.target, target)
        assert_elements_equal(replay_certificate(cert), target)

    def test_corrupted_step(self):
        ctx = InterpContext(2, 3)
        sigma = parse_cycles("(1,3)(2,4,5)", 5)
        cert = reduce_to_basic(sigma, [1, 2, 4], ctx, 2)
        self.assertTrue(verify_certificate(cert))
        self.assertTrue(cert.target)
        kinds = [s.kind for s in cert.steps]
        corrupted = list(cert.steps)
        if "conjugate" in kinds:
            i = kinds.index("conjugate")
            params = dict(corrupted[i].params)
            params["sign"] = str(-int(params["sign"]))
            corrupted[i] = CertificateStep("conjugate", params)
        else:
            corrupted.append(CertificateStep(
                "conjugate", {"perm": [1, 2], "variables": [1, 2, 3], "sign": "-1"}))
        bad = DeductionCertificate(cert.base_k, cert.base_d, cert.target, corrupted)
        self.assertFalse(verify_certificate(bad))

    def test_json_round_trip(self):
        ctx = InterpContext(2, 2)
        cert = reduce_to_basic(parse_cycles("(1,3,2,4)", 4), [2, 3], ctx, 1)
        again = _round_trip(cert)
        self.assertEqual(again.to_dict(), cert.to_dict())
        self.assertTrue(verify_certificate(again))

    def test_logging(self):
        logger = logging.getLogger("test_certificate")
        cert = DeductionCertificate(1, 1, F_kd(1, 1))
        with self.assertLogs(logger, level=logging.INFO):
            verify_certificate(cert, logger=logger)


class TestReductionErrors(unittest.TestCase):
    def test_wrong_size(self):
        ctx = InterpContext(2, 1)
        with self.assertRaises(ValueError):
            reduce_to_basic(Permutation.identity(3), [1, 2], ctx, 2)

    def test_relation_too_large(self):
        ctx = InterpContext(1, 1)
        with self.assertRaises(ValueError):
            reduce_to_basic(Permutation.identity(2), [1, 2, 3], ctx, 2)

    def test_degree_mismatch(self):
        with self.assertRaises(ValueError):
            reduce_to_basic(Permutation.identity(4), [1, 2], InterpContext(1, 1), 1)


@pytest.mark.parametrize("seed", [0, 1, 2, 3, 4])
class TestRandomReductions:
    @pytest.fixture(autouse=True)
    def setUp(self, seed):
        self.rs = np.random.RandomState(seed)

    def test_verifies(self):
        for _ in range(2):
            sigma, C, ctx, d = sample_reduction_problem(self.rs, max_m=6, max_d=2)
            cert = reduce_to_basic(sigma, C, ctx, d)
            expected = interpret(sigma * antisymmetrizer(ctx.m, C), ctx)
            assert_elements_equal(replay_certificate(cert), expected)
            assert verify_certificate(_round_trip(cert))


@pytest.mark.slow
def test_fifty_random_certificates():
    rs = np.random.RandomState(2024)
    for _ in range(50):
        sigma, C, ctx, d = sample_reduction_problem(rs, max_m=8, max_d=3)
        cert = reduce_to_basic(sigma, C, ctx, d)
        expected = interpret(sigma * antisymmetrizer(ctx.m, C), ctx)
        assert_elements_equal(cert.target, expected)
        assert verify_certificate(cert)
