import random
import unittest

import numpy as np

import tracetensor
from tracetensor.testing import random_twisted_element


class TestSetRandomSeed(unittest.TestCase):
    def test_random(self):
        tracetensor.utils.set_random_seed(0)
        seed0_0 = random.random()
        tracetensor.utils.set_random_seed(1)
        seed1_0 = random.random()
        tracetensor.utils.set_random_seed(0)
        seed0_1 = random.random()
        tracetensor.utils.set_random_seed(1)
        seed1_1 = random.random()
        self.assertEqual(seed0_0, seed0_1)
        self.assertEqual(seed1_0, seed1_1)
        self.assertNotEqual(seed0_0, seed1_0)

    def test_numpy_random(self):
        tracetensor.utils.set_random_seed(0)
        seed0_0 = np.random.rand()
        tracetensor.utils.set_random_seed(1)
        seed1_0 = np.random.rand()
        tracetensor.utils.set_random_seed(0)
        seed0_1 = np.random.rand()
        self.assertEqual(seed0_0, seed0_1)
        self.assertNotEqual(seed0_0, seed1_0)

    def test_random_elements(self):
        tracetensor.utils.set_random_seed(3)
        a = random_twisted_element(3, 2, n_terms=5)
        tracetensor.utils.set_random_seed(3)
        b = random_twisted_element(3, 2, n_terms=5)
        self.assertEqual(a, b)
