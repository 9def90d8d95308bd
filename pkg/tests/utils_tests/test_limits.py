import unittest

import pytest

from tracetensor.utils.limits import DimensionLimitError
from tracetensor.utils.limits import check_dimension
from tracetensor.utils.limits import max_dimension


class TestMaxDimension(unittest.TestCase):
    @pytest.fixture(autouse=True)
    def clear_env(self, monkeypatch):
        self.monkeypatch = monkeypatch
        monkeypatch.delenv("TCI_MAX_DIM", raising=False)

    def test_default(self):
        self.assertEqual(max_dimension(), 4096)

    def test_env(self):
        self.monkeypatch.setenv("TCI_MAX_DIM", "27")
        self.assertEqual(max_dimension(), 27)
        self.assertEqual(check_dimension(3, 3), 27)
        with self.assertRaises(DimensionLimitError):
            check_dimension(2, 5)

    def test_blank_env(self):
        self.monkeypatch.setenv("TCI_MAX_DIM", " ")
        self.assertEqual(max_dimension(), 4096)

    def test_invalid_env(self):
        for value in ("abc", "0", "-3"):
            self.monkeypatch.setenv("TCI_MAX_DIM", value)
            with self.assertRaises(ValueError):
                max_dimension()

    def test_check_dimension(self):
        self.assertEqual(check_dimension(2, 12), 4096)
        self.assertEqual(check_dimension(5, 0), 1)
        with self.assertRaises(DimensionLimitError) as cm:
            check_dimension(2, 13)
        self.assertIn("TCI_MAX_DIM", str(cm.exception))
        self.assertIsInstance(cm.exception, ValueError)
