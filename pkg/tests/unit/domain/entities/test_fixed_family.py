"""Unit tests for FixedFamily."""

import path_setup

path_setup.add_src_path()


import unittest

from eigen_sequences.domain.entities.fixed_family import FixedFamily
from eigen_sequences.domain.entities.fixed_family_kind import FixedFamilyKind


class TestFixedFamily(unittest.TestCase):
    """Tests kind-specific validation."""

    def test_generic_rejects_h_plus_minus_one(self) -> None:
        """The generic family needs h not in {1, -1}."""
        for h in (1, -1):
            with self.assertRaises(ValueError):
                FixedFamily(FixedFamilyKind.GENERIC_LHY, h=h, y=1)

    def test_shifted_requires_base_and_positive_m(self) -> None:
        """Shifts need a base family and m >= 1."""
        base = FixedFamily(FixedFamilyKind.LUCAS_HALF)

        with self.assertRaises(ValueError):
            FixedFamily(FixedFamilyKind.SHIFTED, m=1)
        with self.assertRaises(ValueError):
            FixedFamily(FixedFamilyKind.SHIFTED, base=base, m=0)
        self.assertEqual(FixedFamily(FixedFamilyKind.SHIFTED, base=base, m=2).m, 2)

    def test_even_seed_requires_seed(self) -> None:
        """The even-seed family needs a seed sequence."""
        with self.assertRaises(ValueError):
            FixedFamily(FixedFamilyKind.EVEN_SEED, h=1, y=1)
