import unittest

from hypothesis import given, settings

from stanley.config import Limits
from stanley.exceptions import CapExceededError, ZeroIdealError
from stanley.ideals import SqfIdeal
from stanley.schmitt_vogel import check_sv_witness, sv_number
from stanley.sdepth import sdepth
from tests.lib.corpora import CUBICS_5, EXAMPLE_ONE, TRIANGLE_IDEAL, principal
from tests.lib.strategies import squarefree_ideals


class TestSvNumber(unittest.TestCase):
    def test_principal(self):
        for n in range(1, 5):
            self.assertEqual(sv_number(principal(n)).value, 1)

    def test_first_worked_ideal(self):
        result = sv_number(EXAMPLE_ONE)
        self.assertEqual(result.value, 2)
        self.assertTrue(check_sv_witness(EXAMPLE_ONE, result.witness))

    def test_cubics_in_five_variables(self):
        result = sv_number(CUBICS_5)
        self.assertEqual(result.value, 3)
        self.assertTrue(check_sv_witness(CUBICS_5, result.witness))

    def test_maximal_ideal_needs_one_level_per_variable(self):
        self.assertEqual(sv_number(SqfIdeal.maximal(3)).value, 3)

    def test_triangle(self):
        self.assertEqual(sv_number(TRIANGLE_IDEAL).value, 2)

    def test_witness_does_not_depend_on_the_listed_order(self):
        supports = [[1, 2], [1, 3], [2, 3, 4], [3, 4]]
        first = sv_number(SqfIdeal.from_supports(4, supports))
        second = sv_number(SqfIdeal.from_supports(4, supports[::-1]))
        self.assertEqual(first.value, second.value)
        self.assertEqual(first.witness, second.witness)

    def test_zero_ideal(self):
        self.assertRaises(ZeroIdealError, lambda: sv_number(SqfIdeal.zero(2)))

    def test_cap(self):
        limits = Limits(sv_max_generators=5)
        self.assertRaises(CapExceededError, lambda: sv_number(CUBICS_5, limits=limits))

    @settings(max_examples=60, deadline=None)
    @given(squarefree_ideals(max_n=5))
    def test_witness_partitions_the_generators(self, ideal):
        result = sv_number(ideal)
        self.assertTrue(check_sv_witness(ideal, result.witness))
        masks = [u.mask for level in result.witness.levels for u in level]
        self.assertEqual(sorted(masks), sorted(ideal.masks))
        self.assertEqual(result.witness.r, result.value)

    @settings(max_examples=40, deadline=None)
    @given(squarefree_ideals(max_n=4))
    def test_bounds_on_stanley_depth(self, ideal):
        r = sv_number(ideal).value
        self.assertGreaterEqual(sdepth(ideal, "quotient").value, ideal.n - r)
        self.assertGreaterEqual(sdepth(ideal, "ideal").value, ideal.n - r + 1)
