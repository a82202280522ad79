import unittest

from hypothesis import given, settings

from stanley._bits import full_mask, popcount
from stanley.config import Limits
from stanley.depth import (
    HomologyProfile,
    depth_ideal,
    depth_quotient,
    matrix_rank,
    projective_dimension,
    reduced_homology_ranks,
    stanley_reisner,
    torsion_check,
)
from stanley.exceptions import CapExceededError, UnitIdealError, ZeroIdealError
from stanley.ideals import SqfIdeal
from tests.lib.corpora import EXAMPLE_ONE, TRIANGLE_IDEAL, principal
from tests.lib.strategies import squarefree_ideals


class TestStanleyReisner(unittest.TestCase):
    def test_principal(self):
        complex_ = stanley_reisner(SqfIdeal.from_supports(2, [[1, 2]]))
        self.assertEqual(sorted(complex_.faces()), [0, 0b01, 0b10])

    def test_zero_ideal_is_the_full_simplex(self):
        self.assertEqual(len(list(stanley_reisner(SqfIdeal.zero(2)).faces())), 4)

    def test_triangle_ideal_gives_isolated_vertices(self):
        complex_ = stanley_reisner(TRIANGLE_IDEAL)
        self.assertEqual(sorted(complex_.faces()), [0, 0b001, 0b010, 0b100])

    def test_unit_ideal(self):
        self.assertRaises(UnitIdealError, lambda: stanley_reisner(SqfIdeal.unit(2)))


class TestReducedHomology(unittest.TestCase):
    def test_simplex_is_acyclic(self):
        ranks = reduced_homology_ranks(stanley_reisner(SqfIdeal.zero(3)))
        self.assertTrue(all(rank == 0 for rank in ranks))

    def test_two_points(self):
        ranks = reduced_homology_ranks(stanley_reisner(principal(2)))
        self.assertEqual(ranks, (0, 1))

    def test_hollow_triangle(self):
        ranks = reduced_homology_ranks(stanley_reisner(principal(3)))
        self.assertEqual(ranks, (0, 0, 1))

    def test_irrelevant_complex(self):
        ranks = reduced_homology_ranks(stanley_reisner(SqfIdeal.maximal(2)))
        self.assertEqual(ranks, (1,))

    def test_profile_lists_nonzero_ranks(self):
        profile = HomologyProfile.of(stanley_reisner(principal(2)))
        self.assertIn((0b11, 0, 1), profile.nonzero())

    def test_ranks_over_both_fields(self):
        self.assertEqual(matrix_rank([[2, 4], [1, 2]]), 1)
        self.assertEqual(matrix_rank([[3, 0], [0, 3]]), 2)
        self.assertEqual(matrix_rank([[3, 0], [0, 3]], "Fp", 3), 0)
        self.assertEqual(matrix_rank([[1, 1], [1, -1]], "Fp", 5), 2)


class TestHochsterDepth(unittest.TestCase):
    def test_principal(self):
        for n in range(2, 7):
            with self.subTest(n=n):
                self.assertEqual(depth_quotient(principal(n), n), n - 1)
                self.assertEqual(depth_ideal(principal(n), n), n)

    def test_maximal_ideal(self):
        self.assertEqual(depth_quotient(SqfIdeal.maximal(3)), 0)
        self.assertEqual(depth_ideal(SqfIdeal.maximal(2)), 1)

    def test_triangle(self):
        self.assertEqual(depth_quotient(TRIANGLE_IDEAL), 1)
        self.assertEqual(depth_ideal(TRIANGLE_IDEAL), 2)
        pd = projective_dimension(TRIANGLE_IDEAL)
        self.assertEqual((pd.value, pd.sigma, pd.homology_dimension), (2, 0b111, 0))

    def test_free_variables_add_to_depth(self):
        self.assertEqual(depth_quotient(EXAMPLE_ONE, 4), 2)
        self.assertEqual(depth_quotient(EXAMPLE_ONE, 6), 4)

    def test_zero_ideal(self):
        self.assertEqual(depth_quotient(SqfIdeal.zero(3)), 3)
        self.assertRaises(ZeroIdealError, lambda: depth_ideal(SqfIdeal.zero(3)))

    def test_unit_ideal(self):
        self.assertRaises(UnitIdealError, lambda: depth_quotient(SqfIdeal.unit(3)))

    def test_too_few_active_variables(self):
        self.assertRaises(ValueError, lambda: depth_quotient(EXAMPLE_ONE, 3))

    def test_cap(self):
        limits = Limits(hochster_max_m=3)
        self.assertRaises(
            CapExceededError, lambda: depth_quotient(principal(4), limits=limits)
        )

    def test_fields_agree(self):
        modular = Limits(field="Fp")
        self.assertEqual(depth_quotient(EXAMPLE_ONE, limits=modular), 2)
        self.assertTrue(torsion_check(EXAMPLE_ONE))

    @settings(max_examples=80, deadline=None)
    @given(squarefree_ideals(max_n=5))
    def test_pd_is_bounded_by_the_support(self, ideal):
        pd = projective_dimension(ideal)
        self.assertGreaterEqual(pd.value, 1)
        self.assertLessEqual(pd.value, popcount(ideal.support_mask))
        self.assertEqual(pd.sigma & ~full_mask(ideal.n), 0)

    @settings(max_examples=40, deadline=None)
    @given(squarefree_ideals(max_n=5))
    def test_no_torsion_on_few_vertices(self, ideal):
        self.assertTrue(torsion_check(ideal))
