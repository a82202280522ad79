import unittest
from itertools import permutations

from hypothesis import given, settings

from stanley.clutters import Clutter, d_complement, edge_ideal
from stanley.depth import depth_quotient
from stanley.exceptions import (
    EdgeCardinalityError,
    InvalidOrderError,
    NotChordalError,
    ZeroIdealError,
)
from stanley.harness.instances import generate_chordal_clutters
from stanley.ideals import SqfIdeal
from stanley.linear_quotients import (
    check_lq_order,
    chordal_lq_order,
    colon_prev,
    depth_from_lq,
    find_lq_order,
    pd_from_lq,
)
from tests.lib.brute_force import all_clutters, all_squarefree_monomials
from tests.lib.corpora import (
    FOUR_CYCLE,
    SINGLE_EDGE,
    TRIANGLE,
    TRIANGLE_IDEAL,
    principal,
)
from tests.lib.strategies import squarefree_ideals


def order_of(ideal: SqfIdeal, *supports):
    return [g for s in supports for g in ideal.generators if list(g.indices) == s]


class TestColonPrev(unittest.TestCase):
    def test_two_generators(self):
        ideal = SqfIdeal.from_supports(3, [[1, 2], [1, 3]])
        order = order_of(ideal, [1, 2], [1, 3])
        self.assertEqual(colon_prev(order, 2), SqfIdeal.from_supports(3, [[2]]))

    def test_repeated_quotients_collapse(self):
        order = order_of(TRIANGLE_IDEAL, [1, 2], [1, 3], [2, 3])
        self.assertEqual(colon_prev(order, 3), SqfIdeal.from_supports(3, [[1]]))

    def test_coprime_generators(self):
        ideal = SqfIdeal.from_supports(4, [[1, 2], [3, 4]])
        order = order_of(ideal, [1, 2], [3, 4])
        self.assertEqual(colon_prev(order, 2), SqfIdeal.from_supports(4, [[1, 2]]))

    def test_position_range(self):
        order = order_of(TRIANGLE_IDEAL, [1, 2], [1, 3], [2, 3])
        self.assertRaises(IndexError, lambda: colon_prev(order, 1))
        self.assertRaises(IndexError, lambda: colon_prev(order, 4))


class TestCheckLqOrder(unittest.TestCase):
    def test_triangle(self):
        check = check_lq_order(
            TRIANGLE_IDEAL, order_of(TRIANGLE_IDEAL, [1, 2], [1, 3], [2, 3])
        )
        self.assertTrue(check)
        self.assertEqual(check.lq.colon_counts, (1, 1))
        self.assertEqual(pd_from_lq(check.lq), 2)

    def test_coprime_generators_fail_at_the_second(self):
        ideal = SqfIdeal.from_supports(4, [[1, 2], [3, 4]])
        for order in ([[1, 2], [3, 4]], [[3, 4], [1, 2]]):
            check = check_lq_order(ideal, order_of(ideal, *order))
            self.assertFalse(check)
            self.assertEqual(check.failed_at, 2)

    def test_principal_is_vacuous(self):
        ideal = principal(3)
        check = check_lq_order(ideal, list(ideal.generators))
        self.assertEqual(check.lq.colon_counts, ())
        self.assertEqual(pd_from_lq(check.lq), 1)
        self.assertEqual(depth_from_lq(check.lq, 3), 2)

    def test_maximal_ideal(self):
        ideal = SqfIdeal.maximal(4)
        check = check_lq_order(ideal, order_of(ideal, [1], [2], [3], [4]))
        self.assertEqual(check.lq.colon_counts, (1, 2, 3))
        self.assertEqual(pd_from_lq(check.lq), 4)
        self.assertEqual(depth_from_lq(check.lq, 4), 0)

    def test_not_a_permutation(self):
        order = order_of(TRIANGLE_IDEAL, [1, 2], [1, 3])
        self.assertRaises(
            InvalidOrderError, lambda: check_lq_order(TRIANGLE_IDEAL, order)
        )


class TestFindLqOrder(unittest.TestCase):
    def test_triangle(self):
        self.assertIsNotNone(find_lq_order(TRIANGLE_IDEAL))

    def test_coprime_generators(self):
        self.assertIsNone(find_lq_order(SqfIdeal.from_supports(4, [[1, 2], [3, 4]])))

    def test_all_quadrics(self):
        ideal = SqfIdeal.from_supports(4, all_squarefree_monomials(4, 2))
        lq = find_lq_order(ideal)
        self.assertTrue(check_lq_order(ideal, list(lq.order)))

    def test_zero_ideal(self):
        self.assertRaises(ZeroIdealError, lambda: find_lq_order(SqfIdeal.zero(3)))


class TestChordalLqOrder(unittest.TestCase):
    def test_single_edge(self):
        lq = chordal_lq_order(SINGLE_EDGE, 2)
        self.assertTrue(check_lq_order(TRIANGLE_IDEAL, list(lq.order)))
        self.assertEqual(depth_from_lq(lq, 3), 1)

    def test_generators_through_the_simplicial_vertex_come_first(self):
        lq = chordal_lq_order(SINGLE_EDGE, 2)
        self.assertIn(1, lq.order[0].indices)
        self.assertEqual(list(lq.order[-1].indices), [2, 3])

    def test_d_one(self):
        clutter = Clutter.from_edges(3, [[1]])
        lq = chordal_lq_order(clutter, 1)
        self.assertEqual(lq.colon_counts, (1,))
        self.assertEqual(depth_from_lq(lq, 3), 1)

    def test_empty_complement(self):
        self.assertRaises(ZeroIdealError, lambda: chordal_lq_order(TRIANGLE, 2))

    def test_not_chordal(self):
        self.assertRaises(NotChordalError, lambda: chordal_lq_order(FOUR_CYCLE, 2))

    def test_edge_too_small(self):
        self.assertRaises(EdgeCardinalityError, lambda: chordal_lq_order(TRIANGLE, 3))

    def test_depth_matches_the_oracle_on_generated_clutters(self):
        for n in range(2, 6):
            for d in range(1, n + 1):
                for sample in generate_chordal_clutters(n, d, 4, 1000 * n + d):
                    ideal = edge_ideal(d_complement(sample.clutter, d))
                    if ideal.is_zero:
                        continue
                    lq = chordal_lq_order(sample.clutter, d)
                    with self.subTest(clutter=str(sample.clutter), d=d):
                        self.assertTrue(check_lq_order(ideal, list(lq.order)))
                        self.assertEqual(
                            depth_from_lq(lq, n), depth_quotient(ideal, n)
                        )


def _valid_orders(ideal: SqfIdeal) -> list:
    found = []
    for order in permutations(ideal.sorted_generators()):
        check = check_lq_order(ideal, list(order))
        if check:
            found.append(check.lq)
    return found


class TestOrderIndependence(unittest.TestCase):
    def test_every_ideal_in_four_variables(self):
        with_lq = 0
        for clutter in all_clutters(4):
            ideal = edge_ideal(clutter)
            if ideal.is_zero:
                continue
            orders = _valid_orders(ideal)
            found = find_lq_order(ideal)
            self.assertEqual(found is None, not orders)
            if not orders:
                continue
            with_lq += 1
            depth = depth_quotient(ideal)
            with self.subTest(ideal=str(ideal)):
                self.assertSetEqual({depth_from_lq(lq, 4) for lq in orders}, {depth})
        # every principal ideal is among them
        self.assertGreaterEqual(with_lq, 15)

    @given(squarefree_ideals(max_n=6, max_generators=6))
    @settings(max_examples=150, deadline=None)
    def test_depth_is_the_same_for_every_valid_order(self, ideal: SqfIdeal):
        depths = {depth_from_lq(lq, ideal.n) for lq in _valid_orders(ideal)}
        self.assertLessEqual(len(depths), 1)
        if depths:
            self.assertSetEqual(depths, {depth_quotient(ideal)})

    @given(squarefree_ideals(max_n=6, max_generators=8))
    @settings(max_examples=200, deadline=None)
    def test_found_order_matches_the_oracle(self, ideal: SqfIdeal):
        lq = find_lq_order(ideal)
        if lq is not None:
            self.assertEqual(depth_from_lq(lq, ideal.n), depth_quotient(ideal))
            self.assertEqual(pd_from_lq(lq), ideal.n - depth_quotient(ideal))
