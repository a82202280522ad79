import unittest

from hypothesis import given, settings

from stanley.sdepth import (
    IntervalPartition,
    combine_split,
    sdepth_of_poset,
    split_ideal,
    split_quotient,
)
from tests.lib.corpora import EXAMPLE_ONE
from tests.lib.strategies import squarefree_ideals


def optimal(poset) -> IntervalPartition:
    if not poset.ground:
        return IntervalPartition.of([])
    return sdepth_of_poset(poset).certificate


class TestSplit(unittest.TestCase):
    def test_quotient_summands(self):
        split = split_quotient(EXAMPLE_ONE, 1)
        self.assertEqual(split.without.active, 0b1110)
        # S'/(x2x3x4): every subset of {2,3,4} but the whole
        self.assertEqual(len(split.without), 7)
        # S'/(x2, x3): the empty set and {4}
        self.assertEqual(split.with_.ground, (0, 0b1000))

    def test_ideal_summands(self):
        split = split_ideal(EXAMPLE_ONE, 1)
        self.assertEqual(split.without.ground, (0b1110,))
        self.assertEqual(len(split.with_), 6)

    def test_glued_certificate(self):
        split = split_quotient(EXAMPLE_ONE, 1)
        without = sdepth_of_poset(split.without)
        with_ = sdepth_of_poset(split.with_)
        glued = combine_split(split, without.certificate, with_.certificate)
        self.assertTrue(glued.is_partition_of(split.whole))
        self.assertEqual(glued.min_dimension, min(without.value, with_.value + 1))
        whole = sdepth_of_poset(split.whole).value
        self.assertGreaterEqual(whole, glued.min_dimension)

    def test_bad_summand(self):
        split = split_quotient(EXAMPLE_ONE, 1)
        partial = IntervalPartition.of([(0, 0)])
        good = sdepth_of_poset(split.with_).certificate
        self.assertRaises(ValueError, lambda: combine_split(split, partial, good))

    def test_inactive_variable(self):
        self.assertRaises(
            ValueError, lambda: split_quotient(EXAMPLE_ONE, 1, active=0b1110)
        )

    @settings(max_examples=40, deadline=None)
    @given(squarefree_ideals(max_n=4))
    def test_glued_certificates_partition_the_whole(self, ideal):
        for i in range(1, ideal.n + 1):
            for split in (split_quotient(ideal, i), split_ideal(ideal, i)):
                glued = combine_split(
                    split, optimal(split.without), optimal(split.with_)
                )
                self.assertIsNone(glued.first_defect(split.whole))
