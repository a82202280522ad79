import unittest

from stanley.flow import If, UnsupportedTransformerArgException
from stanley.harness.pipelines import PIPELINES
from tests.lib.corpora import EXAMPLE_ONE
from tests.lib.steps import (
    clutter_run,
    has_clutter,
    mark_linear,
    oracle_depth,
    run_of,
    support_within_variables,
)

routed = has_clutter.Then(oracle_depth >> mark_linear).Else(support_within_variables)


class TestConditional(unittest.TestCase):
    def test_conditioner_label(self):
        self.assertEqual(routed.label, "has_clutter")
        self.assertEqual(PIPELINES["main"].label, "is_general")

    def test_then_branch(self):
        run = routed(clutter_run())
        self.assertTrue(run.linear_resolution)
        self.assertIsNotNone(run.report.depth_oracle)
        self.assertEqual(run.report.checks, [])

    def test_else_branch(self):
        run = routed(run_of(EXAMPLE_ONE))
        self.assertIsNone(run.linear_resolution)
        self.assertIsNone(run.report.depth_oracle)
        self.assertEqual(run.report.checks[0].name, "support_within_variables")

    def test_condition_inside_a_flow(self):
        graph = oracle_depth >> routed >> support_within_variables
        self.assertEqual(len(graph(run_of()).report.checks), 2)
        self.assertEqual(len(graph(clutter_run()).report.checks), 1)

    def test_branches_are_children(self):
        self.assertEqual(len(routed.children), 2)

    def test_if_from_a_lambda(self):
        graph = If(lambda run: run.m > 3, "wide").Then(mark_linear).Else(oracle_depth)
        self.assertEqual(graph.label, "wide")
        self.assertTrue(graph(run_of()).linear_resolution)
        self.assertIsNone(graph(clutter_run()).linear_resolution)

    def test_conditioner_unsupported_argument(self):
        def just_a_normal_function():
            return None

        with self.assertRaises(UnsupportedTransformerArgException):
            has_clutter.Then(just_a_normal_function)  # type: ignore

        with self.assertRaises(UnsupportedTransformerArgException):
            has_clutter.Then(mark_linear).Else(just_a_normal_function)  # type: ignore
