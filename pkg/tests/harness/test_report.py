import json
import unittest

from stanley.harness.report import Check, InstanceReport, VerificationReport, Violation


class TestCheck(unittest.TestCase):
    def test_inequality(self):
        check = Check.at_least("sdepth_at_least_depth", 3, 1)
        self.assertTrue(check.holds)
        self.assertEqual(check.slack, 2)
        self.assertEqual(str(check), "sdepth_at_least_depth: 3 >= 1")

    def test_equality(self):
        check = Check.equal("values", 2, 3, "off by one")
        self.assertFalse(check.holds)
        self.assertEqual(check.slack, -1)
        self.assertEqual(str(check), "values: 2 == 3 (off by one)")

    def test_claim(self):
        check = Check.claim("replays", False)
        self.assertIsNone(check.slack)
        self.assertEqual(str(check), "replays: fails")
        self.assertEqual(str(Check.claim("replays", True)), "replays: holds")


class TestVerificationReport(unittest.TestCase):
    def report(self) -> VerificationReport:
        first = InstanceReport(
            id="a",
            command="smain",
            n=2,
            m=2,
            generators=[[1, 2]],
            checks=[Check.claim("x", True), Check.at_least("y", 1, 0)],
            skipped=["sv: zero ideal"],
        )
        second = InstanceReport(
            id="b",
            command="smain",
            n=2,
            m=2,
            generators=[[1]],
            checks=[Check.equal("z", 0, 1)],
        )
        return VerificationReport(
            seed=4,
            instances=[first, second],
            violation=Violation(instance="b", check=second.checks[0]),
        )

    def test_summary(self):
        report = self.report()
        self.assertEqual(
            report.summary, {"instances": 2, "checks": 3, "failed": 1, "skipped": 1}
        )
        self.assertFalse(report.ok)
        self.assertEqual([c.name for c in report.instances[1].failures()], ["z"])

    def test_json(self):
        text = self.report().to_json()
        self.assertEqual(text, self.report().to_json())
        data = json.loads(text)
        self.assertEqual(data["summary"]["failed"], 1)
        self.assertEqual(data["violation"]["check"]["slack"], -1)
        self.assertEqual(data["limits"]["field"], "Q")
