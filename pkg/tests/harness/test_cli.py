import json
import tempfile
import unittest
from pathlib import Path

from stanley.harness.cli import EXIT_OK, EXIT_USAGE, main


class TestCli(unittest.TestCase):
    def setUp(self):
        self._directory = tempfile.TemporaryDirectory()
        self.directory = Path(self._directory.name)

    def tearDown(self):
        self._directory.cleanup()

    def write(self, name: str, data) -> str:
        path = self.directory / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    def run_command(self, *argv: str) -> tuple[int, object]:
        out = self.directory / "out.json"
        code = main([*argv, "--json-out", str(out)])
        data = json.loads(out.read_text(encoding="utf-8")) if out.exists() else None
        return code, data

    def example_one(self) -> str:
        ideal = {"n": 4, "generators": [[1, 2], [1, 3], [2, 3, 4]]}
        return self.write("ideal.json", ideal)

    def test_depth(self):
        code, data = self.run_command("depth", "--input", self.example_one())
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["pd"], 2)
        self.assertEqual(data["depth_quotient"], 2)
        self.assertEqual(data["depth_ideal"], 3)

    def test_sdepth(self):
        code, data = self.run_command("sdepth", "--input", self.example_one())
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["sdepth"], 2)
        self.assertEqual(data["kind"], "quotient")
        self.assertTrue(data["certificate"])

    def test_sv_with_a_supplied_witness(self):
        witness = self.write("witness.json", [[[1, 2]], [[1, 3], [2, 3, 4]]])
        code, data = self.run_command(
            "sv", "--input", self.example_one(), "--witness", witness
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["sv_restricted"], 2)
        self.assertTrue(data["supplied"]["valid"])
        self.assertEqual(data["supplied"]["levels"], 2)

    def test_chordal(self):
        path = self.write("path.json", {"n": 3, "edges": [[1, 2], [2, 3]]})
        code, data = self.run_command("chordal", "--input", path)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(data["chordal"])
        self.assertIsNone(data["witness"])

    def test_lq(self):
        code, data = self.run_command("lq", "--input", self.example_one())
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(data["linear_quotients"])
        self.assertEqual(data["depth"], 2)

    def test_generated_instances_verify(self):
        instances = self.directory / "instances.json"
        code = main(
            ["gen", "--n", "4", "--d", "2", "--count", "2"]
            + ["--json-out", str(instances)]
        )
        self.assertEqual(code, EXIT_OK)
        generated = json.loads(instances.read_text(encoding="utf-8"))
        ids = [instance["id"] for instance in generated]
        self.assertEqual(ids, ["gen-n4-d2-000", "gen-n4-d2-001"])

        code, report = self.run_command(
            "verify",
            "--input",
            str(instances),
            "--suite",
            "main",
            "--bundle-dir",
            str(self.directory),
        )
        self.assertEqual(code, EXIT_OK)
        self.assertIsNone(report["violation"])
        self.assertEqual(report["summary"]["instances"], 2)

    def test_verify_routes_ideal_only_instances(self):
        ideal = {"n": 4, "generators": [[1, 2], [1, 3], [2, 3, 4]]}
        clutter = {"n": 3, "edges": [[1, 2], [2, 3]]}
        path = self.write(
            "mixed.json",
            [
                {"id": "a-ideal", "ideal": ideal},
                {"id": "b-clutter", "clutter": clutter, "d": 2},
            ],
        )
        code, report = self.run_command(
            "verify", "--input", path, "--bundle-dir", str(self.directory)
        )
        self.assertEqual(code, EXIT_OK)
        commands = {i["id"]: i["command"] for i in report["instances"]}
        self.assertEqual(commands, {"a-ideal": "smain", "b-clutter": "main"})
        by_id = {i["id"]: i for i in report["instances"]}
        self.assertEqual(by_id["a-ideal"]["sv_restricted"], 2)
        self.assertTrue(by_id["b-clutter"]["chordal"])

    def test_linres_reads_exponent_objects(self):
        path = self.write(
            "quadratic.json",
            {"n": 2, "generators": [{"exps": [2, 0]}, {"exps": [1, 1]}]},
        )
        code, report = self.run_command(
            "linres", "--input", path, "--bundle-dir", str(self.directory)
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report["summary"]["instances"], 1)
        self.assertEqual(report["summary"]["failed"], 0)

    def test_examples(self):
        code, report = self.run_command(
            "examples", "--bundle-dir", str(self.directory)
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(report["summary"]["failed"], 0)

    def test_usage_errors(self):
        missing = str(self.directory / "missing.json")
        self.assertEqual(main(["depth", "--input", missing]), EXIT_USAGE)
        bad = self.write("bad.json", {"n": 2})
        self.assertEqual(main(["depth", "--input", bad]), EXIT_USAGE)
        with self.assertRaises(SystemExit) as raised:
            main(["sdepth", "--input", bad, "--kind", "module"])
        self.assertEqual(raised.exception.code, EXIT_USAGE)
