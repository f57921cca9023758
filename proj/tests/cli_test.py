"""End-to-end checks of the abelia command line."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BINARY = os.environ.get("ABELIA_BIN", "abelia")
SCHEMA = os.environ.get("ABELIA_SCHEMA", "schema/verdict-v1.schema.json")


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("ABELIA_CAPS", None)
    full_env.update(env or {})
    return subprocess.run([BINARY, *args], capture_output=True, text=True,
                          env=full_env, check=False)


def b(name):
    return "@builtin:" + name


COMMANDS = [
    (["np", b("Z2"), b("Z2")], 0),
    (["np", b("P2"), b("P2")], 1),
    (["shifting", b("Z2"), b("Z2")], 0),
    (["shifting", b("P2"), b("P2")], 1),
    (["centralic", b("Z2"), b("Z3")], 0),
    (["centralic", b("P2"), b("P2")], 1),
    (["conditions", b("P2"), "--which", "b"], 1),
    (["conditions", b("Z2"), b("Z3"), "--which", "a"], 0),
    (["conditions", b("P2"), "--which", "c"], 1),
    (["conditions", b("Z2"), b("Z2"), "--which", "d", "--params", b("Z2") + "," + b("Z3")], 0),
    (["conditions", b("Z3"), "--which", "e"], 0),
    (["subtraction-term", b("Z3")], 0),
    (["subtraction-term", b("P2")], 1),
    (["unit-term", b("V4")], 0),
    (["internal-subtractions", b("P2")], 0),
    (["internal-subtractions", b("S2")], 1),
    (["abelian", b("Z4")], 0),
    (["abelian", b("P2")], 1),
    (["crystal", b("Z2"), b("Z3")], 0),
    (["crystal", b("P2"), b("B2")], 0),
    (["congruences", b("V4")], 0),
    (["free", b("Z2"), "2"], 0),
    (["catalog", "list"], 0),
    (["catalog", "export", "S2"], 0),
    (["cross-check", b("P2"), b("P3")], 0),
]


class CommandLine(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(SCHEMA, encoding="utf-8") as f:
            cls.schema = json.load(f)
        jsonschema.Draft202012Validator.check_schema(cls.schema)

    def test_exit_codes_and_json(self):
        validator = jsonschema.Draft202012Validator(self.schema)
        for args, code in COMMANDS:
            with self.subTest(args=args):
                text = run(*args)
                self.assertEqual(text.returncode, code, text.stderr)
                doc = run("--json", *args)
                self.assertEqual(doc.returncode, code, doc.stderr)
                validator.validate(json.loads(doc.stdout))

    def test_output_is_reproducible(self):
        for args, _ in COMMANDS:
            with self.subTest(args=args):
                self.assertEqual(run(*args).stdout, run(*args).stdout)
                self.assertEqual(run("--json", *args).stdout, run("--json", *args).stdout)

    def test_documented_examples(self):
        z2 = run("np", b("Z2"), b("Z2"))
        self.assertIn("holds", z2.stdout)
        p2 = run("np", b("P2"), b("P2"))
        self.assertIn("(1,1)", p2.stdout)
        doc = json.loads(run("--json", "np", b("P2"), b("P2")).stdout)
        self.assertEqual(doc["witness"], {"a": 1, "b": 1})
        crystal = json.loads(run("--json", "crystal", b("Z2"), b("Z3")).stdout)
        self.assertTrue(crystal["holds"])
        self.assertIsNone(crystal["witness"])

    def test_jobs_do_not_change_output(self):
        args = ["crystal", b("Z2"), b("Z3"), b("V4"), b("P2")]
        self.assertEqual(run(*args).stdout, run("--jobs", "4", *args).stdout)

    def test_usage_and_input_errors(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("np", b("Q8"), b("Z2")).returncode, 2)
        self.assertEqual(run("np", b("Z2"), b("P2")).returncode, 2)
        self.assertEqual(run("np", "/nonexistent/file", b("Z2")).returncode, 2)
        self.assertEqual(run("np", b("Z2"), b("Z2"),
                             env={"ABELIA_CAPS": "nonsense=1"}).returncode, 2)
        with tempfile.NamedTemporaryFile("w", suffix=".alg", delete=False) as f:
            f.write("algebra X\nsize 2\nzero 0\nop f 1\n0 3\n")
        try:
            bad = run("congruences", f.name)
            self.assertEqual(bad.returncode, 2)
            self.assertIn("line 5", bad.stderr)
        finally:
            os.unlink(f.name)

    def test_cap_exceeded(self):
        capped = run("np", b("Z3"), b("Z3"), env={"ABELIA_CAPS": "cg=4"})
        self.assertEqual(capped.returncode, 3)
        unknown = run("unit-term", b("S2"), env={"ABELIA_CAPS": "terms=2"})
        self.assertEqual(unknown.returncode, 3)
        self.assertIn("unknown", unknown.stdout)

    def test_export_round_trips(self):
        for name in run("catalog", "list").stdout.split():
            exported = run("catalog", "export", name).stdout
            with tempfile.NamedTemporaryFile("w", suffix=".alg", delete=False) as f:
                f.write(exported)
            try:
                self.assertEqual(run("congruences", f.name).stdout,
                                 run("congruences", b(name)).stdout)
            finally:
                os.unlink(f.name)


if __name__ == "__main__":
    sys.argv[1:] = []
    unittest.main()
