#!/usr/bin/env python3
"""End-to-end checks of the gamow command line: exit codes, files, schemas."""
import json
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema
from referencing import Registry, Resource

BIN = pathlib.Path(sys.argv[1]).resolve()
ROOT = pathlib.Path(sys.argv[2]).resolve()
del sys.argv[1:3]

SCHEMAS = {p.name: json.loads(p.read_text()) for p in (ROOT / "schema").glob("*.json")}
REGISTRY = Registry().with_resources(
    [(name, Resource.from_contents(doc)) for name, doc in SCHEMAS.items()])


def validate(doc, schema):
    jsonschema.Draft202012Validator(SCHEMAS[schema], registry=REGISTRY).validate(doc)


def run(*args, config="two_channel.json", out=None):
    cmd = [str(BIN)]
    if config is not None:
        cmd += ["--config", str(ROOT / "configs" / config) if "/" not in config else config]
    if out is not None:
        cmd += ["--output-dir", str(out)]
    return subprocess.run(cmd + list(args), capture_output=True, text=True, timeout=120)


class Cli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.out = pathlib.Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def test_configs_match_schema(self):
        for path in (ROOT / "configs").glob("*.json"):
            validate(json.loads(path.read_text()), "config.schema.json")

    def test_poles(self):
        for config, n in (("single_channel.json", 2), ("two_channel.json", 2),
                          ("two_channel_decoupled.json", 3)):
            r = run("poles", config=config, out=self.out)
            self.assertEqual(r.returncode, 0, r.stderr)
            doc = json.loads((self.out / "poles.json").read_text())
            validate(doc, "poles.schema.json")
            self.assertEqual(len(doc["poles"]), n)
            csv = (self.out / "poles.csv").read_text().splitlines()
            self.assertTrue(csv[0].startswith("# gamow poles config_hash="))
            self.assertEqual(csv[1], "re_E,im_E,kind,sheet,abs_jost_det")

    def test_observables(self):
        r = run("observables", out=self.out)
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads((self.out / "observables.json").read_text())
        validate(doc, "observables.schema.json")
        self.assertAlmostEqual(sum(c["branching"] for c in doc["channels"]), 1.0, places=5)

    def test_verify(self):
        for config in ("single_channel.json", "two_channel.json", "two_channel_decoupled.json"):
            r = run("verify", config=config, out=self.out)
            self.assertEqual(r.returncode, 0, r.stdout + r.stderr)
            doc = json.loads((self.out / "verify.json").read_text())
            validate(doc, "verify.schema.json")
            self.assertEqual(doc["failures"], 0)
        names = {c["name"] for c in doc["checks"]}
        self.assertIn("decoupling_equivalence", names)

    def test_corrupted_norm_fails_verify(self):
        r = run("verify", "--corrupt-norm", "2", out=self.out)
        doc = json.loads((self.out / "verify.json").read_text())
        self.assertGreaterEqual(r.returncode, 1)
        self.assertEqual(r.returncode, min(doc["failures"], 63))

    def test_verify_is_byte_identical(self):
        a, b = self.out / "a", self.out / "b"
        run("verify", out=a)
        run("verify", out=b)
        for name in ("verify.csv", "verify.json"):
            self.assertEqual((a / name).read_bytes(), (b / name).read_bytes())

    def test_wavefunction_and_spectrum(self):
        r = run("wavefunction", "--pole", "0", out=self.out)
        self.assertEqual(r.returncode, 0, r.stderr)
        lines = (self.out / "wavefunction.csv").read_text().splitlines()
        self.assertEqual(lines[1], "r,re_u1,im_u1,re_u2,im_u2")
        self.assertEqual(len(lines), 2 + 301)
        r = run("spectrum", "--near", "3.66,-0.06", "--channel", "2", out=self.out)
        self.assertEqual(r.returncode, 0, r.stderr)
        rows = (self.out / "spectrum_ch2.csv").read_text().splitlines()
        self.assertEqual(rows[1], "Ep,E_total,density")
        self.assertTrue(all(float(x.split(",")[2]) >= 0 for x in rows[2:]))
        self.assertFalse((self.out / "spectrum_ch1.csv").exists())

    def test_sheet_flag(self):
        r = run("poles", "--sheet", "(-,+)", config="two_channel.json", out=self.out)
        self.assertEqual(r.returncode, 0, r.stderr)
        r = run("poles", "--sheet", "(-)", config="two_channel.json", out=self.out)
        self.assertEqual(r.returncode, 64)

    def test_usage_errors(self):
        self.assertEqual(run("poles", config=None).returncode, 64)
        self.assertEqual(run("frobnicate").returncode, 64)
        self.assertEqual(run("spectrum", "--pole", "1", "--near", "1,0").returncode, 64)

    def test_config_errors(self):
        bad = self.out / "bad.json"
        bad.write_text('{"channels": [0, 4], "V": [[-4, -1], [0, -4]], "a": 1}')
        r = run("poles", config=str(bad))
        self.assertEqual(r.returncode, 65)
        self.assertIn("V:", r.stderr)
        bad.write_text("{oops")
        self.assertEqual(run("poles", config=str(bad)).returncode, 65)
        self.assertEqual(run("poles", config=str(self.out / "missing.json")).returncode, 65)

    def test_runtime_errors(self):
        r = run("observables", config="single_channel.json", out=self.out)
        self.assertEqual(r.returncode, 0, r.stderr)
        r = run("spectrum", "--pole", "0", out=self.out)
        self.assertEqual(r.returncode, 70)
        self.assertIn("NotResonance", r.stderr)


if __name__ == "__main__":
    unittest.main(verbosity=2)
