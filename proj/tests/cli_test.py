# Copyright 2026 The covgraph Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the covgraph executable: exit codes and report schema."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

CLI = sys.argv.pop(1)
SCHEMA_PATH = sys.argv.pop(1)

with open(SCHEMA_PATH, encoding="utf-8") as fh:
    SCHEMA = json.load(fh)


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("COVGRAPH_TOL", None)
    if env:
        full_env.update(env)
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, timeout=60)


def matrix(rows):
    return {
        "rows": len(rows),
        "cols": len(rows[0]),
        "data": [[[complex(z).real, complex(z).imag] for z in row] for row in rows],
    }


def diag(values):
    n = len(values)
    return [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]


P_PLUS = diag([1, 1, 0, 0])
P_MINUS = diag([0, 0, 1, 1])
SEED = [
    [0.5, 0, 0.1, 0.05j],
    [0, 0.5, 0.02, 0.1],
    [0.1, 0.02, 0.5, 0],
    [-0.05j, 0.1, 0, 0.5],
]


class CliTest(unittest.TestCase):
    def report(self, *args, expect=0, env=None):
        proc = run("--json", *args, env=env)
        self.assertEqual(proc.returncode, expect, proc.stderr + proc.stdout)
        doc = json.loads(proc.stdout)
        jsonschema.validate(doc, SCHEMA)
        self.assertEqual(doc["exit_code"], expect)
        self.assertEqual(doc["passed"], all(a["passed"] for a in doc["assertions"]))
        return doc

    def write(self, directory, name, payload):
        path = os.path.join(directory, name)
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
        return path

    def test_demo4_balanced_point(self):
        doc = self.report("demo4", "--tau", "0.35355339", "--z1", "0", "--z2", "0", "--z4", "0", "--k", "0")
        names = {a["name"]: a for a in doc["assertions"]}
        self.assertAlmostEqual(names["printed_entanglement"]["details"]["printed_entropy_bits"], 1.0, delta=1e-9)

    def test_demo4_boundary_and_dimension(self):
        doc = self.report("demo4", "--tau", "0")
        self.assertTrue(doc["schmidt"]["boundary"])
        doc = self.report("demo4", "--tau", "0.25", "--z1", "pi/3", "--z2", "-pi/4", "--z4", "2*pi/5")
        names = {a["name"]: a for a in doc["assertions"]}
        self.assertEqual(names["graph_dimension"]["details"]["dimension"], 3)

    def test_demo4_z3_consistency(self):
        self.report("demo4", "--tau", "0.2", "--z3", "pi")
        doc = self.report("demo4", "--tau", "0.2", "--z3", "3pi")
        self.assertEqual(doc["inputs"]["k"], 1)
        self.assertEqual(run("demo4", "--tau", "0.2", "--z3", "1").returncode, 2)
        self.assertEqual(run("demo4", "--tau", "0.2", "--z3", "pi", "--k", "1").returncode, 2)

    def test_demo4_input_errors(self):
        self.assertEqual(run("demo4", "--tau", "0.6").returncode, 2)
        self.assertEqual(run("demo4", "--tau", "abc").returncode, 2)
        self.assertEqual(run("demo4", "--tau", "0.1", "--z1", "pie").returncode, 2)
        self.assertEqual(run("demo4").returncode, 2)
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("unknown").returncode, 2)

    def test_bell(self):
        doc = self.report("bell", "--dim", "2", "--j", "1")
        self.assertEqual(doc["summary"]["graph_dimension"], 3)
        self.report("bell", "--dim", "5", "--j", "5")
        proc = run("bell", "--dim", "1", "--j", "1")
        self.assertEqual(proc.returncode, 2)
        self.assertIn("at least 2", proc.stderr)
        self.assertEqual(run("bell", "--dim", "3", "--j", "4").returncode, 2)
        self.assertEqual(run("bell", "--dim", "-3", "--j", "1").returncode, 2)

    def test_verify(self):
        with tempfile.TemporaryDirectory() as tmp:
            rep = self.write(tmp, "rep.json", {"dim": 4, "freqs": [1, -1], "projections": [matrix(P_PLUS), matrix(P_MINUS)]})
            seed = self.write(tmp, "m0.json", matrix(SEED))
            proj = self.write(tmp, "proj.json", matrix(P_PLUS))
            rank_one = self.write(tmp, "rank1.json", matrix(diag([1, 0, 0, 0])))
            broken = self.write(tmp, "broken.json", {"dim": 4, "freqs": [1, -1], "projections": [matrix(diag([1, 0, 0, 0])), matrix(P_MINUS)]})
            garbage = os.path.join(tmp, "garbage.json")
            with open(garbage, "w", encoding="utf-8") as fh:
                fh.write("{\"rows\": 4, \"cols\": [")

            doc = self.report("verify", "--rep", rep, "--m0", seed, "--proj", proj, "--samples", "5")
            self.assertIn("sampled_matches_analytic", {a["name"] for a in doc["assertions"]})

            doc = self.report("verify", "--rep", rep, "--m0", seed, "--proj", rank_one, expect=1)
            names = {a["name"]: a for a in doc["assertions"]}
            self.assertEqual(names["anticlique"]["details"]["reason"], "code_dimension < 2")

            proc = run("verify", "--rep", broken, "--m0", seed, "--proj", proj)
            self.assertEqual(proc.returncode, 2)
            self.assertIn("completeness violation", proc.stderr)

            self.assertEqual(run("verify", "--rep", garbage, "--m0", seed, "--proj", proj).returncode, 2)
            self.assertEqual(run("verify", "--rep", rep, "--m0", garbage, "--proj", proj).returncode, 2)
            self.assertEqual(run("verify", "--rep", rep, "--m0", seed, "--proj", os.path.join(tmp, "missing")).returncode, 2)

    def test_scan(self):
        doc = self.report("scan", "--tau-grid", "0.1,0.2,0.3,0.4", "--seed", "5")
        self.assertEqual(doc["summary"]["rows"], 4)
        for row in doc["assertions"]:
            self.assertTrue(row["details"]["anticlique_P_plus"])
            self.assertTrue(row["details"]["anticlique_P_minus"])
        doc = self.report("scan", "--tau-grid", "0.3535533905932738", "--seed", "5")
        self.assertEqual(doc["summary"]["max_entropy_rows"], [0])
        self.assertEqual(run("scan", "--tau-grid", "").returncode, 2)
        self.assertEqual(run("scan", "--tau-grid", "0.1,,0.2").returncode, 2)

    def test_scan_is_deterministic(self):
        first = run("--json", "scan", "--tau-grid", "0:0.5:6", "--seed", "9").stdout
        second = run("--json", "scan", "--tau-grid", "0:0.5:6", "--seed", "9").stdout
        self.assertEqual(first, second)

    def test_text_mode_names_match_json(self):
        args = ("demo4", "--tau", "0.25")
        doc = self.report(*args)
        text = run(*args).stdout
        for a in doc["assertions"]:
            self.assertIn(a["name"], text)

    def test_tolerance_sources(self):
        doc = self.report("bell", "--dim", "2", "--j", "1", env={"COVGRAPH_TOL": "1e-9"})
        self.assertEqual(doc["inputs"]["eq_tol"], 1e-9)
        doc = self.report("--tol", "1e-8", "bell", "--dim", "2", "--j", "1", env={"COVGRAPH_TOL": "1e-9"})
        self.assertEqual(doc["inputs"]["eq_tol"], 1e-8)
        self.assertEqual(run("bell", "--dim", "2", "--j", "1", env={"COVGRAPH_TOL": "x"}).returncode, 2)

    def test_json_output_is_canonical(self):
        out = run("--json", "bell", "--dim", "2", "--j", "2").stdout.strip()
        doc = json.loads(out)
        self.assertEqual(list(doc.keys()), sorted(doc.keys()))
        self.assertNotIn(" ", out.replace("I/2", ""))


if __name__ == "__main__":
    unittest.main()
