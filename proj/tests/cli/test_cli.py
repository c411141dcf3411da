#!/usr/bin/env python3
"""End-to-end tests of the betti command line tool."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

BIN = os.environ.get("BETTI_BIN", "betti")


def run(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("BETTI_CACHE_DIR", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


GOLDEN = {(0, 2): 9, (1, 3): 16, (2, 4): 9, (3, 6): 1}


def as_table(payload):
    return {(cell["i"], cell["j"]): cell["value"] for cell in payload}


class TestBettiCli(unittest.TestCase):
    def test_formula_json(self):
        r = run("formula", "-a", "1", "-b", "2", "-m", "2", "-n", "2", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(as_table(json.loads(r.stdout)), GOLDEN)

    def test_formula_pretty_layout(self):
        r = run("formula", "-a", "1", "-b", "2", "-m", "2", "-n", "2")
        self.assertEqual(r.returncode, 0, r.stderr)
        lines = [line for line in r.stdout.splitlines() if line.strip()]
        # header + two strands; zeros render as "-"
        self.assertIn("0", lines[0])
        self.assertIn("9", lines[1])
        self.assertIn("16", lines[1])
        self.assertIn("-", lines[1])
        self.assertIn("1", lines[2])

    def test_formula_principal(self):
        r = run("formula", "-a", "2", "-b", "1", "-m", "2", "-n", "2", "--format", "csv")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.splitlines(), ["i,j,value", "0,2,1"])

    def test_formula_maximal_ideal(self):
        r = run("formula", "-a", "1", "-b", "1", "-m", "2", "-n", "2", "--format", "json")
        self.assertEqual(as_table(json.loads(r.stdout)),
                         {(0, 1): 4, (1, 2): 6, (2, 3): 4, (3, 4): 1})

    def test_formula_equivariant_json(self):
        r = run("formula", "-a", "1", "-b", "2", "-m", "2", "-n", "2",
                "--equivariant", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        terms = json.loads(r.stdout)
        self.assertEqual(len(terms), 5)
        by_key = {(t["w"], t["z"], tuple(t["row"]), tuple(t["col"])): t["mult"] for t in terms}
        self.assertEqual(by_key[(0, 2, (2,), (2,))], 1)
        self.assertEqual(by_key[(1, 3, (3,), (2, 1))], 1)
        self.assertEqual(by_key[(3, 6, (3, 3), (3, 3))], 1)

    def test_oracle_and_compare(self):
        r = run("oracle", "-a", "1", "-b", "2", "-m", "2", "-n", "2",
                "--max-i", "4", "--max-j", "6", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(as_table(json.loads(r.stdout)), GOLDEN)

        r = run("compare", "-a", "1", "-b", "2", "-m", "2", "-n", "2")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("MATCH", r.stdout)

    def test_compare_normalizes_m_less_than_n(self):
        r = run("compare", "-a", "1", "-b", "2", "-m", "2", "-n", "3",
                "--max-j", "6", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertIn("normalized to m >= n", r.stderr)
        self.assertTrue(json.loads(r.stdout)["match"])

    def test_deterministic_output(self):
        args = ("formula", "-a", "1", "-b", "2", "-m", "2", "-n", "2", "--equivariant")
        first, second = run(*args), run(*args)
        self.assertEqual(first.stdout, second.stdout)

    def test_gauss(self):
        r = run("gauss", "2", "2")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.strip(), "1 + w + 2w^2 + w^3 + w^4")
        r = run("gauss", "3", "0")
        self.assertEqual(r.stdout.strip(), "1")

    def test_dim(self):
        self.assertEqual(run("dim", "3,3", "2").stdout.strip(), "1")
        self.assertEqual(run("dim", "3", "2").stdout.strip(), "4")
        self.assertEqual(run("dim", "1,1,1", "2").stdout.strip(), "0")

    def test_pdreg(self):
        r = run("pdreg", "-a", "1", "-b", "2", "-m", "2", "-n", "2")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.strip(), "pd=3 reg=3")

    def test_hrect(self):
        r = run("hrect", "2", "3", "2", "2", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        terms = json.loads(r.stdout)
        self.assertEqual(len(terms), 1)
        self.assertEqual(terms[0]["row"], [3, 3])
        self.assertEqual(terms[0]["z"], 6)

    def test_xhom(self):
        r = run("xhom", "1", "1", "2", "2", "2", "--format", "json")
        self.assertEqual(json.loads(r.stdout), [{"r": 2, "s": 2, "mult": 1}])
        r = run("xhom", "1", "1", "2", "2", "1", "--format", "json")
        self.assertEqual(json.loads(r.stdout), [])

    def test_hilbert(self):
        r = run("hilbert", "-a", "1", "-b", "2", "-m", "2", "-n", "2",
                "--dmax", "3", "--format", "json")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(json.loads(r.stdout), {"0": 0, "1": 0, "2": 9, "3": 20})

    def test_invalid_spec_exits_2(self):
        self.assertEqual(run("formula", "-a", "3", "-b", "1", "-m", "2", "-n", "2").returncode, 2)
        self.assertEqual(run("formula", "-a", "1", "-b", "2").returncode, 2)
        self.assertEqual(run("oracle", "-a", "1", "-b", "2", "-m", "2", "-n", "2",
                             "--equivariant").returncode, 2)
        self.assertEqual(run("nonsense").returncode, 2)

    def test_budget_exceeded_exits_3(self):
        r = run("oracle", "-a", "1", "-b", "2", "-m", "2", "-n", "2", "--cell-budget", "4")
        self.assertEqual(r.returncode, 3, r.stderr)
        self.assertIn("cell budget", r.stderr)

    def test_cache_round_trip(self):
        with tempfile.TemporaryDirectory() as tmp:
            args = ("oracle", "-a", "1", "-b", "2", "-m", "2", "-n", "2",
                    "--max-i", "4", "--max-j", "6", "--format", "json",
                    "--cache-dir", tmp)
            first = run(*args)
            self.assertEqual(first.returncode, 0, first.stderr)
            files = os.listdir(tmp)
            self.assertEqual(len(files), 1)
            with open(os.path.join(tmp, files[0]), "rb") as fh:
                cache_bytes = fh.read()

            second = run(*args)
            self.assertEqual(second.stdout, first.stdout)
            with open(os.path.join(tmp, files[0]), "rb") as fh:
                self.assertEqual(fh.read(), cache_bytes)

        with tempfile.TemporaryDirectory() as tmp:
            env = {"BETTI_CACHE_DIR": tmp}
            r = run("hilbert", "-a", "1", "-b", "2", "-m", "2", "-n", "2", "--dmax", "2",
                    env_extra=env)
            self.assertEqual(r.returncode, 0, r.stderr)
            self.assertEqual(len(os.listdir(tmp)), 1)


if __name__ == "__main__":
    sys.exit(unittest.main())
