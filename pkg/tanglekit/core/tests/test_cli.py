#! /usr/bin/env python3
""" End-to-end tests of the command line front end, run as subprocesses. """

from os import path
import shlex
import subprocess
import sys
import tempfile
import unittest

from tanglekit.core import defaults

REPO_DIR = path.dirname(
    path.dirname(path.dirname(path.dirname(path.realpath(__file__))))
)
TEST_DATA_DIR = path.join(REPO_DIR, "tanglekit", "core", "test_data")
PROFILE = "--a 1 --s 1 --k 1 --alpha 2 --theta 3 --n2 1"


def data(fln):
    return path.join(TEST_DATA_DIR, fln)


def run(command_line_args):
    """ Run tanglekit. Returns (exit code, stdout lines, stderr). """
    res = subprocess.run(
        [sys.executable, "-m", "tanglekit"] + shlex.split(command_line_args),
        cwd=REPO_DIR,
        capture_output=True,
        text=True,
        check=False,
    )
    return res.returncode, res.stdout.splitlines(), res.stderr


def violations(out):
    return [line for line in out if line.startswith("VIOLATION ")]


class TestCli(unittest.TestCase):
    """ Runs tanglekit as a subprocess and checks its exit code and stdout. """

    def setUp(self):
        self.tmp_dir = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp_dir.cleanup()

    def tmp(self, fln):
        return path.join(self.tmp_dir.name, fln)

    def assert_exit(self, command_line_args, code):
        ret, out, err = run(command_line_args)
        output = "\n".join(out)
        self.assertEqual(ret, code, f"{command_line_args}\n{output}\n{err}")
        return out, err

    def test_usage_errors(self):
        """
        Bad flags, a missing subcommand, and bad values exit with the usage code.
        """
        _, err = self.assert_exit(
            "verify-gridcut --r 3 --bogus-flag", defaults.EXIT_USAGE
        )
        self.assertIn("bogus-flag", err)
        self.assert_exit("", defaults.EXIT_USAGE)
        self.assert_exit("verify-gridcut --r 0", defaults.EXIT_USAGE)
        self.assert_exit(
            f"check-tangle --graph {data('w2.graph')} "
            f"--tangle {self.tmp('missing.tangle')}",
            defaults.EXIT_USAGE,
        )
        self.assert_exit("verify-gridcut --r 2 --threads 0", defaults.EXIT_USAGE)

    def test_input_errors(self):
        """ An input file that breaks its format is reported on stderr. """
        flp = self.tmp("bad.graph")
        with open(flp, "w", encoding="utf-8") as fil:
            fil.write("p graph 3 2\ne 0 1\n")
        _, err = self.assert_exit(
            f"check-hypotheses --graph {flp} --a 1", defaults.EXIT_USAGE
        )
        self.assertIn("tanglekit check-hypotheses: error:", err)

    def test_malformed_input(self):
        """ Malformed or non-UTF-8 files are usage errors, not crashes. """
        cases = {
            "comma_edge.graph": b"p graph 3 1\ne 0,1 2\n",
            "comma_header.graph": b"p graph 1,2 3\n",
            "binary.graph": b"p graph 2 1\ne 0 1\n\xff\n",
        }
        for fln, raw in cases.items():
            flp = self.tmp(fln)
            with open(flp, "wb") as fil:
                fil.write(raw)
            out, err = self.assert_exit(
                f"check-hypotheses --graph {flp} --a 1", defaults.EXIT_USAGE
            )
            self.assertNotIn("Traceback", err, fln)
            self.assertEqual(len(err.strip().splitlines()), 1, err)
            self.assertIn("tanglekit check-hypotheses: error:", err)
            self.assertEqual(out, [])

    def test_grid(self):
        """ Tests the "grid" subcommand on W_2. """
        out, _ = self.assert_exit("grid --r 2", defaults.EXIT_PASS)
        self.assertEqual(out[0], "p graph 4 4")
        self.assertIn("# coord 3 2 2", out)
        self.assertEqual(out[-1], "RESULT grid pass checked=4")

    def test_enum_seps(self):
        """ Tests the "enum-seps" subcommand on a path. """
        out, _ = self.assert_exit(
            f"enum-seps --graph {data('path3.graph')} --max-order 0", defaults.EXIT_PASS
        )
        self.assertEqual(
            out, ["sep A= B=0,1,2", "sep A=0,1,2 B=", "RESULT enum-seps pass checked=2"]
        )

    def test_check_tangle(self):
        """
        The natural tangle of W_2 passes; dropping or doubling an orientation fails.
        """
        w2 = data("w2.graph")
        self.assert_exit(
            f"check-tangle --graph {w2} --tangle {data('w2_natural.tangle')} "
            "--orientations",
            defaults.EXIT_PASS,
        )
        out, _ = self.assert_exit(
            f"check-tangle --graph {w2} --tangle {data('w2_dropped.tangle')}",
            defaults.EXIT_FAIL,
        )
        self.assertEqual(len(violations(out)), 1)
        self.assertTrue(violations(out)[0].startswith("VIOLATION T1 "))
        out, _ = self.assert_exit(
            f"check-tangle --graph {w2} --tangle {data('w2_doubled.tangle')}",
            defaults.EXIT_FAIL,
        )
        self.assertTrue(any(line.startswith("VIOLATION T2 ") for line in out))
        self.assertEqual(out[-1], "RESULT check-tangle fail checked=10")

    def test_natural_tangle_and_extension(self):
        """
        Writes the natural tangle of W_3, extends it, and uses it to check respect.
        """
        out, _ = self.assert_exit("natural-tangle --r 2", defaults.EXIT_PASS)
        self.assertEqual(out[:2], ["order=2", "members=5"])
        w3_tangle = self.tmp("w3.tangle")
        self.assert_exit(
            f"natural-tangle --r 3 --materialize --out {w3_tangle}", defaults.EXIT_PASS
        )
        self.assert_exit(
            f"check-tangle --graph {data('w3.graph')} --tangle {w3_tangle}",
            defaults.EXIT_PASS,
        )
        out, _ = self.assert_exit(
            f"extend-tangle --host {data('w3_pendant.graph')} "
            f"--model {data('w3_identity.model')} --pattern-tangle {w3_tangle} --check",
            defaults.EXIT_PASS,
        )
        self.assertEqual(violations(out), [])

        # The extended tangle on the composite graph, which the certificate respects.
        extended = self.tmp("composite.tangle")
        self.assert_exit(
            f"extend-tangle --host {data('composite.graph')} "
            f"--model {data('w3_identity.model')} --pattern-tangle {w3_tangle} "
            f"--vertex-cap 18 --out {extended}",
            defaults.EXIT_PASS,
        )
        self.assert_exit(
            f"check-near-embedding --graph {data('composite.graph')} "
            f"--cert {data('composite.cert')} --tangle {extended} --respects "
            "--vertex-cap 18",
            defaults.EXIT_PASS,
        )

    def test_verify_gridcut(self):
        """ Tests the "verify-gridcut" subcommand on W_3. """
        out, _ = self.assert_exit("verify-gridcut --r 3", defaults.EXIT_PASS)
        self.assertIn("max_order=2", out)
        self.assertIn("largest_small_side=3", out)

    def test_check_model(self):
        """ Tests the "check-model" subcommand on a valid and an overlapping model. """
        path3 = data("path3.graph")
        out, _ = self.assert_exit(
            f"check-model --host {path3} --model {data('edge_in_path.model')}",
            defaults.EXIT_PASS,
        )
        self.assertIn("branch_sets=2", out)
        out, _ = self.assert_exit(
            f"check-model --host {path3} --model {data('edge_in_path_overlap.model')}",
            defaults.EXIT_FAIL,
        )
        self.assertEqual(len(violations(out)), 1)
        first = violations(out)[0]
        self.assertTrue(first.startswith("VIOLATION OverlappingBranchSets"))

    def test_check_vortex(self):
        """
        Tests the "check-vortex" subcommand on the caterpillar and its mutations.
        """
        graph = data("caterpillar.graph")
        out, _ = self.assert_exit(
            f"check-vortex --graph {graph} --cert {data('caterpillar.vortex')}",
            defaults.EXIT_PASS,
        )
        self.assertIn("q=1", out)
        self.assertIn("linkpath: 0,1,2,3", out)
        out, _ = self.assert_exit(
            f"check-vortex --graph {graph} --cert {data('caterpillar_missing.vortex')}",
            defaults.EXIT_FAIL,
        )
        first = violations(out)[0]
        self.assertTrue(first.startswith("VIOLATION SocietyVertexNotInBag"))
        reversed_cert = data("caterpillar_reversed.vortex")
        out, _ = self.assert_exit(
            f"check-vortex --graph {graph} --cert {reversed_cert}", defaults.EXIT_FAIL
        )
        self.assertTrue(violations(out)[0].startswith("VIOLATION TeethOrderMismatch"))
        self.assert_exit(
            f"check-vortex --graph {graph} --cert {reversed_cert} "
            "--allow-reversed-comb",
            defaults.EXIT_PASS,
        )

    def test_genus(self):
        """ Tests the "genus" subcommand on K5 and W_3. """
        args = f"genus --graph {data('k5.graph')} --rotation {data('k5.rotation')}"
        out, _ = self.assert_exit(args, defaults.EXIT_PASS)
        self.assertIn("genus=2", out)
        self.assertIn("faces=5", out)
        out, _ = self.assert_exit(f"{args} --minimum", defaults.EXIT_PASS)
        self.assertIn("minimum_genus=2", out)
        out, _ = self.assert_exit(
            f"genus --graph {data('w3.graph')} --rotation {data('w3.rotation')}",
            defaults.EXIT_PASS,
        )
        self.assertIn("genus=0", out)
        self.assertIn("face 1: 0,3,6,7,8,5,2,1", out)

    def test_check_near_embedding(self):
        """ Tests the "check-near-embedding" subcommand and its optional checks. """
        graph = data("composite.graph")
        cert = data("composite.cert")
        self.assert_exit(
            f"check-near-embedding --graph {graph} --cert {cert}", defaults.EXIT_PASS
        )
        out, _ = self.assert_exit(
            f"check-near-embedding --graph {graph} --cert {cert} {PROFILE} --euler",
            defaults.EXIT_PASS,
        )
        self.assertTrue(any(line.startswith("euler |G0| + ask > ") for line in out))
        out, _ = self.assert_exit(
            f"check-near-embedding --graph {graph} --cert {cert} {PROFILE} --claims",
            defaults.EXIT_FAIL,
        )
        self.assertEqual(len(violations(out)), 1)
        first = violations(out)[0]
        self.assertTrue(first.startswith("VIOLATION ClaimFailed small vortices"))
        out, _ = self.assert_exit(
            f"check-near-embedding --graph {graph} --cert {cert} {PROFILE} "
            f"--model {data('w3_identity.model')}",
            defaults.EXIT_PASS,
        )
        self.assertIn("branch-count small vortex 2: order=3 branch_sets=3", out)
        out, _ = self.assert_exit(
            f"check-near-embedding --graph {graph} "
            f"--cert {data('composite_reversed_disc.cert')}",
            defaults.EXIT_FAIL,
        )
        self.assertTrue(violations(out)[0].startswith("VIOLATION SocietyNotOnFace"))

    def test_check_near_embedding_usage(self):
        """ Optional checks without the arguments they need are usage errors. """
        graph = data("composite.graph")
        cert = data("composite.cert")
        self.assert_exit(
            f"check-near-embedding --graph {graph} --cert {cert} --respects",
            defaults.EXIT_USAGE,
        )
        self.assert_exit(
            f"check-near-embedding --graph {graph} --cert {cert} --a 1 --euler",
            defaults.EXIT_USAGE,
        )
        self.assert_exit(
            f"check-near-embedding --graph {graph} --cert {cert} --claims",
            defaults.EXIT_USAGE,
        )

    def test_wideness(self):
        """ Tests the "wideness" subcommand against several values of m. """
        args = (
            f"wideness --graph {data('composite.graph')} "
            f"--cert {data('composite.cert')}"
        )
        out, _ = self.assert_exit(f"{args} --vortex 1 --m 4", defaults.EXIT_PASS)
        self.assertIn("essential=4", out)
        self.assertIn("society 5: g0_degree=3 essential=true", out)
        self.assert_exit(f"{args} --vortex 1 --m 5", defaults.EXIT_FAIL)
        self.assert_exit(
            f"{args} --vortex 1 --m 4 --essential-degree 3", defaults.EXIT_FAIL
        )
        self.assert_exit(f"{args} --vortex 2 --m 1", defaults.EXIT_USAGE)

    def test_constants(self):
        """ Tests the "constants" subcommand, including a too-small alpha. """
        out, _ = self.assert_exit(
            "constants --a 1 --s 1 --k 1 --alpha 2 --theta 5 --n2 1", defaults.EXIT_PASS
        )
        expected = ["g=0", "n1=7", "r=17", "r_bound=259"]
        self.assertEqual(out, expected + ["RESULT constants pass checked=5"])
        _, err = self.assert_exit(
            "constants --a 1 --s 1 --k 1 --alpha 1 --theta 5 --n2 1",
            defaults.EXIT_USAGE,
        )
        self.assertIn("alpha", err)

    def test_check_hypotheses(self):
        """ K6 is 5-connected but its minimum degree is too small. """
        out, _ = self.assert_exit(
            f"check-hypotheses --graph {data('k6.graph')} --a 1", defaults.EXIT_FAIL
        )
        self.assertIn("kappa=5", out)
        self.assertEqual(violations(out), ["VIOLATION HypothesisFailed delta 5 < 28"])
        self.assert_exit(
            f"check-hypotheses --graph {data('k6.graph')} --a 0", defaults.EXIT_FAIL
        )

    def test_verify_all(self):
        """ Every acceptance check passes. """
        out, _ = self.assert_exit("verify-all --threads 2", defaults.EXIT_PASS)
        results = [line for line in out if line.startswith("RESULT ")]
        self.assertEqual(len(results), 12)
        self.assertTrue(results[-1].startswith("RESULT verify-all pass checked="))
        self.assertEqual(violations(out), [])


if __name__ == "__main__":
    unittest.main()
