"""E2E tests running the installed command in a subprocess."""

import sys
from pathlib import Path

# Add tests directory to path for path_setup import
TESTS_DIR = Path(__file__).resolve().parent.parent
if str(TESTS_DIR) not in sys.path:
    sys.path.insert(0, str(TESTS_DIR))

import path_setup

path_setup.add_src_path()

import json
import os
import subprocess
import unittest


class TestCliE2E(unittest.TestCase):
    """Tests the documented invocations of python -m eigen_sequences."""

    def _run(self, *args: str, stdin_text: str = "") -> subprocess.CompletedProcess:
        """Run the module with src on PYTHONPATH."""
        env = dict(os.environ, PYTHONPATH=str(path_setup.src_path()))
        return subprocess.run(
            [sys.executable, "-m", "eigen_sequences", *args],
            input=stdin_text,
            capture_output=True,
            text=True,
            env=env,
            check=False,
        )

    def test_transform_aerated_catalan(self) -> None:
        """L^{(1,1)} of aerated Catalan prints Motzkin numbers."""
        result = self._run("transform", "--op", "L:h=1,y=1", "--in", "catalan_aerated", "--terms", "9")

        self.assertEqual(result.returncode, 0)
        self.assertEqual(json.loads(result.stdout)["terms"], ["1", "1", "2", "4", "9", "21", "51", "127", "323"])

    def test_fixed_check_motzkin(self) -> None:
        """Motzkin numbers are reported fixed by L^{(-1,2)}."""
        result = self._run("fixed-check", "--chain", "L:h=-1,y=2", "--in", "motzkin", "--terms", "32")

        self.assertEqual(result.returncode, 0)
        self.assertEqual(result.stdout, "FIXED\n")

    def test_revert_catalan(self) -> None:
        """Revert of Catalan is 1, -1, 0, 0, 0."""
        result = self._run("revert", "--in", "catalan", "--terms", "5")

        self.assertEqual(result.returncode, 0)
        self.assertEqual(json.loads(result.stdout)["terms"], ["1", "-1", "0", "0", "0"])

    def test_emit_identity_round_trip(self) -> None:
        """Piping emit into the identity transform is byte-identical."""
        emitted = self._run("emit", "--name", "catalan", "--terms", "12").stdout

        result = self._run("transform", "--op", "identity", "--file", "-", stdin_text=emitted)

        self.assertEqual(result.returncode, 0)
        self.assertEqual(result.stdout, emitted)

    def test_self_binomial_failure_exit_code(self) -> None:
        """A failing identity exits with 1 and reports the counterexample."""
        result = self._run("identity", "self-binomial", "--in", "catalan", "--terms", "10")

        self.assertEqual(result.returncode, 1)
        self.assertFalse(json.loads(result.stdout)["holds"])

    def test_malformed_input_exits_two(self) -> None:
        """Bad documents and unknown names exit with 2 and leave stdout empty."""
        malformed = self._run("transform", "--op", "R", "--file", "-", stdin_text='{"terms": ["0.5"]}')
        unknown = self._run("emit", "--name", "no_such_sequence")

        for result in (malformed, unknown):
            self.assertEqual(result.returncode, 2)
            self.assertEqual(result.stdout, "")
            self.assertNotEqual(result.stderr, "")
