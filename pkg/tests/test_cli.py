from __future__ import annotations

import io
import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import jsonschema
import pytest

from nichols_sn.cli import EXIT_LOOKUP, EXIT_OK, EXIT_USAGE, UNKNOWN_TEXT, run
from nichols_sn.criteria import pair_verdict

GOLDEN = Path(__file__).parent / "golden"
SCHEMA = json.loads(resources.files("nichols_sn").joinpath("schema/output.schema.json").read_text())


def call(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv: str) -> dict:
    code, out, _ = call(*argv, "--format", "json")
    assert code == EXIT_OK
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return doc


@pytest.mark.parametrize("which", ["s3", "s4"])
def test_tables_match_the_golden_files(which):
    code, out, _ = call("table", which)
    assert code == EXIT_OK
    assert out == (GOLDEN / f"table_{which}.txt").read_text()
    doc = call_json("table", which)
    assert doc == json.loads((GOLDEN / f"table_{which}.json").read_text())


@pytest.mark.parametrize("argv", [
    ("verdict", "-n", "4", "-t", "2^2", "-r", "d4:rho2"),
    ("verdict", "-n", "6", "-t", "2", "-r", "sgn*eps"),
    ("verdict", "-n", "3", "-t", "2", "-r", "sgn"),
    ("orbit", "-n", "5", "-t", "3"),
    ("orbit", "-n", "4", "-t", "2"),
    ("braiding", "-n", "3", "-t", "2", "-r", "sgn"),
    ("hilbert", "-n", "3", "-t", "2", "-r", "sgn", "--dmax", "5"),
    ("hilbert", "-n", "3", "-t", "2", "-r", "eps", "--dmax", "2", "--method", "dense"),
    ("centralizer", "-n", "6", "-t", "2^2"),
    ("table", "s3"),
])
def test_every_command_validates_against_the_schema(argv):
    doc = call_json(*argv)
    assert doc["command"] == argv[0]
    assert doc["schema_version"] == "1"


def test_cli_verdicts_are_the_library_verdicts():
    for n, t, label in [(4, "2^2", "d4:rho2"), (4, "4", "chi4"), (6, "2", "sgn*sgn"), (3, "3", "chi3")]:
        doc = call_json("verdict", "-n", str(n), "-t", t, "-r", label)
        assert doc["payload"] == pair_verdict(n, t, label).to_json()


def test_text_verdict():
    code, out, _ = call("verdict", "-n", "4", "-t", "2^2", "-r", "d4:rho2")
    assert code == EXIT_OK
    assert out.startswith("M(O_{2,2}, d4:rho2) in S_4, type 2^2: infinite")
    assert "decided by: diagonal-cartan" in out
    assert "A2^(1)" in out
    code, out, _ = call("verdict", "-n", "6", "-t", "2", "-r", "sgn*eps")
    assert code == EXIT_OK and UNKNOWN_TEXT in out
    code, out, _ = call("verdict", "-n", "3", "-t", "2", "-r", "sgn")
    assert "finite, dim = 12 [ms]" in out


def test_hilbert_text():
    code, out, _ = call("hilbert", "-n", "3", "-t", "2", "-r", "sgn", "--dmax", "5")
    assert code == EXIT_OK
    assert out == "dims: 1 3 4 3 1 0\nexhausted: true\ntotal: 12\n"


def test_exit_codes():
    assert call("verdict", "-n", "4", "-t", "2^x", "-r", "eps")[0] == EXIT_USAGE
    assert call("verdict", "-n", "4", "-t", "5", "-r", "eps")[0] == EXIT_USAGE
    assert call("verdict", "-n", "4", "-t", "4", "-r", "chi3")[0] == EXIT_LOOKUP
    code, _, err = call("hilbert", "-n", "4", "-t", "2", "-r", "sgn*eps", "--dmax", "4", "--budget", "100")
    assert code == EXIT_LOOKUP and "budget" in err
    assert call("bogus")[0] == EXIT_USAGE
    assert call()[0] == EXIT_USAGE


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "nichols_sn", "table", "s3"],
                         capture_output=True, text=True, check=True)
    assert res.stdout == (GOLDEN / "table_s3.txt").read_text()
