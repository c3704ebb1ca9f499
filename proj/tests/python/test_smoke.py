import json
import os
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest

import gorbit

SCHEMA_DIR = Path(os.environ.get("GORBIT_SCHEMA_DIR", Path(__file__).resolve().parents[2] / "docs" / "schema"))
CLI = os.environ.get("GORBIT_CLI")

SU2 = {
    "name": "su2",
    "dimension": 3,
    "basis": ["e1", "e2", "e3"],
    "brackets": [
        {"i": 0, "j": 1, "terms": [{"k": 2, "c": "1"}]},
        {"i": 0, "j": 2, "terms": [{"k": 1, "c": "-1"}]},
        {"i": 1, "j": 2, "terms": [{"k": 0, "c": "1"}]},
    ],
    "isotropy": [["0", "0", "1"]],
    "metric": {"type": "killing_multiple", "factor": "1"},
}


def test_version_and_kinds():
    assert gorbit.__version__ == "0.1.0"
    assert "u2_sphere" in gorbit.construction_kinds()
    assert "heisenberg13" in gorbit.construction_kinds()


def test_killing_form_of_su2():
    b = gorbit.to_fractions(gorbit.killing_form(SU2))
    assert b == [[Fraction(-2) if i == j else 0 for j in range(3)] for i in range(3)]
    assert gorbit.radical(SU2) == []


def test_u2_nilradical_is_the_centre():
    u2 = gorbit.construct("u2_sphere", alpha="1/2")
    assert gorbit.nilradical(u2) == [["0", "0", "0", "1"]]
    assert gorbit.go_check(u2)["kind"] == "CertifiedNaturallyReductive"


def test_filiform_is_not_go_with_witness():
    verdict = gorbit.go_check(gorbit.construct("filiform4"), samples=8)
    assert verdict["kind"] == "NotGO"
    assert verdict["witness"] is not None


def test_errors_carry_kind_and_path():
    bad = json.loads(json.dumps(SU2))
    bad["brackets"][0]["terms"][0]["c"] = "1/0"
    with pytest.raises(gorbit.GorbitError, match=r"SchemaError.*\$\.brackets\[0\]\.terms\[0\]\.c"):
        gorbit.nilradical(bad)
    with pytest.raises(ValueError):
        gorbit.construct("no_such_kind")


def test_in_process_cli_matches_schema(tmp_path):
    jsonschema = pytest.importorskip("jsonschema")
    algebra = tmp_path / "su2.json"
    algebra.write_text(json.dumps(SU2))
    code, out, err = gorbit.run("go-check", algebra, "--expect", "nr")
    assert code == 0, err
    envelope = json.loads(out)
    schema = json.loads((SCHEMA_DIR / "report_envelope.v1.schema.json").read_text())
    jsonschema.validate(envelope, schema)
    file_schema = json.loads((SCHEMA_DIR / "algebra_file.v1.schema.json").read_text())
    jsonschema.validate(gorbit.construct("euclidean_go", n=2), file_schema)


@pytest.mark.skipif(not CLI, reason="GORBIT_CLI not set")
def test_cli_binary_exit_codes(tmp_path):
    target = tmp_path / "fil.json"
    subprocess.run([CLI, "construct", "filiform4", "-o", str(target)], check=True, capture_output=True)
    ok = subprocess.run([CLI, "go-check", str(target), "--expect", "not-go"], capture_output=True, text=True)
    assert ok.returncode == 0
    mismatch = subprocess.run([CLI, "go-check", str(target), "--expect", "go"], capture_output=True, text=True)
    assert mismatch.returncode == 3
    missing = subprocess.run([CLI, "analyze", str(tmp_path / "absent.json")], capture_output=True, text=True)
    assert missing.returncode == 2
