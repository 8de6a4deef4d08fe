import json
import subprocess
import sys

import jsonschema
import pytest

from kleintc.cli import main
from kleintc.verifier import REPORT_SCHEMA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_eval(capsys):
    assert run(capsys, "eval", "w", "[s||a1b0|a0b1]")[:2] == (0, "1")
    assert run(capsys, "eval", "z", "[a2b1|a1b3]")[:2] == (0, "0")


def test_eval_errors(capsys):
    code, _, err = run(capsys, "eval", "v", "[a1b0]")
    assert code == 2 and "valid names" in err
    assert run(capsys, "eval", "w", "[a1b0]")[0] == 2
    assert run(capsys, "eval", "x", "[a1b0")[0] == 2


def test_boundary(capsys):
    assert run(capsys, "boundary", "[b||a1b0]", "--m", "3")[:2] == (0, "[*||a-1b0] + [*||a1b0]")
    assert run(capsys, "boundary", "[s||]")[1] == "0"
    assert run(capsys, "boundary", "[a1b0|a0b1]")[1] == "[a0b1] + [a1b0] + [a1b1]"
    assert run(capsys, "boundary", "[*||a1b0|a1b0]", "--m", "1")[0] == 2


def test_group(capsys):
    assert run(capsys, "group", "mul", "a1b1", "a1b1")[1] == "a0b2"
    assert run(capsys, "group", "mul", "a1b0", "a0b1", "a1b0")[1] == "a0b1"
    assert run(capsys, "group", "inv", "a1b1")[1] == "a1b-1"
    assert run(capsys, "group", "conj", "a0b1", "a1b0")[1] == "a2b1"
    assert run(capsys, "group", "inv", "a1b1", "a0b0")[0] == 2
    assert run(capsys, "group", "mul", "b1")[0] == 2


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "main", "--json")
    assert code == 0
    reports = json.loads(out)
    assert [r["check"] for r in reports] == ["main", "main[wide]"]
    for r in reports:
        jsonschema.validate(r, REPORT_SCHEMA)
    assert reports[0]["cases"] == 1088


def test_verify_ranges(capsys):
    code, out, _ = run(capsys, "verify", "remark", "--k-range=-2..2", "--l-range=0..1", "--json")
    assert code == 0 and json.loads(out)[0]["cases"] == 10 + 2 * 100
    code, out, _ = run(capsys, "verify", "ddzero", "--m", "2")
    assert code == 0 and "ddzero[m=2]" in out


def test_verify_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"checks": ["cocycles", "group"], "q_max": 4}))
    code, out, _ = run(capsys, "verify", "all", "--config", str(cfg))
    assert code == 0 and "cocycles" in out
    cfg.write_text("{not json")
    assert run(capsys, "verify", "all", "--config", str(cfg))[0] == 2
    cfg.write_text(json.dumps({"checks": ["bogus"]}))
    assert run(capsys, "verify", "all", "--config", str(cfg))[0] == 2


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nothing"])
    assert exc.value.code == 2
    assert run(capsys, "verify", "main", "--residues", "--l-range=0..3")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "kleintc", "eval", "w", "[s||a1b0|a0b1]"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1"
