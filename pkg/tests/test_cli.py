import json

import pytest

from wimanedge.cli import main


def test_list_suites(capsys):
    assert main(["list-suites"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0].startswith("exactfield")
    assert len(out.splitlines()) == 8


def test_verify_jsonl(capsys):
    assert main(["verify", "--suite", "groups", "delpezzo", "--report", "jsonl"]) == 0
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert {r["verdict"] for r in rows} <= {"PASS", "REPORTED"}
    assert rows[0]["check"].startswith("delpezzo.")


def test_verify_text(capsys):
    assert main(["verify", "--suite", "moduli"]) == 0
    assert "moduli.D4odd PASS" in capsys.readouterr().out


def test_unknown_suite_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "bogus"])
    assert exc.value.code == 2


def test_bad_field_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "pencil", "--field", "Q(zeta7)"])
    assert exc.value.code == 2


def test_missing_constant_is_a_precondition_error(capsys):
    assert main(["verify", "--suite", "pencil", "--field", "Q(i)"]) == 2
    assert "lacks the constant sqrtm3" in capsys.readouterr().err


def test_plot_rejects_degenerate_window(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["plot", "--lambda", "1", "--mu", "0", "--window", "1,1,0,2", "--out", str(tmp_path / "a.svg")])
    assert exc.value.code == 2


def test_plot_writes_svg(tmp_path, capsys):
    out = tmp_path / "p.svg"
    assert main(["plot", "--lambda", "0", "--mu", "1", "--grid", "40", "--out", str(out)]) == 0
    assert out.read_text().startswith("<svg")
    assert "segments" in capsys.readouterr().out
