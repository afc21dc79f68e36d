from __future__ import annotations

import json

import pytest

from symbool.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_ai_from_value_vector(capsys):
    rc, out, _ = run(capsys, "ai", "--value-vector", "0101")
    assert rc == 0
    assert "n: 3" in out
    assert "ai: 1" in out
    assert "side: f" in out
    assert "witness: x1 + x2 + x3 + 1" in out


def test_ai_from_hex_table(capsys):
    rc, out, _ = run(capsys, "ai", "--table", "96")
    assert rc == 0
    assert "ai: 1" in out


def test_ai_rejects_bad_table(capsys):
    rc, _, err = run(capsys, "ai", "--table", "xyz")
    assert rc == 2
    assert "error:" in err
    rc, _, err = run(capsys, "ai", "--table", "961")  # length not a power of two
    assert rc == 2


def test_ai_requires_exactly_one_input():
    with pytest.raises(SystemExit):
        main(["ai"])
    with pytest.raises(SystemExit):
        main(["ai", "--table", "96", "--value-vector", "0101"])


def test_convert_roundtrip(capsys):
    rc, out, _ = run(capsys, "convert", "--value-vector", "000111")
    assert rc == 0
    assert "value-vector: 000111" in out
    assert "sanf: 000110" in out
    rc, out2, _ = run(capsys, "convert", "--sanf", "000110")
    assert rc == 0
    assert out2 == out


def test_lemma4_canonical(capsys):
    rc, out, _ = run(capsys, "lemma4", "--i", "2")
    assert rc == 0
    assert out == "sanf: 011000  value-vector: 011001\n"


def test_lemma4_all(capsys):
    rc, out, _ = run(capsys, "lemma4", "--i", "1", "--all")
    assert rc == 0
    assert out.splitlines() == ["sanf: 0100  value-vector: 0101"]
    rc, _, err = run(capsys, "lemma4", "--i", "0")
    assert rc == 2
    assert "error:" in err


def test_gap_annihilator(capsys):
    rc, out, _ = run(capsys, "gap-annihilator", "--n", "5", "--i", "1")
    assert rc == 0
    lines = dict(line.split(": ", 1) for line in out.splitlines())
    assert lines["n"] == "5"
    assert lines["g"] == "0101"
    assert lines["support-weights"] == "2 4"
    assert int(lines["degree"]) <= 2
    assert len(lines["table"]) == 8

    rc, _, err = run(capsys, "gap-annihilator", "--n", "6", "--i", "1")
    assert rc == 2


def test_theorem3_verdicts(capsys):
    rc, out, _ = run(capsys, "theorem3", "--n", "5", "--sanf", "010000")
    assert rc == 0
    assert out == "condition: false\n"
    rc, out, _ = run(capsys, "theorem3", "--n", "5", "--sanf", "000110")
    assert out == "condition: true\n"


def test_theorem3_emit(capsys):
    rc, out, _ = run(capsys, "theorem3", "--n", "5", "--sanf", "010000",
                     "--emit-annihilator")
    assert rc == 0
    lines = dict(line.split(": ", 1) for line in out.splitlines())
    assert lines["annihilator-degree"] == "1"
    assert len(lines["annihilator"]) == 8


def test_theorem3_mismatched_n(capsys):
    rc, _, err = run(capsys, "theorem3", "--n", "7", "--sanf", "010000")
    assert rc == 2
    assert "error:" in err


def test_survey_stdout_csv(capsys):
    rc, out, _ = run(capsys, "survey", "--n", "3")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0].startswith("n,value_vector,")
    assert len(lines) == 17


def test_survey_json(capsys):
    rc, out, _ = run(capsys, "survey", "--n", "3", "--format", "json",
                     "--filter", "trivial-balanced")
    assert rc == 0
    data = json.loads(out)
    assert len(data) == 4
    assert all(r["trivial_balanced"] for r in data)


def test_survey_out_writes_report_and_figure(tmp_path, capsys):
    out_file = tmp_path / "s3.csv"
    rc, out, _ = run(capsys, "survey", "--n", "3", "--out", str(out_file))
    assert rc == 0
    assert out == ""
    assert out_file.read_text().startswith("n,value_vector,")
    fig = tmp_path / "s3.png"
    assert fig.exists() and fig.stat().st_size > 0


def test_survey_no_figure(tmp_path, capsys):
    out_file = tmp_path / "s3.csv"
    rc, _, _ = run(capsys, "survey", "--n", "3", "--out", str(out_file),
                   "--no-figure")
    assert rc == 0
    assert out_file.exists()
    assert not (tmp_path / "s3.png").exists()


def test_survey_cap(capsys):
    rc, _, err = run(capsys, "survey", "--n", "14")
    assert rc == 2
    assert "error:" in err


def test_verify_success(capsys):
    rc, out, _ = run(capsys, "verify", "--n", "3")
    assert rc == 0
    rep = json.loads(out)
    assert rep["theorem2_holds"] and rep["lemma2_holds"] and rep["theorem3_holds"]
    assert rep["total"] == 16


def test_verify_rejects_even_n(capsys):
    rc, _, err = run(capsys, "verify", "--n", "4")
    assert rc == 2
    assert "error:" in err
