from __future__ import annotations

import io
import json

import pytest

from splicegenus.cli import (
    LinkRecord,
    format_table,
    load_records,
    main,
    print_witness,
    run_batch,
    verify,
)

REFERENCE = {
    "2^2_1": (0, 1, 1, 0),
    "4^2_1": (0, 1, 1, 0),
    "5^2_1": (1, 2, 1, -1),
    "6^2_1": (0, 1, 1, 0),
    "6^2_2": (1, 2, 1, -1),
    "6^2_3": (2, 3, 2, -2),
    "7^2_1": (1, 2, 1, -1),
    "7^2_2": (2, 3, 2, -2),
    "7^2_3": (2, 3, 2, -2),
    "7^2_4": (1, 2, 1, -1),
    "7^2_5": (2, 3, 2, -2),
    "7^2_6": (2, 3, 2, -2),
}


def write(tmp_path, lines):
    p = tmp_path / "in.jsonl"
    p.write_text("".join(json.dumps(x) + "\n" for x in lines))
    return str(p)


def test_bundled_records_match_reference(table):
    assert {r.name: r.expected for r in table} == REFERENCE


def test_run_batch_bundled(table):
    rows = run_batch(table)
    assert [r.record.name for r in rows] == list(REFERENCE)
    assert all(r.report is not None and r.report.row == REFERENCE[r.record.name] for r in rows)
    assert not any(r.mismatch for r in rows)


def test_run_default_exit_zero(capsys):
    assert main(["run"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].split() == ["L", "u-", "u2-", "C", "chi"]
    assert out[1].split() == ["2^2_1", "0", "1", "1", "0"]
    assert len(out) == 13


def test_output_is_deterministic(capsys):
    main(["run", "--format", "csv", "--extended"])
    first = capsys.readouterr().out
    main(["run", "--format", "csv", "--extended", "--jobs", "2"])
    assert capsys.readouterr().out == first


def test_csv_and_markdown(capsys):
    main(["run", "--format", "csv"])
    csv_out = capsys.readouterr().out.splitlines()
    assert csv_out[0] == "L,u-,u2-,C,chi"
    assert csv_out[-1] == "7^2_6,2,3,2,-2"
    main(["run", "--format", "md"])
    md = capsys.readouterr().out.splitlines()
    assert md[0] == "| L | u- | u2- | C | chi |"
    assert md[2] == "| 2^2_1 | 0 | 1 | 1 | 0 |"


def test_beta1_column(table):
    rows = run_batch(table)
    lines = format_table(rows, "csv", beta1=True).splitlines()
    assert lines[0].endswith(",beta1")
    for line in lines[1:]:
        cells = line.split(",")
        assert int(cells[-1]) == int(cells[3]) + 1


def test_empty_input(tmp_path, capsys):
    p = tmp_path / "empty.jsonl"
    p.write_text("")
    assert main(["run", str(p)]) == 0
    assert capsys.readouterr().out.split() == ["L", "u-", "u2-", "C", "chi"]


def test_wrong_expected_chi(tmp_path, capsys):
    path = write(tmp_path, [{"name": "2^2_1", "pd": "X[4,1,3,2] X[1,4,2,3]", "expected": [0, 1, 1, -1]}])
    assert main(["run", path]) == 1
    err = capsys.readouterr().err
    assert "mismatch: 2^2_1" in err


def test_parse_failure_skips_row(tmp_path, capsys):
    path = write(
        tmp_path,
        [
            {"name": "bad", "pd": "X[1,2,3,4,5]"},
            {"name": "2^2_1", "pd": "X[4,1,3,2] X[1,4,2,3]"},
        ],
    )
    assert main(["run", path]) == 2
    captured = capsys.readouterr()
    assert "bad" in captured.err and "malformed" in captured.err
    assert "bad" not in captured.out and "2^2_1" in captured.out


def test_cap_exceeded_marks_failure(tmp_path, capsys, table):
    pd = next(r.pd for r in table if r.name == "5^2_1")
    path = write(tmp_path, [{"name": "5^2_1", "pd": pd}])
    assert main(["run", path, "--max-crossings", "4"]) == 1
    assert "cap" in capsys.readouterr().err


def test_bad_json_line(tmp_path, capsys):
    p = tmp_path / "x.jsonl"
    p.write_text('{"name": "a"\n')
    assert main(["run", str(p)]) == 2


def test_expected_must_be_integers():
    records, errors = load_records('{"name": "a", "pd": "X[1,3,2,4] X[3,1,4,2]", "expected": [0, 1, 1.5, 0]}')
    assert records == [] and len(errors) == 1


def test_missing_file():
    assert main(["run", "/nonexistent/file.jsonl"]) == 2


def test_witness_2_2_1(table):
    text = print_witness(table, "2^2_1")
    lines = text.splitlines()
    assert lines[0].startswith("2^2_1: u- = 0")
    steps = lines[2:]
    assert len(steps) == 2
    assert "S-join" in steps[0] and "RI-" in steps[1]


def test_witness_5_2_1(table):
    steps = print_witness(table, "5^2_1").splitlines()[2:]
    assert sum(" S- " in s for s in steps) == 1


def test_witness_crossingless_circle():
    text = print_witness([LinkRecord("O", "circles=1")], "O")
    assert text.splitlines()[0] == "O: u- = 0, 0 moves"
    assert len(text.splitlines()) == 2


def test_witness_unknown_name(table, capsys):
    with pytest.raises(KeyError):
        print_witness(table, "9^2_99")
    assert main(["witness", "9^2_99"]) == 2


def test_run_with_witness_flag(capsys):
    assert main(["run", "--witness", "5^2_1"]) == 0
    assert "5^2_1: u- = 1" in capsys.readouterr().out


def test_verify_small():
    out = io.StringIO()
    assert verify(seed=0, count=10, out=out)
    lines = out.getvalue().splitlines()
    assert [line.split()[1].rstrip(":") for line in lines] == [
        "table",
        "oracle-u",
        "oracle-chi",
        "theorem",
        "twist-chi",
        "connected-sum",
        "parse-failure",
    ]
    assert all(line.startswith("PASS") for line in lines)
