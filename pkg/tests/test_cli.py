import csv
import io
import json

import pytest

from oddcovers import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_table_text_closed(capsys):
    code, out = run(capsys, "table", "--max-g", "2", "--routes", "closed")
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()[1:]]
    assert [(r[0], r[1]) for r in rows] == [("0", "1"), ("1", "0"), ("2", "512")]


def test_table_cross_route_agreement(capsys):
    code, out = run(capsys, "table", "--max-g", "8", "--routes", "closed,schubert")
    assert code == 0
    assert "NO" not in out


def test_table_schubert_weights(capsys):
    code, out = run(capsys, "table", "--max-g", "1", "--routes", "schubert",
                    "--n4", "1", "--n5", "0")
    assert code == 0
    assert out.strip().splitlines()[-1].startswith("1\t0")


def test_table_json_round_trips(capsys):
    code, out = run(capsys, "table", "--max-g", "12", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "table"
    from oddcovers.routes import alt_catalan_closed
    for row in payload["rows"]:
        assert int(row["values"]["closed"]) == alt_catalan_closed(row["g"])
        assert row["agree"] is True


def test_csv_and_json_carry_identical_values(capsys):
    code, json_out = run(capsys, "table", "--max-g", "6", "--format", "json")
    assert code == 0
    code, csv_out = run(capsys, "table", "--max-g", "6", "--format", "csv")
    assert code == 0
    payload = json.loads(json_out)
    records = list(csv.DictReader(io.StringIO(csv_out)))
    assert len(records) == len(payload["rows"])
    for row, record in zip(payload["rows"], records):
        assert record["g"] == str(row["g"])
        assert record["closed"] == row["values"]["closed"]


def test_series_order_five(capsys):
    code, out = run(capsys, "series", "--order", "5")
    assert code == 0
    lines = [l for l in out.strip().splitlines() if not l.startswith("#")]
    assert [l.split("\t")[1] for l in lines] == ["0", "1", "0", "0", "0", "512"]


def test_series_order_zero(capsys):
    code, out = run(capsys, "series", "--order", "0")
    assert code == 0
    assert out.strip().splitlines()[-1] == "0\t0"


def test_series_header_documents_indexing(capsys):
    _, out = run(capsys, "series", "--order", "3")
    assert "2g+1" in out.splitlines()[0]


def test_schubert_command(capsys):
    code, out = run(capsys, "schubert", "--g", "2")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("512")
    code, out = run(capsys, "schubert", "--g", "1")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("0")
    code, out = run(capsys, "schubert", "--g", "2", "--n4", "1", "--n5", "0")
    assert code == 0
    assert out.strip().splitlines()[-1].endswith("1")


def test_resource_cap_exit_code(capsys):
    code, _ = run(capsys, "schubert", "--g", "13")
    assert code == 3
    code, _ = run(capsys, "table", "--max-g", "13", "--routes", "schubert")
    assert code == 3
    code, _ = run(capsys, "table", "--max-g", "13", "--routes", "schubert",
                  "--cap", "13")
    assert code == 0


def test_usage_error_exit_code(capsys):
    code, _ = run(capsys, "table", "--routes", "bogus")
    assert code == 2
    with pytest.raises(SystemExit) as err:
        cli.main(["table", "--format", "yaml"])
    assert err.value.code == 2


def test_verify_all_passes(capsys):
    code, out = run(capsys, "verify", "--suite", "all")
    assert code == 0
    assert "FAIL" not in out
    assert "0 failed" in out


def test_verify_json_schema(capsys):
    code, out = run(capsys, "verify", "--suite", "weierstrass", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "verify"
    assert payload["checks"]
    for check in payload["checks"]:
        assert set(check) == {"name", "citation", "pass", "detail"}
        assert check["pass"] is True
    # the e3=0 specialization is informational, not silently dropped
    assert any("informational" in c["detail"] for c in payload["checks"])


def test_verify_identities_window(capsys):
    code, out = run(capsys, "verify", "--suite", "identities", "--max-g", "30")
    assert code == 0
    assert "FAIL" not in out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code = cli.main(["table", "--max-g", "2", "--format", "json",
                     "--output", str(target)])
    assert code == 0
    assert capsys.readouterr().out == ""
    payload = json.loads(target.read_text())
    assert payload["rows"][2]["values"]["closed"] == "512"
