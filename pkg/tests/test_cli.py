import csv
import io
import json

import pytest
from click.testing import CliRunner

from zetalab.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def test_verify_janous_table(runner):
    result = runner.invoke(main, ["verify", "janous"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0].split()[:3] == ["id", "params", "numeric"]
    assert "janous" in lines[1]
    assert "pass" in lines[1]


def test_verify_json_format(runner):
    result = runner.invoke(main, ["verify", "janous", "--format", "json"])
    assert result.exit_code == 0
    reports = json.loads(result.output)
    assert reports[0]["id"] == "janous"
    assert reports[0]["status"] == "pass"


def test_verify_csv_format(runner):
    result = runner.invoke(
        main,
        ["verify", "kontsevich", "--samples", "100000", "--format", "csv"],
    )
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(result.output)))
    assert rows[0][0] == "id"
    assert rows[1][0] == "kontsevich"
    # no field needed quoting: re-serializing reproduces the raw text
    assert all("\"" not in cell for row in rows for cell in row)


def test_verify_exit_code_failure(runner):
    result = runner.invoke(
        main,
        ["verify", "kontsevich", "--samples", "10000", "--seed", "75"],
    )
    assert result.exit_code == 1


def test_verify_exit_code_usage_error(runner):
    result = runner.invoke(main, ["verify", "thm21", "--n", "9"])
    assert result.exit_code == 2
    assert "thm21 supports n in 1..3" in result.output


def test_verify_unknown_target_rejected(runner):
    result = runner.invoke(main, ["verify", "nonsense"])
    assert result.exit_code == 2


def test_digits_envvar(runner):
    # out-of-range digits from the environment surface as a usage error
    result = runner.invoke(
        main, ["verify", "janous"], env={"ZETALAB_DIGITS": "14"}
    )
    assert result.exit_code == 2
    assert "digits must lie in 15..1000" in result.output


def test_byte_identical_reruns(runner):
    args = ["verify", "kontsevich", "--samples", "100000", "--format", "json"]
    a = runner.invoke(main, args)
    b = runner.invoke(main, args)
    assert a.output == b.output


def test_sequence_lcm_table(runner):
    result = runner.invoke(main, ["sequence", "lcm", "--k-max", "6"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert len(lines) == 7  # header + 6 rows
    assert lines[0].split()[:3] == ["family", "k", "d_k"]


def test_sequence_json_with_errata(runner):
    result = runner.invoke(
        main,
        ["sequence", "beukers", "--k-max", "2", "--errata", "--format", "json"],
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert set(payload) == {"rows", "errata"}
    assert payload["rows"][0]["A"] == "-12"
    assert payload["rows"][0]["B"] == "10"


def test_sequence_errata_csv_needs_no_quoting(runner):
    result = runner.invoke(
        main,
        ["sequence", "lcm", "--k-max", "2", "--errata", "--format", "csv"],
    )
    assert result.exit_code == 0
    assert "\"" not in result.output


def test_sequence_unknown_family(runner):
    result = runner.invoke(main, ["sequence", "nonsense"])
    assert result.exit_code == 2
