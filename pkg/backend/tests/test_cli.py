import json
from pathlib import Path

import pytest

from app.cli import app

GOLDEN = Path(__file__).parent / "golden"


def _lines(path: Path):
    return [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines() if line]


@pytest.mark.parametrize("g", [1, 2, 3])
def test_enumerate_json_matches_golden(runner, tmp_path, g):
    out = tmp_path / f"g{g}.jsonl"
    res = runner.invoke(app, ["enumerate", "--g", str(g), "--format", "json", "--out", str(out)])
    assert res.exit_code == 0, res.output
    assert _lines(out) == _lines(GOLDEN / f"enumerate_g{g}.jsonl")


def test_enumerate_csv_matches_golden(runner, tmp_path):
    out = tmp_path / "g2.csv"
    res = runner.invoke(app, ["enumerate", "--g", "2", "--out", str(out)])
    assert res.exit_code == 0, res.output
    assert out.read_text(encoding="utf-8") == (GOLDEN / "enumerate_g2.csv").read_text(encoding="utf-8")


def test_enumerate_is_deterministic(runner, tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    for out in (first, second):
        res = runner.invoke(app, ["enumerate", "--g", "2", "--out", str(out)])
        assert res.exit_code == 0, res.output
    assert first.read_bytes() == second.read_bytes()


def test_enumerate_csv_layout(runner, tmp_path):
    out = tmp_path / "g2.csv"
    res = runner.invoke(app, ["enumerate", "--g", "2", "--filter-prank", "0", "--out", str(out)])
    assert res.exit_code == 0, res.output
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("g,word,length,p_rank,superspecial_at,is_supersingular,component_count,r_")
    assert len(lines) == 1 + 5
    lengths = [int(line.split(",")[2]) for line in lines[1:]]
    assert lengths == sorted(lengths)


def test_enumerate_rejects_large_genus(runner):
    res = runner.invoke(app, ["enumerate", "--g", "7"])
    assert res.exit_code == 1


def test_table(runner, tmp_path):
    out = tmp_path / "table.json"
    res = runner.invoke(app, ["table", "--g", "3", "--format", "json", "--out", str(out)])
    assert res.exit_code == 0, res.output
    rows = json.loads(out.read_text(encoding="utf-8"))["rows"]
    assert [r["strata_count"] for r in rows] == [3, 13, 79]
    assert [r["prank_zero_count"] for r in rows] == [1, 5, 29]
    assert [r["superspecial_union_dimension"] for r in rows] == [0, 2, 3]
    assert [r["prank_zero_dimension"] for r in rows] == [0, 2, 4]
    assert [r["max_length"] for r in rows] == [1, 3, 6]


def test_table_text(runner, tmp_path):
    out = tmp_path / "table.txt"
    res = runner.invoke(app, ["table", "--g", "2", "--out", str(out)])
    assert res.exit_code == 0, res.output
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0].split()[0] == "g"
    assert lines[2].split()[:2] == ["2", "13"]


def _stratum(runner, tmp_path, *args):
    out = tmp_path / "stratum.json"
    res = runner.invoke(app, ["stratum", *args, "--out", str(out)])
    return res, (json.loads(out.read_text(encoding="utf-8")) if res.exit_code == 0 else None)


def test_stratum_g3_example(runner, tmp_path):
    res, row = _stratum(runner, tmp_path, "--g", "3", "--word", "2 0 1")
    assert res.exit_code == 0, res.output
    table = row["r_table"]
    assert (table["sigma_0_2"], table["sigma_prime_0_2"], table["sigma_0_3"],
            table["sigma_prime_0_3"], table["d_1_2"]) == (1, 2, 2, 3, 3)
    # s_0 and s_2 commute; the reported word strips the smallest descent first
    assert row["word"] == [0, 2, 1]
    assert row["length"] == 3


def test_stratum_tau(runner, tmp_path):
    res, row = _stratum(runner, tmp_path, "--g", "2", "--word", "")
    assert res.exit_code == 0, res.output
    assert row["length"] == 0
    assert row["p_rank"] == 0
    assert row["superspecial_at"] == [0, 1]
    assert row["is_supersingular"] is True
    assert row["component_count"] is None


def test_stratum_reduces_words(runner, tmp_path):
    res, row = _stratum(runner, tmp_path, "--g", "2", "--word", "1 1")
    assert res.exit_code == 0, res.output
    assert row["word"] == []
    assert row["length"] == 0


def test_stratum_component_count(runner, tmp_path):
    res, row = _stratum(runner, tmp_path, "--g", "2", "--word", "", "--p", "2", "--N", "3")
    assert res.exit_code == 0, res.output
    assert row["component_count"] == 135


def test_stratum_errors(runner, tmp_path):
    # not admissible: longer than dim A_I
    res, _ = _stratum(runner, tmp_path, "--g", "1", "--word", "0 1 0 1")
    assert res.exit_code == 1
    # admissible but not superspecial
    res, _ = _stratum(runner, tmp_path, "--g", "1", "--word", "0", "--p", "2", "--N", "3")
    assert res.exit_code == 1
    # letter out of range
    res, _ = _stratum(runner, tmp_path, "--g", "1", "--word", "2")
    assert res.exit_code == 1


def test_counts(runner, tmp_path):
    out = tmp_path / "counts.json"
    res = runner.invoke(app, ["counts", "--g", "1", "--p", "13", "--N", "3", "--out", str(out)])
    assert res.exit_code == 0, res.output
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["a_tau_count"] == 12
    assert payload["lambda_mass"] == 12
    assert payload["superspecial_strata"] == [
        {"word": [], "length": 0, "superspecial_at": [0], "component_count": 12}
    ]


def test_counts_g2(runner, tmp_path):
    out = tmp_path / "counts.json"
    res = runner.invoke(app, ["counts", "--g", "2", "--p", "2", "--N", "3", "--out", str(out)])
    assert res.exit_code == 0, res.output
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["a_tau_count"] == payload["lambda_mass"] * 3
    assert all(isinstance(s["component_count"], int) for s in payload["superspecial_strata"])


def test_counts_rejects_bad_prime(runner):
    res = runner.invoke(app, ["counts", "--g", "1", "--p", "4", "--N", "3"])
    assert res.exit_code == 1


def test_verify(runner, tmp_path):
    out = tmp_path / "verify.txt"
    res = runner.invoke(app, ["verify", "--g", "2", "--out", str(out)])
    assert res.exit_code == 0, res.output
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines
    assert all(line.startswith("PASS ") for line in lines)


def test_verify_reports_every_check(runner, tmp_path):
    out = tmp_path / "verify.json"
    res = runner.invoke(app, ["verify", "--g", "1", "--format", "json", "--out", str(out)])
    assert res.exit_code == 0, res.output
    payload = json.loads(out.read_text(encoding="utf-8"))
    names = [c["name"] for c in payload["checks"]]
    assert "invariants_separate_strata" in names
    assert "sesquilinearity" in names
    assert payload["passed"] is True
