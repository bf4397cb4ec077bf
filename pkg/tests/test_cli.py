"""Test the quartic command line end to end."""
import json

import pytest

from quartic.main import main


def test_tables(capsys):
    assert main(["tables"]) == 0
    out = capsys.readouterr().out
    assert "18/18 verified" in out


def test_tables_json(capsys):
    assert main(["--format", "json", "tables"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert (doc["passed"], doc["total"]) == (18, 18)


def test_solve_json(capsys):
    assert main(["solve", "five_plus", "7"]) == 0
    docs = json.loads(capsys.readouterr().out)
    assert len(docs) == 1
    assert docs[0]["terms"] == ["6", "9", "20", "12", "8"]
    assert (docs[0]["f"], docs[0]["g"]) == ("4", "21")
    assert docs[0]["provenance"]["point"] == {"X": "4", "Y": "-64"}


def test_solve_csv(capsys):
    assert main(["--format", "csv", "solve", "three_plus", "9", "--count", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("variant,k,terms,f,g")
    assert lines[1].startswith("three_plus,9,414|115|264,132,439")
    assert len(lines) == 3


@pytest.mark.parametrize("k", ["4", "5"])
def test_solve_unknown_config(k, capsys):
    assert main(["solve", "three_plus", k]) == 2
    assert "no configuration" in capsys.readouterr().err


def test_solve_k2_stream(capsys):
    assert main(["solve", "three_plus", "2", "--count", "2"]) == 0
    docs = json.loads(capsys.readouterr().out)
    assert [d["g"] for d in docs] == ["5", "1201"]
    assert docs[0]["provenance"]["config"] == "three_plus-k2-pq"


def test_solve_opposite_branch_without_points(capsys):
    assert main(["solve", "five_plus", "7", "--branch", "-", "--search-bound", "11"]) == 1
    assert "NoSeedPoint" not in capsys.readouterr().out


def test_verify_round_trip(tmp_path, capsys):
    for fmt, name in (("json", "sols.json"), ("csv", "sols.csv")):
        assert main(["--format", fmt, "solve", "five_plus", "3", "--count", "2"]) == 0
        path = tmp_path / name
        path.write_text(capsys.readouterr().out)
        assert main(["verify", str(path)]) == 0
        assert "2/2 verified" in capsys.readouterr().out


def test_verify_rejects_bad_solution(tmp_path, capsys):
    path = tmp_path / "bad.json"
    doc = {"variant": "three_plus", "k": 1, "terms": ["30", "120", "272"], "f": "315", "g": "354"}
    path.write_text(json.dumps(doc))
    assert main(["verify", str(path)]) == 1
    assert "0/1 verified" in capsys.readouterr().out


def test_verify_missing_file(tmp_path):
    assert main(["verify", str(tmp_path / "none.json")]) == 2


@pytest.mark.parametrize("what", ["identities", "families", "curves", "showcase"])
def test_check(what, capsys):
    assert main(["check", what]) == 0
    assert "FAIL" not in capsys.readouterr().out


def test_check_stats(capsys):
    assert main(["check", "curves", "--stats"]) == 0
    assert "hit_rate_percent=" in capsys.readouterr().out


def test_search(capsys):
    assert main(["--format", "json", "search", "five_plus", "7", "--bound", "5"]) == 0
    records = json.loads(capsys.readouterr().out)
    assert {"multipliers": "5,3,2", "M": 729, "m": "27"} in records


def test_families_eval(capsys):
    assert main(["families", "--eval", "2", "--n-range=-3..4"]) == 0
    out = capsys.readouterr().out
    assert "skipped" in out
    assert "8/8 verified" in out


def test_families_literal(capsys):
    assert main(["families", "--eval", "2", "--literal", "--n-range", "0..1"]) == 1
    assert "1/2 verified" in capsys.readouterr().out


def test_families_unknown(capsys):
    assert main(["families", "--eval", "3"]) == 2


def test_export_then_load(tmp_path, capsys):
    path = tmp_path / "registry.json"
    assert main(["families", "export", "--output", str(path)]) == 0
    assert len(json.loads(path.read_text())["configs"]) == 13
    assert main(["--registry", str(path), "solve", "five_plus", "7"]) == 0
    assert json.loads(capsys.readouterr().out)[0]["g"] == "21"


def test_bad_registry(tmp_path):
    path = tmp_path / "registry.json"
    path.write_text("{}")
    assert main(["--registry", str(path), "check", "curves"]) == 2


def test_usage_errors():
    with pytest.raises(SystemExit):
        main(["factor"])
    with pytest.raises(SystemExit):
        main(["solve", "four_plus", "1"])


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "five_plus", "7", "--count", "0"],
        ["solve", "five_plus", "7", "--max-digits", "0"],
        ["solve", "three_plus", "2", "--max-digits", "-1"],
        ["search", "five_plus", "7", "--bound", "0"],
    ],
)
def test_rejected_argument_values(argv, capsys):
    assert main(argv) == 2
    assert "must be >= 1" in capsys.readouterr().err


def test_search_uses_registered_sextuple(capsys):
    assert main(["--format", "json", "search", "five_plus", "5", "--bound", "12"]) == 0
    records = json.loads(capsys.readouterr().out)
    assert {"multipliers": "11,7,5", "M": 17672, "m": "94"} in records


def test_search_explicit_sextuple(capsys):
    assert main(["--format", "json", "search", "five_plus", "5", "--bound", "12", "--sextuple", "4,3,4,-1,4,-2"]) == 0
    records = json.loads(capsys.readouterr().out)
    assert "11,7,5" not in [r["multipliers"] for r in records]


def test_check_identities_lists_printed_form(capsys):
    assert main(["--format", "json", "check", "identities"]) == 0
    doc = json.loads(capsys.readouterr().out)
    items = {i["item"]: i["passed"] for i in doc["items"]}
    assert items["identity [4, 1, 4, -1, 4, 0] as 8 * (8x^3 - 2x)^2"]
