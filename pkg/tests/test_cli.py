import gzip
import json
import subprocess
import sys

import pytest

from topolab.cli import main


def write(tmp_path, obj, name="t.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return str(p)


DISCRETE3 = {"n": 3, "opens": list(range(8))}
PART12 = {"n": 5, "opens": [0, 3, 12, 16, 15, 19, 28, 31]}


def test_poly_discrete(tmp_path, capsys):
    assert main(["poly", "--in", write(tmp_path, DISCRETE3)]) == 0
    assert json.loads(capsys.readouterr().out) == ["1", "3", "3", "1"]


def test_poly_text(tmp_path, capsys):
    assert main(["poly", "--in", write(tmp_path, DISCRETE3), "--format", "text"]) == 0
    assert capsys.readouterr().out.strip() == "1 + 3x + 3x^2 + x^3"


def test_check_partition_topology(tmp_path, capsys):
    path = write(tmp_path, PART12)
    assert main(["check", "--in", path, "--props", "unimodal,log-concave,newton,real-rooted"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out == {"unimodal": True, "log-concave": False, "newton": False, "real-rooted": False}


def test_check_text_matches_json(tmp_path, capsys):
    path = write(tmp_path, PART12)
    main(["check", "--in", path])
    as_json = json.loads(capsys.readouterr().out)
    main(["check", "--in", path, "--format", "text"])
    lines = capsys.readouterr().out.strip().splitlines()
    as_text = {k: json.loads(v) for k, v in (line.split(": ", 1) for line in lines)}
    assert as_text == as_json


def test_validate_normalizes(tmp_path, capsys):
    assert main(["validate", "--in", write(tmp_path, {"n": 2, "opens": [3, 1, 0]})]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["opens"] == [0, 1, 3] and out["cardinality"] == 3


def test_validate_pretty(tmp_path, capsys):
    main(["validate", "--in", write(tmp_path, {"n": 2, "opens": [0, 1, 3]}), "--pretty"])
    assert capsys.readouterr().out.split() == ["{}", "{x1}", "{x1,x2}"]


def test_construct_round_trip(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert main(["construct", "--family", "counterexample", "--n", "6", "--out", str(out)]) == 0
    obj = json.loads(out.read_text())
    assert obj["report"]["computed"] == ["1", "4", "6", "4", "1", "2", "1"]
    assert main(["validate", "--in", str(out)]) == 0
    assert json.loads(capsys.readouterr().out)["cardinality"] == 2 ** 4 + 3


def test_construct_partition(capsys):
    assert main(["construct", "--partition", "1,2"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["report"]["claimed"] == ["1", "1", "2", "2", "1", "1"]


def test_construct_with_param(capsys):
    assert main(["construct", "--family", "nm1-singletons", "--n", "5", "--l", "1"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["report"]["claimed"] == ["1", "4", "7", "7", "4", "1"]


def test_enumerate_stdout_and_stats(tmp_path, capsys):
    stats = tmp_path / "s.json"
    assert main(["enumerate", "--n", "3", "--stats", str(stats)]) == 0
    captured = capsys.readouterr()
    lines = captured.out.strip().splitlines()
    assert len(lines) == 29
    assert json.loads(stats.read_text())["total"] == 29
    assert json.loads(captured.err.strip().splitlines()[-1])["total"] == 29


def test_enumerate_gzip_iso(tmp_path, capsys):
    out = tmp_path / "iso.jsonl.gz"
    assert main(["enumerate", "--n", "4", "--iso", "--out", str(out)]) == 0
    with gzip.open(out, "rt") as fh:
        assert sum(1 for _ in fh) == 33


def test_verify_json(tmp_path, capsys):
    out = tmp_path / "v.json"
    code = main(["verify", "--theorem", "counterexample-nonunimodal", "--n-max", "10", "--json", str(out)])
    assert code == 0
    reports = json.loads(out.read_text())
    assert reports[0]["verdict"] == "verified" and reports[0]["checked_count"] == 6


def test_verify_all_n4_exit_code(tmp_path, capsys):
    out = tmp_path / "all.json"
    code = main(["verify", "--all", "--n-max", "4", "--json", str(out)])
    reports = json.loads(out.read_text())
    assert len(reports) == 16
    # refutations found by exhaustive search drive the exit status
    assert code == 2
    assert {r["id"] for r in reports if r["verdict"] == "refuted"} == {
        "unimodal-above-6x2n4", "families-match"
    }


@pytest.mark.parametrize(
    "argv",
    [[], ["frobnicate"], ["poly"], ["enumerate", "--n", "x"], ["check", "--in", "f", "--props", "bogus"]],
)
def test_usage_errors(argv, tmp_path, capsys):
    if argv[-1:] == ["bogus"]:
        argv = ["check", "--in", write(tmp_path, DISCRETE3), "--props", "bogus"]
    assert main(argv) == 64


@pytest.mark.parametrize(
    "content", ["not json", "[1, 2]", '{"n": 2}', '{"n": 2, "opens": ["a"]}', '{"n": 2.5, "opens": [0]}']
)
def test_malformed_files(content, tmp_path, capsys):
    assert main(["poly", "--in", write(tmp_path, content)]) == 65


def test_missing_file(tmp_path, capsys):
    assert main(["poly", "--in", str(tmp_path / "nope.json")]) == 65


def test_domain_errors(tmp_path, capsys):
    assert main(["validate", "--in", write(tmp_path, {"n": 3, "opens": [0, 1, 2, 7]})]) == 1
    assert "NotClosed" in capsys.readouterr().err
    assert main(["construct", "--family", "nm2-j", "--n", "5"]) == 1
    assert main(["enumerate", "--n", "5", "--strategy", "closure"]) == 1


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "topolab", "poly", "--in", write(tmp_path, DISCRETE3)],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == ["1", "3", "3", "1"]
