import json

import pytest
from click.testing import CliRunner

from bkcalc.cli import RunConfig, main


@pytest.fixture
def runner():
    return CliRunner()


def run(runner, *args, **kw):
    return runner.invoke(main, list(args), catch_exceptions=False, **kw)


def test_classify_text(runner):
    r = run(runner, "classify", "--group", "A2", "--weights", "1,0;0,1;1,1")
    assert r.exit_code == 0
    assert "cohomological: true" in r.output
    assert "witness[cohomological]: e,e,1.2.1" in r.output
    assert "proven_true" in r.output


def test_classify_refuted(runner):
    r = run(runner, "classify", "--group", "A2", "--weights", "1,1;1,1;1,1")
    assert r.exit_code == 0
    assert "prv: true" in r.output
    assert "cohomological: false" in r.output
    assert "stable_mult_one: refuted" in r.output


def test_classify_a1_zero(runner):
    r = run(runner, "classify", "--group", "A1", "--weights", "0;0;0")
    assert r.exit_code == 0
    assert "prv: true" in r.output
    assert "cohomological: true" in r.output
    assert "regularly_extremal: true" in r.output


def test_classify_json_schema(runner):
    r = run(runner, "classify", "--group", "A2",
            "--weights", "1,0;0,1;1,1", "--format", "json")
    assert r.exit_code == 0
    data = json.loads(r.output)
    for key in ("group", "weights", "prv", "cohomological",
                "regularly_extremal", "witnesses", "stable_mult_one",
                "oracle_mults"):
        assert key in data
    assert data["stable_mult_one"]["status"] == "proven_true"
    assert data["oracle_mults"] == [[1, 1], [2, 1], [3, 1]]


def test_classify_parse_error_exit_2(runner):
    r = run(runner, "classify", "--group", "A2", "--weights", "1,x;0,1;1,1")
    assert r.exit_code == 2


def test_classify_non_dominant_exit_3(runner):
    r = run(runner, "classify", "--group", "A2", "--weights", "-1,0;0,1;1,1")
    assert r.exit_code == 3


def test_classify_oracle_budget_exit_4_still_prints(runner):
    r = run(runner, "classify", "--group", "A2",
            "--weights", "1,1;1,1;1,1", "--budget", "4")
    assert r.exit_code == 4
    assert "prv: true" in r.output
    assert "oracle_overflow: true" in r.output


def test_unknown_group_exit_2(runner):
    r = run(runner, "classify", "--group", "E7", "--weights", "0;0;0")
    assert r.exit_code == 2


def test_bk_table_deterministic_with_digest(runner):
    r1 = run(runner, "bk-table", "--group", "A2")
    r2 = run(runner, "bk-table", "--group", "A2")
    assert r1.exit_code == 0
    assert r1.output == r2.output
    assert "sha256=" in r1.output
    assert "nonzero=15" in r1.output


def test_bk_table_a1_nonzero_rows(runner):
    r = run(runner, "bk-table", "--group", "A1", "--format", "json")
    data = json.loads(r.output)
    nonzero = [row for row in data["rows"] if row[3] == 1]
    assert sorted(tuple(r[:3]) for r in nonzero) == [
        ("1", "1", "e"), ("1", "e", "1"), ("e", "1", "1"),
    ]


def test_bk_table_identity_rows_are_dual_pairs(runner):
    r = run(runner, "bk-table", "--group", "B2", "--format", "json")
    data = json.loads(r.output)
    from bkcalc import GroupType, multiply, parse_word, weyl_group

    g = weyl_group(GroupType.parse("B2"))
    for u, v, w, c in data["rows"]:
        if u != "2.1.2.1":  # w0 in B2
            continue
        expected = 1 if parse_word(g, w) is multiply(
            g.w0, parse_word(g, v)
        ) else 0
        assert c == expected


def test_enumerate_counts(runner):
    r = run(runner, "enumerate", "--group", "A2", "--s", "3")
    assert r.exit_code == 0
    assert "# count=15" in r.output
    r2 = run(runner, "enumerate", "--group", "A1", "--s", "3")
    assert "# count=3" in r2.output


def test_enumerate_s4_flags_extension(runner):
    r = run(runner, "enumerate", "--group", "A1", "--s", "4")
    assert "note=extended" in r.output


def test_decompose_rows(runner):
    r = run(runner, "decompose", "--group", "A2", "--weights", "1,1;1,1")
    assert r.exit_code == 0
    lines = [l for l in r.output.strip().splitlines()[1:]]
    assert len(lines) == 5
    total = sum(int(l.split(",")[-2]) * int(l.split(",")[-1]) for l in lines)
    assert total == 64


def test_face_listing(runner):
    r = run(runner, "face", "--group", "A2", "--witness", "e;e;1.2.1",
            "--bound", "1")
    assert r.exit_code == 0
    assert "1,0;0,1;1,1" in r.output
    assert "lattice_rank=4" in r.output


def test_face_invalid_witness_exit_3(runner):
    r = run(runner, "face", "--group", "A2", "--witness", "1;1;1.2.1")
    assert r.exit_code == 3


def test_verify_suites_pass(runner):
    r = run(runner, "verify", "--group", "A2", "--suite", "theorem3",
            "--suite", "ring-axioms", "--suite", "partitions")
    assert r.exit_code == 0
    assert r.output.count("[pass]") == 3


def test_verify_all_smallest_group(runner):
    r = run(runner, "verify", "--group", "A1", "--suite", "all")
    assert r.exit_code == 0
    assert "[FAIL]" not in r.output


def test_verify_unknown_suite_exit_2(runner):
    r = run(runner, "verify", "--group", "A2", "--suite", "nope")
    assert r.exit_code == 2


def test_out_file(runner, tmp_path):
    target = tmp_path / "table.csv"
    r = run(runner, "bk-table", "--group", "A1", "--out", str(target))
    assert r.exit_code == 0
    assert "sha256=" in target.read_text()


def test_run_config_round_trip():
    cfg = RunConfig(group="B3", scaling_depth=5, output_format="json")
    assert RunConfig.from_dict(cfg.to_dict()) == cfg


def test_run_config_env_default(runner, tmp_path, monkeypatch):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(RunConfig(group="A1").to_dict()))
    monkeypatch.setenv("BKCALC_CONFIG", str(path))
    r = run(runner, "enumerate", "--s", "3")  # group taken from the config
    assert r.exit_code == 0
    assert "# count=3" in r.output
