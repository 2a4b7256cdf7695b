from __future__ import annotations

import json

import pytest

from lrc_lab import cli, code as code_mod, lrc, reports, search, transform
from lrc_lab.field import field_new


@pytest.fixture()
def hamming_file(tmp_path, hamming74):
    path = tmp_path / "hamming74.code"
    code_mod.write_code(path, hamming74)
    return path


@pytest.fixture()
def rep5_file(tmp_path, rep5):
    path = tmp_path / "rep5.code"
    code_mod.write_code(path, rep5)
    return path


@pytest.fixture()
def fixture_file(tmp_path, fixture_12_6_6):
    path = tmp_path / "fixture.code"
    code_mod.write_code(path, fixture_12_6_6)
    return path


def test_analyze_hamming(hamming_file, capsys):
    assert cli.main(["analyze", str(hamming_file), "--r", "auto"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert {k: payload[k] for k in ("n", "k", "d", "r", "slack", "optimal")} == {
        "n": 7, "k": 4, "d": 3, "r": 3, "slack": 0, "optimal": True,
    }
    assert not reports.validate(payload, reports.load_schema("analyze"))


def test_analyze_writes_figures(rep5_file, tmp_path, capsys):
    out = tmp_path / "out"
    assert cli.main(["analyze", str(rep5_file), "--out", str(out)]) == 0
    capsys.readouterr()
    assert (out / "analyze.json").exists()
    assert (out / "weights.png").stat().st_size > 0
    assert (out / "analyzed.code").exists()


def test_analyze_asserted_r_too_small(rep5_file, tmp_path, capsys):
    # repetition code has locality 1; asserting r = 0 must fail cleanly
    code = cli.main(["analyze", str(rep5_file), "--r", "0"])
    assert code == 1
    assert "NoLocality" in capsys.readouterr().err


def test_solve_k(capsys):
    assert cli.main(["solve-k", "--n", "12", "--d", "6", "--r", "3"]) == 0
    assert capsys.readouterr().out.strip() == "6"
    assert cli.main(["solve-k", "--n", "8", "--d", "5", "--r", "1"]) == 0
    assert capsys.readouterr().out.strip() == "none"


def test_bound_table_and_json(capsys, tmp_path):
    assert cli.main(["bound", "--q", "16", "--k", "6", "--r", "3", "--assume-mds-conjecture"]) == 0
    table = capsys.readouterr().out
    assert "mds-regime" in table and "\t25\t" in table
    out = tmp_path / "bounds"
    assert cli.main([
        "bound", "--q", "2", "--n", "7", "--d", "3", "--json", "--out", str(out),
    ]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert not reports.validate(payload, reports.load_schema("bound"))
    assert any(b["name"] == "hamming" and b["value"] == 16 for b in payload["bounds"])
    assert (out / "bounds.tsv").exists() and (out / "bounds.png").stat().st_size > 0


def test_normal_form_command(fixture_file, tmp_path, capsys):
    out = tmp_path / "nf"
    assert cli.main(["normal-form", str(fixture_file), "--out", str(out)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert not reports.validate(payload, reports.load_schema("normal_form"))
    assert (payload["ell"], payload["h"], payload["a"], payload["b"]) == (3, 3, 12, 0)
    assert (out / "h1.matrix").exists() and (out / "h2.matrix").exists()
    assert (out / "normal_form.png").stat().st_size > 0


def test_transform_commands(hamming_file, capsys):
    assert cli.main(["transform", str(hamming_file), "--op", "ci", "--rows", "1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert not reports.validate(payload, reports.load_schema("derivation"))
    assert payload["actual"] == {"n": 3, "k": 1, "d": 3}
    assert cli.main(["transform", str(hamming_file), "--op", "residual"]) == 0
    capsys.readouterr()
    assert cli.main(["transform", str(hamming_file), "--op", "mds"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["ok"]


def test_pipeline_command(fixture_file, tmp_path, capsys):
    out = tmp_path / "pipe"
    assert cli.main(["pipeline", str(fixture_file), "--out", str(out)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert not reports.validate(payload, reports.load_schema("pipeline"))
    assert (payload["a"], payload["b"], payload["ell1"], payload["h"]) == (12, 0, 3, 3)
    assert payload["f"] == "1/3"  # (6 - 2 + 0)/12 as an exact rational
    assert (out / "k.matrix").exists() and (out / "ck.code").exists()


def test_propagate_command(fixture_file, tmp_path, capsys):
    out = tmp_path / "prop"
    assert cli.main(["propagate", str(fixture_file), "--a", "2", "--out", str(out)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert not reports.validate(payload, reports.load_schema("propagation"))
    assert payload["after"] == [8, 4, 4, 3]
    assert payload["optimal_preserved"]
    after = code_mod.read_code(out / "after.code")
    assert (after.n, after.k) == (8, 4)


def test_propagate_ceiling_error(fixture_file, capsys):
    assert cli.main(["propagate", str(fixture_file), "--a", "3"]) == 1
    assert "CeilingMismatch" in capsys.readouterr().err


def test_reduce_command(fixture_file, capsys):
    assert cli.main(["reduce", str(fixture_file)]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert not reports.validate(payload, reports.load_schema("reduction"))
    assert payload["b"] == 2 and payload["final"] == [8, 6, 2, 3]


def test_search_command(tmp_path, capsys):
    out = tmp_path / "search"
    assert cli.main([
        "search", "--q", "2", "--n", "5", "--k", "1", "--d", "5", "--r", "1",
        "--out", str(out),
    ]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert not reports.validate(payload, reports.load_schema("search"))
    assert payload["status"] == "found"
    assert (out / "witness_000.code").exists()
    wit = code_mod.read_code(out / "witness_000.code")
    assert (wit.n, wit.k) == (5, 1)


def test_search_usage_error():
    with pytest.raises(SystemExit) as exc:
        cli.main(["search", "--q", "2"])  # missing required flags
    assert exc.value.code == 2


def test_unknown_command_usage_error():
    with pytest.raises(SystemExit) as exc:
        cli.main(["no-such-command"])
    assert exc.value.code == 2


def test_matrix_files_round_trip_through_cli(tmp_path, fixture_12_6_6, capsys):
    # every file the CLI writes re-parses to an identical file
    src = tmp_path / "c.code"
    code_mod.write_code(src, fixture_12_6_6)
    out1 = tmp_path / "o1"
    assert cli.main(["propagate", str(src), "--a", "0", "--out", str(out1)]) == 0
    capsys.readouterr()
    for name in ("before.code", "after.code"):
        first = (out1 / name).read_bytes()
        again = code_mod.read_code(out1 / name)
        code_mod.write_code(out1 / name, again)
        assert (out1 / name).read_bytes() == first
