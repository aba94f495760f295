import json
import re

import pytest

from okuboplane.cli import build_parser, main


def run_cli(args, capsys):
    rc = main(args)
    return rc, capsys.readouterr().out


def scrub_elapsed(text):
    return re.sub(r'"elapsed_ms": [0-9.]+', '"elapsed_ms": 0', text)


def test_identities_okubo_exits_zero(capsys):
    rc, out = run_cli(["identities", "--kind", "okubo", "--trials", "25", "--seed", "7"], capsys)
    assert rc == 0
    assert "norm-composition" in out and "PASS" in out
    assert "# okuboplane identities" in out


def test_json_reports_are_deterministic_apart_from_elapsed(tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        rc = main(["identities", "--kind", "para", "--trials", "15", "--seed", "3",
                   "--format", "json", "--output", str(p)])
        assert rc == 0
    a, b = (scrub_elapsed(p.read_text()) for p in paths)
    assert a == b
    reports = json.loads(a)
    assert all(r["verdict"] == "pass" for r in reports)
    assert {r["seed"] for r in reports} == {3}
    assert {r["trials"] for r in reports} >= {15}


def test_desargues_all_kinds_sections(tmp_path):
    out = tmp_path / "desargues.json"
    rc = main(["desargues", "--kind", "all", "--trials", "5",
               "--format", "json", "--output", str(out)])
    assert rc == 0
    reports = json.loads(out.read_text())
    names = [(r["name"], r["kind"]) for r in reports]
    kinds = {"okubo", "para", "octonion"}
    assert {k for n, k in names if n == "little-desargues"} == kinds
    assert {k for n, k in names if n == "full-desargues-fails"} == kinds
    for r in reports:
        if r["name"] == "full-desargues-fails":
            assert r["witnesses"]


def test_dump_tables(tmp_path):
    out = tmp_path / "tables.json"
    rc = main(["dump-tables", "--output", str(out)])
    assert rc == 0
    data = json.loads(out.read_text())
    assert set(data) == {"structure_tables", "gram", "trivolution"}
    assert set(data["structure_tables"]) == {"okubo", "para", "octonion"}
    okubo = data["structure_tables"]["okubo"]
    assert okubo["products"][0][0] == [ "1", "0", "0", "0", "0", "0", "0", "0" ]  # e*e = e
    assert data["gram"]["g"][0][0] == "2"
    assert data["gram"]["g"][0][4] == "sqrt3"
    assert data["trivolution"]["convention_table_comparison"]["agrees"] is False


def test_invalid_command_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_invalid_trials_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["identities", "--trials", "0"])
    assert exc.value.code == 2


def test_invalid_kind_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["identities", "--kind", "sedenion"])
    assert exc.value.code == 2


def test_seed_env_var_default_with_flag_override(monkeypatch):
    monkeypatch.setenv("OKUBOPLANE_SEED", "42")
    parser = build_parser()
    args = parser.parse_args(["g2"])
    assert args.seed == 42
    args = parser.parse_args(["g2", "--seed", "9"])
    assert args.seed == 9


def test_text_format_summary_line(capsys):
    rc, out = run_cli(["g2", "--trials", "10"], capsys)
    assert rc == 0
    assert out.rstrip().endswith("reports passed")
    assert "[1 witness(es) found]" in out
