"""Command-line front end tests: outputs, exit codes, report files."""

import json

from gammalab import cli
from gammalab.registry import IdentityRecord, Recipe, Registry, build_records


def run(argv):
    return cli.main(argv)


def test_eval_fn_lambda_zero(capsys):
    assert run(["eval", "fn", "lambda", "0"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("lambda 0 = 0.577215664901533")
    assert "±" in out


def test_eval_integral_and_series(capsys):
    assert run(["eval", "integral", "Q-6.14"]) == 0
    assert "-0.0911478741597" in capsys.readouterr().out
    assert run(["eval", "series", "S-6.3"]) == 0
    out = capsys.readouterr().out
    assert "-0.693147180559" in out


def test_eval_unknown_key(capsys):
    assert run(["eval", "series", "S-0.0"]) == 1
    assert run(["eval", "fn", "nosuch"]) == 1
    assert run(["eval", "integral", "Q-6.14", "3"]) == 1  # arity


def test_verify_single_id(tmp_path, capsys):
    assert run(["verify", "--ids", "I-6.16"]) == 0
    out = capsys.readouterr().out
    assert "I-6.16" in out and "CONFIRMED" in out


def test_verify_unknown_id_lists_near_matches(capsys):
    assert run(["verify", "--ids", "NO-SUCH"]) == 1
    err = capsys.readouterr().err
    assert "unknown identity id" in err


def test_verify_all_writes_report(tmp_path, capsys):
    path = tmp_path / "report.json"
    md = tmp_path / "report.md"
    code = run(["verify", "--all", "--json", str(path), "--md", str(md),
                "--no-timing"])
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["schema_version"] == "1.0"
    assert len(doc["verdicts"]) >= 60
    assert doc["summary"]["failures"] == 0
    assert "wall_time" not in doc["verdicts"][0]
    text = md.read_text()
    assert "## Section 4" in text
    assert "Disputed items" in text
    capsys.readouterr()


def test_verify_json_is_reproducible(tmp_path, capsys):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    run(["verify", "--section", "8", "--json", str(p1), "--no-timing"])
    run(["verify", "--section", "8", "--json", str(p2), "--no-timing"])
    capsys.readouterr()
    assert p1.read_bytes() == p2.read_bytes()


def test_verify_exit_two_on_refuted_confirmed(monkeypatch, capsys):
    records = build_records()
    good = next(r for r in records if r.id == "I-8.11")
    corrupted = IdentityRecord(
        good.id, good.section, good.anchor, good.lhs,
        Recipe("wrong", lambda p, b: (0.75, 1e-15)),
        good.tol_class, good.expected)
    monkeypatch.setattr(cli, "Registry",
                        lambda: Registry(records=[corrupted]))
    assert run(["verify", "--all"]) == 2
    capsys.readouterr()


def test_sweep_identity(capsys):
    code = run(["sweep", "I-2.6", "--param", "p", "--from", "0.1",
                "--to", "0.9", "--steps", "5"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.count("CONFIRMED") == 5


def test_sweep_rejects_non_parametric(capsys):
    assert run(["sweep", "I-6.16", "--param", "p", "--from", "0.1",
                "--to", "0.9", "--steps", "3"]) == 1


def test_sweep_rejects_bad_range(capsys):
    assert run(["sweep", "I-2.6", "--param", "p", "--from", "0.9",
                "--to", "0.1", "--steps", "5"]) == 1
    assert run(["sweep", "I-2.6", "--param", "q", "--from", "0.1",
                "--to", "0.9", "--steps", "5"]) == 1


def test_list_filters(capsys):
    assert run(["list", "--section", "6"]) == 0
    out = capsys.readouterr().out
    assert "I-6.16" in out and "I-4.31" not in out
    assert run(["list", "--status", "DISPUTED"]) == 0
    out = capsys.readouterr().out
    assert "D-4.26" in out and "I-6.16" not in out


def test_usage_error_exit_code(capsys):
    assert run(["verify", "--tol-class", "bogus"]) == 1
    capsys.readouterr()
