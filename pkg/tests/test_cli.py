import json

import pytest
from typer.testing import CliRunner

from cli.commands import app
from cli.corpus import corpus_paths, run_document
from cli.properties import run_properties
from cli.render import SCHEMA
from config.storage import CORPUS_DIR, data_dir
from db.database import Database

runner = CliRunner()


def corpus(name: str) -> str:
    return str(CORPUS_DIR / name)


@pytest.fixture
def ledger(tmp_path, monkeypatch):
    monkeypatch.setenv("ASSIGNALG_DATA_ROOT", str(tmp_path))
    data_dir.cache_clear()
    Database.reset()
    yield tmp_path
    Database.reset()
    data_dir.cache_clear()


def test_validate_accepts_a_corpus_document():
    result = runner.invoke(app, ["validate", corpus("triple_sphere.json"), "--canonical"])
    assert result.exit_code == 0, result.output
    assert "valid gkm document" in result.output
    assert "canonical form" in result.output


def test_validate_names_the_violated_rule(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "kind": "gkm",
                "torus_dim": 2,
                "components": [{"name": "a"}, {"name": "b"}],
                "pieces": [{"g": {"span": []}, "members": ["a", "b"]}],
            }
        )
    )
    result = runner.invoke(app, ["validate", str(bad)])
    assert result.exit_code == 2
    assert "piece-codimension" in result.output


def test_json_syntax_errors_report_the_line(tmp_path):
    bad = tmp_path / "broken.json"
    bad.write_text('{"kind": "gkm",\n  "torus_dim": }\n')
    result = runner.invoke(app, ["validate", str(bad)])
    assert result.exit_code == 2
    assert "line 2" in result.output


def test_basis_machine_output():
    result = runner.invoke(
        app, ["basis", corpus("triple_sphere.json"), "-D", "2", "--output", "machine"]
    )
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload["schema"] == SCHEMA
    assert payload["command"] == "basis"
    assert payload["degree_bound"] == 2
    assert payload["result"]["dims"] == [1, 6, 14]
    assert [g["degree"] for g in payload["result"]["generators"]] == [0, 1, 1, 1, 1, 2, 2, 2]
    assert payload["input"]["kind"] == "gkm"


@pytest.mark.parametrize(
    "tuples, code",
    [
        (["0; u2; 0; 0; 0; u2; 0; 0"], 0),
        (["0; u2; 0; 0; 0; u2; 0; 0", "u1; 0; 0; 0; 0; 0; 0; 0"], 1),
        (["0; 0"], 2),
        (["u9; 0; 0; 0; 0; 0; 0; 0"], 2),
    ],
)
def test_members_exit_codes(tuples, code):
    args = ["members", corpus("triple_sphere.json")]
    for text in tuples:
        args += ["--tuple", text]
    assert runner.invoke(app, args).exit_code == code


def test_report_verdicts():
    free = runner.invoke(app, ["report", corpus("two_points_line.json"), "-D", "3"])
    assert free.exit_code == 0 and "verdict: free" in free.output
    not_free = runner.invoke(app, ["report", corpus("suspension.json"), "-D", "3"])
    assert not_free.exit_code == 1 and "verdict: not_free" in not_free.output


def test_stratum_report():
    result = runner.invoke(app, ["report", corpus("two_points_line_strata.json"), "-D", "3"])
    assert result.exit_code == 0, result.output


def test_extend_exit_codes():
    found = runner.invoke(app, ["extend", corpus("coordinate_extension.json")])
    assert found.exit_code == 0 and "extension found" in found.output
    blocked = runner.invoke(app, ["extend", corpus("non_surjective_extension.json")])
    assert blocked.exit_code == 1
    assert "infeasible" in blocked.output


def test_extend_refuses_other_kinds():
    result = runner.invoke(app, ["extend", corpus("triple_sphere.json")])
    assert result.exit_code == 2
    assert "document-kind" in result.output


def test_kirwan_on_the_rotation_sphere():
    result = runner.invoke(app, ["kirwan", corpus("rotation_sphere.json"), "-D", "3", "-o", "machine"])
    assert result.exit_code == 0, result.output
    assert json.loads(result.stdout)["ok"] is True


def test_kirwan_rejects_a_level_through_a_component():
    result = runner.invoke(app, ["kirwan", corpus("rotation_sphere.json"), "--level", "1"])
    assert result.exit_code == 2
    assert "regular-level" in result.output


def test_kirwan_hypothesis_failure_is_a_negative_verdict():
    result = runner.invoke(app, ["kirwan", corpus("projective_three_space.json")])
    assert result.exit_code == 1
    assert "weight classes dependent" in result.output


def test_quotient_circle_and_oracle_compare():
    quotient = runner.invoke(app, ["quotient-circle", corpus("three_sphere.json"), "--circle", "1,1", "-D", "3"])
    assert quotient.exit_code == 0, quotient.output
    compare = runner.invoke(
        app,
        ["oracle-compare", corpus("two_points_line.json"), corpus("two_points_line_strata.json"), "-D", "4"],
    )
    assert compare.exit_code == 0, compare.output
    assert "dimensions agree" in compare.output


def test_missing_file_is_a_usage_error(tmp_path):
    result = runner.invoke(app, ["basis", str(tmp_path / "absent.json")])
    assert result.exit_code == 2


@pytest.mark.parametrize("path", corpus_paths(), ids=lambda p: p.name)
def test_corpus_claims_hold(path):
    results = run_document(path)
    assert results[0].check == "round_trip"
    failed = [f"{r.check}: {r.claim} ({r.detail})" for r in results if not r.ok]
    assert not failed


def test_property_suites_pass():
    results = run_properties(seed=7, samples=100)
    assert {r.suite for r in results} == {"extension", "gluing", "localization"}
    assert all(r.ok for r in results), [r.detail for r in results if not r.ok]


def test_record_and_history(ledger):
    result = runner.invoke(app, ["validate", corpus("two_points_line.json"), "--record"])
    assert result.exit_code == 0
    result = runner.invoke(app, ["extend", corpus("non_surjective_extension.json"), "--record"])
    assert result.exit_code == 1
    assert (ledger / "runs.db").exists()

    runs = Database.get_instance().recent_runs(5)
    assert [r.command for r in runs] == ["extend", "validate"]
    assert [r.exit_code for r in runs] == [1, 0]
    assert all(len(r.document_sha256) == 64 for r in runs)

    history = runner.invoke(app, ["history", "--limit", "5"])
    assert history.exit_code == 0
    assert "validate" in history.output and "2 runs" in history.output


def test_report_widens_the_default_bound():
    result = runner.invoke(app, ["report", corpus("two_points_line.json"), "-o", "machine"])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload["degree_bound"] == 3
    assert payload["verdict"] == "free"


def test_extend_respects_the_degree_bound():
    capped = runner.invoke(app, ["extend", corpus("coordinate_extension.json"), "-D", "2"])
    assert capped.exit_code == 1
    assert "infeasible at degree bound 2" in capped.output
    assert "above the bound 2" in capped.output
