import json

import pytest
from typer.testing import CliRunner

import cli
from cli import app, main
from models.campaign_models import CampaignRecord, CampaignReport, RecordVerdict

runner = CliRunner()


@pytest.fixture
def star_file(tmp_path):
    path = tmp_path / "star4.txt"
    path.write_text("# K_{1,4}\nn=5\n0 1\n0 2\n0 3\n0 4\n")
    return str(path)


def test_dist_index_of_star(star_file):
    result = runner.invoke(app, ["dist-index", "--edges", star_file])
    assert result.exit_code == 0
    assert "distinguishing index: 4" in result.output


def test_dist_json_output(star_file, tmp_path):
    out = tmp_path / "dist.json"
    result = runner.invoke(app, ["dist", "--edges", star_file, "--json", str(out)])
    assert result.exit_code == 0
    data = json.loads(out.read_text())
    assert data["value"] == 4
    assert data["proof_of_minimality"] == "exhausted"


def test_dist_catalog_group():
    result = runner.invoke(app, ["dist", "--catalog", "L2(5)"])
    assert result.exit_code == 0
    assert "distinguishing number: 3" in result.output


def test_simple():
    assert runner.invoke(app, ["simple", "--catalog", "A5"]).output.strip() == "true"
    assert runner.invoke(app, ["simple", "--catalog", "S5"]).output.strip() == "false"


def test_aut_from_graph6(tmp_path):
    path = tmp_path / "p3.g6"
    path.write_text("Bg\n")
    result = runner.invoke(app, ["aut", "--graph6", str(path)])
    assert result.exit_code == 0
    assert "Order: 2" in result.output


def test_witness_json(tmp_path):
    out = tmp_path / "figure1.json"
    edges = tmp_path / "figure1.txt"
    result = runner.invoke(app, ["witness", "figure1", "--n", "5", "--json", str(out), "--edges-out", str(edges)])
    assert result.exit_code == 0
    record = json.loads(out.read_text())
    assert record["vertex_count"] == 22
    assert record["params"] == {"n": 5}
    assert len(edges.read_text().strip().splitlines()) >= 31


def test_usage_errors(star_file):
    assert runner.invoke(app, ["dist-index"]).exit_code == 3
    assert runner.invoke(app, ["dist-index", "--edges", "missing.txt"]).exit_code == 3
    assert runner.invoke(app, ["witness", "nope"]).exit_code == 3
    assert runner.invoke(app, ["witness", "asymmetric", "--m", "4"]).exit_code == 3
    assert main(["verify", "nope"]) == 3
    assert main(["no-such-command"]) == 3


def test_verify_exit_code_follows_status(monkeypatch, tmp_path):
    def fake_campaign(name, config=None, workers=1, seed=0, extended=False, corpus=None):
        report = CampaignReport(campaign=name)
        report.add(CampaignRecord(input_id="bad", verdict=RecordVerdict.COUNTEREXAMPLE))
        report.finalize()
        return report

    monkeypatch.setattr(cli, "run_campaign", fake_campaign)
    out = tmp_path / "report.json"
    result = runner.invoke(app, ["verify", "main", "--json", str(out)])
    assert result.exit_code == 1
    assert json.loads(out.read_text())["status"] == "failed"


@pytest.fixture
def corpus_file(tmp_path):
    path = tmp_path / "corpus.g6"
    path.write_text("Bg\nBw\n")
    return str(path)


def test_verify_main_on_graph6_corpus(corpus_file, tmp_path):
    out = tmp_path / "main.json"
    result = runner.invoke(app, ["verify", "main", "--graph6", corpus_file, "--json", str(out)])
    assert result.exit_code == 0
    assert "Read 2 graphs" in result.output
    data = json.loads(out.read_text())
    assert data["status"] == "passed"
    (campaign,) = data["campaigns"]
    verdicts = {r["input_id"]: r["verdict"] for r in campaign["records"]}
    assert verdicts == {"graph6-00000": "pass", "graph6-00001": "out_of_scope"}
    assert "logs" not in campaign and "created_at" not in campaign
    assert set(data["timing"]["main-theorem"]) == {"started_at", "completed_at", "elapsed_seconds"}


def test_verify_json_is_deterministic(corpus_file, tmp_path):
    dumps = []
    for i in range(2):
        out = tmp_path / f"run{i}.json"
        assert runner.invoke(app, ["verify", "main", "--graph6", corpus_file, "--json", str(out)]).exit_code == 0
        data = json.loads(out.read_text())
        data.pop("timing")
        dumps.append(json.dumps(data, sort_keys=True))
    assert dumps[0] == dumps[1]


def test_verify_rejects_bad_graph6(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("A_!\n")
    assert runner.invoke(app, ["verify", "main", "--graph6", str(path)]).exit_code == 3
    assert runner.invoke(app, ["verify", "main", "--graph6", str(tmp_path / "none.g6")]).exit_code == 3


@pytest.mark.slow
def test_verify_arith():
    result = runner.invoke(app, ["verify", "arith"])
    assert result.exit_code == 0
    assert "Verification passed" in result.output


def test_generate_config(tmp_path):
    out = tmp_path / "symkit.yaml"
    result = runner.invoke(app, ["generate-config", "--output", str(out)])
    assert result.exit_code == 0
    assert "max_group_order" in out.read_text()
