import os
import json
import pytest
from dualgame import DualGame, ExperimentConfig

HEADER = "t,norm_x,norm_u,norm_w,mode,y_max,est_error,stage_cost,running_cost"


def get_config(**kwargs) -> ExperimentConfig:
    values = {"n": 1, "horizon": 3, "adversary": "zero", "seed": 1}
    values.update(kwargs)
    return ExperimentConfig.model_validate(values)


def test_empty_outputs(game: DualGame, tmp_path):
    files = game.emit_outputs([], str(tmp_path))
    csv = (tmp_path / "trajectory_0.csv").read_text(encoding="utf-8")
    assert csv == HEADER + "\n"
    assert str(tmp_path / "plot.svg") in files
    assert "<svg" in (tmp_path / "plot.svg").read_text(encoding="utf-8")


def test_episode_outputs(game: DualGame, tmp_path):
    records = game.run_episodes(get_config(runs=2))
    report = game.run_gain_audit(get_config(runs=2))
    game.emit_outputs(records, str(tmp_path), report=report, excel=True)

    with open(tmp_path / "trajectory_1.csv", "rb") as f:
        content = f.read()
    assert b"\r" not in content
    lines = content.decode("utf-8").splitlines()
    assert lines[0] == HEADER
    assert len(lines) == 3 + 1
    assert lines[1].split(",")[4] == "exploration"

    document = json.loads((tmp_path / "report.json").read_text(encoding="utf-8"))
    assert list(document) == ["report", "log"]
    assert list(document["report"])[:3] == ["adversary", "runs", "mean_peak"]
    assert document["report"]["runs"] == 2
    assert any(entry["Category"] == "Verification" for entry in document["log"])

    assert (tmp_path / "trajectories.xlsx").stat().st_size > 0
    svg = (tmp_path / "plot.svg").read_text(encoding="utf-8")
    for run in (0, 1):
        assert f"|x| run {run}" in svg
        assert f"est_error run {run}" in svg


def test_outputs_are_reproducible(tmp_path):
    for name in ("a", "b"):
        game = DualGame()
        records = game.run_episodes(get_config(adversary={"kind": "gaussian", "std": 0.3}))
        game.emit_outputs(records, str(tmp_path / name), report={"runs": len(records)})
    for file_name in ("trajectory_0.csv", "plot.svg", "report.json"):
        a = (tmp_path / "a" / file_name).read_bytes()
        b = (tmp_path / "b" / file_name).read_bytes()
        assert a == b


def test_sync_outputs(tmp_path):
    game = DualGame(n=2)
    result = game.run_sync_example(2, seed=3)
    files = game.emit_sync_outputs(result, str(tmp_path))
    assert len(files) == 4
    for file_name in ("trajectory_0.csv", "plot.svg", "chains.svg", "report.json"):
        assert os.path.isfile(tmp_path / file_name)
    document = json.loads((tmp_path / "report.json").read_text(encoding="utf-8"))
    assert document["report"]["n"] == 2
    assert document["report"]["steps"] == 8


def test_output_errors(game: DualGame, tmp_path):
    blocker = tmp_path / "blocker.txt"
    blocker.write_text("file")
    with pytest.raises(OSError, match="blocker.txt"):
        game.emit_outputs([], str(blocker))
    with pytest.raises(OSError, match="report.json"):
        game.write_report({}, str(tmp_path / "missing" / "report.json"))
