import numpy as np
import pandas as pd
import pytest
from dualgame import ControlMode, DualGame, ExperimentConfig


def get_config(**kwargs) -> ExperimentConfig:
    values = {"n": 1, "alpha": 1.0, "horizon": 5, "adversary": "zero", "seed": 7}
    values.update(kwargs)
    return ExperimentConfig.model_validate(values)


def test_config():
    config = get_config(gamma="star", x0=[2.0])
    assert config.params.is_critical
    assert np.array_equal(config.get_initial_state(), [2.0])
    assert get_config(n=3).get_initial_state() == pytest.approx([1.0, 0.0, 0.0])
    assert get_config(gamma="3.5").gamma_value == 3.5
    assert get_config(policy="numeric").policy.name == "Numeric"

    with pytest.raises(ValueError):
        get_config(unknown_key=1)
    with pytest.raises(ValueError):
        get_config(gamma=-1.0)
    with pytest.raises(ValueError):
        get_config(n=2, x0=[1.0])
    with pytest.raises(ValueError):
        get_config(runs=0)


def test_config_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text('{"n": 2, "horizon": 3, "adversary": {"kind": "gaussian", "std": 0.1}}')
    config = ExperimentConfig.from_file(str(path))
    assert config.n == 2
    assert config.adversary.std == 0.1

    path.write_text('{"n": 2, "horizont": 3}')
    with pytest.raises(ValueError):
        ExperimentConfig.from_file(str(path))
    path.write_text("{not json")
    with pytest.raises(ValueError):
        ExperimentConfig.from_file(str(path))
    with pytest.raises(ValueError):
        ExperimentConfig.from_file(str(tmp_path / "missing.json"))


def test_noiseless_scalar_episode(game: DualGame):
    for seed in range(6):
        record = game.run_episode(get_config(seed=seed))
        assert len(record) == 5
        assert not record.diverged
        assert record.steps[0].mode == ControlMode.Exploration
        assert record.steps[1].mode == ControlMode.CertaintyEquivalence
        assert abs(record.steps[0].x_next[0]) in (0.0, 2.0)
        assert np.linalg.norm(record.steps[2].x) == 0.0
        assert np.linalg.norm(record.final_state.x) == 0.0
        assert record.peak_running_cost() in (1.0, 5.0)


def test_zero_initial_state(game: DualGame):
    record = game.run_episode(get_config(x0=[0.0]))
    assert all(np.linalg.norm(step.x) == 0.0 for step in record.steps)
    assert all(step.running_cost == 0.0 for step in record.steps)


def test_episode_determinism():
    config = get_config(n=2, adversary={"kind": "gaussian", "std": 0.1}, horizon=8)
    a = DualGame(n=2).run_episode(config)
    b = DualGame(n=2).run_episode(config)
    pd.testing.assert_frame_equal(a.to_dataframe(), b.to_dataframe())
    assert np.array_equal(a.scenario.matrix, b.scenario.matrix)


def test_cost_accounting():
    game = DualGame(n=2)
    config = get_config(n=2, adversary={"kind": "gaussian", "std": 0.2}, horizon=10)
    record = game.run_episode(config)
    costs = np.array([step.stage_cost for step in record.steps])
    running = np.array([step.running_cost for step in record.steps])
    assert np.allclose(np.cumsum(costs), running, atol=1e-9)

    # residual sum of squares under the true scenario equals disturbance energy
    energy = record.disturbance_energy()
    residual = game.weighted_norm_sq(record.final_state, record.scenario)
    assert residual == pytest.approx(energy, rel=1e-6)

    replay = record.replay_state()
    assert np.allclose(replay.Z, record.final_state.Z)
    assert np.allclose(replay.x, record.final_state.x)


def test_episode_log(game: DualGame):
    game.clear_log_entries()
    game.run_episode(get_config())
    messages = [entry["Message"] for entry in game.LogEntries]
    assert messages[0].startswith("Episode started")
    assert messages[-1] == "Episode finished"
    assert any(m.startswith("Mode switched") for m in messages)
    assert all(value is not None for entry in game.LogEntries for value in entry.values())
    assert "Timestamp" not in game.LogEntries[0]

    game.clear_log_entries()
    game.run_episode(get_config(), log=False)
    assert game.LogEntries == []


def test_infeasible_gamma_episode(game: DualGame):
    game.clear_log_entries()
    record = game.run_episode(get_config(gamma=1.0, adversary="worst_case", horizon=3))
    assert len(record) <= 3
    assert game.LogEntries[0]["Severity"] == "Warning"


def test_run_episodes(game: DualGame):
    records = game.run_episodes(get_config(runs=4))
    assert len(records) == 4
    assert [record.run for record in records] == [0, 1, 2, 3]
    assert records.seed == 7
    assert records.peaks.shape == (4,)
    assert records.diverged_runs == 0
    assert records.get_worst_record().peak_running_cost() == records.peaks.max()


def test_gain_audit_zero_adversary(game: DualGame):
    report = game.run_gain_audit(get_config(runs=200, horizon=4))
    assert report.passed
    assert report.runs == 200
    assert report.bound == pytest.approx(2.0 + np.sqrt(2.0))
    assert report.mean_peak <= report.bound + 3.0 * report.standard_error
    assert 1.0 <= report.mean_peak <= 5.0
    assert report.offending_seed is None


def test_gain_audit_zero_initial_state(game: DualGame):
    report = game.run_gain_audit(get_config(runs=3, x0=[0.0]))
    assert report.bound == 0.0
    assert report.mean_peak == 0.0
    assert report.passed


def test_gain_audit_requires_critical_gamma(game: DualGame):
    with pytest.raises(ValueError):
        game.run_gain_audit(get_config(gamma=5.0))


def test_sync_example():
    game = DualGame(n=2)
    synchronized = 0
    for seed in range(10):
        result = game.run_sync_example(2, noise_std=0.01, seed=seed)
        assert len(result.record) == 8
        assert len(result.y_first) == 9
        assert len(result.z_first) == 9
        assert result.noise_floor == pytest.approx(0.1 * np.sqrt(2.0))
        synchronized += result.synchronized
    assert synchronized >= 5

    with pytest.raises(ValueError):
        game.run_sync_example(0)
    with pytest.raises(ValueError):
        game.run_sync_example(201)


@pytest.mark.slow
@pytest.mark.parametrize(
    "adversary",
    [
        "zero",
        {"kind": "gaussian", "std": 0.1},
        {"kind": "constant", "vector": [0.1]},
        "worst_case",
    ],
)
def test_gain_audit_adversaries(game: DualGame, adversary):
    report = game.run_gain_audit(
        get_config(adversary=adversary, runs=100, horizon=10, x0=[1.0]), errors="raise"
    )
    assert report.passed
    assert report.runs == 100
    assert report.diverged_runs == 0
    assert report.bound == pytest.approx(2.0 + np.sqrt(2.0))


@pytest.mark.slow
def test_sync_example_scale():
    game = DualGame()
    steps = [
        game.run_sync_example(10, noise_std=0.01, seed=seed).sync_step for seed in range(20)
    ]
    assert sum(step is not None and step <= 15 for step in steps) >= 18

    result = game.run_sync_example(100, noise_std=0.01, seed=0)
    assert result.synchronized
    assert result.sync_step <= 105
    assert result.slowdown
