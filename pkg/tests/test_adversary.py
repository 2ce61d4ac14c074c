import numpy as np
import pytest
import dualgame as dg
from dualgame import AdversaryKind, AdversaryType, DualGame, GameState, LinAlg
from dualgame.api.methods.adversary import AdversaryMixinHelper


def test_draw_scenario():
    game = DualGame(n=4, alpha=2.0)
    scenario = game.draw_scenario(rng=game.get_rng(1))
    assert LinAlg.is_scaled_orthogonal(scenario.matrix, 2.0)
    assert scenario.i in (-1, 1)

    other = game.draw_scenario(rng=game.get_rng(1))
    assert np.array_equal(scenario.matrix, other.matrix)
    assert scenario.i == other.i

    signs = {game.draw_scenario(rng=game.get_rng(seed)).i for seed in range(20)}
    assert signs == {-1, 1}

    with pytest.raises(ValueError):
        dg.Scenario.from_matrix(np.ones((2, 2)), 1, 1.0)
    with pytest.raises(ValueError):
        dg.Scenario.from_matrix(np.eye(2), 0, 1.0)


def test_adversary_kind():
    assert AdversaryKind.model_validate("worst_case").kind == AdversaryType.WorstCase
    assert AdversaryKind.model_validate({"kind": "gaussian", "std": 0.5}).std == 0.5
    kind = AdversaryKind.model_validate({"kind": "constant", "vector": [1.0, 2.0]})
    assert np.array_equal(kind.vector, [1.0, 2.0])
    assert kind.model_dump(mode="json")["kind"] == "Constant"

    with pytest.raises(ValueError):
        AdversaryKind.model_validate("chaotic")
    with pytest.raises(ValueError):
        AdversaryKind.model_validate({"kind": "gaussian"})
    with pytest.raises(ValueError):
        AdversaryKind.model_validate({"kind": "constant"})


def test_simple_disturbances():
    game = DualGame(n=2)
    state = GameState.initial([1.0, 0.0])
    scenario = game.draw_scenario()
    u = np.zeros(2)

    assert np.array_equal(game.next_disturbance("zero", state, u, scenario), np.zeros(2))

    kind = {"kind": "gaussian", "std": 0.1}
    w1 = game.next_disturbance(kind, state, u, scenario, rng=game.get_rng(3))
    w2 = game.next_disturbance(kind, state, u, scenario, rng=game.get_rng(3))
    assert w1.shape == (2,)
    assert np.array_equal(w1, w2)

    kind = AdversaryKind(kind=AdversaryType.Constant, vector=[0.5, -0.5])
    w = game.next_disturbance(kind, state, u, scenario)
    assert np.array_equal(w, [0.5, -0.5])
    # returned vector is a copy
    w[0] = 10.0
    assert kind.vector[0] == 0.5

    kind = AdversaryKind(kind=AdversaryType.Constant, vector=[0.5])
    with pytest.raises(ValueError):
        game.next_disturbance(kind, state, u, scenario)


@pytest.mark.parametrize("n", [1, 2])
def test_worst_case_disturbance(n: int):
    game = DualGame(n=n, alpha=1.0)
    rng = game.get_rng(2)
    scenario = game.draw_scenario(rng=rng)
    state = GameState.initial(LinAlg.unit_sphere_sample(n, rng))
    u = game.sample_input(game.decide(state), rng)
    w = game.next_disturbance("worst_case", state, u, scenario)
    assert w.shape == (n,)
    assert np.all(np.isfinite(w))

    pred = scenario.predict(state.x, u)
    value = AdversaryMixinHelper.get_next_value(
        pred + w, state.x, u, state.Z, game.Alpha, game.GammaStar
    )
    null_value = AdversaryMixinHelper.get_next_value(
        pred, state.x, u, state.Z, game.Alpha, game.GammaStar
    )
    assert value >= null_value - 1e-9 * (1.0 + abs(null_value))


def test_worst_case_requires_feasible_gamma():
    game = DualGame(n=1, alpha=1.0, gamma=1.5)
    state = GameState.initial([1.0])
    scenario = game.draw_scenario()
    with pytest.raises(ValueError):
        game.next_disturbance("worst_case", state, np.zeros(1), scenario)


def test_worst_case_dropped_response(monkeypatch):
    def unavailable(*args, **kwargs):
        raise ValueError("response is not available")

    state = GameState.initial([1.0])
    u = np.array([0.5])

    game = DualGame(n=1, alpha=1.0, errors="ignore")
    monkeypatch.setattr(game, "adversary_response_branch1", unavailable)
    scenario = game.draw_scenario(rng=game.get_rng(0))
    w = game.next_disturbance("worst_case", state, u, scenario)
    assert w.shape == (1,)
    assert np.all(np.isfinite(w))
    entries = [e for e in game.LogEntries if e.get("Category") == "Adversary"]
    assert len(entries) == 1
    assert entries[0]["Severity"] == "Warning"
    assert "branch1" in entries[0]["Message"]
    assert entries[0]["MessageDetails"] == "response is not available"

    game = DualGame(n=1, alpha=1.0, errors="coerce")
    monkeypatch.setattr(game, "adversary_response_branch0", unavailable)
    with pytest.warns(RuntimeWarning):
        game.next_disturbance("worst_case", state, u, scenario)

    game = DualGame(n=1, alpha=1.0, errors="raise")
    monkeypatch.setattr(game, "adversary_response_branch1", unavailable)
    with pytest.raises(RuntimeError):
        game.next_disturbance("worst_case", state, u, scenario)
