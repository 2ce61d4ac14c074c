import numpy as np
import pytest
import dualgame as dg
from dualgame import ControlDecision, ControlMode, DualGame, GameState, ProblemParams


def test_decide_empty_data(game: DualGame):
    decision = game.decide(GameState.initial([1.0]))
    assert decision.mode == ControlMode.Exploration
    assert decision.y_max == pytest.approx(0.0, abs=1e-12)
    assert np.allclose(decision.mean, 0.0)
    assert decision.second_moment == pytest.approx(1.0)

    game = DualGame(n=3, alpha=2.0)
    decision = game.decide(GameState.initial([0.0, 1.0, 1.0]))
    assert decision.mode == ControlMode.Exploration
    assert decision.second_moment == pytest.approx(8.0)


def test_decide_zero_state(game: DualGame):
    decision = game.decide(GameState.initial([0.0]))
    assert decision.mode == ControlMode.CertaintyEquivalence
    assert decision.second_moment == 0.0
    assert np.array_equal(game.sample_input(decision), np.zeros(1))


def test_decide_certainty_equivalence(game: DualGame, informative_state: GameState):
    g = game.GammaStar**2 - 1.0
    decision = game.decide(informative_state)
    assert decision.mode == ControlMode.CertaintyEquivalence
    assert decision.y_max == pytest.approx(2.0 * g)
    assert decision.witness.i == 1
    assert decision.witness.matrix[0, 0] == pytest.approx(1.0)
    assert decision.mean == pytest.approx([-2.0])
    assert decision.second_moment == pytest.approx(4.0)
    assert game.sample_input(decision) == pytest.approx([-2.0])


def test_decide_weak_data(game: DualGame):
    # x = 1, u = 0.3 under A = 1, i = -1 gives x_next = 0.7
    triple = dg.DataTriple(x_next=[0.7], x=[1.0], u=[0.3])
    state = GameState.initial([1.0]).update(triple)
    g = game.GammaStar**2 - 1.0
    decision = game.decide(state)
    assert decision.mode == ControlMode.Exploration
    assert decision.y_max == pytest.approx(0.18 * g)
    assert decision.witness.i == -1
    assert decision.second_moment == pytest.approx(0.49)
    # mean -i_hat*kappa*A_hat*x with kappa = y_max/(2*|x|^2)
    assert decision.mean == pytest.approx([0.18 * g / 0.98 * 0.7])


def test_extract_functional(game: DualGame, informative_state: GameState):
    f = game.extract_functional(informative_state)
    g = game.GammaStar**2 - 1.0
    assert f.g == pytest.approx(g)
    assert f.Y1 == pytest.approx(np.array([[4.0 * g]]))
    assert f.c_const == pytest.approx(-4.0 * g)
    scenario, y_max = game.select_scenario(f)
    assert y_max == pytest.approx(f.value(scenario))
    assert y_max == pytest.approx(2.0 * g)

    with pytest.raises(ValueError):
        game.extract_functional(
            informative_state, ProblemParams(n=1, alpha=1.0, gamma=3.0)
        )
    with pytest.raises(ValueError):
        game.extract_functional(
            informative_state, ProblemParams(n=1, alpha=1.0, gamma=2.0)
        )


def test_sample_input():
    game = DualGame(n=3, alpha=1.0)
    decision = game.decide(GameState.initial([1.0, 0.0, 0.0]))
    rng = game.get_rng(4)
    for _ in range(10):
        u = game.sample_input(decision, rng)
        assert np.linalg.norm(u) == pytest.approx(1.0)

    u1 = game.sample_input(decision, game.get_rng(9))
    u2 = game.sample_input(decision, game.get_rng(9))
    assert np.array_equal(u1, u2)


def test_sample_input_invalid_moments(game: DualGame):
    decision = ControlDecision.model_construct(
        mode=ControlMode.Exploration,
        mean=np.array([2.0]),
        second_moment=1.0,
        witness=game.draw_scenario(),
        y_max=0.0,
        objective=None,
        converged=True,
    )
    with pytest.raises(RuntimeError):
        game.sample_input(decision)

    with pytest.raises(ValueError):
        ControlDecision(
            mode="exploration",
            mean=[2.0],
            second_moment=1.0,
            witness=game.draw_scenario(),
        )


def test_policy_objective(game: DualGame):
    state = GameState.initial([1.0])
    value = game.policy_objective(state, np.zeros(1), 1.0)
    assert value == pytest.approx(game.v_star(state).value, rel=1e-9)
    # both other second moments are worse
    assert game.policy_objective(state, np.zeros(1), 0.5) > value
    assert game.policy_objective(state, np.zeros(1), 2.0) > value

    with pytest.raises(ValueError):
        game.policy_objective(state, np.ones(1), 0.5)


def test_policy_numeric(game: DualGame):
    state = GameState.initial([1.0])
    decision = game.policy_numeric(state, opt_budget=4000)
    closed_form = game.decide(state)
    g_closed = game.policy_objective(state, closed_form.mean, closed_form.second_moment)
    assert decision.objective == pytest.approx(g_closed, rel=1e-3)
    assert decision.mode == ControlMode.Exploration
    assert decision.second_moment == pytest.approx(1.0, rel=1e-2)

    decision = game.policy_numeric(GameState.initial([0.0]))
    assert decision.mode == ControlMode.CertaintyEquivalence
    assert decision.objective == pytest.approx(0.0, abs=1e-12)

    with pytest.raises(ValueError):
        DualGame(n=9).policy_numeric(GameState.initial(np.ones(9)))


def test_certainty_equivalence_decision(game: DualGame, informative_state: GameState):
    decision = game.certainty_equivalence_decision(informative_state)
    assert decision.mode == ControlMode.CertaintyEquivalence
    assert decision.mean == pytest.approx([-2.0])

    estimate = game.estimate_parameters(informative_state)
    assert estimate.i == 1
    assert estimate.matrix[0, 0] == pytest.approx(1.0)

    decision = game.policy_decision(informative_state, "certainty_equivalence")
    assert decision.mean == pytest.approx([-2.0])
    decision = game.policy_decision(informative_state, dg.PolicyType.ClosedForm)
    assert decision.mode == ControlMode.CertaintyEquivalence


def test_exploration_convention():
    game = DualGame(exploration_convention="plus")
    assert game.Convention == dg.ExplorationConvention.Plus
    game.set_exploration_convention(dg.ExplorationConvention.MinusIHat)
    assert game.Convention == dg.ExplorationConvention.MinusIHat
    with pytest.raises(ValueError):
        game.set_exploration_convention("sideways")
