import math
import numpy as np
import pytest
import dualgame as dg
from dualgame import DualGame, GameState, ProblemParams, ValueBranch


def test_params():
    params = ProblemParams(n=2, alpha=1.0, gamma="star")
    assert params.gamma == pytest.approx(1.0 + math.sqrt(2.0))
    assert params.is_critical
    assert params.feasible
    assert params.t_star == pytest.approx((params.gamma**2 + 1.0) / 2.0)

    params = ProblemParams(n=1, alpha=2.0, gamma=10.0)
    t = params.t_star
    assert (params.gamma**2 - t) * (t - 1.0) == pytest.approx(
        params.gamma**2 * params.alpha**2
    )
    assert not params.is_critical

    params = ProblemParams(n=1, alpha=1.0, gamma=2.0)
    assert not params.feasible
    assert math.isnan(params.t_star)

    with pytest.raises(ValueError):
        ProblemParams(n=0, alpha=1.0, gamma=2.0)


def test_game_properties(game: DualGame):
    assert game.Dimension == 1
    assert game.Alpha == 1.0
    assert game.GammaStar == pytest.approx(1.0 + math.sqrt(2.0))
    assert game.Gamma == game.GammaStar
    assert game.Errors == "coerce"
    assert game.Convention == dg.ExplorationConvention.MinusIHat

    with pytest.raises(ValueError):
        DualGame(errors="explode")


def test_v_star_empty_data():
    rng = np.random.default_rng(0)
    for n in range(1, 11):
        for alpha in (0.5, 1.0, 2.0):
            game = DualGame(n=n, alpha=alpha)
            x = rng.standard_normal(n)
            value = game.v_star(GameState.initial(x))
            coef = (game.GammaStar**2 + 1.0) / 2.0
            assert value.value == pytest.approx(coef * x.dot(x), rel=1e-12)
            assert value.branch == ValueBranch.Averaged

    game = DualGame(n=1, alpha=1.0)
    assert game.v_star(GameState.initial([1.0])).value == pytest.approx(
        3.41421356, rel=1e-8
    )


def test_v_star_infeasible():
    game = DualGame(n=1, alpha=1.0, gamma=2.0)
    with pytest.raises(ValueError):
        game.v_star(GameState.initial([1.0]))


def test_weighted_norm_sq():
    rng = np.random.default_rng(2)
    n = 3
    game = DualGame(n=n, alpha=1.5)
    scenario = game.draw_scenario(rng=rng)
    triples = []
    residual = 0.0
    x = rng.standard_normal(n)
    for _ in range(6):
        u = rng.standard_normal(n)
        x_next = rng.standard_normal(n)
        triples.append(dg.DataTriple(x_next=x_next, x=x, u=u))
        r = x_next - scenario.matrix.dot(x) - scenario.i * u
        residual += r.dot(r)
        x = x_next
    state = GameState.from_triples(triples[0].x, triples)
    assert state.is_psd()
    assert game.weighted_norm_sq(state, scenario) == pytest.approx(residual, rel=1e-10)
    assert game.weighted_norm_sq(state.Z, scenario) == pytest.approx(residual, rel=1e-10)


def test_value_branches(game: DualGame):
    state = GameState.initial([2.0])
    scenario = game.draw_scenario()
    assert game.v1(state, scenario) == pytest.approx(4.0)
    assert game.v0(state, scenario) == pytest.approx(
        (game.GammaStar**2 + 1.0) / 2.0 * 4.0
    )
    assert game.v0(state, scenario, t_coeff=1.0) == pytest.approx(4.0)
    with pytest.raises(ValueError):
        game.v0(state, scenario, t_coeff=-1.0)


def test_v_star_dominates_branches(informative_state: GameState, game: DualGame):
    value = game.v_star(informative_state)
    for i in (-1, 1):
        for a in (-1.0, 1.0):
            scenario = dg.Scenario.from_matrix([[a]], i, 1.0)
            assert game.v1(informative_state, scenario) <= value.value + 1e-9
            assert game.v0(informative_state, scenario) <= value.value + 1e-9


def test_v_star_homogeneity(informative_state: GameState, game: DualGame):
    value = game.v_star(informative_state).value
    for c in (0.5, 3.0):
        scaled = game.v_star(informative_state.scaled(c)).value
        assert scaled == pytest.approx(c**2 * value, rel=1e-9)


def test_t_recursion_feasible():
    for alpha in (0.25, 1.0, 4.0):
        params = ProblemParams.critical(1, alpha)
        game = DualGame(alpha=alpha)
        sequence = game.t_recursion(1000, params)
        assert not sequence.diverged
        assert sequence.values[0] == 0.0
        assert sequence.values[1] == pytest.approx(1.0 + alpha**2)
        assert all(b >= a for a, b in zip(sequence.values, sequence.values[1:]))
        assert sequence.sup <= params.t_star * (1 + 1e-9)


def test_t_recursion_infeasible(game: DualGame):
    params = ProblemParams(n=1, alpha=1.0, gamma=0.9 * game.GammaStar)
    sup_t, diverged_at, count = game.t_recursion_scan(10**6, params)
    assert diverged_at is not None
    assert count == diverged_at

    sequence = game.t_recursion(10**6, params)
    assert sequence.diverged
    assert sequence.diverged_at == diverged_at

    with pytest.raises(ValueError):
        game.t_recursion(-1)


def test_t_recursion_without_scale():
    params = ProblemParams(n=1, alpha=0.0, gamma="star")
    assert params.gamma == 1.0
    game = DualGame(alpha=0.0)
    sequence = game.t_recursion(10, params)
    assert not sequence.diverged
    assert sequence.values == [0.0] + [1.0] * 10


def test_adversary_responses(game: DualGame):
    g2 = game.Gamma**2
    pred = np.array([1.5])
    v, value = game.adversary_response_branch1(pred)
    assert value == pytest.approx(v.dot(v) - g2 * (pred - v).dot(pred - v))

    t = game.Params.t_star
    ax = np.array([-0.5])
    v, value = game.adversary_response_branch0(ax, t)
    assert value == pytest.approx(t * v.dot(v) - g2 * (ax - v).dot(ax - v))

    with pytest.raises(ValueError):
        game.adversary_response_branch0(ax, g2)
    with pytest.raises(ValueError):
        game.adversary_response_branch1(pred, ProblemParams(n=1, alpha=0.0, gamma=1.0))


def test_lower_bound_value(game: DualGame):
    state = GameState.initial([1.0])
    assert game.lower_bound_value(state, 0) == pytest.approx(1.0)
    assert game.lower_bound_value(state, 1) == pytest.approx(2.0)

    params = ProblemParams(n=1, alpha=1.0, gamma=1.0)
    assert game.lower_bound_value(state, 2, params) == math.inf


def test_bellman_pieces_at_empty_data(game: DualGame):
    state = GameState.initial([1.0])
    pieces = game.bellman_pieces(state, game.get_value_family())
    m = np.zeros(1)
    value = max(intercept(m) + slope * 1.0 for intercept, slope in pieces)
    assert value == pytest.approx(game.v_star(state).value, rel=1e-9)
