import numpy as np
import pytest
from dualgame import LinAlg
from dualgame.api.utils.helper import ApiHelper
from dualgame.api.utils.optimize import Optimizer
from dualgame.api.utils.svg import SvgPlot


def test_procrustes_value_and_dominance():
    rng = np.random.default_rng(1)
    for n in (1, 2, 3, 5, 8, 20):
        for alpha in (0.5, 1.0, 3.0):
            M = rng.standard_normal((n, n))
            value, A = LinAlg.procrustes_max(M, alpha)
            assert value == pytest.approx(alpha * LinAlg.nuclear_norm(M), rel=1e-9)
            assert LinAlg.inner(A, M) == pytest.approx(value, rel=1e-9)
            assert LinAlg.is_scaled_orthogonal(A, alpha, tol=1e-9)
            for _ in range(5):
                B = alpha * LinAlg.haar_orthogonal(n, rng)
                assert LinAlg.inner(B, M) <= value + 1e-9 * (1 + value)


def test_procrustes_scalar():
    value, A = LinAlg.procrustes_max(np.array([[-2.0]]), 0.5)
    assert value == 1.0
    assert A[0, 0] == -0.5

    value, A = LinAlg.procrustes_max(np.zeros((1, 1)), 2.0)
    assert value == 0.0
    assert A[0, 0] == 2.0


def test_procrustes_errors():
    with pytest.raises(ValueError):
        LinAlg.procrustes_max(np.eye(2), -1.0)
    with pytest.raises(ValueError):
        LinAlg.procrustes_max(np.ones((2, 3)), 1.0)
    with pytest.raises(ValueError):
        LinAlg.nuclear_norm(np.array([[1.0, np.nan], [0.0, 1.0]]))


def test_nuclear_norm():
    assert LinAlg.nuclear_norm(np.diag([3.0, -4.0])) == pytest.approx(7.0)
    assert LinAlg.nuclear_norm(np.array([[-2.5]])) == 2.5


def test_haar_orthogonal():
    for n in (1, 3, 7):
        Q = LinAlg.haar_orthogonal(n, np.random.default_rng(3))
        assert LinAlg.is_scaled_orthogonal(Q, 1.0)
        assert abs(np.linalg.det(Q)) == pytest.approx(1.0, abs=1e-9)

    Q1 = LinAlg.haar_orthogonal(3, ApiHelper.get_rng(7))
    Q2 = LinAlg.haar_orthogonal(3, ApiHelper.get_rng(7))
    assert np.array_equal(Q1, Q2)

    with pytest.raises(ValueError):
        LinAlg.haar_orthogonal(0, np.random.default_rng(0))


def test_unit_sphere_sample():
    rng = np.random.default_rng(5)
    samples = np.array([LinAlg.unit_sphere_sample(3, rng) for _ in range(4000)])
    assert np.allclose(np.linalg.norm(samples, axis=1), 1.0, atol=1e-12)
    assert np.allclose(samples.mean(axis=0), 0.0, atol=0.05)
    assert np.allclose(samples.T.dot(samples) / len(samples), np.eye(3) / 3, atol=0.03)

    assert abs(LinAlg.unit_sphere_sample(1, rng)[0]) == 1.0


def test_random_streams():
    a = ApiHelper.get_rng(11, run=2).standard_normal(4)
    b = ApiHelper.get_rng(11, run=2).standard_normal(4)
    c = ApiHelper.get_rng(11, run=3).standard_normal(4)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)

    rng = np.random.default_rng(0)
    assert ApiHelper.get_rng(rng) is rng


def test_handle_error():
    ApiHelper.handle_error("nothing", "ignore")
    with pytest.warns(RuntimeWarning):
        ApiHelper.handle_error("warning", "coerce")
    with pytest.raises(RuntimeError):
        ApiHelper.handle_error("error", "raise")


def test_optimizer():
    x, value = Optimizer.minimize_interval(lambda t: (t - 1.0) ** 2, -3.0, 3.0)
    assert x == pytest.approx(1.0, abs=1e-6)
    assert value == pytest.approx(0.0, abs=1e-10)

    # minimum at the interval end
    x, value = Optimizer.minimize_interval(lambda t: t, -2.0, 5.0)
    assert x == -2.0

    x, value = Optimizer.maximize_grid(lambda t: -((t - 0.3) ** 2), -1.0, 1.0)
    assert x == pytest.approx(0.3, abs=1e-4)

    x, value, _ = Optimizer.nelder_mead(
        lambda v: float((v[0] - 1.0) ** 2 + 2.0 * (v[1] + 0.5) ** 2),
        np.zeros(2),
        2000,
        0.5,
    )
    assert np.allclose(x, [1.0, -0.5], atol=1e-5)

    s, value = Optimizer.get_best_second_moment([1.0, 5.0], [1.0, -1.0], 0.0)
    assert s == pytest.approx(2.0)
    assert value == pytest.approx(3.0)
    with pytest.raises(ValueError):
        Optimizer.get_best_second_moment([1.0], [-1.0], 0.0)


def test_svg_plot():
    series = {"first": [1.0, 0.1, 0.01], "second": [0.0, 2.0, float("nan")]}
    svg = SvgPlot.render(series, log_y=True, title="norms")
    assert "<svg" in svg
    assert svg.rstrip().endswith("</svg>")
    for name in ("first", "second", "norms"):
        assert name in svg
    assert svg == SvgPlot.render(series, log_y=True, title="norms")

    assert "<svg" in SvgPlot.render({})


def test_procrustes_dominance_many_matrices():
    rng = np.random.default_rng(11)
    for k in range(1000):
        n = 1 + k % 6
        alpha = 10.0 ** rng.uniform(-1.0, 1.0)
        M = rng.standard_normal((n, n))
        value, A = LinAlg.procrustes_max(M, alpha)
        B = alpha * LinAlg.haar_orthogonal(n, rng)
        assert LinAlg.inner(B, M) <= value + 1e-9 * (1.0 + value)
        assert LinAlg.inner(A, M) == pytest.approx(value, rel=1e-9, abs=1e-12)


def test_minimize_moments_budget():
    pieces = [(lambda m: float(abs(m[0] - 1.0)), 1.0)]
    starts = [np.zeros(1), np.ones(1), -np.ones(1)]
    for budget in (1, 5, 30, 200):
        solution = Optimizer.minimize_moments(
            pieces, 1, starts, budget=budget, rng=np.random.default_rng(0)
        )
        assert solution.evaluations <= budget
        assert np.isfinite(solution.value)

    solution = Optimizer.minimize_moments(
        pieces, 1, starts, budget=2000, rng=np.random.default_rng(0)
    )
    assert solution.evaluations <= 2000
    assert solution.mean[0] == pytest.approx(0.5, abs=1e-4)
    assert solution.second_moment == pytest.approx(0.25, abs=1e-4)
    assert solution.value == pytest.approx(0.75, abs=1e-6)
