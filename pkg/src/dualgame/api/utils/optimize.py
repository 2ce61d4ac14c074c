from typing import (
    Callable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np
from scipy.optimize import (
    minimize,
    minimize_scalar,
)

# intercept as a function of the input mean, slope in the input second moment
MomentPiece = Tuple[Callable[[np.ndarray], float], float]


# Result of a minimization over input moments
class MomentSolution(NamedTuple):
    mean: np.ndarray
    second_moment: float
    value: float
    converged: bool
    evaluations: int


# Derivative-free searches
class Optimizer:
    """
    Derivative-free searches used by the numeric policy and the verification suite
    """

    # best second moment for fixed intercepts
    @staticmethod
    def get_best_second_moment(
        intercepts: Sequence[float], slopes: Sequence[float], floor: float
    ) -> Tuple[float, float]:
        """
        Minimize max_k(intercepts[k] + slopes[k]*s) over s >= floor.
        The objective is convex piecewise linear in s, so the minimum is attained
        at the floor or at a crossing of two pieces.

        Parameters
        ----------
        intercepts : list[float]
            Piece intercepts
        slopes : list[float]
            Piece slopes
        floor : float
            Lower bound for s
        """
        a = np.asarray(intercepts, dtype=float)
        b = np.asarray(slopes, dtype=float)
        if np.max(b) < 0:
            raise ValueError(
                "DualGame::get_best_second_moment(): "
                "objective is unbounded below in the second moment!"
            )
        candidates = [float(floor)]
        for j in range(a.size):
            for k in range(j + 1, a.size):
                if b[j] != b[k]:
                    s = (a[k] - a[j]) / (b[j] - b[k])
                    if s > floor:
                        candidates.append(float(s))
        s = np.asarray(candidates)
        values = np.max(a[None, :] + b[None, :] * s[:, None], axis=1)
        idx = int(np.argmin(values))
        return float(s[idx]), float(values[idx])

    # minimize over input moments
    @staticmethod
    def minimize_moments(
        pieces: List[MomentPiece],
        n: int,
        starts: Sequence[np.ndarray],
        budget: int = 20000,
        rng: Optional[np.random.Generator] = None,
        perturbations: int = 2,
        scale: float = 1.0,
    ) -> MomentSolution:
        """
        Minimize max over pieces of intercept(m) + slope*s over moment pairs s >= |m|^2.
        The optimal s is exact for every m, the mean m is searched by
        Nelder-Mead from multiple starts followed by a restart from the best point.

        Parameters
        ----------
        pieces : list[tuple[callable, float]]
            Pieces (intercept(m), slope)
        n : int
            Dimension of the mean
        starts : list[np.ndarray]
            Starting means
        budget : int, default 20000
            Maximal number of objective evaluations
        rng : np.random.Generator | None, default None
            Random stream for perturbed starts
        perturbations : int, default 2
            Number of perturbed starts
        scale : float, default 1.0
            Typical magnitude of the mean
        """
        slopes = [slope for _, slope in pieces]
        budget = max(int(budget), 1)
        evaluations = 0

        def objective(m: np.ndarray) -> float:
            nonlocal evaluations
            # budget spent, searches see no improvement
            if evaluations >= budget:
                return np.inf
            evaluations += 1
            m = np.asarray(m, dtype=float).reshape(n)
            intercepts = [intercept(m) for intercept, _ in pieces]
            return Optimizer.get_best_second_moment(
                intercepts, slopes, float(m.dot(m))
            )[1]

        scale = max(float(scale), 1e-12)
        points = [np.asarray(s, dtype=float).reshape(n) for s in starts]
        if not points:
            points = [np.zeros(n)]
        if rng is not None:
            for _ in range(perturbations):
                points.append(scale * rng.standard_normal(n))

        per_start = max(budget // (len(points) + 1), 10 * (n + 1))
        best_m, best_value, converged = points[0], objective(points[0]), False
        for x0 in points:
            remaining = budget - evaluations
            if remaining <= 0:
                break
            res = Optimizer.nelder_mead(
                objective, x0, min(per_start, remaining), 0.25 * scale
            )
            if res[1] < best_value:
                best_m, best_value, converged = res
            elif res[1] == best_value:
                converged = converged or res[2]
        # restart from best point with a small simplex
        remaining = budget - evaluations
        if remaining > 0:
            res = Optimizer.nelder_mead(
                objective, best_m, min(per_start, remaining), 1e-3 * scale
            )
            if res[1] <= best_value:
                best_m, best_value, converged = res[0], res[1], converged or res[2]

        intercepts = [intercept(best_m) for intercept, _ in pieces]
        s, value = Optimizer.get_best_second_moment(
            intercepts, slopes, float(best_m.dot(best_m))
        )
        return MomentSolution(best_m, s, value, bool(converged), evaluations)

    # Nelder-Mead search
    @staticmethod
    def nelder_mead(
        fun: Callable[[np.ndarray], float],
        x0: np.ndarray,
        budget: int,
        step: float,
    ) -> Tuple[np.ndarray, float, bool]:
        """
        Nelder-Mead minimization from x0 with initial simplex x0 + step*I

        Parameters
        ----------
        fun : callable
            Objective
        x0 : np.ndarray
            Starting point
        budget : int
            Maximal number of evaluations
        step : float
            Initial simplex size
        """
        x0 = np.asarray(x0, dtype=float)
        n = x0.size
        simplex = np.vstack([x0, x0 + step * np.eye(n)])
        res = minimize(
            fun,
            x0,
            method="Nelder-Mead",
            options={
                "maxfev": int(budget),
                "xatol": 1e-10 * max(1.0, step),
                "fatol": 1e-12,
                "adaptive": n > 2,
                "initial_simplex": simplex,
            },
        )
        return np.asarray(res.x, dtype=float).reshape(n), float(res.fun), bool(res.success)

    # maximize vector function locally
    @staticmethod
    def maximize(
        fun: Callable[[np.ndarray], float],
        x0: np.ndarray,
        budget: int = 200,
        step: float = 0.1,
    ) -> Tuple[np.ndarray, float, bool]:
        """
        Local derivative-free maximization (polish)

        Parameters
        ----------
        fun : callable
            Objective to maximize
        x0 : np.ndarray
            Starting point
        budget : int, default 200
            Maximal number of evaluations
        step : float, default 0.1
            Initial simplex size
        """
        x, value, success = Optimizer.nelder_mead(lambda v: -fun(v), x0, budget, step)
        return x, -value, success

    # minimize scalar function on an interval
    @staticmethod
    def minimize_interval(
        fun: Callable[[float], float],
        lower: float,
        upper: float,
        budget: int = 100,
        xatol: float = 1e-9,
    ) -> Tuple[float, float]:
        """
        Bounded scalar minimization, exact for convex functions up to xatol.
        Interval end points are always evaluated.

        Parameters
        ----------
        fun : callable
            Scalar objective
        lower : float
            Lower bound
        upper : float
            Upper bound
        budget : int, default 100
            Maximal number of iterations
        xatol : float, default 1e-9
            Absolute tolerance
        """
        best = min(((fun(lower), lower), (fun(upper), upper)))
        if upper > lower:
            res = minimize_scalar(
                fun,
                bounds=(lower, upper),
                method="bounded",
                options={"maxiter": int(budget), "xatol": xatol},
            )
            if float(res.fun) < best[0]:
                best = (float(res.fun), float(res.x))
        return best[1], best[0]

    # maximize scalar function on a grid followed by local refinement
    @staticmethod
    def maximize_grid(
        fun: Callable[[float], float],
        lower: float,
        upper: float,
        points: int = 25,
        budget: int = 30,
    ) -> Tuple[float, float]:
        """
        Scalar maximization: grid search on [lower, upper] and bounded refinement
        around the best grid point

        Parameters
        ----------
        fun : callable
            Scalar objective to maximize
        lower : float
            Lower bound
        upper : float
            Upper bound
        points : int, default 25
            Grid size
        budget : int, default 30
            Maximal number of refinement iterations
        """
        grid = np.linspace(lower, upper, max(int(points), 2))
        values = np.array([fun(float(v)) for v in grid])
        k = int(np.argmax(values))
        lo = grid[max(k - 1, 0)]
        hi = grid[min(k + 1, grid.size - 1)]
        v, value = Optimizer.minimize_interval(
            lambda t: -fun(t), float(lo), float(hi), budget=budget
        )
        if -value >= values[k]:
            return v, -value
        return float(grid[k]), float(values[k])
