from typing import (
    Callable,
    Dict,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import warnings
import numpy as np
from pydantic import BaseModel

from dualgame.api.enums.modes import (
    ControlMode,
    ValueBranch,
)
from dualgame.api.enums.policies import ExplorationConvention
from dualgame.api.enums.suites import VerificationSuite
from dualgame.api.models.params import ProblemParams
from dualgame.api.models.state import (
    DataTriple,
    GameState,
)
from dualgame.api.models.reports import (
    Theorem3Report,
    Theorem3SuiteReport,
    BellmanSample,
    BellmanReport,
    ValueIterationSample,
    ValueIterationReport,
    GammaThresholdEntry,
    GammaThresholdReport,
    ConventionCheck,
    PolicySample,
    PolicyCrossValidationReport,
    GammaSweepEntry,
    GammaSweepReport,
)
from dualgame.api.utils.linalg import LinAlg
from dualgame.api.utils.optimize import (
    MomentPiece,
    Optimizer,
)
from dualgame.api.utils.validators import Validator
from dualgame.api.methods.game_model import GameModelMixinHelper
from dualgame.api.methods.controller import ControllerMixinHelper
from dualgame.api.protocols.protocols import SupportsController


# Verifier helper functions on plain arrays
class VerifierMixinHelper:
    # pieces of the min-max identity
    @staticmethod
    def get_theorem3_pieces(
        x: np.ndarray,
        Y1: np.ndarray,
        Y2: np.ndarray,
        Y3: np.ndarray,
        g: float,
        c_const: float,
        alpha: float,
    ) -> List[MomentPiece]:
        """
        Pieces of max over (A, i) of max{y(A,i) + E|Ax + iu|^2, (g + 2)*|alpha*x|^2 - g*E|u|^2}
        as functions of the input moments
        """
        ax_sq = alpha**2 * float(x.dot(x))
        pieces = []
        for i in (1, -1):
            base = i * float(np.trace(Y2)) + c_const + ax_sq
            M = Y1 + i * Y3

            def intercept(m, base=base, M=M, i=i):
                return base + alpha * LinAlg.nuclear_norm(M + 2.0 * i * np.outer(m, x))

            pieces.append((intercept, 1.0))
        pieces.append((lambda m: (g + 2.0) * ax_sq, -g))
        return pieces

    # value iteration level two for scalar states
    @staticmethod
    def get_residual_level(
        x: np.ndarray, Z: np.ndarray, alpha: float, gamma: float, budget: int = 100
    ) -> float:
        """
        F applied to max over scenarios of |x|^2 - gamma^2*||.||_Z^2 for n = 1.
        Both pieces share the slope in the second moment, so deterministic inputs are optimal
        and the minimization over the mean is a convex scalar search.
        """
        pieces = GameModelMixinHelper.get_bellman_pieces(
            x, Z, alpha, gamma, [(ValueBranch.Residual, 1.0)]
        )

        def objective(m: float) -> float:
            mv = np.array([m])
            return max(intercept(mv) + slope * m * m for intercept, slope in pieces)

        bound = 2.0 * alpha * float(np.linalg.norm(x)) + 1.0
        _, value = Optimizer.minimize_interval(
            objective, -bound, bound, budget=budget, xatol=1e-10 * bound
        )
        return float(value)


# Numerical verification of the game solution
class VerifierMixin(SupportsController):
    """
    Numerical verification of the game solution
    """

    # critical parameters
    def get_critical_params(
        self, params: Optional[ProblemParams] = None, caller: str = "verify"
    ) -> ProblemParams:
        """
        Get parameters, raise unless gamma equals the critical gain

        Parameters
        ----------
        params : ProblemParams | None, default None
            Problem parameters
        caller : str, default 'verify'
            Name of calling operation used in the error message
        """
        params = self.get_feasible_params(params, caller)
        if not params.is_critical:
            raise ValueError(
                f"DualGame::{caller}(): check requires gamma = gamma_star = "
                f"{params.gamma_star:g}, got {params.gamma:g}!"
            )
        return params

    # random information states
    def sample_states(
        self,
        count: int,
        n: int = 1,
        seed: Union[int, np.random.Generator, None] = None,
        max_triples: int = 20,
        noise_std: float = 0.1,
        params: Optional[ProblemParams] = None,
    ) -> List[GameState]:
        """
        Random information states. Data of 0..max_triples noisy triples is simulated
        under the closed-form law for a random scenario, then the current state is replaced
        by a random vector with norm log-uniform in [0.1, 10].
        Simulation always runs at the critical gain gamma_star of the given alpha,
        the gamma of params does not change the sample.

        Parameters
        ----------
        count : int
            Number of states
        n : int, default 1
            State dimension
        seed : int | np.random.Generator | None, default None
            Seed of the sample. If None, the seed of the instance is used.
        max_triples : int, default 20
            Maximal number of simulated triples
        noise_std : float, default 0.1
            Standard deviation of the simulated disturbances
        params : ProblemParams | None, default None
            Problem parameters, only alpha is used
        """
        params = ProblemParams.critical(n, self.get_params(params).alpha)
        rng = self.get_rng(seed)
        states = []
        for _ in range(count):
            scenario = self.draw_scenario(params, rng)
            state = GameState.initial(rng.standard_normal(n))
            for _ in range(int(rng.integers(0, max_triples + 1))):
                u = self.sample_input(self.decide(state, params), rng)
                x_next = scenario.predict(state.x, u) + noise_std * rng.standard_normal(n)
                if not np.all(np.isfinite(x_next)) or np.linalg.norm(x_next) > 1e6:
                    break
                state = state.update(DataTriple(x_next=x_next, x=state.x, u=u))
            radius = 10.0 ** rng.uniform(-1.0, 1.0)
            states.append(state.with_x(radius * LinAlg.unit_sphere_sample(n, rng)))
        return states

    # min-max identity of the closed-form law
    def check_theorem3(
        self,
        x: np.ndarray,
        Y1: np.ndarray,
        Y2: np.ndarray,
        Y3: np.ndarray,
        g: float,
        params: Optional[ProblemParams] = None,
        opt_budget: int = 20000,
        c_const: float = 0.0,
        seed: int = 0,
    ) -> Theorem3Report:
        """
        Compare min over input moments of the exact inner maximum (lhs) with
        max over (A, i) of max{y(A,i), 2*|alpha*x|^2} (rhs).
        lhs >= rhs holds whenever c_const >= -alpha*||Y1||_*.

        Parameters
        ----------
        x : np.ndarray
            State
        Y1 : np.ndarray
            Coefficient of A
        Y2 : np.ndarray
            Coefficient of the sign
        Y3 : np.ndarray
            Coefficient of i*A
        g : float
            Branch weight, g > 0
        params : ProblemParams | None, default None
            Problem parameters, only alpha is used
        opt_budget : int, default 20000
            Maximal number of objective evaluations
        c_const : float, default 0.0
            Scenario-independent offset of y
        seed : int, default 0
            Seed of perturbed starts
        """
        params = self.get_params(params)
        x = np.asarray(x, dtype=float).ravel()
        Y1, Y2, Y3 = (np.atleast_2d(np.asarray(Y, dtype=float)) for Y in (Y1, Y2, Y3))
        n = x.size
        if n > 4:
            raise ValueError(
                f"DualGame::check_theorem3(): supported for n <= 4, got n = {n}!"
            )
        if g <= 0:
            raise ValueError(f"DualGame::check_theorem3(): g should be positive, got {g}!")
        alpha = params.alpha
        A_hat, i_hat, y_max = ControllerMixinHelper.select(Y1, Y2, Y3, c_const, alpha)
        rhs = max(y_max, 2.0 * alpha**2 * float(x.dot(x)))
        pieces = VerifierMixinHelper.get_theorem3_pieces(x, Y1, Y2, Y3, g, c_const, alpha)
        ce = -i_hat * A_hat.dot(x)
        solution = Optimizer.minimize_moments(
            pieces,
            n,
            starts=[np.zeros(n), ce, -ce],
            budget=opt_budget,
            rng=self.get_rng(seed),
            scale=alpha * float(np.linalg.norm(x)),
        )
        report = Theorem3Report(
            lhs=solution.value,
            rhs=rhs,
            residual=solution.value - rhs,
            minimizer_mean=[float(e) for e in solution.mean],
            minimizer_second_moment=solution.second_moment,
            y_max=y_max,
            converged=solution.converged,
            evaluations=solution.evaluations,
        )
        if not solution.converged:
            warnings.warn(
                f"DualGame::check_theorem3(): search did not converge within "
                f"{opt_budget} evaluations, residual {report.residual:.6g}",
                RuntimeWarning,
                stacklevel=2,
            )
        return report

    # min-max identity at the functional of an information state
    def check_theorem3_state(
        self,
        state: GameState,
        params: Optional[ProblemParams] = None,
        opt_budget: int = 20000,
        seed: int = 0,
    ) -> Theorem3Report:
        """
        Min-max identity for the information functional of a state

        Parameters
        ----------
        state : GameState
            Information state
        params : ProblemParams | None, default None
            Problem parameters
        opt_budget : int, default 20000
            Maximal number of objective evaluations
        seed : int, default 0
            Seed of perturbed starts
        """
        params = self.get_critical_params(params, "check_theorem3")
        f = self.extract_functional(state, params)
        return self.check_theorem3(
            state.x,
            f.Y1,
            f.Y2,
            f.Y3,
            f.g,
            params=params,
            opt_budget=opt_budget,
            c_const=f.c_const,
            seed=seed,
        )

    # Bellman fixed point
    def check_bellman_fixed_point(
        self,
        states: Sequence[GameState],
        params: Optional[ProblemParams] = None,
        opt_budget: int = 20000,
    ) -> BellmanReport:
        """
        Compare numeric F V_* with the closed-form V_* on information states

        Parameters
        ----------
        states : list[GameState]
            Information states
        params : ProblemParams | None, default None
            Problem parameters
        opt_budget : int, default 20000
            Maximal number of objective evaluations per state
        """
        params = self.get_critical_params(params, "check_bellman_fixed_point")
        report = BellmanReport()
        for k, state in enumerate(states):
            if state.n > 3:
                raise ValueError(
                    f"DualGame::check_bellman_fixed_point(): supported for n <= 3, "
                    f"got n = {state.n}!"
                )
            decision = self.policy_numeric(state, params, opt_budget, seed=k)
            v_star = self.v_star(state, params).value
            fv_star = float(decision.objective)
            residual = fv_star - v_star
            report.samples.append(
                BellmanSample(
                    index=k,
                    v_star=v_star,
                    fv_star=fv_star,
                    residual=residual,
                    relative_residual=residual / (1.0 + abs(v_star)),
                    converged=decision.converged,
                )
            )
        self.add_verification_log_entry(
            "Bellman fixed point check",
            report.max_relative_residual <= 1e-2,
            number_of_items=len(report.samples),
            value_after=report.max_relative_residual,
        )
        return report

    # value iteration level
    def value_level(
        self,
        state: GameState,
        depth: int,
        params: Optional[ProblemParams] = None,
        opt_budget: int = 20000,
    ) -> float:
        """
        Value iteration level V^(K) = F^K V^(0) for scalar states, K <= 3.
        V^(0) = -gamma^2*min over scenarios of ||.||_Z^2, V^(1) and V^(2) in closed form
        and by convex scalar search, V^(3) by a nested search over two-point inputs
        with the data updated by the realized triples.

        Parameters
        ----------
        state : GameState
            Information state with n = 1
        depth : int
            Level K in 0..3
        params : ProblemParams | None, default None
            Problem parameters
        opt_budget : int, default 20000
            Maximal number of evaluations, the outer search of level 3 is capped at 200
        """
        params = self.get_feasible_params(params, "value_level")
        if state.n != 1:
            raise ValueError(
                f"DualGame::value_level(): supported for n = 1, got n = {state.n}!"
            )
        if depth not in (0, 1, 2, 3):
            raise ValueError(
                f"DualGame::value_level(): depth should be in 0..3, got {depth}!"
            )
        alpha, gamma = params.alpha, params.gamma
        g2 = gamma**2
        x = state.x
        terms = GameModelMixinHelper.get_data_terms(state.Z, 1, alpha)
        w1, _, _ = GameModelMixinHelper.min_residual(terms, alpha)
        if depth == 0:
            return float(-g2 * w1)
        elif depth == 1:
            return float(x.dot(x) - g2 * w1)
        elif depth == 2:
            return VerifierMixinHelper.get_residual_level(x, state.Z, alpha, gamma)

        # level 3
        ax = alpha * abs(float(x[0]))
        gain = g2 / (g2 - 1.0)

        def realized(u: float) -> float:
            ub = np.array([u])
            bound = 2.0 * gain * (ax + abs(u)) + 1.0

            def next_level(v: float) -> float:
                d = np.array([-v, x[0], u])
                return VerifierMixinHelper.get_residual_level(
                    np.array([v]), state.Z + np.outer(d, d), alpha, gamma, budget=60
                )

            _, value = Optimizer.maximize_grid(next_level, -bound, bound)
            return float(x.dot(x)) + value

        def objective(p: np.ndarray) -> float:
            m, r = float(p[0]), abs(float(p[1]))
            return 0.5 * (realized(m + r) + realized(m - r))

        budget = min(int(opt_budget), 200)
        estimate = self.estimate_parameters(state, params)
        ce = -estimate.i * float(estimate.matrix[0, 0]) * float(x[0])
        starts = [np.array([0.0, ax]), np.array([ce, 0.0])]
        step = 0.25 * max(ax, 1e-3)
        best = min(
            (Optimizer.nelder_mead(objective, p, budget // 2, step) for p in starts),
            key=lambda res: res[1],
        )
        return float(best[1])

    # monotone value iteration
    def check_value_iteration_monotone(
        self,
        states: Sequence[GameState],
        params: Optional[ProblemParams] = None,
        depth: int = 2,
        opt_budget: int = 20000,
        tolerance: float = 1e-2,
    ) -> ValueIterationReport:
        """
        Check V^(0) <= V^(1) <= ... <= V^(K) <= V_* and the lower bound
        V^(K) >= max over scenarios of max{V^0 with weight t_(K-1), V^1}

        Parameters
        ----------
        states : list[GameState]
            Information states with n = 1
        params : ProblemParams | None, default None
            Problem parameters
        depth : int, default 2
            Depth K <= 3
        opt_budget : int, default 20000
            Maximal number of evaluations per level
        tolerance : float, default 1e-2
            Relative tolerance
        """
        params = self.get_feasible_params(params, "check_value_iteration_monotone")
        if depth < 0 or depth > 3:
            raise ValueError(
                f"DualGame::check_value_iteration_monotone(): "
                f"depth should be in 0..3, got {depth}!"
            )

        def slack(v: float) -> float:
            return tolerance * (1.0 + abs(v))

        report = ValueIterationReport(depth=depth, tolerance=tolerance)
        t_coeff = self.t_recursion(max(depth - 1, 0), params).last
        for k, state in enumerate(states):
            levels = [
                self.value_level(state, K, params, opt_budget) for K in range(depth + 1)
            ]
            v_star = self.v_star(state, params).value
            if depth == 0:
                lower = levels[0]
            else:
                lower = self.lower_bound_value(state, depth - 1, params)
            report.samples.append(
                ValueIterationSample(
                    index=k,
                    levels=levels,
                    v_star=v_star,
                    lower_bound=lower,
                    t_coeff=t_coeff,
                    monotone=all(
                        levels[K + 1] >= levels[K] - slack(levels[K])
                        for K in range(depth)
                    ),
                    upper_ok=levels[-1] <= v_star + slack(v_star),
                    lower_ok=levels[-1] >= lower - slack(lower),
                )
            )
        self.add_verification_log_entry(
            f"Value iteration check, depth {depth}",
            report.passed,
            number_of_items=len(report.samples),
        )
        return report

    # critical gain threshold
    def check_gamma_threshold(
        self,
        alphas: Sequence[float] = (0.25, 0.5, 1.0, 2.0, 4.0),
        params_factory: Optional[Callable[[float, float], ProblemParams]] = None,
        factors: Sequence[float] = (0.9, 0.99, 1.0, 1.01, 1.5),
        iterations: int = 10**6,
    ) -> GammaThresholdReport:
        """
        Run the t-recursion around the critical gain: bounded by t_star for gamma >= gamma_star,
        divergent for gamma < gamma_star

        Parameters
        ----------
        alphas : list[float], default (0.25, 0.5, 1, 2, 4)
            Scales of A
        params_factory : callable | None, default None
            Builds ProblemParams from (alpha, gamma)
        factors : list[float], default (0.9, 0.99, 1, 1.01, 1.5)
            Multiples of the critical gain
        iterations : int, default 10**6
            Maximal number of iterations
        """
        if params_factory is None:

            def params_factory(alpha: float, gamma: float) -> ProblemParams:
                return ProblemParams(n=1, alpha=alpha, gamma=gamma)

        report = GammaThresholdReport()
        for alpha in alphas:
            gamma_star = ProblemParams.get_critical_gain(alpha)
            for factor in factors:
                gamma = gamma_star if factor == 1.0 else factor * gamma_star
                params = params_factory(alpha, gamma)
                sup_t, diverged_at, count = GameModelMixinHelper.scan_t_recursion(
                    params.gamma, params.alpha, iterations
                )
                expected_bounded = params.feasible
                t_star = params.t_star if expected_bounded else None
                if expected_bounded:
                    passed = diverged_at is None and sup_t <= t_star * (1 + 1e-9) + 1e-12
                else:
                    passed = diverged_at is not None
                report.entries.append(
                    GammaThresholdEntry(
                        alpha=alpha,
                        factor=factor,
                        gamma=params.gamma,
                        gamma_star=gamma_star,
                        t_star=t_star,
                        sup_t=sup_t,
                        iterations=count,
                        diverged=diverged_at is not None,
                        diverged_at=diverged_at,
                        expected_bounded=expected_bounded,
                        passed=passed,
                    )
                )
        self.add_verification_log_entry(
            "Critical gain threshold check",
            report.passed,
            number_of_items=len(report.entries),
        )
        return report

    # sign convention of the exploration mean
    def cross_validate_policy(
        self,
        states: Sequence[GameState],
        params: Optional[ProblemParams] = None,
        opt_budget: int = 20000,
        tolerance: float = 1e-3,
        errors: Optional[str] = None,
    ) -> PolicyCrossValidationReport:
        """
        Evaluate the one-step objective at the exploration mean of every sign convention
        and at the numeric minimizer. A convention matches on a sample if its objective is
        within tolerance of the numeric one. Only informative samples, where the conventions
        differ noticeably, decide the convention. An informative sample no convention matches
        is reported as ambiguous. A convention that alone matches every informative sample
        is stored as the exploration convention of the instance.

        Parameters
        ----------
        states : list[GameState]
            Information states, n <= 3
        params : ProblemParams | None, default None
            Problem parameters
        opt_budget : int, default 20000
            Maximal number of evaluations of the numeric policy
        tolerance : float, default 1e-3
            Relative tolerance
        errors : str | None, default None
            Error policy for ambiguous outcomes. If None, the policy of the instance is used.
        """
        params = self.get_critical_params(params, "cross_validate_policy")
        alpha = params.alpha
        gain = params.gamma**2 / params.g
        conventions = list(ExplorationConvention)
        report = PolicyCrossValidationReport()
        matching = {c: True for c in conventions}
        for k, state in enumerate(states):
            if state.n > 3:
                raise ValueError(
                    f"DualGame::cross_validate_policy(): supported for n <= 3, "
                    f"got n = {state.n}!"
                )
            x = state.x
            x_sq = float(x.dot(x))
            if x_sq == 0:
                continue
            scenario, y_max = self.select_scenario(
                self.extract_functional(state, params), params
            )
            A, i_hat = scenario.matrix, scenario.i
            numeric = self.policy_numeric(state, params, opt_budget, seed=k)
            g_numeric = float(numeric.objective)

            def is_match(value: float) -> bool:
                return value <= g_numeric + tolerance * (1.0 + abs(g_numeric))

            if y_max >= 2.0 * alpha**2 * x_sq:
                m = -i_hat * A.dot(x)
                g_closed = self.policy_objective(state, m, float(m.dot(m)), params)
                report.ce_matches = report.ce_matches and is_match(g_closed)
                report.samples.append(
                    PolicySample(
                        index=k,
                        mode=ControlMode.CertaintyEquivalence.label,
                        informative=False,
                        y_max=y_max,
                        numeric_objective=g_numeric,
                        closed_form_objective=g_closed,
                    )
                )
                report.max_objective_gap = max(
                    report.max_objective_gap, g_closed - g_numeric
                )
                continue

            v_star = self.v_star(state, params).value
            informative = gain * y_max > 10.0 * tolerance * (1.0 + abs(v_star))
            checks = []
            for convention in conventions:
                m = ControllerMixinHelper.get_exploration_mean(
                    A, i_hat, x, y_max, alpha, convention
                )
                value = self.policy_objective(state, m, alpha**2 * x_sq, params)
                checks.append(
                    ConventionCheck(
                        convention=convention.label,
                        matches=is_match(value),
                        max_gap=value - g_numeric,
                    )
                )
            if informative:
                report.informative_samples += 1
                for convention, check in zip(conventions, checks):
                    matching[convention] = matching[convention] and check.matches
                if not any(check.matches for check in checks):
                    report.ambiguous_samples.append(k)
            report.samples.append(
                PolicySample(
                    index=k,
                    mode=ControlMode.Exploration.label,
                    informative=informative,
                    y_max=y_max,
                    numeric_objective=g_numeric,
                    closed_form_objective=g_numeric,
                    conventions=checks,
                )
            )

        if report.informative_samples > 0:
            report.matching_conventions = [c.label for c in conventions if matching[c]]
        if len(report.matching_conventions) == 1:
            report.sign_convention = report.matching_conventions[0]
            # resolved convention drives later decisions
            self.set_exploration_convention(report.sign_convention)
        # closed-form objective under the convention in use
        label = self.Convention.label
        for sample in report.samples:
            for check in sample.conventions:
                if check.convention == label:
                    sample.closed_form_objective = (
                        sample.numeric_objective + check.max_gap
                    )
                    if sample.informative:
                        report.max_objective_gap = max(
                            report.max_objective_gap, check.max_gap
                        )
        report.ambiguous = report.sign_convention is None or bool(
            report.ambiguous_samples
        )
        passed = not report.ambiguous and report.ce_matches
        self.add_verification_log_entry(
            "Policy cross-validation",
            passed,
            number_of_items=len(report.samples),
            value_after=report.sign_convention,
            message_details=f"informative samples: {report.informative_samples}",
        )
        if not passed:
            self.handle_error(
                f"DualGame::cross_validate_policy(): sign convention is not resolved, "
                f"matching conventions {report.matching_conventions}, "
                f"ambiguous samples {report.ambiguous_samples}, "
                f"certainty equivalence matches: {report.ce_matches}",
                errors,
            )
        return report

    # sweep of the attenuation level
    def sweep_gamma(
        self,
        alpha: Optional[float] = None,
        points: int = 21,
        span: float = 2.0,
        iterations: int = 10**6,
    ) -> GammaSweepReport:
        """
        t-recursion outcome on log-spaced gamma in [gamma_star/span, gamma_star*span]

        Parameters
        ----------
        alpha : float | None, default None
            Scale of A. If None, alpha of the instance is used.
        points : int, default 21
            Number of grid points
        span : float, default 2.0
            Ratio of the grid ends to the critical gain
        iterations : int, default 10**6
            Maximal number of iterations
        """
        if points < 1:
            raise ValueError(f"DualGame::sweep_gamma(): invalid number of points {points}!")
        if span <= 1:
            raise ValueError(f"DualGame::sweep_gamma(): span should exceed 1, got {span}!")
        alpha = self.Alpha if alpha is None else float(alpha)
        gamma_star = ProblemParams.get_critical_gain(alpha)
        exponents = np.linspace(-1.0, 1.0, points) if points > 1 else np.zeros(1)
        gammas = gamma_star * span**exponents
        if points % 2 == 1:
            gammas[points // 2] = gamma_star
        report = GammaSweepReport(
            alpha=alpha, gamma_star=gamma_star, iterations=iterations
        )
        for gamma in gammas:
            params = ProblemParams(n=1, alpha=alpha, gamma=float(gamma))
            sup_t, diverged_at, _ = GameModelMixinHelper.scan_t_recursion(
                params.gamma, alpha, iterations
            )
            report.entries.append(
                GammaSweepEntry(
                    gamma=params.gamma,
                    ratio=params.gamma / gamma_star,
                    feasible=params.feasible,
                    bounded=diverged_at is None,
                    diverged_at=diverged_at,
                    sup_t=sup_t,
                    t_star=params.t_star if params.feasible else None,
                )
            )
        self.add_verification_log_entry(
            f"Gamma sweep, alpha = {alpha:g}",
            report.consistent,
            number_of_items=len(report.entries),
        )
        return report

    # verification suite
    def verify(
        self,
        suite: Union[str, VerificationSuite] = VerificationSuite.All,
        samples: int = 20,
        seed: Optional[int] = None,
        opt_budget: int = 20000,
        depth: int = 2,
        params: Optional[ProblemParams] = None,
    ) -> Tuple[bool, Dict[str, BaseModel]]:
        """
        Run verification suite on sampled information states.
        Returns overall outcome and reports by suite name.

        Parameters
        ----------
        suite : str | VerificationSuite, default VerificationSuite.All
            Verification suite
        samples : int, default 20
            Number of sampled states
        seed : int | None, default None
            Seed of the sample. If None, the seed of the instance is used.
        opt_budget : int, default 20000
            Maximal number of evaluations per optimization
        depth : int, default 2
            Depth of the value iteration check
        params : ProblemParams | None, default None
            Problem parameters
        """
        suite = Validator.get_verification_suite_enum(suite)
        params = self.get_params(params)
        params = ProblemParams.critical(params.n, params.alpha)
        seed = self.Seed if seed is None else seed
        selected = (
            [s for s in VerificationSuite if s != VerificationSuite.All]
            if suite == VerificationSuite.All
            else [suite]
        )
        reports = {}
        outcomes = []
        for s in selected:
            if s == VerificationSuite.Gamma:
                report = self.check_gamma_threshold()
                passed = report.passed
            elif s == VerificationSuite.Theorem3:
                states = self.sample_states(samples, params.n, seed, params=params)
                checks = [
                    self.check_theorem3_state(state, params, opt_budget, seed=k)
                    for k, state in enumerate(states)
                ]
                worst = max((abs(c.relative_residual) for c in checks), default=0.0)
                passed = worst <= 1e-3
                self.add_verification_log_entry(
                    "Min-max identity check",
                    passed,
                    number_of_items=len(checks),
                    value_after=worst,
                )
                report = Theorem3SuiteReport(
                    reports=checks, max_relative_residual=worst
                )
            elif s == VerificationSuite.Bellman:
                states = self.sample_states(samples, params.n, seed, params=params)
                report = self.check_bellman_fixed_point(states, params, opt_budget)
                passed = report.max_relative_residual <= 1e-2
            elif s == VerificationSuite.ValueIteration:
                states = self.sample_states(samples, 1, seed, params=params)
                report = self.check_value_iteration_monotone(
                    states, ProblemParams.critical(1, params.alpha), depth, opt_budget
                )
                passed = report.passed
            else:
                states = self.sample_states(samples, params.n, seed, params=params)
                report = self.cross_validate_policy(
                    states, params, opt_budget, errors="ignore"
                )
                passed = not report.ambiguous and report.ce_matches
            reports[VerifierMixin.get_suite_name(s)] = report
            outcomes.append(passed)
        return all(outcomes), reports

    # suite name
    @staticmethod
    def get_suite_name(suite: VerificationSuite) -> str:
        return {
            VerificationSuite.All: "all",
            VerificationSuite.Theorem3: "thm3",
            VerificationSuite.Bellman: "bellman",
            VerificationSuite.ValueIteration: "vi",
            VerificationSuite.Gamma: "gamma",
            VerificationSuite.Policy: "policy",
        }[suite]
