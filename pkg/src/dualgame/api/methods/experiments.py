from typing import (
    List,
    Optional,
)

import math
import numpy as np

from dualgame.api.models.params import ProblemParams
from dualgame.api.models.scenario import Scenario
from dualgame.api.models.state import GameState
from dualgame.api.models.config import ExperimentConfig
from dualgame.api.models.decision import ControlDecision
from dualgame.api.models.records import (
    StepRecord,
    SyncResult,
    TrajectoryRecord,
)
from dualgame.api.models.reports import GainAuditReport
from dualgame.api.utils.helper import ApiHelper
from dualgame.models.trajectory_collection import TrajectoryCollection
from dualgame.api.protocols.protocols import SupportsAdversary


# Experiment helper functions
class ExperimentMixinHelper:
    # divergence limit of the state norm
    @staticmethod
    def get_divergence_limit() -> float:
        return 1e150

    # first step below a threshold
    @staticmethod
    def get_first_step_below(norms: List[float], threshold: float) -> Optional[int]:
        for t, value in enumerate(norms):
            if value < threshold:
                return t
        return None

    # average logarithmic decrease rate
    @staticmethod
    def get_log_rate(first: float, last: float, steps: int) -> Optional[float]:
        if steps <= 0:
            return None
        return (math.log(max(first, 1e-300)) - math.log(max(last, 1e-300))) / steps


# Simulation of episodes, synchronization example and gain audit
class ExperimentMixin(SupportsAdversary):
    """
    Simulation of episodes, synchronization example and gain audit
    """

    # controller parameters
    def get_controller_params(self, params: ProblemParams) -> ProblemParams:
        """
        Controller runs at the critical gain when gamma is infeasible

        Parameters
        ----------
        params : ProblemParams
            Problem parameters
        """
        if params.feasible:
            return params
        return ProblemParams.critical(params.n, params.alpha)

    # single simulation step
    def simulate_step(
        self,
        t: int,
        state: GameState,
        decision: ControlDecision,
        u: np.ndarray,
        w: np.ndarray,
        scenario: Scenario,
        gamma: float,
        running_cost: float,
        params: ProblemParams,
    ) -> StepRecord:
        """
        Step record of x_next = A*x + i*u + w

        Parameters
        ----------
        t : int
            Time step
        state : GameState
            Information state before the step
        decision : ControlDecision
            Control decision
        u : np.ndarray
            Realized input
        w : np.ndarray
            Disturbance
        scenario : Scenario
            True scenario
        gamma : float
            Attenuation level of the cost
        running_cost : float
            Running cost before the step
        params : ProblemParams
            Controller parameters
        """
        x_next = scenario.predict(state.x, u) + w
        stage_cost = ApiHelper.norm_sq(state.x) - gamma**2 * ApiHelper.norm_sq(w)
        estimate = self.estimate_parameters(state, params)
        return StepRecord(
            t=t,
            x=state.x,
            u=u,
            w=w,
            x_next=x_next,
            mode=decision.mode,
            y_max=decision.y_max,
            estimate_error=float(np.linalg.norm(estimate.matrix - scenario.matrix)),
            stage_cost=stage_cost,
            running_cost=running_cost + stage_cost,
        )

    # episode
    def run_episode(
        self,
        config: ExperimentConfig,
        rng: Optional[np.random.Generator] = None,
        run: int = 0,
        log: bool = True,
    ) -> TrajectoryRecord:
        """
        Simulate an episode: hidden scenario, then decision, input realization, disturbance,
        state and data update at every step.
        Diverging episodes are truncated and marked as diverged.

        Parameters
        ----------
        config : ExperimentConfig
            Experiment configuration
        rng : np.random.Generator | None, default None
            Random stream. If None, the stream is derived from (config.seed, run).
        run : int, default 0
            Run index
        log : bool, default True
            Whether to add episode log entries
        """
        add_log_entry = self.add_log_entry if log else (lambda *args, **kwargs: None)
        params = config.params
        controller_params = self.get_controller_params(params)
        if controller_params is not params:
            add_log_entry(
                f"Infeasible gamma = {params.gamma:g}, "
                f"controller runs at gamma_star = {params.gamma_star:g}",
                severity="Warning",
                run=run,
            )
        rng = rng if rng is not None else self.get_rng(config.seed, run)
        scenario = self.draw_scenario(params, rng)
        state = GameState.initial(config.get_initial_state())
        add_log_entry(
            f"Episode started: {params}, adversary {config.adversary}",
            run=run,
            step=0,
        )

        limit = ExperimentMixinHelper.get_divergence_limit()
        steps = []
        running_cost = 0.0
        diverged = False
        mode = None
        for t in range(config.horizon):
            decision = self.policy_decision(state, config.policy, controller_params)
            u = self.sample_input(decision, rng)
            w = self.next_disturbance(
                config.adversary, state, u, scenario, controller_params, rng
            )
            if config.noise_std > 0:
                w = w + config.noise_std * rng.standard_normal(state.n)
            step = self.simulate_step(
                t,
                state,
                decision,
                u,
                w,
                scenario,
                params.gamma,
                running_cost,
                controller_params,
            )
            if not (np.all(np.isfinite(step.x_next)) and math.isfinite(step.running_cost)):
                diverged = True
            else:
                steps.append(step)
                running_cost = step.running_cost
                if decision.mode != mode and mode is not None:
                    add_log_entry(
                        f"Mode switched to {decision.mode.label}",
                        run=run,
                        step=t,
                        value_before=mode.label,
                        value_after=decision.mode.label,
                    )
                mode = decision.mode
                diverged = bool(np.linalg.norm(step.x_next) > limit)
                if not diverged:
                    state = state.update(step.triple())
            if diverged:
                add_log_entry(
                    "Episode diverged",
                    severity="Warning",
                    run=run,
                    step=t,
                )
                break

        add_log_entry(
            "Episode finished",
            run=run,
            step=len(steps),
            value_after=running_cost,
            number_of_items=len(steps),
        )
        return TrajectoryRecord(
            run=run,
            seed=config.seed,
            scenario=scenario,
            steps=steps,
            diverged=diverged,
            final_state=state,
        )

    # all runs of an experiment
    def run_episodes(
        self, config: ExperimentConfig, log: bool = True
    ) -> TrajectoryCollection:
        """
        Simulate config.runs episodes, run k uses the stream derived from (config.seed, k)

        Parameters
        ----------
        config : ExperimentConfig
            Experiment configuration
        log : bool, default True
            Whether to add episode log entries
        """
        return TrajectoryCollection(
            [
                self.run_episode(config, run=run, log=log)
                for run in range(config.runs)
            ],
            seed=config.seed,
        )

    # synchronization example
    def run_sync_example(
        self,
        n: int,
        noise_std: float = 0.01,
        horizon: Optional[int] = None,
        seed: Optional[int] = None,
        alpha: Optional[float] = None,
    ) -> SyncResult:
        """
        Two chains y_next = A*y and z_next = A*z + i*u + w driven by the closed-form law
        applied to x = z - y. Synchronization is the first step with |x| below
        the noise floor 10*noise_std*sqrt(n).

        Parameters
        ----------
        n : int
            State dimension, 1 <= n <= 200
        noise_std : float, default 0.01
            Standard deviation of the disturbances
        horizon : int | None, default None
            Number of steps, 4*n if None
        seed : int | None, default None
            Seed. If None, the seed of the instance is used.
        alpha : float | None, default None
            Scale of A. If None, alpha of the instance is used.
        """
        if n < 1 or n > 200:
            raise ValueError(
                f"DualGame::run_sync_example(): dimension should be in 1..200, got {n}!"
            )
        if noise_std < 0:
            raise ValueError(
                f"DualGame::run_sync_example(): negative noise level {noise_std}!"
            )
        alpha = self.Alpha if alpha is None else float(alpha)
        seed = self.Seed if seed is None else int(seed)
        horizon = 4 * n if horizon is None else int(horizon)
        params = ProblemParams.critical(n, alpha)
        rng = self.get_rng(seed)
        scenario = self.draw_scenario(params, rng)
        y = rng.standard_normal(n)
        z = rng.standard_normal(n)
        state = GameState.initial(z - y)
        y_first, z_first = [float(y[0])], [float(z[0])]

        steps = []
        running_cost = 0.0
        for t in range(horizon):
            decision = self.decide(state, params)
            u = self.sample_input(decision, rng)
            w = noise_std * rng.standard_normal(n)
            y = scenario.matrix.dot(y)
            z = scenario.predict(z, u) + w
            y_first.append(float(y[0]))
            z_first.append(float(z[0]))
            step = self.simulate_step(
                t, state, decision, u, w, scenario, params.gamma, running_cost, params
            )
            steps.append(step)
            running_cost = step.running_cost
            state = state.update(step.triple())

        record = TrajectoryRecord(
            run=0, seed=seed, scenario=scenario, steps=steps, final_state=state
        )
        noise_floor = 10.0 * noise_std * math.sqrt(n)
        norms = [float(np.linalg.norm(step.x)) for step in steps]
        norms.append(float(np.linalg.norm(state.x)))
        sync_step = ExperimentMixinHelper.get_first_step_below(norms, noise_floor)
        errors = record.estimate_errors()
        rate_before, rate_after = None, None
        if sync_step is not None and errors.size > 0:
            k = min(sync_step, errors.size - 1)
            rate_before = ExperimentMixinHelper.get_log_rate(errors[0], errors[k], k)
            rate_after = ExperimentMixinHelper.get_log_rate(
                errors[k], errors[-1], errors.size - 1 - k
            )
        self.add_log_entry(
            f"Synchronization example, n = {n}",
            step=sync_step,
            value_before=noise_floor,
            value_after=norms[-1],
            number_of_items=horizon,
        )
        return SyncResult(
            record=record,
            y_first=y_first,
            z_first=z_first,
            noise_floor=noise_floor,
            sync_step=sync_step,
            rate_before=rate_before,
            rate_after=rate_after,
        )

    # gain bound audit
    def run_gain_audit(
        self, config: ExperimentConfig, errors: Optional[str] = None
    ) -> GainAuditReport:
        """
        Monte-Carlo mean of the peak running cost over config.runs episodes against
        the bound (gamma_star^2 + 1)/2*|x0|^2. The audit passes if the mean does not exceed
        the bound by more than three standard errors.

        Parameters
        ----------
        config : ExperimentConfig
            Experiment configuration with gamma = gamma_star
        errors : str | None, default None
            Error policy for a failed audit. If None, the policy of the instance is used.
        """
        params = config.params
        if not params.is_critical:
            raise ValueError(
                f"DualGame::run_gain_audit(): audit requires gamma = gamma_star = "
                f"{params.gamma_star:g}, got {params.gamma:g}!"
            )
        records = self.run_episodes(config, log=False)
        mean_peak = records.mean_peak
        standard_error = records.standard_error
        bound = (params.gamma_star**2 + 1.0) / 2.0 * ApiHelper.norm_sq(
            config.get_initial_state()
        )
        margin = bound + 3.0 * standard_error - mean_peak
        passed = bool(margin >= 0)
        worst = records.get_worst_record()
        report = GainAuditReport(
            adversary=str(config.adversary),
            runs=len(records),
            mean_peak=mean_peak,
            standard_error=standard_error,
            max_peak=float(np.max(records.peaks)),
            bound=bound,
            margin=margin,
            passed=passed,
            offending_seed=None if passed else config.seed,
            offending_run=None if passed else worst.run,
            diverged_runs=records.diverged_runs,
        )
        self.add_log_entry(
            f"Gain audit, adversary {config.adversary}",
            category="Verification",
            severity="Information" if passed else "Warning",
            value_before=bound,
            value_after=mean_peak,
            number_of_items=len(records),
        )
        if not passed:
            self.handle_error(
                f"DualGame::run_gain_audit(): mean peak cost {mean_peak:.6g} exceeds "
                f"bound {bound:.6g} + 3*{standard_error:.3g}, "
                f"seed {config.seed}, run {worst.run}",
                errors,
            )
        return report
