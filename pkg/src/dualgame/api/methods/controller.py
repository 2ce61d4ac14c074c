from typing import (
    List,
    NamedTuple,
    Optional,
    Tuple,
    Union,
)

import math
import warnings
import numpy as np

from dualgame.api.enums.modes import (
    ControlMode,
    ValueBranch,
)
from dualgame.api.enums.policies import (
    PolicyType,
    ExplorationConvention,
)
from dualgame.api.models.params import ProblemParams
from dualgame.api.models.scenario import Scenario
from dualgame.api.models.state import GameState
from dualgame.api.models.decision import (
    ControlDecision,
    InfoFunctional,
)
from dualgame.api.utils.linalg import LinAlg
from dualgame.api.utils.helper import ApiHelper
from dualgame.api.utils.optimize import (
    MomentPiece,
    Optimizer,
)
from dualgame.api.utils.validators import Validator
from dualgame.api.methods.game_model import GameModelMixinHelper
from dualgame.api.protocols.protocols import SupportsGameModel


# Coefficients of the information functional
class FunctionalTerms(NamedTuple):
    Y1: np.ndarray
    Y2: np.ndarray
    Y3: np.ndarray
    c_const: float
    g: float


# Controller helper functions on plain arrays
class ControllerMixinHelper:
    # functional coefficients from the data matrix
    @staticmethod
    def get_functional_terms(
        Z: np.ndarray, n: int, alpha: float, gamma: float
    ) -> FunctionalTerms:
        """
        Coefficients Y1 = -2g*Z12, Y2 = -2g*Z13, Y3 = -2g*Z23^T and offset
        c = -alpha*||Y1||_* with g = gamma^2 - 1

        Parameters
        ----------
        Z : np.ndarray
            3n x 3n data matrix
        n : int
            State dimension
        alpha : float
            Scale of A
        gamma : float
            Attenuation level
        """
        g = gamma**2 - 1.0
        _, Z12, Z13, _, Z23, _ = GameModelMixinHelper.get_blocks(Z, n)
        Y1 = -2.0 * g * Z12
        return FunctionalTerms(
            Y1=Y1,
            Y2=-2.0 * g * Z13,
            Y3=-2.0 * g * Z23.T,
            c_const=-alpha * LinAlg.nuclear_norm(Y1),
            g=g,
        )

    # maximize functional over scenarios
    @staticmethod
    def select(
        Y1: np.ndarray,
        Y2: np.ndarray,
        Y3: np.ndarray,
        c_const: float,
        alpha: float,
    ) -> Tuple[np.ndarray, int, float]:
        """
        Maximize y(A,i) = <Y1,A> + i*tr(Y2) + i*<Y3,A> + c over scaled-orthogonal A
        and signs i. Returns maximizer A, sign i and maximal value (ties go to +1).
        """
        best = None
        for i in (1, -1):
            value, A = LinAlg.procrustes_max(Y1 + i * Y3, alpha)
            value += i * float(np.trace(Y2))
            if best is None or value > best[2]:
                best = (A, i, value)
        A, i, value = best
        return A, i, value + c_const

    # exploration mean
    @staticmethod
    def get_exploration_mean(
        A: np.ndarray,
        i: int,
        x: np.ndarray,
        y_max: float,
        alpha: float,
        convention: ExplorationConvention,
    ) -> np.ndarray:
        """
        Mean c*kappa*A*x of the exploring input with kappa = y_max/(2*alpha^2*|x|^2)
        and direction factor c of the sign convention
        """
        threshold = 2.0 * alpha**2 * float(x.dot(x))
        if threshold <= 0:
            return np.zeros(x.size)
        kappa = max(y_max, 0.0) / threshold
        return convention.get_factor(i) * kappa * A.dot(x)

    # scenario attaining a piece of the policy objective
    @staticmethod
    def get_piece_witness(
        x: np.ndarray,
        Z: np.ndarray,
        alpha: float,
        gamma: float,
        m: np.ndarray,
        k: int,
    ) -> Tuple[np.ndarray, int]:
        """
        Scenario (A, i) attaining piece k of the value family
        [(Residual, +1), (Residual, -1), (Averaged, .)] at input mean m
        """
        terms = GameModelMixinHelper.get_data_terms(Z, x.size, alpha)
        if k >= 2:
            _, A = GameModelMixinHelper.min_averaged(terms, alpha)
            return A, 1
        i = 1 if k == 0 else -1
        gain = GameModelMixinHelper.get_response_gain(1.0, gamma)
        M = -2.0 * gamma**2 * (terms.Z12 + i * terms.Z23T) + 2.0 * i * gain * np.outer(
            m, x
        )
        _, A = LinAlg.procrustes_max(M, alpha)
        return A, i


# Dual controller: closed-form law, numeric reference and input sampling
class ControllerMixin(SupportsGameModel):
    """
    Dual controller: closed-form law, numeric reference and input sampling
    """

    # value family of the optimal value function
    def get_value_family(
        self, params: Optional[ProblemParams] = None
    ) -> List[Tuple[ValueBranch, float]]:
        """
        Pieces (branch, weight on |x|^2) of the optimal value function

        Parameters
        ----------
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_feasible_params(params, "get_value_family")
        return [(ValueBranch.Residual, 1.0), (ValueBranch.Averaged, params.t_star)]

    # information functional
    def extract_functional(
        self, state: GameState, params: Optional[ProblemParams] = None
    ) -> InfoFunctional:
        """
        Information functional y(A,i) of the closed-form law at the critical gain

        Parameters
        ----------
        state : GameState
            Information state
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_feasible_params(params, "extract_functional")
        if not params.is_critical:
            raise ValueError(
                f"DualGame::extract_functional(): closed-form law requires "
                f"gamma = gamma_star = {params.gamma_star:g}, got {params.gamma:g}!"
            )
        if params.alpha <= 0:
            raise ValueError(
                "DualGame::extract_functional(): closed-form law requires alpha > 0!"
            )
        gs2 = params.gamma_star**2
        terms = ControllerMixinHelper.get_functional_terms(
            state.Z, state.n, params.alpha, params.gamma_star
        )
        # (1 - gamma^-2)/(t^-1 - gamma^-2) = g + 2 at the critical gain
        ratio = (1.0 - 1.0 / gs2) / (1.0 / params.t_star - 1.0 / gs2)
        if abs(ratio - (terms.g + 2.0)) > 1e-9 * (terms.g + 2.0):
            raise RuntimeError(
                f"DualGame::extract_functional(): scaling identity failed, "
                f"{ratio:.12g} != {terms.g + 2.0:.12g}!"
            )
        return InfoFunctional(
            Y1=terms.Y1, Y2=terms.Y2, Y3=terms.Y3, c_const=terms.c_const, g=terms.g
        )

    # maximizing scenario
    def select_scenario(
        self, f: InfoFunctional, params: Optional[ProblemParams] = None
    ) -> Tuple[Scenario, float]:
        """
        Maximize the information functional over scenarios

        Parameters
        ----------
        f : InfoFunctional
            Information functional
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_params(params)
        A, i, y_max = ControllerMixinHelper.select(
            f.Y1, f.Y2, f.Y3, f.c_const, params.alpha
        )
        return Scenario.from_matrix(A, i, params.alpha), y_max

    # closed-form decision
    def decide(
        self, state: GameState, params: Optional[ProblemParams] = None
    ) -> ControlDecision:
        """
        Closed-form optimal input moments.
        Certainty equivalence u = -i_hat*A_hat*x if y_max >= 2*alpha^2*|x|^2,
        otherwise exploration with second moment alpha^2*|x|^2.
        Above the critical gain the numeric policy is used.

        Parameters
        ----------
        state : GameState
            Information state
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_feasible_params(params, "decide")
        if not params.is_critical:
            return self.policy_numeric(state, params)
        scenario, y_max = self.select_scenario(
            self.extract_functional(state, params), params
        )
        x = state.x
        x_sq = float(x.dot(x))
        if x_sq == 0:
            return ControlDecision(
                mode=ControlMode.CertaintyEquivalence,
                mean=np.zeros(state.n),
                second_moment=0.0,
                witness=scenario,
                y_max=y_max,
            )
        A, i = scenario.matrix, scenario.i
        threshold = 2.0 * params.alpha**2 * x_sq
        # ties go to certainty equivalence
        if y_max >= threshold:
            m = -i * A.dot(x)
            return ControlDecision(
                mode=ControlMode.CertaintyEquivalence,
                mean=m,
                second_moment=float(m.dot(m)),
                witness=scenario,
                y_max=y_max,
            )
        m = ControllerMixinHelper.get_exploration_mean(
            A, i, x, y_max, params.alpha, self.Convention
        )
        return ControlDecision(
            mode=ControlMode.Exploration,
            mean=m,
            second_moment=params.alpha**2 * x_sq,
            witness=scenario,
            y_max=y_max,
        )

    # realize input
    def sample_input(
        self, d: ControlDecision, rng: Optional[np.random.Generator] = None
    ) -> np.ndarray:
        """
        Realize input with moments of the decision, m + sqrt(s - |m|^2)*xi
        with xi uniform on the unit sphere

        Parameters
        ----------
        d : ControlDecision
            Control decision
        rng : np.random.Generator | None, default None
            Random stream
        """
        m = np.array(d.mean, dtype=float)
        if d.mode == ControlMode.CertaintyEquivalence:
            return m
        m_sq = float(m.dot(m))
        r_sq = d.second_moment - m_sq
        if r_sq < -1e-9 * (1.0 + d.second_moment):
            raise RuntimeError(
                f"DualGame::sample_input(): invalid moments, "
                f"second moment {d.second_moment:.6g} < |m|^2 = {m_sq:.6g}!"
            )
        if r_sq <= 0:
            return m
        rng = self.get_rng(rng)
        return m + math.sqrt(r_sq) * LinAlg.unit_sphere_sample(m.size, rng)

    # policy objective pieces
    def get_policy_pieces(
        self, state: GameState, params: Optional[ProblemParams] = None
    ) -> List[MomentPiece]:
        """
        Pieces of the one-step objective |x|^2 + max over (v, A, i) of the optimal
        value function at the next information state

        Parameters
        ----------
        state : GameState
            Information state
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_feasible_params(params, "policy_objective")
        return self.bellman_pieces(state, self.get_value_family(params), params)

    # policy objective
    def policy_objective(
        self,
        state: GameState,
        m: np.ndarray,
        s: float,
        params: Optional[ProblemParams] = None,
    ) -> float:
        """
        One-step objective G(m, s) for an input with mean m and second moment s

        Parameters
        ----------
        state : GameState
            Information state
        m : np.ndarray
            Input mean
        s : float
            Input second moment
        params : ProblemParams | None, default None
            Problem parameters
        """
        m = np.asarray(m, dtype=float).reshape(state.n)
        m_sq = float(m.dot(m))
        if s < m_sq - 1e-9 * (1.0 + m_sq):
            raise ValueError(
                f"DualGame::policy_objective(): invalid moments, "
                f"second moment {s:.6g} < |m|^2 = {m_sq:.6g}!"
            )
        pieces = self.get_policy_pieces(state, params)
        return float(max(intercept(m) + slope * s for intercept, slope in pieces))

    # numeric reference policy
    def policy_numeric(
        self,
        state: GameState,
        params: Optional[ProblemParams] = None,
        opt_budget: int = 20000,
        seed: int = 0,
    ) -> ControlDecision:
        """
        Minimize the one-step objective over input moments (m, s), s >= |m|^2,
        by multi-start simplex search from m = 0, m = +-i_hat*A_hat*x

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
        params = self.get_feasible_params(params, "policy_numeric")
        if state.n > 8:
            raise ValueError(
                f"DualGame::policy_numeric(): reference policy supports n <= 8, "
                f"got n = {state.n}!"
            )
        x = state.x
        terms = ControllerMixinHelper.get_functional_terms(
            state.Z, state.n, params.alpha, params.gamma
        )
        A_hat, i_hat, y_max = ControllerMixinHelper.select(
            terms.Y1, terms.Y2, terms.Y3, terms.c_const, params.alpha
        )
        pieces = self.get_policy_pieces(state, params)
        if float(x.dot(x)) == 0:
            m = np.zeros(state.n)
            objective = float(max(intercept(m) for intercept, _ in pieces))
            return ControlDecision(
                mode=ControlMode.CertaintyEquivalence,
                mean=m,
                second_moment=0.0,
                witness=Scenario.from_matrix(A_hat, i_hat, params.alpha),
                y_max=y_max,
                objective=objective,
            )
        ce = -i_hat * A_hat.dot(x)
        solution = Optimizer.minimize_moments(
            pieces,
            state.n,
            starts=[np.zeros(state.n), ce, -ce],
            budget=opt_budget,
            rng=ApiHelper.get_rng(seed),
            scale=params.alpha * float(np.linalg.norm(x)),
        )
        if not solution.converged:
            warnings.warn(
                f"DualGame::policy_numeric(): search did not converge within "
                f"{opt_budget} evaluations, best objective {solution.value:.6g}",
                RuntimeWarning,
                stacklevel=2,
            )
        m = solution.mean
        m_sq = float(m.dot(m))
        s = solution.second_moment
        # active piece
        values = [intercept(m) + slope * s for intercept, slope in pieces]
        A, i = ControllerMixinHelper.get_piece_witness(
            x, state.Z, params.alpha, params.gamma, m, int(np.argmax(values))
        )
        if s <= m_sq + 1e-6 * (1.0 + s):
            mode, s = ControlMode.CertaintyEquivalence, m_sq
        else:
            mode = ControlMode.Exploration
        return ControlDecision(
            mode=mode,
            mean=m,
            second_moment=s,
            witness=Scenario.from_matrix(A, i, params.alpha),
            y_max=y_max,
            objective=solution.value,
            converged=solution.converged,
        )

    # parameter estimate
    def estimate_parameters(
        self, state: GameState, params: Optional[ProblemParams] = None
    ) -> Scenario:
        """
        Scenario with the least residual sum of squares of the data

        Parameters
        ----------
        state : GameState
            Information state
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_params(params)
        terms = GameModelMixinHelper.get_data_terms(state.Z, state.n, params.alpha)
        _, A, i = GameModelMixinHelper.min_residual(terms, params.alpha)
        return Scenario.from_matrix(A, i, params.alpha)

    # certainty equivalence baseline
    def certainty_equivalence_decision(
        self, state: GameState, params: Optional[ProblemParams] = None
    ) -> ControlDecision:
        """
        Baseline decision u = -i_hat*A_hat*x with the least-residual estimate, no exploration

        Parameters
        ----------
        state : GameState
            Information state
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_params(params)
        scenario = self.estimate_parameters(state, params)
        terms = ControllerMixinHelper.get_functional_terms(
            state.Z, state.n, params.alpha, params.gamma
        )
        _, _, y_max = ControllerMixinHelper.select(
            terms.Y1, terms.Y2, terms.Y3, terms.c_const, params.alpha
        )
        m = -scenario.i * scenario.matrix.dot(state.x)
        return ControlDecision(
            mode=ControlMode.CertaintyEquivalence,
            mean=m,
            second_moment=float(m.dot(m)),
            witness=scenario,
            y_max=y_max,
        )

    # decision of a policy
    def policy_decision(
        self,
        state: GameState,
        policy: Union[str, PolicyType] = PolicyType.ClosedForm,
        params: Optional[ProblemParams] = None,
    ) -> ControlDecision:
        """
        Decision of the selected policy

        Parameters
        ----------
        state : GameState
            Information state
        policy : str | PolicyType, default PolicyType.ClosedForm
            Control policy
        params : ProblemParams | None, default None
            Problem parameters
        """
        policy = Validator.get_policy_type_enum(policy)
        if policy == PolicyType.Numeric:
            return self.policy_numeric(state, params)
        elif policy == PolicyType.CertaintyEquivalence:
            return self.certainty_equivalence_decision(state, params)
        return self.decide(state, params)
