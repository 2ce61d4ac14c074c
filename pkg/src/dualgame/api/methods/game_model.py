from typing import (
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import math
import numpy as np

from dualgame.api.enums.modes import ValueBranch
from dualgame.api.models.params import ProblemParams
from dualgame.api.models.scenario import Scenario
from dualgame.api.models.state import GameState
from dualgame.api.models.reports import (
    OptimalValue,
    TSequence,
)
from dualgame.api.utils.linalg import LinAlg
from dualgame.api.utils.optimize import MomentPiece
from dualgame.api.protocols.protocols import SupportsParams


# Scenario-independent parts of the weighted data norm
class DataTerms(NamedTuple):
    # trace(Z11) + alpha^2*trace(Z22) + trace(Z33)
    c0: float
    Z12: np.ndarray
    tr13: float
    # transposed Z23 block, so that trace(A*Z23) = <A, Z23T>
    Z23T: np.ndarray


# Game model helper functions on plain arrays
class GameModelMixinHelper:
    # blocks of the data matrix
    @staticmethod
    def get_blocks(Z: np.ndarray, n: int) -> Tuple[np.ndarray, ...]:
        """
        Get blocks Z11, Z12, Z13, Z22, Z23, Z33 of the data matrix ordered (-x_next, x, u)

        Parameters
        ----------
        Z : np.ndarray
            3n x 3n data matrix
        n : int
            State dimension
        """
        if Z.shape != (3 * n, 3 * n):
            raise ValueError(
                f"DualGame::get_blocks(): dimension mismatch, "
                f"expected {3 * n}x{3 * n} data matrix, got {Z.shape}!"
            )
        a, b, c = slice(0, n), slice(n, 2 * n), slice(2 * n, 3 * n)
        return Z[a, a], Z[a, b], Z[a, c], Z[b, b], Z[b, c], Z[c, c]

    # scenario-independent data terms
    @staticmethod
    def get_data_terms(Z: np.ndarray, n: int, alpha: float) -> DataTerms:
        """
        Get data terms of the weighted norm for scaled-orthogonal A

        Parameters
        ----------
        Z : np.ndarray
            3n x 3n data matrix
        n : int
            State dimension
        alpha : float
            Scale of A
        """
        Z11, Z12, Z13, Z22, Z23, Z33 = GameModelMixinHelper.get_blocks(Z, n)
        c0 = float(np.trace(Z11) + alpha**2 * np.trace(Z22) + np.trace(Z33))
        return DataTerms(c0, Z12, float(np.trace(Z13)), Z23.T)

    # weighted norm trace([I A iI]*Z*[I A iI]^T)
    @staticmethod
    def weighted_norm_sq(Z: np.ndarray, A: np.ndarray, i: int) -> float:
        """
        Residual sum of squares of the data under scenario (A, i)

        Parameters
        ----------
        Z : np.ndarray
            3n x 3n data matrix
        A : np.ndarray
            n x n matrix
        i : int
            Input sign
        """
        n = A.shape[0]
        Z11, Z12, Z13, Z22, Z23, Z33 = GameModelMixinHelper.get_blocks(Z, n)
        return float(
            np.trace(Z11)
            + np.trace(A.dot(Z22).dot(A.T))
            + np.trace(Z33)
            # (1,2) and (2,1)
            + 2.0 * LinAlg.inner(A, Z12)
            # (1,3) and (3,1)
            + 2.0 * i * np.trace(Z13)
            # (2,3) and (3,2)
            + 2.0 * i * LinAlg.inner(A, Z23.T)
        )

    # minimal weighted norm over scenarios
    @staticmethod
    def min_residual(terms: DataTerms, alpha: float) -> Tuple[float, np.ndarray, int]:
        """
        Minimize the weighted norm over scenarios (A, i).
        Returns minimal value, minimizing A and sign (ties go to +1).
        """
        best = None
        for i in (1, -1):
            value, A = LinAlg.procrustes_max(-(terms.Z12 + i * terms.Z23T), alpha)
            w = terms.c0 + 2.0 * i * terms.tr13 - 2.0 * value
            if best is None or w < best[0]:
                best = (w, A, i)
        return best

    # minimal sign-averaged weighted norm
    @staticmethod
    def min_averaged(terms: DataTerms, alpha: float) -> Tuple[float, np.ndarray]:
        """
        Minimize the weighted norm averaged over both signs.
        Returns minimal value and minimizing A.
        """
        value, A = LinAlg.procrustes_max(-terms.Z12, alpha)
        return terms.c0 - 2.0 * value, A

    # optimal value
    @staticmethod
    def get_optimal_value(
        x: np.ndarray, Z: np.ndarray, alpha: float, gamma_star: float
    ) -> Tuple[float, np.ndarray, int, ValueBranch]:
        """
        Game value on plain arrays. Returns value, maximizing A, sign and branch.
        Ties between branches go to the averaged branch.
        """
        gs2 = gamma_star**2
        x_sq = float(x.dot(x))
        terms = GameModelMixinHelper.get_data_terms(Z, x.size, alpha)
        w1, A1, i1 = GameModelMixinHelper.min_residual(terms, alpha)
        w0, A0 = GameModelMixinHelper.min_averaged(terms, alpha)
        value1 = x_sq - gs2 * w1
        value0 = (gs2 + 1.0) / 2.0 * x_sq - gs2 * w0
        if value0 >= value1:
            return float(value0), A0, 1, ValueBranch.Averaged
        return float(value1), A1, i1, ValueBranch.Residual

    # adversary response gain
    @staticmethod
    def get_response_gain(tau: float, gamma: float) -> float:
        """
        max over v of tau*|v|^2 - gamma^2*|p - v|^2 equals gain*|p|^2 with
        gain = tau*gamma^2/(gamma^2 - tau)
        """
        g2 = gamma**2
        if tau >= g2:
            raise ValueError(
                f"DualGame::get_response_gain(): unbounded maximization, "
                f"weight {tau:g} is not below gamma^2 = {g2:g}!"
            )
        return tau * g2 / (g2 - tau)

    # closed-form inner maxima of the Bellman operator
    @staticmethod
    def get_bellman_pieces(
        x: np.ndarray,
        Z: np.ndarray,
        alpha: float,
        gamma: float,
        pieces: Sequence[Tuple[ValueBranch, float]],
    ) -> List[MomentPiece]:
        """
        Pieces (intercept(m), slope) of |x|^2 + max over (v, A, i) of a value family
        at the next information state, for an input with mean m and second moment s.
        The adversary observes the realized input.

        Parameters
        ----------
        x : np.ndarray
            Current state
        Z : np.ndarray
            Data matrix
        alpha : float
            Scale of A
        gamma : float
            Attenuation level
        pieces : list[tuple[ValueBranch, float]]
            Value family: Residual pieces tau*|v|^2 - gamma^2*W(A,i),
            Averaged pieces tau*|v|^2 - gamma^2*(W(A,+1) + W(A,-1))/2
        """
        n = x.size
        terms = GameModelMixinHelper.get_data_terms(Z, n, alpha)
        x_sq = float(x.dot(x))
        g2 = gamma**2
        result = []
        for branch, tau in pieces:
            gain = GameModelMixinHelper.get_response_gain(tau, gamma)
            if branch == ValueBranch.Residual:
                for i in (1, -1):
                    base = (
                        x_sq
                        - g2 * (terms.c0 + 2.0 * i * terms.tr13)
                        + gain * alpha**2 * x_sq
                    )
                    P = -2.0 * g2 * (terms.Z12 + i * terms.Z23T)
                    coef = 2.0 * i * gain

                    def intercept(m, base=base, P=P, coef=coef):
                        return base + alpha * LinAlg.nuclear_norm(P + coef * np.outer(m, x))

                    result.append((intercept, gain))
            else:
                const = (
                    x_sq
                    - g2 * terms.c0
                    + 2.0 * g2 * alpha * LinAlg.nuclear_norm(terms.Z12)
                    + gain * alpha**2 * x_sq
                )
                result.append((lambda m, const=const: const, -g2))
        return result

    # divergence of the t-recursion
    @staticmethod
    def is_t_diverged(t: float, g2: float, ga2: float) -> bool:
        """
        t_k >= gamma^2 ends the recursion. With alpha = 0 the constant sequence
        t_k = 1 = gamma^2 is a fixed point, not a divergence.
        """
        return t > g2 or (t >= g2 and ga2 > 0)

    # next element of the t-recursion
    @staticmethod
    def get_next_t(t: float, g2: float, ga2: float) -> float:
        if ga2 == 0:
            return 1.0
        return 1.0 + ga2 / (g2 - t)

    # streaming t-recursion
    @staticmethod
    def scan_t_recursion(
        gamma: float, alpha: float, N: int
    ) -> Tuple[float, Optional[int], int]:
        """
        Run t_{k+1} = 1 + gamma^2*alpha^2/(gamma^2 - t_k), t_0 = 0 for up to N steps.
        Stops at divergence (t_k >= gamma^2) or at an exact floating point fixed point.
        Returns supremum, divergence index (None if bounded) and number of iterations.
        """
        g2 = gamma * gamma
        ga2 = g2 * alpha * alpha
        t = 0.0
        sup = 0.0
        for k in range(N):
            if GameModelMixinHelper.is_t_diverged(t, g2, ga2):
                return sup, k, k
            t_next = GameModelMixinHelper.get_next_t(t, g2, ga2)
            if t_next > sup:
                sup = t_next
            if t_next == t:
                return sup, None, k + 1
            t = t_next
        if GameModelMixinHelper.is_t_diverged(t, g2, ga2):
            return sup, N, N
        return sup, None, N


# Game model: value functions, t-recursion and adversary responses
class GameModelMixin(SupportsParams):
    """
    Game model: value functions, t-recursion and adversary responses
    """

    # feasible parameters
    def get_feasible_params(
        self, params: Optional[ProblemParams] = None, caller: str = "v_star"
    ) -> ProblemParams:
        """
        Get parameters, raise if infeasible

        Parameters
        ----------
        params : ProblemParams | None, default None
            Problem parameters. If None, the parameters of the instance are used.
        caller : str, default 'v_star'
            Name of calling operation used in the error message
        """
        params = self.get_params(params)
        if not params.feasible:
            raise ValueError(
                f"DualGame::{caller}(): infeasible parameters, "
                f"gamma = {params.gamma:g} < gamma_star = {params.gamma_star:g}!"
            )
        return params

    # weighted data norm
    def weighted_norm_sq(
        self, Z: Union[np.ndarray, GameState], scenario: Scenario
    ) -> float:
        """
        Residual sum of squares of the data under scenario,
        trace([I A iI]*Z*[I A iI]^T)

        Parameters
        ----------
        Z : np.ndarray | GameState
            Data matrix or information state
        scenario : Scenario
            Scenario (A, i)
        """
        if isinstance(Z, GameState):
            Z = Z.Z
        return GameModelMixinHelper.weighted_norm_sq(
            np.asarray(Z, dtype=float), scenario.matrix, scenario.i
        )

    # residual value function
    def v1(
        self,
        state: GameState,
        scenario: Scenario,
        params: Optional[ProblemParams] = None,
    ) -> float:
        """
        |x|^2 - gamma_star^2*||.||_Z^2 for scenario

        Parameters
        ----------
        state : GameState
            Information state
        scenario : Scenario
            Scenario (A, i)
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_feasible_params(params, "v1")
        return float(
            state.x.dot(state.x)
            - params.gamma_star**2 * self.weighted_norm_sq(state.Z, scenario)
        )

    # sign-averaged value function
    def v0(
        self,
        state: GameState,
        scenario: Scenario,
        t_coeff: Optional[float] = None,
        params: Optional[ProblemParams] = None,
    ) -> float:
        """
        t*|x|^2 - (gamma_star^2/2)*sum over both signs of ||.||_Z^2

        Parameters
        ----------
        state : GameState
            Information state
        scenario : Scenario
            Scenario, only A is used
        t_coeff : float | None, default None
            Weight t. If None, (gamma_star^2 + 1)/2 is used.
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_params(params)
        if t_coeff is None:
            t_coeff = (params.gamma_star**2 + 1.0) / 2.0
        if t_coeff < 0:
            raise ValueError(f"DualGame::v0(): negative weight t = {t_coeff:g}!")
        total = sum(
            self.weighted_norm_sq(state.Z, scenario.with_sign(scenario.i * s))
            for s in (1, -1)
        )
        return float(t_coeff * state.x.dot(state.x) - params.gamma_star**2 / 2.0 * total)

    # optimal value
    def v_star(
        self, state: GameState, params: Optional[ProblemParams] = None
    ) -> OptimalValue:
        """
        Game value max over scenarios and branches of V0, V1 in closed form

        Parameters
        ----------
        state : GameState
            Information state
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_feasible_params(params, "v_star")
        value, A, i, branch = GameModelMixinHelper.get_optimal_value(
            state.x, state.Z, params.alpha, params.gamma_star
        )
        return OptimalValue(
            value=value,
            scenario=Scenario.from_matrix(A, i, params.alpha),
            branch=branch,
        )

    # t-recursion
    def t_recursion(
        self, N: int, params: Optional[ProblemParams] = None
    ) -> TSequence:
        """
        Sequence t_0 = 0, t_{k+1} = 1 + gamma^2*alpha^2/(gamma^2 - t_k), k < N.
        Iteration halts when t_k >= gamma^2 and the sequence is marked as diverged.

        Parameters
        ----------
        N : int
            Number of iterations
        params : ProblemParams | None, default None
            Problem parameters
        """
        if N < 0:
            raise ValueError(f"DualGame::t_recursion(): invalid iteration count {N}!")
        params = self.get_params(params)
        g2 = params.gamma**2
        ga2 = g2 * params.alpha**2
        values = [0.0]
        for k in range(N):
            t = values[-1]
            if GameModelMixinHelper.is_t_diverged(t, g2, ga2):
                return TSequence(values=values, diverged=True, diverged_at=k)
            values.append(GameModelMixinHelper.get_next_t(t, g2, ga2))
        if GameModelMixinHelper.is_t_diverged(values[-1], g2, ga2):
            return TSequence(values=values, diverged=True, diverged_at=N)
        return TSequence(values=values)

    # streaming t-recursion
    def t_recursion_scan(
        self, N: int, params: Optional[ProblemParams] = None
    ) -> Tuple[float, Optional[int], int]:
        """
        Supremum, divergence index and iteration count of the t-recursion
        without storing the sequence

        Parameters
        ----------
        N : int
            Maximal number of iterations
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_params(params)
        return GameModelMixinHelper.scan_t_recursion(params.gamma, params.alpha, N)

    # adversary response, residual branch
    def adversary_response_branch1(
        self, pred: np.ndarray, params: Optional[ProblemParams] = None
    ) -> Tuple[np.ndarray, float]:
        """
        Maximize |v|^2 - gamma^2*|pred - v|^2 over v

        Parameters
        ----------
        pred : np.ndarray
            Predicted next state A*x + i*u
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_params(params)
        g2 = params.gamma**2
        if g2 <= 1.0:
            raise ValueError(
                f"DualGame::adversary_response_branch1(): "
                f"unbounded maximization for gamma = {params.gamma:g} <= 1!"
            )
        pred = np.asarray(pred, dtype=float)
        return pred * g2 / (g2 - 1.0), float(pred.dot(pred) / (1.0 - 1.0 / g2))

    # adversary response, averaged branch
    def adversary_response_branch0(
        self,
        ax: np.ndarray,
        t_coeff: float,
        params: Optional[ProblemParams] = None,
    ) -> Tuple[np.ndarray, float]:
        """
        Maximize t*|v|^2 - gamma^2*|ax - v|^2 over v

        Parameters
        ----------
        ax : np.ndarray
            A*x
        t_coeff : float
            Weight t, 0 < t < gamma^2
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_params(params)
        g2 = params.gamma**2
        if t_coeff >= g2:
            raise ValueError(
                f"DualGame::adversary_response_branch0(): unbounded maximization, "
                f"t = {t_coeff:g} >= gamma^2 = {g2:g}!"
            )
        if t_coeff <= 0:
            raise ValueError(
                f"DualGame::adversary_response_branch0(): "
                f"weight should be positive, got t = {t_coeff:g}!"
            )
        ax = np.asarray(ax, dtype=float)
        return ax * g2 / (g2 - t_coeff), float(ax.dot(ax) / (1.0 / t_coeff - 1.0 / g2))

    # value iteration lower bound
    def lower_bound_value(
        self, state: GameState, N: int, params: Optional[ProblemParams] = None
    ) -> float:
        """
        max over scenarios of max{t_N*|x|^2 - gamma^2*(averaged norm), |x|^2 - gamma^2*(norm)}
        with t_N from the t-recursion. Infinite if the recursion diverges within N steps.

        Parameters
        ----------
        state : GameState
            Information state
        N : int
            Index of the t-recursion
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_params(params)
        sequence = self.t_recursion(N, params)
        if sequence.diverged:
            return math.inf
        g2 = params.gamma**2
        x_sq = float(state.x.dot(state.x))
        terms = GameModelMixinHelper.get_data_terms(state.Z, state.n, params.alpha)
        w1, _, _ = GameModelMixinHelper.min_residual(terms, params.alpha)
        w0, _ = GameModelMixinHelper.min_averaged(terms, params.alpha)
        return float(max(x_sq - g2 * w1, sequence.values[N] * x_sq - g2 * w0))

    # Bellman operator pieces
    def bellman_pieces(
        self,
        state: GameState,
        pieces: Sequence[Tuple[ValueBranch, float]],
        params: Optional[ProblemParams] = None,
    ) -> List[MomentPiece]:
        """
        Closed-form inner maxima of the Bellman operator applied to a value family

        Parameters
        ----------
        state : GameState
            Information state
        pieces : list[tuple[ValueBranch, float]]
            Value family as (branch, weight on |v|^2)
        params : ProblemParams | None, default None
            Problem parameters
        """
        params = self.get_params(params)
        return GameModelMixinHelper.get_bellman_pieces(
            state.x, state.Z, params.alpha, params.gamma, pieces
        )
