from typing import (
    Any,
    Optional,
    Union,
)

import numpy as np

from dualgame.api.enums.adversaries import AdversaryType
from dualgame.api.models.params import ProblemParams
from dualgame.api.models.scenario import Scenario
from dualgame.api.models.state import GameState
from dualgame.api.models.adversary import AdversaryKind
from dualgame.api.utils.linalg import LinAlg
from dualgame.api.utils.optimize import Optimizer
from dualgame.api.methods.game_model import GameModelMixinHelper
from dualgame.api.protocols.protocols import SupportsGameModel


# Adversary helper functions on plain arrays
class AdversaryMixinHelper:
    # value of the next information state
    @staticmethod
    def get_next_value(
        v: np.ndarray,
        x: np.ndarray,
        u: np.ndarray,
        Z: np.ndarray,
        alpha: float,
        gamma_star: float,
    ) -> float:
        """
        Optimal value at (v, Z + d*d^T) with d = (-v, x, u)
        """
        d = np.concatenate([-v, x, u])
        return GameModelMixinHelper.get_optimal_value(
            v, Z + np.outer(d, d), alpha, gamma_star
        )[0]


# Disturbance and scenario strategies of the maximizing player
class AdversaryMixin(SupportsGameModel):
    """
    Disturbance and scenario strategies of the maximizing player
    """

    # hidden scenario
    def draw_scenario(
        self,
        params: Optional[ProblemParams] = None,
        rng: Optional[np.random.Generator] = None,
    ) -> Scenario:
        """
        Random scenario A = alpha*Q with Haar distributed Q and uniform sign

        Parameters
        ----------
        params : ProblemParams | None, default None
            Problem parameters
        rng : np.random.Generator | None, default None
            Random stream
        """
        params = self.get_params(params)
        rng = self.get_rng(rng)
        A = params.alpha * LinAlg.haar_orthogonal(params.n, rng)
        i = int(rng.choice([-1, 1]))
        return Scenario.from_matrix(A, i, params.alpha)

    # next disturbance
    def next_disturbance(
        self,
        kind: Union[AdversaryKind, str, Any],
        state: GameState,
        u_realized: np.ndarray,
        scenario: Scenario,
        params: Optional[ProblemParams] = None,
        rng: Optional[np.random.Generator] = None,
    ) -> np.ndarray:
        """
        Disturbance w of the adversary after observing the realized input

        Parameters
        ----------
        kind : AdversaryKind | str
            Adversary strategy
        state : GameState
            Information state
        u_realized : np.ndarray
            Realized input
        scenario : Scenario
            True scenario
        params : ProblemParams | None, default None
            Problem parameters
        rng : np.random.Generator | None, default None
            Random stream
        """
        if not isinstance(kind, AdversaryKind):
            kind = AdversaryKind.model_validate(kind)
        n = state.n
        if kind.kind == AdversaryType.Zero:
            return np.zeros(n)
        elif kind.kind == AdversaryType.Gaussian:
            return self.get_rng(rng).normal(0.0, kind.std, n)
        elif kind.kind == AdversaryType.Constant:
            if kind.vector.size != n:
                raise ValueError(
                    f"DualGame::next_disturbance(): constant disturbance has "
                    f"{kind.vector.size} entries, expected {n}!"
                )
            return kind.vector.copy()
        return self.worst_case_disturbance(state, u_realized, scenario, params)

    # value-seeking disturbance
    def worst_case_disturbance(
        self,
        state: GameState,
        u_realized: np.ndarray,
        scenario: Scenario,
        params: Optional[ProblemParams] = None,
        budget: int = 200,
    ) -> np.ndarray:
        """
        Disturbance maximizing the optimal value of the next information state.
        Closed-form responses of both value branches and the null disturbance are scored,
        the best one is refined by a local search.

        Parameters
        ----------
        state : GameState
            Information state
        u_realized : np.ndarray
            Realized input
        scenario : Scenario
            True scenario
        params : ProblemParams | None, default None
            Problem parameters
        budget : int, default 200
            Maximal number of evaluations of the local search
        """
        params = self.get_feasible_params(params, "next_disturbance")
        x = state.x
        u = np.asarray(u_realized, dtype=float).reshape(state.n)
        pred = scenario.predict(x, u)
        ax = scenario.matrix.dot(x)

        def score(v: np.ndarray) -> float:
            return AdversaryMixinHelper.get_next_value(
                np.asarray(v, dtype=float).reshape(state.n),
                x,
                u,
                state.Z,
                params.alpha,
                params.gamma_star,
            )

        candidates = [pred]
        responses = {
            "branch1": lambda: self.adversary_response_branch1(pred, params)[0],
            "branch0": lambda: self.adversary_response_branch0(ax, params.t_star, params)[0],
        }
        for name, response in responses.items():
            try:
                candidates.append(response())
            except ValueError as err:
                self.add_log_entry(
                    f"Adversary response of {name} dropped",
                    category="Adversary",
                    severity="Warning",
                    message_details=str(err),
                )
                self.handle_error(
                    f"DualGame::worst_case_disturbance(): response of {name} "
                    f"is not available: {err}"
                )
        scores = [score(v) for v in candidates]
        k = int(np.argmax(scores))
        best_v, best_score = candidates[k], scores[k]

        radius = max(float(np.linalg.norm(best_v)), float(np.linalg.norm(pred)), 1e-3)
        if state.n == 1:
            # bounded scalar search around the best candidate
            center = float(best_v[0])
            v, value = Optimizer.minimize_interval(
                lambda t: -score(np.array([t])),
                center - radius,
                center + radius,
                budget=budget,
            )
            v, value = np.array([v]), -value
        else:
            v, value, _ = Optimizer.maximize(score, best_v, budget, 0.1 * radius)
        if value > best_score:
            best_v = v
        return best_v - pred
