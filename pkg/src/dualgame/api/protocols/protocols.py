from typing import (
    Any,
    Dict,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

try:
    from typing import Protocol
except BaseException:
    from typing_extensions import Protocol

import numpy as np

from dualgame.api.enums.modes import ValueBranch
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
from dualgame.api.models.adversary import AdversaryKind
from dualgame.api.models.config import ExperimentConfig
from dualgame.api.models.records import TrajectoryRecord
from dualgame.api.models.reports import (
    OptimalValue,
    TSequence,
)
from dualgame.api.utils.optimize import MomentPiece


# problem parameters protocol
class SupportsParams(Protocol):
    @property
    def Params(self) -> ProblemParams:
        ...

    @property
    def Errors(self) -> str:
        ...

    @property
    def Seed(self) -> int:
        ...

    @property
    def Convention(self) -> ExplorationConvention:
        ...

    @property
    def LogEntries(self) -> List[Dict[str, Any]]:
        ...

    def get_params(self, params: Optional[ProblemParams] = None) -> ProblemParams:
        ...

    def get_rng(
        self,
        seed: Union[int, np.random.Generator, None] = None,
        run: Optional[int] = None,
    ) -> np.random.Generator:
        ...

    def set_exploration_convention(
        self, convention: Union[str, ExplorationConvention]
    ) -> ExplorationConvention:
        ...

    def handle_error(self, message: str, errors: Optional[str] = None) -> None:
        ...

    def add_log_entry(self, message: str, **kwargs) -> Dict[str, Any]:
        ...


# game model protocol
class SupportsGameModel(SupportsParams, Protocol):
    def get_feasible_params(
        self, params: Optional[ProblemParams] = None, caller: str = "v_star"
    ) -> ProblemParams:
        ...

    def weighted_norm_sq(
        self, Z: Union[np.ndarray, GameState], scenario: Scenario
    ) -> float:
        ...

    def v1(
        self,
        state: GameState,
        scenario: Scenario,
        params: Optional[ProblemParams] = None,
    ) -> float:
        ...

    def v0(
        self,
        state: GameState,
        scenario: Scenario,
        t_coeff: Optional[float] = None,
        params: Optional[ProblemParams] = None,
    ) -> float:
        ...

    def v_star(
        self, state: GameState, params: Optional[ProblemParams] = None
    ) -> OptimalValue:
        ...

    def t_recursion(self, N: int, params: Optional[ProblemParams] = None) -> TSequence:
        ...

    def t_recursion_scan(
        self, N: int, params: Optional[ProblemParams] = None
    ) -> Tuple[float, Optional[int], int]:
        ...

    def adversary_response_branch1(
        self, pred: np.ndarray, params: Optional[ProblemParams] = None
    ) -> Tuple[np.ndarray, float]:
        ...

    def adversary_response_branch0(
        self,
        ax: np.ndarray,
        t_coeff: float,
        params: Optional[ProblemParams] = None,
    ) -> Tuple[np.ndarray, float]:
        ...

    def lower_bound_value(
        self, state: GameState, N: int, params: Optional[ProblemParams] = None
    ) -> float:
        ...

    def bellman_pieces(
        self,
        state: GameState,
        pieces: Sequence[Tuple[ValueBranch, float]],
        params: Optional[ProblemParams] = None,
    ) -> List[MomentPiece]:
        ...


# controller protocol
class SupportsController(SupportsGameModel, Protocol):
    def extract_functional(
        self, state: GameState, params: Optional[ProblemParams] = None
    ) -> InfoFunctional:
        ...

    def select_scenario(
        self, f: InfoFunctional, params: Optional[ProblemParams] = None
    ) -> Tuple[Scenario, float]:
        ...

    def decide(
        self, state: GameState, params: Optional[ProblemParams] = None
    ) -> ControlDecision:
        ...

    def sample_input(
        self, d: ControlDecision, rng: Optional[np.random.Generator] = None
    ) -> np.ndarray:
        ...

    def policy_objective(
        self,
        state: GameState,
        m: np.ndarray,
        s: float,
        params: Optional[ProblemParams] = None,
    ) -> float:
        ...

    def policy_numeric(
        self,
        state: GameState,
        params: Optional[ProblemParams] = None,
        opt_budget: int = 20000,
        seed: int = 0,
    ) -> ControlDecision:
        ...

    def estimate_parameters(
        self, state: GameState, params: Optional[ProblemParams] = None
    ) -> Scenario:
        ...

    def certainty_equivalence_decision(
        self, state: GameState, params: Optional[ProblemParams] = None
    ) -> ControlDecision:
        ...

    def policy_decision(
        self,
        state: GameState,
        policy: PolicyType,
        params: Optional[ProblemParams] = None,
    ) -> ControlDecision:
        ...


# adversary protocol
class SupportsAdversary(SupportsController, Protocol):
    def draw_scenario(
        self,
        params: Optional[ProblemParams] = None,
        rng: Optional[np.random.Generator] = None,
    ) -> Scenario:
        ...

    def next_disturbance(
        self,
        kind: AdversaryKind,
        state: GameState,
        u_realized: np.ndarray,
        scenario: Scenario,
        params: Optional[ProblemParams] = None,
        rng: Optional[np.random.Generator] = None,
    ) -> np.ndarray:
        ...


# experiments protocol
class SupportsExperiments(SupportsAdversary, Protocol):
    def run_episode(
        self,
        config: ExperimentConfig,
        rng: Optional[np.random.Generator] = None,
        run: int = 0,
    ) -> TrajectoryRecord:
        ...
