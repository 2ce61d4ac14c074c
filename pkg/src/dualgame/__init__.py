__version__ = "0.1.0"

# api
from dualgame.dualgame import DualGame

# data types
from dualgame.api.enums.modes import ControlMode, ValueBranch
from dualgame.api.enums.adversaries import AdversaryType
from dualgame.api.enums.policies import PolicyType, ExplorationConvention
from dualgame.api.enums.suites import VerificationSuite
from dualgame.models.trajectory_collection import TrajectoryCollection
from dualgame.api.models.params import ProblemParams
from dualgame.api.models.scenario import Scenario, ScaledOrthogonal
from dualgame.api.models.state import DataTriple, GameState
from dualgame.api.models.decision import ControlDecision, InfoFunctional
from dualgame.api.models.adversary import AdversaryKind
from dualgame.api.models.config import ExperimentConfig
from dualgame.api.models.records import StepRecord, TrajectoryRecord, SyncResult
from dualgame.api.utils.linalg import LinAlg

# Use __all__ to let type checkers know what is part of the public API.
__all__ = [
    "DualGame",
    "ControlMode",
    "ValueBranch",
    "AdversaryType",
    "PolicyType",
    "ExplorationConvention",
    "VerificationSuite",
    "TrajectoryCollection",
    "ProblemParams",
    "Scenario",
    "ScaledOrthogonal",
    "DataTriple",
    "GameState",
    "ControlDecision",
    "InfoFunctional",
    "AdversaryKind",
    "ExperimentConfig",
    "StepRecord",
    "TrajectoryRecord",
    "SyncResult",
    "LinAlg",
]
