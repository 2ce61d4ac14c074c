from typing import (
    Any,
    List,
    Optional,
)

import numpy as np
import pandas as pd
from pydantic import (
    Field,
    field_validator,
)

from dualgame.api.enums.modes import ControlMode
from dualgame.api.models.base_model import (
    BaseConfigModel,
    as_vector,
)
from dualgame.api.models.scenario import Scenario
from dualgame.api.models.state import (
    DataTriple,
    GameState,
)
from dualgame.api.utils.datastructs import (
    strconstants,
    get_constants,
)


# Trajectory CSV columns
@strconstants(supress_warnings=True)
class TrajectoryColumn:
    Step = "t"
    NormX = "norm_x"
    NormU = "norm_u"
    NormW = "norm_w"
    Mode = "mode"
    YMax = "y_max"
    EstimateError = "est_error"
    StageCost = "stage_cost"
    RunningCost = "running_cost"


class StepRecord(BaseConfigModel):
    t: int = Field(..., ge=0)
    x: np.ndarray
    u: np.ndarray
    w: np.ndarray
    x_next: np.ndarray
    mode: ControlMode
    y_max: float
    estimate_error: float
    stage_cost: float
    running_cost: float

    @field_validator("x", "u", "w", "x_next", mode="before")
    @classmethod
    def vector_validator(cls, v: Any) -> np.ndarray:
        return as_vector(v)

    def triple(self) -> DataTriple:
        return DataTriple(x_next=self.x_next, x=self.x, u=self.u)


class TrajectoryRecord(BaseConfigModel):
    run: int = 0
    seed: int = 0
    scenario: Scenario
    steps: List[StepRecord] = Field(default_factory=list)
    diverged: bool = False
    final_state: Optional[GameState] = None

    def __len__(self) -> int:
        return len(self.steps)

    # data matrix rebuilt from the recorded (x, u) sequence
    def replay_state(self) -> GameState:
        x0 = self.steps[0].x if self.steps else np.zeros(self.scenario.n)
        state = GameState.from_triples(x0, [step.triple() for step in self.steps])
        x = self.steps[-1].x_next if self.steps else x0
        return state.with_x(x)

    def disturbance_energy(self) -> float:
        return float(sum(step.w.dot(step.w) for step in self.steps))

    def peak_running_cost(self) -> float:
        if not self.steps:
            return 0.0
        return float(max(step.running_cost for step in self.steps))

    def norms(self) -> np.ndarray:
        return np.array([float(np.linalg.norm(step.x)) for step in self.steps])

    def estimate_errors(self) -> np.ndarray:
        return np.array([step.estimate_error for step in self.steps])

    def to_dataframe(self) -> pd.DataFrame:
        columns = get_constants(TrajectoryColumn)
        rows = [
            [
                step.t,
                float(np.linalg.norm(step.x)),
                float(np.linalg.norm(step.u)),
                float(np.linalg.norm(step.w)),
                step.mode.label,
                step.y_max,
                step.estimate_error,
                step.stage_cost,
                step.running_cost,
            ]
            for step in self.steps
        ]
        return pd.DataFrame(rows, columns=columns)

    def __str__(self):
        status = "diverged" if self.diverged else "completed"
        return f"TrajectoryRecord(run={self.run}, steps={len(self.steps)}, {status})"


class SyncResult(BaseConfigModel):
    record: TrajectoryRecord
    y_first: List[float] = Field(default_factory=list)
    z_first: List[float] = Field(default_factory=list)
    noise_floor: float
    sync_step: Optional[int] = None
    rate_before: Optional[float] = None
    rate_after: Optional[float] = None

    @property
    def synchronized(self) -> bool:
        return self.sync_step is not None

    @property
    def slowdown(self) -> Optional[bool]:
        if self.rate_before is None or self.rate_after is None:
            return None
        return self.rate_after <= self.rate_before
