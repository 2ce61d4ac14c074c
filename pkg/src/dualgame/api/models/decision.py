from typing import (
    Any,
    Optional,
)

import numpy as np
from pydantic import (
    Field,
    field_validator,
    model_validator,
)

from dualgame.api.enums.modes import ControlMode
from dualgame.api.models.base_model import (
    BaseConfigModel,
    as_vector,
    as_square_matrix,
)
from dualgame.api.models.scenario import Scenario
from dualgame.api.utils.linalg import LinAlg
from dualgame.api.utils.validators import Validator


class InfoFunctional(BaseConfigModel):
    Y1: np.ndarray
    Y2: np.ndarray
    Y3: np.ndarray
    c_const: float = 0.0
    g: float = Field(..., gt=0)

    @field_validator("Y1", "Y2", "Y3", mode="before")
    @classmethod
    def matrix_validator(cls, v: Any) -> np.ndarray:
        return as_square_matrix(v)

    @model_validator(mode="after")
    def shape_validator(self) -> "InfoFunctional":
        if not (self.Y1.shape == self.Y2.shape == self.Y3.shape):
            raise ValueError("coefficient matrices should have equal shapes")
        return self

    @property
    def n(self) -> int:
        return self.Y1.shape[0]

    # y(A,i) = <Y1,A> + i*tr(Y2) + i*<Y3,A> + c
    def value(self, scenario: Scenario) -> float:
        A = scenario.matrix
        i = scenario.i
        return (
            LinAlg.inner(self.Y1, A)
            + i * float(np.trace(self.Y2))
            + i * LinAlg.inner(self.Y3, A)
            + self.c_const
        )

    # zero functional
    @classmethod
    def zero(cls, n: int, g: float) -> "InfoFunctional":
        Y = np.zeros((n, n))
        return cls(Y1=Y, Y2=Y, Y3=Y, g=g)


class ControlDecision(BaseConfigModel):
    mode: ControlMode
    mean: np.ndarray
    second_moment: float = Field(..., ge=0)
    witness: Scenario
    y_max: float = 0.0
    objective: Optional[float] = None
    converged: bool = True

    @field_validator("mode", mode="before")
    @classmethod
    def mode_validator(cls, v: Any) -> ControlMode:
        return Validator.get_control_mode_enum(v)

    @field_validator("mean", mode="before")
    @classmethod
    def mean_validator(cls, v: Any) -> np.ndarray:
        return as_vector(v)

    @model_validator(mode="after")
    def moment_validator(self) -> "ControlDecision":
        m_sq = float(self.mean.dot(self.mean))
        if self.second_moment < m_sq - 1e-9 * (1.0 + m_sq):
            raise ValueError(
                f"invalid moments: second moment {self.second_moment:.6g} "
                f"is below squared mean norm {m_sq:.6g}"
            )
        return self

    @property
    def variance(self) -> float:
        return max(self.second_moment - float(self.mean.dot(self.mean)), 0.0)

    @property
    def is_deterministic(self) -> bool:
        return self.mode == ControlMode.CertaintyEquivalence

    def __str__(self):
        return (
            f"ControlDecision({self.mode.label}, |m|={float(np.linalg.norm(self.mean)):.6g}, "
            f"s={self.second_moment:.6g})"
        )
