from typing import Any

import numpy as np
from pydantic import (
    Field,
    field_validator,
    model_validator,
)

from dualgame.api.models.base_model import (
    BaseConfigModel,
    as_square_matrix,
)
from dualgame.api.utils.linalg import LinAlg


class ScaledOrthogonal(BaseConfigModel):
    matrix: np.ndarray
    scale: float = Field(..., ge=0)

    @field_validator("matrix", mode="before")
    @classmethod
    def matrix_validator(cls, v: Any) -> np.ndarray:
        return as_square_matrix(v)

    @model_validator(mode="after")
    def orthogonality_validator(self) -> "ScaledOrthogonal":
        if not LinAlg.is_scaled_orthogonal(self.matrix, self.scale, tol=1e-9):
            raise ValueError(
                f"matrix is not scaled-orthogonal with scale {self.scale:g}"
            )
        return self

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def __str__(self):
        return f"ScaledOrthogonal(n={self.n}, scale={self.scale:g})"


class Scenario(BaseConfigModel):
    A: ScaledOrthogonal
    i: int

    @field_validator("i")
    @classmethod
    def sign_validator(cls, v: int) -> int:
        if v not in (-1, 1):
            raise ValueError(f"input sign should be -1 or +1, got {v}")
        return v

    # scenario from plain matrix
    @classmethod
    def from_matrix(cls, A: Any, i: int, alpha: float) -> "Scenario":
        return cls(A=ScaledOrthogonal(matrix=A, scale=alpha), i=i)

    @property
    def matrix(self) -> np.ndarray:
        return self.A.matrix

    @property
    def B(self) -> np.ndarray:
        return self.i * np.eye(self.A.n)

    @property
    def n(self) -> int:
        return self.A.n

    def with_sign(self, i: int) -> "Scenario":
        return Scenario(A=self.A, i=i)

    # next state without disturbance
    def predict(self, x: np.ndarray, u: np.ndarray) -> np.ndarray:
        return self.matrix.dot(x) + self.i * np.asarray(u, dtype=float)

    def __str__(self):
        return f"Scenario({self.A}, i={self.i:+d})"
