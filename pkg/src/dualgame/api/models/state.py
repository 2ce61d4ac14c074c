from typing import (
    Any,
    Tuple,
)

import numpy as np
from pydantic import (
    field_validator,
    model_validator,
)

from dualgame.api.models.base_model import (
    BaseConfigModel,
    as_vector,
    as_square_matrix,
)


class DataTriple(BaseConfigModel):
    x_next: np.ndarray
    x: np.ndarray
    u: np.ndarray

    @field_validator("x_next", "x", "u", mode="before")
    @classmethod
    def vector_validator(cls, v: Any) -> np.ndarray:
        return as_vector(v)

    @model_validator(mode="after")
    def dimension_validator(self) -> "DataTriple":
        if not (self.x_next.size == self.x.size == self.u.size):
            raise ValueError(
                f"triple dimensions differ: "
                f"{self.x_next.size}, {self.x.size}, {self.u.size}"
            )
        return self

    @property
    def n(self) -> int:
        return self.x.size

    # stacked vector (-x_next, x, u)
    def stacked(self) -> np.ndarray:
        return np.concatenate([-self.x_next, self.x, self.u])

    # rank-1 data increment
    def outer(self) -> np.ndarray:
        d = self.stacked()
        return np.outer(d, d)


class GameState(BaseConfigModel):
    x: np.ndarray
    Z: np.ndarray

    @field_validator("x", mode="before")
    @classmethod
    def x_validator(cls, v: Any) -> np.ndarray:
        return as_vector(v)

    @field_validator("Z", mode="before")
    @classmethod
    def z_validator(cls, v: Any) -> np.ndarray:
        return as_square_matrix(v)

    @model_validator(mode="after")
    def data_validator(self) -> "GameState":
        n = self.x.size
        if self.Z.shape != (3 * n, 3 * n):
            raise ValueError(
                f"data matrix should be {3 * n}x{3 * n} for state dimension {n}, "
                f"got {self.Z.shape}"
            )
        scale = 1.0 + float(np.max(np.abs(self.Z), initial=0.0))
        if np.max(np.abs(self.Z - self.Z.T), initial=0.0) > 1e-9 * scale:
            raise ValueError("data matrix is not symmetric")
        return self

    # state without data
    @classmethod
    def initial(cls, x: Any) -> "GameState":
        x = as_vector(x)
        return cls(x=x, Z=np.zeros((3 * x.size, 3 * x.size)))

    # state from recorded triples
    @classmethod
    def from_triples(cls, x: Any, triples: Any) -> "GameState":
        state = cls.initial(x)
        Z = state.Z.copy()
        for triple in triples:
            Z += triple.outer()
        return cls(x=state.x, Z=Z)

    @property
    def n(self) -> int:
        return self.x.size

    # n x n block (j, k) of the data matrix, ordered (-x_next, x, u)
    def block(self, j: int, k: int) -> np.ndarray:
        n = self.n
        return self.Z[(j - 1) * n : j * n, (k - 1) * n : k * n]

    @property
    def Z11(self) -> np.ndarray:
        return self.block(1, 1)

    @property
    def Z12(self) -> np.ndarray:
        return self.block(1, 2)

    @property
    def Z13(self) -> np.ndarray:
        return self.block(1, 3)

    @property
    def Z22(self) -> np.ndarray:
        return self.block(2, 2)

    @property
    def Z23(self) -> np.ndarray:
        return self.block(2, 3)

    @property
    def Z33(self) -> np.ndarray:
        return self.block(3, 3)

    def blocks(self) -> Tuple[np.ndarray, ...]:
        return self.Z11, self.Z12, self.Z13, self.Z22, self.Z23, self.Z33

    def is_psd(self, tol: float = 1e-9) -> bool:
        scale = 1.0 + float(np.max(np.abs(self.Z), initial=0.0))
        return bool(np.min(np.linalg.eigvalsh(self.Z)) >= -tol * scale)

    # state after a recorded triple
    def update(self, triple: DataTriple) -> "GameState":
        if triple.n != self.n:
            raise ValueError(
                f"DualGame::update(): triple dimension {triple.n} "
                f"does not match state dimension {self.n}!"
            )
        return GameState(x=triple.x_next.copy(), Z=self.Z + triple.outer())

    # state with replaced current vector
    def with_x(self, x: Any) -> "GameState":
        return GameState(x=x, Z=self.Z)

    # scale state and data consistently
    def scaled(self, c: float) -> "GameState":
        return GameState(x=c * self.x, Z=c**2 * self.Z)

    def __str__(self):
        return f"GameState(n={self.n}, |x|={float(np.linalg.norm(self.x)):.6g})"
