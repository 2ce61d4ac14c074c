from typing import Any

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
)


class BaseConfigModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True, arbitrary_types_allowed=True)


# coerce array-like input to float vector
def as_vector(v: Any) -> np.ndarray:
    v = np.array(v, dtype=float)
    if v.ndim == 0:
        v = v.reshape(1)
    if v.ndim != 1:
        raise ValueError(f"vector expected, got array of shape {v.shape}")
    return v


# coerce array-like input to float square matrix
def as_square_matrix(v: Any) -> np.ndarray:
    v = np.array(v, dtype=float)
    if v.ndim == 0:
        v = v.reshape(1, 1)
    if v.ndim != 2 or v.shape[0] != v.shape[1]:
        raise ValueError(f"square matrix expected, got array of shape {v.shape}")
    return v
