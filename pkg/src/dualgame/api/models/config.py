from typing import (
    Any,
    List,
    Optional,
    Union,
)

import json
import numpy as np
from pydantic import (
    ConfigDict,
    Field,
    ValidationError,
    field_validator,
    field_serializer,
)

from dualgame.api.enums.adversaries import AdversaryType
from dualgame.api.enums.policies import PolicyType
from dualgame.api.models.adversary import AdversaryKind
from dualgame.api.models.base_model import BaseConfigModel
from dualgame.api.models.params import ProblemParams
from dualgame.api.utils.helper import ApiHelper
from dualgame.api.utils.validators import Validator


class ExperimentConfig(BaseConfigModel):
    model_config = ConfigDict(
        populate_by_name=True, arbitrary_types_allowed=True, extra="forbid"
    )

    n: int = Field(1, ge=1)
    alpha: float = Field(1.0, gt=0)
    gamma: Union[float, str] = "star"
    horizon: int = Field(20, ge=1)
    adversary: AdversaryKind = Field(
        default_factory=lambda: AdversaryKind(kind=AdversaryType.Zero)
    )
    noise_std: float = Field(0.0, ge=0)
    seed: int = Field(0, ge=0, lt=2**64)
    runs: int = Field(1, ge=1)
    policy: PolicyType = PolicyType.ClosedForm
    output_dir: str = "output"
    x0: Optional[List[float]] = None

    @field_validator("gamma")
    @classmethod
    def gamma_validator(cls, v: Union[float, str]) -> Union[float, str]:
        if isinstance(v, str):
            if ApiHelper.get_comparison_string(v) in ("star", "critical", "gammastar"):
                return "star"
            try:
                v = float(v)
            except ValueError:
                raise ValueError(f"gamma should be 'star' or a positive number, got '{v}'")
        if not v > 0:
            raise ValueError(f"gamma should be positive, got {v}")
        return float(v)

    @field_validator("policy", mode="before")
    @classmethod
    def policy_validator(cls, v: Any) -> PolicyType:
        return Validator.get_policy_type_enum(v)

    @field_validator("x0")
    @classmethod
    def x0_validator(cls, v: Optional[List[float]], values) -> Optional[List[float]]:
        n = values.data.get("n")
        if v is not None and n is not None and len(v) != n:
            raise ValueError(f"initial state should have {n} entries, got {len(v)}")
        return v

    @field_serializer("policy")
    def policy_serializer(self, v: PolicyType) -> str:
        return v.name

    # load configuration file
    @classmethod
    def from_file(cls, path: str) -> "ExperimentConfig":
        """
        Load configuration from JSON document. Unknown keys are rejected.

        Parameters
        ----------
        path : str
            Path to configuration file
        """
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = json.load(f)
        except OSError as err:
            raise ValueError(
                f"DualGame::from_file(): cannot read configuration '{path}': {err}"
            ) from err
        except json.JSONDecodeError as err:
            raise ValueError(
                f"DualGame::from_file(): invalid JSON in '{path}': {err}"
            ) from err
        try:
            return cls.model_validate(data)
        except ValidationError as err:
            raise ValueError(
                f"DualGame::from_file(): invalid configuration '{path}': {err}"
            ) from err

    @property
    def gamma_value(self) -> float:
        if self.gamma == "star":
            return ProblemParams.get_critical_gain(self.alpha)
        return float(self.gamma)

    @property
    def params(self) -> ProblemParams:
        return ProblemParams(n=self.n, alpha=self.alpha, gamma=self.gamma_value)

    # initial state, first unit vector by default
    def get_initial_state(self) -> np.ndarray:
        if self.x0 is not None:
            return np.asarray(self.x0, dtype=float)
        x0 = np.zeros(self.n)
        x0[0] = 1.0
        return x0
