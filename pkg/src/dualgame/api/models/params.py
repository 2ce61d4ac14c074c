from typing import Any

import math
from pydantic import (
    Field,
    field_validator,
)

from dualgame.api.models.base_model import BaseConfigModel
from dualgame.api.utils.helper import ApiHelper


class ProblemParams(BaseConfigModel):
    n: int = Field(..., ge=1, description="State dimension")
    alpha: float = Field(..., ge=0, description="Scale of the unknown orthogonal matrix")
    gamma: float = Field(..., gt=0, description="Disturbance attenuation level")

    @field_validator("gamma", mode="before")
    @classmethod
    def gamma_validator(cls, v: Any, values) -> Any:
        if isinstance(v, str):
            if ApiHelper.get_comparison_string(v) in ("star", "critical", "gammastar"):
                alpha = values.data.get("alpha")
                if alpha is None:
                    raise ValueError("'alpha' is required to resolve gamma='star'")
                return ProblemParams.get_critical_gain(alpha)
            return float(v)
        return v

    # critical gain
    @staticmethod
    def get_critical_gain(alpha: float) -> float:
        """
        Smallest feasible attenuation level alpha + sqrt(1 + alpha^2)
        """
        return alpha + math.sqrt(1.0 + alpha**2)

    # parameters at the critical gain
    @classmethod
    def critical(cls, n: int, alpha: float) -> "ProblemParams":
        return cls(n=n, alpha=alpha, gamma=cls.get_critical_gain(alpha))

    @property
    def gamma_star(self) -> float:
        return ProblemParams.get_critical_gain(self.alpha)

    @property
    def g(self) -> float:
        return self.gamma**2 - 1.0

    @property
    def feasible(self) -> bool:
        return self.gamma >= self.gamma_star

    @property
    def feasible_by_discriminant(self) -> bool:
        return (self.gamma - self.alpha) ** 2 >= self.alpha**2 + 1.0

    @property
    def is_critical(self) -> bool:
        return abs(self.gamma - self.gamma_star) <= 1e-12 * self.gamma_star

    @property
    def t_star(self) -> float:
        """
        Smaller root of (gamma^2 - t)*(t - 1) = gamma^2*alpha^2, NaN when infeasible
        """
        if not self.feasible:
            return math.nan
        g2 = self.gamma**2
        # double root at the critical gain
        if self.is_critical:
            return (g2 + 1.0) / 2.0
        disc = max((g2 + 1.0) ** 2 - 4.0 * g2 * (1.0 + self.alpha**2), 0.0)
        return ((g2 + 1.0) - math.sqrt(disc)) / 2.0

    def __str__(self):
        return f"n={self.n}, alpha={self.alpha:g}, gamma={self.gamma:g}"
