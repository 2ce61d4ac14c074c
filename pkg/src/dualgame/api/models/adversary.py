from typing import (
    Any,
    Optional,
)

import numpy as np
from pydantic import (
    ConfigDict,
    field_validator,
    field_serializer,
    model_validator,
)

from dualgame.api.enums.adversaries import AdversaryType
from dualgame.api.models.base_model import (
    BaseConfigModel,
    as_vector,
)
from dualgame.api.utils.validators import Validator


class AdversaryKind(BaseConfigModel):
    model_config = ConfigDict(
        populate_by_name=True, arbitrary_types_allowed=True, extra="forbid"
    )

    kind: AdversaryType
    std: Optional[float] = None
    vector: Optional[np.ndarray] = None

    @field_validator("kind", mode="before")
    @classmethod
    def kind_validator(cls, v: Any) -> AdversaryType:
        return Validator.get_adversary_type_enum(v)

    @field_validator("vector", mode="before")
    @classmethod
    def vector_validator(cls, v: Any) -> Optional[np.ndarray]:
        return None if v is None else as_vector(v)

    @model_validator(mode="before")
    @classmethod
    def name_validator(cls, v: Any) -> Any:
        # bare kind name
        if isinstance(v, (str, AdversaryType)):
            return {"kind": v}
        return v

    @model_validator(mode="after")
    def parameters_validator(self) -> "AdversaryKind":
        if self.kind == AdversaryType.Gaussian and not (
            self.std is not None and self.std > 0
        ):
            raise ValueError("gaussian adversary requires positive 'std'")
        if self.kind == AdversaryType.Constant and self.vector is None:
            raise ValueError("constant adversary requires 'vector'")
        return self

    @field_serializer("kind")
    def kind_serializer(self, v: AdversaryType) -> str:
        return v.name

    @field_serializer("vector")
    def vector_serializer(self, v: Optional[np.ndarray]) -> Optional[list]:
        return None if v is None else [float(e) for e in v]

    def __str__(self):
        if self.kind == AdversaryType.Gaussian:
            return f"{self.kind.name}(std={self.std:g})"
        return self.kind.name
