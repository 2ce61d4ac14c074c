from enum import (
    IntEnum,
    auto,
)


# Control modes
class ControlMode(IntEnum):
    # deterministic input from the current parameter estimate
    CertaintyEquivalence = 0
    # randomized input exciting the unknown parameters
    Exploration = auto()

    @property
    def label(self) -> str:
        if self == ControlMode.CertaintyEquivalence:
            return "certainty_equivalence"
        return "exploration"


# Value function branches
class ValueBranch(IntEnum):
    # sign-averaged data term, weight t on |x|^2
    Averaged = 0
    # residual of a single scenario, unit weight on |x|^2
    Residual = 1
