from enum import (
    IntEnum,
    auto,
)


# Control policies
class PolicyType(IntEnum):
    # explicit law at the critical gain
    ClosedForm = 0
    # direct minimization over input moments
    Numeric = auto()
    # always apply the current estimate, no exploration
    CertaintyEquivalence = auto()


# Sign conventions for the exploration mean m = c * kappa * A_hat * x
class ExplorationConvention(IntEnum):
    # c = -i_hat
    MinusIHat = 0
    # c = +i_hat
    PlusIHat = auto()
    # c = -1
    Minus = auto()
    # c = +1
    Plus = auto()

    def get_factor(self, i_hat: int) -> float:
        """
        Get mean direction factor for estimated sign i_hat
        """
        if self == ExplorationConvention.MinusIHat:
            return -float(i_hat)
        elif self == ExplorationConvention.PlusIHat:
            return float(i_hat)
        elif self == ExplorationConvention.Minus:
            return -1.0
        return 1.0

    @property
    def label(self) -> str:
        return {
            ExplorationConvention.MinusIHat: "minus_ihat",
            ExplorationConvention.PlusIHat: "plus_ihat",
            ExplorationConvention.Minus: "minus",
            ExplorationConvention.Plus: "plus",
        }[self]
