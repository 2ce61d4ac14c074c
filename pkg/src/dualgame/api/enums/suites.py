from enum import (
    IntEnum,
    auto,
)


# Verification suites
class VerificationSuite(IntEnum):
    # every suite below
    All = 0
    # min-max identity of the explicit policy
    Theorem3 = auto()
    # fixed point of the Bellman operator
    Bellman = auto()
    # monotone value iteration
    ValueIteration = auto()
    # critical gain threshold
    Gamma = auto()
    # sign convention of the exploration mean
    Policy = auto()
