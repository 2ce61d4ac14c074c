from enum import (
    IntEnum,
    auto,
)


# Adversary strategies
class AdversaryType(IntEnum):
    # value-seeking disturbance
    WorstCase = 0
    # independent Gaussian components
    Gaussian = auto()
    # no disturbance
    Zero = auto()
    # fixed disturbance vector
    Constant = auto()
