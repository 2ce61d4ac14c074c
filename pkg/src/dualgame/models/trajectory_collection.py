from typing import (
    List,
    Optional,
)

import math
import numpy as np

from dualgame.api.models.records import TrajectoryRecord


class TrajectoryCollection(list):
    seed: int

    def __init__(
        self,
        records: Optional[List[TrajectoryRecord]] = None,
        seed: int = 0,
        **kwargs,
    ):
        """
        List of trajectory records of one experiment with Monte-Carlo aggregates
        over the runs.

        Parameters
        ----------
        records : list[TrajectoryRecord] | None, default None
            Trajectory records
        seed : int, default 0
            Base seed of the runs
        """
        super().__init__(records or [])
        self.seed = seed

    # peak running cost per run
    @property
    def peaks(self) -> np.ndarray:
        return np.array([record.peak_running_cost() for record in self])

    @property
    def mean_peak(self) -> float:
        if not self:
            return 0.0
        return float(np.mean(self.peaks))

    # standard error of the mean peak
    @property
    def standard_error(self) -> float:
        if len(self) < 2:
            return 0.0
        return float(np.std(self.peaks, ddof=1) / math.sqrt(len(self)))

    @property
    def diverged_runs(self) -> int:
        return sum(1 for record in self if record.diverged)

    # record with the largest peak
    def get_worst_record(self) -> Optional[TrajectoryRecord]:
        if not self:
            return None
        return self[int(np.argmax(self.peaks))]
