from typing import (
    List,
    Optional,
)

from pydantic import Field

from dualgame.api.enums.modes import ValueBranch
from dualgame.api.models.base_model import BaseConfigModel
from dualgame.api.models.scenario import Scenario


class TSequence(BaseConfigModel):
    values: List[float]
    diverged: bool = False
    diverged_at: Optional[int] = None

    @property
    def sup(self) -> float:
        return max(self.values)

    @property
    def last(self) -> float:
        return self.values[-1]


class OptimalValue(BaseConfigModel):
    value: float
    scenario: Scenario
    branch: ValueBranch


class Theorem3Report(BaseConfigModel):
    lhs: float
    rhs: float
    residual: float
    minimizer_mean: List[float]
    minimizer_second_moment: float
    y_max: float
    converged: bool = True
    evaluations: int = 0

    @property
    def relative_residual(self) -> float:
        return self.residual / (1.0 + abs(self.rhs))


class Theorem3SuiteReport(BaseConfigModel):
    reports: List[Theorem3Report] = Field(default_factory=list)
    max_relative_residual: float = 0.0


class BellmanSample(BaseConfigModel):
    index: int
    v_star: float
    fv_star: float
    residual: float
    relative_residual: float
    converged: bool = True


class BellmanReport(BaseConfigModel):
    samples: List[BellmanSample] = Field(default_factory=list)

    @property
    def max_relative_residual(self) -> float:
        return max((abs(s.relative_residual) for s in self.samples), default=0.0)

    @property
    def converged(self) -> bool:
        return all(s.converged for s in self.samples)


class ValueIterationSample(BaseConfigModel):
    index: int
    levels: List[float]
    v_star: float
    lower_bound: float
    t_coeff: float
    monotone: bool
    upper_ok: bool
    lower_ok: bool

    @property
    def passed(self) -> bool:
        return self.monotone and self.upper_ok and self.lower_ok


class ValueIterationReport(BaseConfigModel):
    depth: int
    tolerance: float
    samples: List[ValueIterationSample] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.samples)


class GammaThresholdEntry(BaseConfigModel):
    alpha: float
    factor: float
    gamma: float
    gamma_star: float
    t_star: Optional[float] = None
    sup_t: float
    iterations: int
    diverged: bool
    diverged_at: Optional[int] = None
    expected_bounded: bool
    passed: bool


class GammaThresholdReport(BaseConfigModel):
    entries: List[GammaThresholdEntry] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)


class ConventionCheck(BaseConfigModel):
    convention: str
    matches: bool
    max_gap: float


class PolicySample(BaseConfigModel):
    index: int
    mode: str
    informative: bool
    y_max: float
    numeric_objective: float
    closed_form_objective: float
    conventions: List[ConventionCheck] = Field(default_factory=list)


class PolicyCrossValidationReport(BaseConfigModel):
    sign_convention: Optional[str] = None
    matching_conventions: List[str] = Field(default_factory=list)
    ambiguous: bool = False
    ambiguous_samples: List[int] = Field(default_factory=list)
    max_objective_gap: float = 0.0
    ce_matches: bool = True
    informative_samples: int = 0
    samples: List[PolicySample] = Field(default_factory=list)


class GainAuditReport(BaseConfigModel):
    adversary: str
    runs: int
    mean_peak: float
    standard_error: float
    max_peak: float
    bound: float
    margin: float
    passed: bool
    offending_seed: Optional[int] = None
    offending_run: Optional[int] = None
    diverged_runs: int = 0


class GammaSweepEntry(BaseConfigModel):
    gamma: float
    ratio: float
    feasible: bool
    bounded: bool
    diverged_at: Optional[int] = None
    sup_t: float
    t_star: Optional[float] = None


class GammaSweepReport(BaseConfigModel):
    alpha: float
    gamma_star: float
    iterations: int
    entries: List[GammaSweepEntry] = Field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return all(e.feasible == e.bounded for e in self.entries)

