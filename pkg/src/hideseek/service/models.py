"""Request and response bodies for the HTTP service."""
from __future__ import annotations

from pydantic import BaseModel, Field

from ..experiments import (DEFAULT_DELTAS, DEFAULT_M_VALUES, DEFAULT_N1_SWEEP,
                           ExperimentConfig)


class ScenarioSpec(BaseModel):
    region_side: float = 50.0
    m: int = Field(default=10, ge=1)
    s: int | None = Field(default=None, ge=0)
    seed: int = 0


class SampleSizesSpec(BaseModel):
    n1: int = Field(ge=1)
    n2: int | None = Field(default=None, ge=1)
    nbar2: int = Field(default=10, ge=1)
    delta: float = 0.02
    beta: float | None = None
    k1: int | None = Field(default=None, ge=1)


class HealthResponse(BaseModel):
    status: str
    version: str


class SampleSizeRequest(BaseModel):
    m1: int = Field(default=10, ge=1)
    delta: float = 0.02
    nbar2: int = Field(default=10, ge=1)
    beta: float | None = None


class SampleSizeResponse(BaseModel):
    n1: int
    k1: int


class ScenarioRequest(BaseModel):
    scenario: ScenarioSpec = ScenarioSpec()


class SolveRequest(BaseModel):
    matrix: list[list[float]]


class SolveResponse(BaseModel):
    value: float
    row_strategy: list[float]
    col_strategy: list[float]


class SspRunRequest(BaseModel):
    scenario: ScenarioSpec = ScenarioSpec()
    sizes: SampleSizesSpec
    seed: int = 0
    aposteriori: bool = False


class SspRunResponse(BaseModel):
    seed: int
    m: int
    s: int
    n1: int
    n2: int
    k1: int | None
    v_bar: float
    y_star: list[float]
    z_star_seeds: list[int]
    z_star_weights: list[float]
    outcome: float
    v_posterior: float | None
    epsilon: float | None
    csv: str


class HeuristicSearchRequest(BaseModel):
    scenario: ScenarioSpec = ScenarioSpec()
    treasure_index: int = Field(ge=1)
    k_budget: int | None = Field(default=None, ge=0)


class HeuristicSearchResponse(BaseModel):
    treasure_index: int
    k_used: int
    total_distance: float
    visited: list[int]
    measurements: list[int]
    final_region_area: float
    trace_csv: str


class MatrixRequest(BaseModel):
    scenario: ScenarioSpec = ScenarioSpec()
    columns: int = Field(ge=1)
    seed: int = 0


class ExperimentRequest(BaseModel):
    """Mirror of ``ExperimentConfig`` with JSON-friendly field types."""

    region_side: float = 50.0
    m: int = 10
    s: int | None = None
    trials: int = 200
    alpha: float = 0.9
    deltas: list[float] = list(DEFAULT_DELTAS)
    beta: float | None = 2e-5
    nbar2: int = 10
    n1_sweep: list[int] = list(DEFAULT_N1_SWEEP)
    geometries: int = 30
    m_values: list[int] = list(DEFAULT_M_VALUES)
    master_seed: int = 0
    workers: int = 1

    def to_config(self) -> ExperimentConfig:
        return ExperimentConfig(
            region_side=self.region_side,
            m=self.m,
            s=self.s,
            trials=self.trials,
            alpha=self.alpha,
            deltas=tuple(self.deltas),
            beta=self.beta,
            nbar2=self.nbar2,
            n1_sweep=tuple(self.n1_sweep),
            geometries=self.geometries,
            m_values=tuple(self.m_values),
            master_seed=self.master_seed,
            workers=self.workers,
        )
