"""HTTP service exposing the game, heuristic, and experiment operations.

All computation lives in the core package; handlers translate between JSON
bodies and core calls.  CSV-producing experiment endpoints return
``text/csv`` so clients can stream results straight to disk.  Package
errors map to 400 (bad arguments) or 500 (numerical failures).
"""
from __future__ import annotations

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import HideSeekError, NumericalFailure
from ..game import build_matrix, matrix_csv
from ..geometry import area
from ..heuristic import divide_and_search, optimal_measurement_count, trace_csv
from ..rng import seed_stream
from ..scenario import generate_scenario, scenario_record, sensor_count
from ..solver import solve_zero_sum
from ..ssp import (SampleSizes, aposteriori_k1, aposteriori_run, apriori_n1,
                   report_csv, ssp_run)
from .models import (ExperimentRequest, HealthResponse, HeuristicSearchRequest,
                     HeuristicSearchResponse, MatrixRequest, SampleSizeRequest,
                     SampleSizeResponse, ScenarioRequest, ScenarioSpec,
                     SolveRequest, SolveResponse, SspRunRequest, SspRunResponse)
from ..experiments import (run_comparison, run_heuristic_bounds,
                           run_quantile_curves, scenario_dump)

app = FastAPI(title="hideseek", version=__version__)


@app.exception_handler(NumericalFailure)
def _numerical_failure(request: Request, exc: NumericalFailure) -> JSONResponse:
    return JSONResponse(status_code=500, content={"detail": str(exc)})


@app.exception_handler(HideSeekError)
def _domain_error(request: Request, exc: HideSeekError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": str(exc)})


def _build_scenario(spec: ScenarioSpec):
    s = spec.s if spec.s is not None else sensor_count(spec.m)
    return generate_scenario(spec.region_side, spec.m, s, spec.seed)


def _csv_response(text: str) -> Response:
    return Response(content=text, media_type="text/csv")


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


@app.post("/api/sample-sizes", response_model=SampleSizeResponse)
def sample_sizes(req: SampleSizeRequest) -> SampleSizeResponse:
    return SampleSizeResponse(
        n1=apriori_n1(req.m1, req.delta, req.nbar2, req.beta),
        k1=aposteriori_k1(req.delta, req.nbar2, req.beta),
    )


@app.post("/api/scenario")
def scenario_endpoint(req: ScenarioRequest) -> Response:
    return _csv_response(scenario_record(_build_scenario(req.scenario)))


@app.post("/api/solve", response_model=SolveResponse)
def solve(req: SolveRequest) -> SolveResponse:
    solution = solve_zero_sum(req.matrix)
    return SolveResponse(value=solution.value,
                         row_strategy=[float(v) for v in solution.row_strategy],
                         col_strategy=[float(v) for v in solution.col_strategy])


@app.post("/api/game/matrix")
def game_matrix(req: MatrixRequest) -> Response:
    sc = _build_scenario(req.scenario)
    seeds = seed_stream(req.seed, "pi1", req.columns)
    return _csv_response(matrix_csv(build_matrix(sc, seeds)))


@app.post("/api/ssp/run", response_model=SspRunResponse)
def ssp_endpoint(req: SspRunRequest) -> SspRunResponse:
    sc = _build_scenario(req.scenario)
    n2 = req.sizes.n2 if req.sizes.n2 is not None else req.sizes.nbar2
    sizes = SampleSizes(m1=sc.m, n1=req.sizes.n1, n2=n2, nbar2=req.sizes.nbar2,
                        delta=req.sizes.delta, beta=req.sizes.beta,
                        k1=req.sizes.k1)
    if req.aposteriori:
        if sizes.k1 is None:
            sizes = SampleSizes(m1=sizes.m1, n1=sizes.n1, n2=sizes.n2,
                                nbar2=sizes.nbar2, delta=sizes.delta,
                                beta=sizes.beta,
                                k1=aposteriori_k1(sizes.delta, sizes.nbar2,
                                                  sizes.beta))
        report = aposteriori_run(sc, sizes, req.seed)
    else:
        report = ssp_run(sc, sizes, req.seed)
    return SspRunResponse(
        seed=report.seed, m=report.m, s=report.s,
        n1=report.sizes.n1, n2=report.sizes.n2, k1=report.sizes.k1,
        v_bar=report.v_bar_level,
        y_star=[float(v) for v in report.y_star],
        z_star_seeds=list(report.z_star_seeds),
        z_star_weights=[float(v) for v in report.z_star_weights],
        outcome=report.outcome,
        v_posterior=report.v_posterior,
        epsilon=report.epsilon,
        csv=report_csv([report]),
    )


@app.post("/api/heuristic/search", response_model=HeuristicSearchResponse)
def heuristic_search(req: HeuristicSearchRequest) -> HeuristicSearchResponse:
    sc = _build_scenario(req.scenario)
    k = req.k_budget if req.k_budget is not None else optimal_measurement_count(sc.m)
    trace = divide_and_search(sc, req.treasure_index, k)
    return HeuristicSearchResponse(
        treasure_index=req.treasure_index,
        k_used=trace.k_used,
        total_distance=trace.total_distance,
        visited=list(trace.visited),
        measurements=list(trace.measurements),
        final_region_area=area(trace.regions[-1]),
        trace_csv=trace_csv(sc, trace),
    )


@app.post("/api/experiments/quantiles")
def experiments_quantiles(req: ExperimentRequest) -> Response:
    return _csv_response(run_quantile_curves(req.to_config()))


@app.post("/api/experiments/compare")
def experiments_compare(req: ExperimentRequest) -> Response:
    return _csv_response(run_comparison(req.to_config()))


@app.post("/api/experiments/heuristic-bounds")
def experiments_heuristic_bounds(req: ExperimentRequest) -> Response:
    return _csv_response(run_heuristic_bounds(req.to_config()))


@app.post("/api/experiments/scenario-dump")
def experiments_scenario_dump(req: ExperimentRequest) -> Response:
    return _csv_response(scenario_dump(req.to_config()))
