"""Hider-vs-seeker games on a square region with directional sensors.

Core pieces: convex-region geometry, random scenario generation, open-path
planning, a region-splitting search heuristic, the zero-sum matrix game over
seeker policies, LP solvers for security levels, sampled-game certificates,
and reproducible experiment harnesses.  An HTTP service and CLI wrap it all.
"""
__version__ = "0.1.0"

from .errors import (DegenerateMeasurement, DegenerateRegion, Exhausted,
                     GenerationFailed, HideSeekError, InvalidArgument,
                     InvalidTreasure, NumericalFailure, TooManyPoints)
from .rng import chain, derive_seed, label64, mix64, seed_stream
from .geometry import (ConvexRegion, HalfPlane, OrientedRectangle, Point,
                       area, centroid, clip, diameter, dist,
                       min_enclosing_rectangle)
from .scenario import (Scenario, Sensor, generate_scenario, halfplane_of,
                       max_min_distance, measure, parse_scenario_record,
                       place_sensors_rect, scenario_record, sensor_count)
from .pathing import (MAX_EXACT_POINTS, Path, best_path, exact_open_path,
                      strip_path)
from .heuristic import (SearchTrace, divide_and_search,
                        expected_distance_bound, expected_final_area_bound,
                        heuristic_security_cost, optimal_measurement_count,
                        trace_csv)
from .game import (EMPTY_MEASUREMENT, GameMatrix, InfoState, SeekerPolicy,
                   build_matrix, matrix_csv, policy_action, replay_policy,
                   simulate_policy)
from .solver import (GameSolution, best_pure_response, sampled_security_level,
                     solve_zero_sum)
from .ssp import (SampleSizes, SspReport, aposteriori_k1, aposteriori_run,
                  apriori_n1, quantile, report_csv, ssp_run)
from .experiments import (ExperimentConfig, run_comparison,
                          run_heuristic_bounds, run_quantile_curves,
                          scenario_dump)

__all__ = [name for name in dir() if not name.startswith("_")]
