// Copyright 2026 The craneplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the craneplan library.
 *
 * Every function returns a craneplan_status. On failure, a description of the
 * most recent error on the calling thread is available from
 * craneplan_last_error() until the next failing call on that thread.
 * Handles are opaque. Release them with the matching *_free function, which
 * accepts NULL.
 */
#ifndef CRANEPLAN_CRANEPLAN_H_
#define CRANEPLAN_CRANEPLAN_H_

#include <stddef.h>

#if defined(_WIN32)
#define CRANEPLAN_API __declspec(dllexport)
#else
#define CRANEPLAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum craneplan_status {
  CRANEPLAN_OK = 0,
  CRANEPLAN_INVALID_ARGUMENT = 1, /* NULL handle, bad value */
  CRANEPLAN_IO_ERROR = 2,         /* file cannot be read or written */
  CRANEPLAN_PARSE_ERROR = 3,      /* missing key, bad number, length mismatch, inverted bounds */
  CRANEPLAN_INFEASIBLE = 4,       /* profile or boundary infeasible, empty box, solver infeasible */
  CRANEPLAN_NOT_CONVERGED = 5,    /* iteration limit or numerical failure */
  CRANEPLAN_INTERNAL_ERROR = 6
} craneplan_status;

typedef enum craneplan_solve_status {
  CRANEPLAN_SOLVE_CONVERGED = 0,
  CRANEPLAN_SOLVE_MAX_ITER = 1,
  CRANEPLAN_SOLVE_INFEASIBLE = 2,
  CRANEPLAN_SOLVE_NUMERICAL_FAILURE = 3
} craneplan_solve_status;

typedef struct craneplan_scenario craneplan_scenario;
typedef struct craneplan_plan craneplan_plan;

typedef struct craneplan_validation {
  double terminal_error;
  double max_clearance_violation;
  double max_floor_violation;
  double sway_peak;
  int time_monotone;
  int lower_bound_ok;
  double lower_bound;
  double node_bound_violation;
  double node_deviation;
} craneplan_validation;

typedef struct craneplan_summary {
  craneplan_solve_status solve_status;
  double objective; /* final time T (s) */
  double kkt_residual;
  int iterations;
  double wall_time; /* s */
  int intervals;
  int num_variables;
  int num_constraints;
  int has_validation; /* nonzero when converged */
  craneplan_validation validation;
} craneplan_summary;

CRANEPLAN_API const char* craneplan_version(void);
CRANEPLAN_API const char* craneplan_last_error(void);
CRANEPLAN_API const char* craneplan_solve_status_name(craneplan_solve_status status);

/* Scenarios. */
CRANEPLAN_API craneplan_status craneplan_scenario_load(const char* path, craneplan_scenario** out);
CRANEPLAN_API craneplan_status craneplan_scenario_parse(const char* text, craneplan_scenario** out);
CRANEPLAN_API void craneplan_scenario_free(craneplan_scenario* scenario);

/* Writes the scenario text into buf (NUL-terminated, truncated to cap) and the
 * untruncated length, excluding the NUL, into *length. buf may be NULL when
 * cap is 0. */
CRANEPLAN_API craneplan_status craneplan_scenario_render(const craneplan_scenario* scenario,
                                                         char* buf, size_t cap, size_t* length);
CRANEPLAN_API craneplan_status craneplan_scenario_set_intervals(craneplan_scenario* scenario,
                                                                int intervals);
CRANEPLAN_API craneplan_status craneplan_scenario_set_tolerance(craneplan_scenario* scenario,
                                                                double tol);
CRANEPLAN_API craneplan_status craneplan_scenario_intervals(const craneplan_scenario* scenario,
                                                            int* intervals);

/* Pre-solve feasibility checks. Returns CRANEPLAN_INFEASIBLE with the reason
 * in craneplan_last_error() when the scenario cannot be planned. */
CRANEPLAN_API craneplan_status craneplan_scenario_check(const craneplan_scenario* scenario);

/* Stack height and y_p ceiling at 1000 uniform positions. */
CRANEPLAN_API craneplan_status craneplan_scenario_write_profile(const craneplan_scenario* scenario,
                                                                const char* path);

/* Plans a trajectory. *out receives a plan handle whenever the solver ran,
 * converged or not, so the report can be inspected; the return value is
 * CRANEPLAN_OK only on convergence. */
CRANEPLAN_API craneplan_status craneplan_plan_run(const craneplan_scenario* scenario,
                                                  craneplan_plan** out);
CRANEPLAN_API void craneplan_plan_free(craneplan_plan* plan);
CRANEPLAN_API craneplan_status craneplan_plan_summary(const craneplan_plan* plan,
                                                      craneplan_summary* out);
/* Fails with CRANEPLAN_NOT_CONVERGED if the plan has no trajectory. */
CRANEPLAN_API craneplan_status craneplan_plan_write_csv(const craneplan_plan* plan,
                                                        const char* path);
CRANEPLAN_API craneplan_status craneplan_plan_write_report(const craneplan_plan* plan,
                                                           const char* path);

/* Re-simulates a trajectory CSV against the scenario. */
CRANEPLAN_API craneplan_status craneplan_validate_csv(const craneplan_scenario* scenario,
                                                      const char* csv_path,
                                                      craneplan_validation* out);

#ifdef __cplusplus
}
#endif

#endif /* CRANEPLAN_CRANEPLAN_H_ */
