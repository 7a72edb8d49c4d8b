/* beltsim — planar simulator and planner for in-hand manipulation of objects
 * gripped between two belt-driven compliant finger surfaces.
 *
 * C API over the simulation core. All handles are opaque; every fallible call
 * returns a bs_status and leaves a human-readable message in bs_last_error()
 * (thread-local) on failure. Units are SI unless a name says otherwise.
 */

#ifndef BELTSIM_H
#define BELTSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BELTSIM_API __declspec(dllexport)
#else
#define BELTSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bs_status {
    BS_OK = 0,
    BS_ERROR_IO = 1,       /* file access failed */
    BS_ERROR_PARSE = 2,    /* malformed scenario or trajectory file */
    BS_ERROR_INVALID = 3,  /* invariant or precondition violated */
    BS_ERROR_DOMAIN = 4,   /* query outside the characterized region */
    BS_ERROR_DIVERGED = 5  /* integration produced a non-finite state */
} bs_status;

typedef struct bs_scenario bs_scenario;
typedef struct bs_schedule bs_schedule;
typedef struct bs_trajectory bs_trajectory;
typedef struct bs_trial_report bs_trial_report;

/* Message for the most recent failure on this thread; empty string if none. */
BELTSIM_API const char *bs_last_error(void);

/* ---- scenarios ---------------------------------------------------------- */

BELTSIM_API bs_status bs_scenario_load(const char *path, bs_scenario **out);
BELTSIM_API bs_status bs_scenario_parse(const char *json_text, bs_scenario **out);
BELTSIM_API bs_status bs_scenario_save(const bs_scenario *scenario, const char *path);
BELTSIM_API void bs_scenario_free(bs_scenario *scenario);

BELTSIM_API bs_status bs_scenario_set_dt(bs_scenario *scenario, double dt_s);

/* Replaces the belt schedule; t_end becomes the schedule duration plus
 * tail_s of extra settling time. */
BELTSIM_API bs_status bs_scenario_set_schedule(bs_scenario *scenario, const bs_schedule *schedule,
                                               double tail_s);
BELTSIM_API double bs_scenario_initial_height(const bs_scenario *scenario);
BELTSIM_API double bs_scenario_object_radius(const bs_scenario *scenario);

/* ---- simulation --------------------------------------------------------- */

typedef struct bs_trajectory_row {
    double t, x, v, alpha, omega;
    double s_left, s_right;
    double normal_left, normal_right;
    double shear_left, shear_right;
} bs_trajectory_row;

BELTSIM_API bs_status bs_simulate(const bs_scenario *scenario, bs_trajectory **out);
BELTSIM_API void bs_trajectory_free(bs_trajectory *trajectory);
BELTSIM_API size_t bs_trajectory_rows(const bs_trajectory *trajectory);
BELTSIM_API bs_status bs_trajectory_row_at(const bs_trajectory *trajectory, size_t index,
                                           bs_trajectory_row *out);
BELTSIM_API const char *bs_trajectory_outcome(const bs_trajectory *trajectory);
BELTSIM_API bs_status bs_trajectory_export_csv(const bs_trajectory *trajectory, const char *path);
BELTSIM_API bs_status bs_trajectory_load_csv(const char *path, bs_trajectory **out);

/* ---- planning ----------------------------------------------------------- */

/* Heaviest graspable mass [kg]; torque in N*m, lever arm in m. */
BELTSIM_API bs_status bs_max_payload(double mu, double tau_newton_meters, double lever_arm_meters,
                                     double *out_kg);

BELTSIM_API bs_status bs_plan_reposition(const bs_scenario *scenario, double dx_m,
                                         double speed_mps, bs_schedule **out);
BELTSIM_API bs_status bs_plan_reorient(const bs_scenario *scenario, double alpha_rad,
                                       double speed_mps, bs_schedule **out);
BELTSIM_API size_t bs_schedule_segments(const bs_schedule *schedule);
BELTSIM_API bs_status bs_schedule_segment(const bs_schedule *schedule, size_t index,
                                          double *duration_s, double *v_left_mps,
                                          double *v_right_mps);
BELTSIM_API void bs_schedule_free(bs_schedule *schedule);

/* Rotation angle [rad] implied by accumulated belt displacements.
 * paper_literal = 0 selects the rolling (no-slip) kinematics. */
BELTSIM_API bs_status bs_reorientation_angle(double s_left_m, double s_right_m, double radius_m,
                                             int paper_literal, double *out_rad);

/* ---- phase detection ----------------------------------------------------- */

typedef struct bs_phase_times {
    double contact_lift, orient_start, descent_start, stable_placement; /* s */
    int contact_lift_reached, orient_start_reached, descent_start_reached,
        stable_placement_reached;
} bs_phase_times;

BELTSIM_API bs_status bs_detect_phases(const bs_trajectory *trajectory, bs_phase_times *out);

/* ---- Monte Carlo trials -------------------------------------------------- */

typedef struct bs_perturbation {
    double mu_jitter;    /* half-width of uniform friction perturbation */
    double x0_jitter_m;  /* half-width of initial-height perturbation */
    double r_jitter_m;   /* half-width of radius perturbation */
    uint64_t seed;
} bs_perturbation;

typedef enum bs_target_kind {
    BS_TARGET_DISPLACEMENT = 0, /* target and tolerance in m */
    BS_TARGET_ROTATION = 1      /* target and tolerance in rad */
} bs_target_kind;

BELTSIM_API bs_status bs_run_trials(const bs_scenario *scenario,
                                    const bs_perturbation *perturbation, size_t n,
                                    bs_target_kind kind, double target, double tolerance,
                                    bs_trial_report **out);
BELTSIM_API size_t bs_report_trials(const bs_trial_report *report);
BELTSIM_API size_t bs_report_successes(const bs_trial_report *report);
BELTSIM_API uint64_t bs_report_seed(const bs_trial_report *report);
BELTSIM_API const char *bs_report_trial_outcome(const bs_trial_report *report, size_t index);
BELTSIM_API bs_status bs_report_trial_state(const bs_trial_report *report, size_t index,
                                            double *final_x_m, double *final_alpha_rad);
BELTSIM_API void bs_report_free(bs_trial_report *report);

#ifdef __cplusplus
}
#endif

#endif /* BELTSIM_H */
