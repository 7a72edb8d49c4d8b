#include "beltsim/beltsim.h"

#include <cmath>
#include <exception>
#include <string>

#include "error.hpp"
#include "primitives.hpp"
#include "scenario.hpp"
#include "trajectory_io.hpp"
#include "trials.hpp"

// Opaque handle definitions: thin wrappers over the core value types.
struct bs_scenario {
    beltsim::Scenario value;
};
struct bs_schedule {
    beltsim::BeltSchedule value;
};
struct bs_trajectory {
    beltsim::Trajectory value;
    std::string outcome_text;
};
struct bs_trial_report {
    beltsim::TrialReport value;
    std::vector<std::string> outcome_texts;
};

namespace {

thread_local std::string g_last_error;

bs_status status_from(beltsim::ErrorCode code) {
    switch (code) {
        case beltsim::ErrorCode::io: return BS_ERROR_IO;
        case beltsim::ErrorCode::parse: return BS_ERROR_PARSE;
        case beltsim::ErrorCode::invalid: return BS_ERROR_INVALID;
        case beltsim::ErrorCode::domain: return BS_ERROR_DOMAIN;
        case beltsim::ErrorCode::diverged: return BS_ERROR_DIVERGED;
    }
    return BS_ERROR_INVALID;
}

template <typename Fn>
bs_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return BS_OK;
    } catch (const beltsim::Error& e) {
        g_last_error = e.what();
        return status_from(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BS_ERROR_INVALID;
    }
}

bs_status invalid_argument(const char* message) {
    g_last_error = message;
    return BS_ERROR_INVALID;
}

bs_trajectory* wrap_trajectory(beltsim::Trajectory traj) {
    auto* handle = new bs_trajectory{std::move(traj), {}};
    handle->outcome_text = beltsim::to_string(handle->value.outcome);
    return handle;
}

}  // namespace

extern "C" {

const char* bs_last_error(void) { return g_last_error.c_str(); }

bs_status bs_scenario_load(const char* path, bs_scenario** out) {
    if (!path || !out) return invalid_argument("bs_scenario_load: null argument");
    return guarded([&] { *out = new bs_scenario{beltsim::load_scenario(path)}; });
}

bs_status bs_scenario_parse(const char* json_text, bs_scenario** out) {
    if (!json_text || !out) return invalid_argument("bs_scenario_parse: null argument");
    return guarded([&] { *out = new bs_scenario{beltsim::parse_scenario(json_text)}; });
}

bs_status bs_scenario_save(const bs_scenario* scenario, const char* path) {
    if (!scenario || !path) return invalid_argument("bs_scenario_save: null argument");
    return guarded([&] { beltsim::save_scenario(scenario->value, path); });
}

void bs_scenario_free(bs_scenario* scenario) { delete scenario; }

bs_status bs_scenario_set_dt(bs_scenario* scenario, double dt_s) {
    if (!scenario) return invalid_argument("bs_scenario_set_dt: null scenario");
    return guarded([&] {
        beltsim::Scenario updated = scenario->value;
        updated.sim.dt = dt_s;
        updated.validate();
        scenario->value = std::move(updated);
    });
}

bs_status bs_scenario_set_schedule(bs_scenario* scenario, const bs_schedule* schedule,
                                   double tail_s) {
    if (!scenario || !schedule) return invalid_argument("bs_scenario_set_schedule: null argument");
    return guarded([&] {
        if (tail_s < 0.0 || !std::isfinite(tail_s)) {
            beltsim::fail(beltsim::ErrorCode::invalid, "tail_s must be non-negative");
        }
        beltsim::Scenario updated = scenario->value;
        updated.schedule = schedule->value;
        updated.sim.t_end = schedule->value.total_duration() + tail_s;
        updated.validate();
        scenario->value = std::move(updated);
    });
}

double bs_scenario_initial_height(const bs_scenario* scenario) {
    return scenario ? scenario->value.sim.x0 : 0.0;
}

double bs_scenario_object_radius(const bs_scenario* scenario) {
    if (!scenario || !scenario->value.object.radius) return 0.0;
    return *scenario->value.object.radius;
}

bs_status bs_simulate(const bs_scenario* scenario, bs_trajectory** out) {
    if (!scenario || !out) return invalid_argument("bs_simulate: null argument");
    return guarded([&] { *out = wrap_trajectory(beltsim::simulate(scenario->value)); });
}

void bs_trajectory_free(bs_trajectory* trajectory) { delete trajectory; }

size_t bs_trajectory_rows(const bs_trajectory* trajectory) {
    return trajectory ? trajectory->value.records.size() : 0;
}

bs_status bs_trajectory_row_at(const bs_trajectory* trajectory, size_t index,
                               bs_trajectory_row* out) {
    if (!trajectory || !out) return invalid_argument("bs_trajectory_row_at: null argument");
    if (index >= trajectory->value.records.size()) {
        return invalid_argument("bs_trajectory_row_at: index out of range");
    }
    const auto& r = trajectory->value.records[index];
    *out = bs_trajectory_row{r.t,      r.x,        r.v,           r.alpha,
                             r.omega,  r.s_left,   r.s_right,     r.normal_left,
                             r.normal_right, r.shear_left, r.shear_right};
    return BS_OK;
}

const char* bs_trajectory_outcome(const bs_trajectory* trajectory) {
    return trajectory ? trajectory->outcome_text.c_str() : "";
}

bs_status bs_trajectory_export_csv(const bs_trajectory* trajectory, const char* path) {
    if (!trajectory || !path) return invalid_argument("bs_trajectory_export_csv: null argument");
    return guarded([&] { beltsim::export_trajectory(trajectory->value, path); });
}

bs_status bs_trajectory_load_csv(const char* path, bs_trajectory** out) {
    if (!path || !out) return invalid_argument("bs_trajectory_load_csv: null argument");
    return guarded([&] { *out = wrap_trajectory(beltsim::load_trajectory(path)); });
}

bs_status bs_max_payload(double mu, double tau_newton_meters, double lever_arm_meters,
                         double* out_kg) {
    if (!out_kg) return invalid_argument("bs_max_payload: null output");
    return guarded(
        [&] { *out_kg = beltsim::max_payload(mu, tau_newton_meters, lever_arm_meters); });
}

bs_status bs_plan_reposition(const bs_scenario* scenario, double dx_m, double speed_mps,
                             bs_schedule** out) {
    if (!scenario || !out) return invalid_argument("bs_plan_reposition: null argument");
    return guarded([&] {
        *out = new bs_schedule{beltsim::plan_reposition(dx_m, speed_mps, scenario->value.sim.x0,
                                                        scenario->value.gripper,
                                                        scenario->value.object)};
    });
}

bs_status bs_plan_reorient(const bs_scenario* scenario, double alpha_rad, double speed_mps,
                           bs_schedule** out) {
    if (!scenario || !out) return invalid_argument("bs_plan_reorient: null argument");
    return guarded([&] {
        *out = new bs_schedule{beltsim::plan_reorient(alpha_rad, speed_mps,
                                                      scenario->value.gripper,
                                                      scenario->value.object)};
    });
}

size_t bs_schedule_segments(const bs_schedule* schedule) {
    return schedule ? schedule->value.segments.size() : 0;
}

bs_status bs_schedule_segment(const bs_schedule* schedule, size_t index, double* duration_s,
                              double* v_left_mps, double* v_right_mps) {
    if (!schedule || !duration_s || !v_left_mps || !v_right_mps) {
        return invalid_argument("bs_schedule_segment: null argument");
    }
    if (index >= schedule->value.segments.size()) {
        return invalid_argument("bs_schedule_segment: index out of range");
    }
    const auto& seg = schedule->value.segments[index];
    *duration_s = seg.duration;
    *v_left_mps = seg.v_left;
    *v_right_mps = seg.v_right;
    return BS_OK;
}

void bs_schedule_free(bs_schedule* schedule) { delete schedule; }

bs_status bs_reorientation_angle(double s_left_m, double s_right_m, double radius_m,
                                 int paper_literal, double* out_rad) {
    if (!out_rad) return invalid_argument("bs_reorientation_angle: null output");
    return guarded([&] {
        const auto mode = paper_literal ? beltsim::ReorientationMode::paper_literal
                                        : beltsim::ReorientationMode::rolling;
        *out_rad = beltsim::reorientation_angle(s_left_m, s_right_m, radius_m, mode);
    });
}

bs_status bs_detect_phases(const bs_trajectory* trajectory, bs_phase_times* out) {
    if (!trajectory || !out) return invalid_argument("bs_detect_phases: null argument");
    return guarded([&] {
        const beltsim::PhaseTimes phases = beltsim::detect_phases(trajectory->value);
        *out = bs_phase_times{};
        if (phases.contact_lift) {
            out->contact_lift = *phases.contact_lift;
            out->contact_lift_reached = 1;
        }
        if (phases.orient_start) {
            out->orient_start = *phases.orient_start;
            out->orient_start_reached = 1;
        }
        if (phases.descent_start) {
            out->descent_start = *phases.descent_start;
            out->descent_start_reached = 1;
        }
        if (phases.stable_placement) {
            out->stable_placement = *phases.stable_placement;
            out->stable_placement_reached = 1;
        }
    });
}

bs_status bs_run_trials(const bs_scenario* scenario, const bs_perturbation* perturbation,
                        size_t n, bs_target_kind kind, double target, double tolerance,
                        bs_trial_report** out) {
    if (!scenario || !perturbation || !out) {
        return invalid_argument("bs_run_trials: null argument");
    }
    return guarded([&] {
        beltsim::PerturbationModel model;
        model.mu_jitter = perturbation->mu_jitter;
        model.x0_jitter = perturbation->x0_jitter_m;
        model.r_jitter = perturbation->r_jitter_m;
        model.seed = perturbation->seed;

        beltsim::SuccessSpec success;
        success.kind = kind == BS_TARGET_ROTATION ? beltsim::SuccessSpec::Kind::rotation
                                                  : beltsim::SuccessSpec::Kind::displacement;
        success.target = target;
        success.tolerance = tolerance;

        auto* handle = new bs_trial_report{
            beltsim::run_trials(scenario->value, model, n, success), {}};
        handle->outcome_texts.reserve(handle->value.trials.size());
        for (const auto& trial : handle->value.trials) {
            handle->outcome_texts.push_back(beltsim::to_string(trial.outcome));
        }
        *out = handle;
    });
}

size_t bs_report_trials(const bs_trial_report* report) { return report ? report->value.n : 0; }

size_t bs_report_successes(const bs_trial_report* report) {
    return report ? report->value.successes : 0;
}

uint64_t bs_report_seed(const bs_trial_report* report) {
    return report ? report->value.master_seed : 0;
}

const char* bs_report_trial_outcome(const bs_trial_report* report, size_t index) {
    if (!report || index >= report->outcome_texts.size()) return "";
    return report->outcome_texts[index].c_str();
}

bs_status bs_report_trial_state(const bs_trial_report* report, size_t index, double* final_x_m,
                                double* final_alpha_rad) {
    if (!report || !final_x_m || !final_alpha_rad) {
        return invalid_argument("bs_report_trial_state: null argument");
    }
    if (index >= report->value.trials.size()) {
        return invalid_argument("bs_report_trial_state: index out of range");
    }
    *final_x_m = report->value.trials[index].final_x;
    *final_alpha_rad = report->value.trials[index].final_alpha;
    return BS_OK;
}

void bs_report_free(bs_trial_report* report) { delete report; }

}  // extern "C"
