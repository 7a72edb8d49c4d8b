// Command-line front end for the beltsim shared library. Talks to the core
// exclusively through the public C API.

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "beltsim/beltsim.h"

namespace {

constexpr double kKgCmToNewtonMeter = 0.0980665;  // config-boundary conversion
constexpr double kPi = 3.14159265358979323846;

struct ScenarioDeleter {
    void operator()(bs_scenario* p) const { bs_scenario_free(p); }
};
struct TrajectoryDeleter {
    void operator()(bs_trajectory* p) const { bs_trajectory_free(p); }
};
struct ScheduleDeleter {
    void operator()(bs_schedule* p) const { bs_schedule_free(p); }
};
struct ReportDeleter {
    void operator()(bs_trial_report* p) const { bs_report_free(p); }
};

using ScenarioPtr = std::unique_ptr<bs_scenario, ScenarioDeleter>;
using TrajectoryPtr = std::unique_ptr<bs_trajectory, TrajectoryDeleter>;
using SchedulePtr = std::unique_ptr<bs_schedule, ScheduleDeleter>;
using ReportPtr = std::unique_ptr<bs_trial_report, ReportDeleter>;

// One-line machine-parsable failure, nonzero exit.
int fail_status(bs_status status) {
    std::fprintf(stderr, "error: status=%d message=%s\n", static_cast<int>(status),
                 bs_last_error());
    return 1;
}

ScenarioPtr load_scenario_or_null(const std::string& path, int& exit_code) {
    bs_scenario* raw = nullptr;
    const bs_status status = bs_scenario_load(path.c_str(), &raw);
    if (status != BS_OK) {
        exit_code = fail_status(status);
        return nullptr;
    }
    return ScenarioPtr(raw);
}

void print_schedule(const bs_schedule* schedule, bool csv) {
    const size_t n = bs_schedule_segments(schedule);
    if (csv) {
        std::printf("segment,duration_s,v_left_mps,v_right_mps\n");
        for (size_t i = 0; i < n; ++i) {
            double dur = 0, vl = 0, vr = 0;
            bs_schedule_segment(schedule, i, &dur, &vl, &vr);
            std::printf("%zu,%.17g,%.17g,%.17g\n", i, dur, vl, vr);
        }
        return;
    }
    if (n == 0) {
        std::printf("empty schedule (nothing to do)\n");
        return;
    }
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double dur = 0, vl = 0, vr = 0;
        bs_schedule_segment(schedule, i, &dur, &vl, &vr);
        std::printf("segment %zu: %.4f s  v_L=%+.4f m/s  v_R=%+.4f m/s\n", i, dur, vl, vr);
        total += dur;
    }
    std::printf("total duration: %.4f s\n", total);
}

int run_simulate(const std::string& scenario_path, double dt_override, const std::string& out_path,
                 bool csv) {
    int exit_code = 0;
    ScenarioPtr scenario = load_scenario_or_null(scenario_path, exit_code);
    if (!scenario) return exit_code;
    if (dt_override > 0.0) {
        const bs_status status = bs_scenario_set_dt(scenario.get(), dt_override);
        if (status != BS_OK) return fail_status(status);
    }

    bs_trajectory* raw = nullptr;
    bs_status status = bs_simulate(scenario.get(), &raw);
    if (status != BS_OK) return fail_status(status);
    TrajectoryPtr traj(raw);

    if (!out_path.empty()) {
        status = bs_trajectory_export_csv(traj.get(), out_path.c_str());
        if (status != BS_OK) return fail_status(status);
    }

    const size_t rows = bs_trajectory_rows(traj.get());
    bs_trajectory_row last{};
    if (rows > 0) bs_trajectory_row_at(traj.get(), rows - 1, &last);

    if (csv) {
        std::printf("outcome,rows,t_final,x_final,v_final,alpha_final,omega_final\n");
        std::printf("%s,%zu,%.17g,%.17g,%.17g,%.17g,%.17g\n", bs_trajectory_outcome(traj.get()),
                    rows, last.t, last.x, last.v, last.alpha, last.omega);
    } else {
        std::printf("outcome: %s\n", bs_trajectory_outcome(traj.get()));
        std::printf("rows: %zu\n", rows);
        std::printf("final: t=%.6g s  x=%.6g m  v=%.6g m/s  alpha=%.6g rad (%.4f deg)\n", last.t,
                    last.x, last.v, last.alpha, last.alpha * 180.0 / kPi);
        if (!out_path.empty()) std::printf("trajectory written to %s\n", out_path.c_str());
    }
    return 0;
}

int run_plan_reposition(const std::string& scenario_path, double dx, double speed, bool csv) {
    int exit_code = 0;
    ScenarioPtr scenario = load_scenario_or_null(scenario_path, exit_code);
    if (!scenario) return exit_code;
    bs_schedule* raw = nullptr;
    const bs_status status = bs_plan_reposition(scenario.get(), dx, speed, &raw);
    if (status != BS_OK) return fail_status(status);
    SchedulePtr schedule(raw);
    print_schedule(schedule.get(), csv);
    return 0;
}

int run_plan_reorient(const std::string& scenario_path, double alpha_deg, double speed, bool csv) {
    int exit_code = 0;
    ScenarioPtr scenario = load_scenario_or_null(scenario_path, exit_code);
    if (!scenario) return exit_code;
    bs_schedule* raw = nullptr;
    const double alpha_rad = alpha_deg * kPi / 180.0;
    const bs_status status = bs_plan_reorient(scenario.get(), alpha_rad, speed, &raw);
    if (status != BS_OK) return fail_status(status);
    SchedulePtr schedule(raw);
    print_schedule(schedule.get(), csv);
    return 0;
}

int run_payload(double mu, double torque_kgcm, double lc_cm, bool csv) {
    const double tau_nm = torque_kgcm * kKgCmToNewtonMeter;
    const double lever_m = lc_cm / 100.0;
    double payload_kg = 0.0;
    const bs_status status = bs_max_payload(mu, tau_nm, lever_m, &payload_kg);
    if (status != BS_OK) return fail_status(status);
    if (csv) {
        std::printf("mu,tau_Nm,lever_arm_m,payload_kg\n");
        std::printf("%.17g,%.17g,%.17g,%.17g\n", mu, tau_nm, lever_m, payload_kg);
    } else {
        std::printf("maximum payload: %.3f kg\n", payload_kg);
    }
    return 0;
}

int run_trials(const std::string& scenario_path, std::size_t n, std::uint64_t seed,
               double mu_jitter, double x0_jitter, double r_jitter, bool has_dx, double target_dx,
               bool has_alpha, double target_alpha_deg, double tol, bool csv) {
    if (has_dx == has_alpha) {
        std::fprintf(stderr, "error: status=3 message=give exactly one of --target-dx and "
                             "--target-alpha\n");
        return 1;
    }
    int exit_code = 0;
    ScenarioPtr scenario = load_scenario_or_null(scenario_path, exit_code);
    if (!scenario) return exit_code;

    bs_perturbation perturbation{mu_jitter, x0_jitter, r_jitter, seed};
    const bs_target_kind kind = has_dx ? BS_TARGET_DISPLACEMENT : BS_TARGET_ROTATION;
    // Tolerance is given in the target's unit: meters for --target-dx,
    // degrees for --target-alpha. Defaults: 5 mm / 5 deg.
    double target = has_dx ? target_dx : target_alpha_deg * kPi / 180.0;
    double tolerance = tol;
    if (tolerance <= 0.0) tolerance = has_dx ? 0.005 : 5.0;
    if (!has_dx) tolerance = tolerance * kPi / 180.0;

    bs_trial_report* raw = nullptr;
    const bs_status status =
        bs_run_trials(scenario.get(), &perturbation, n, kind, target, tolerance, &raw);
    if (status != BS_OK) return fail_status(status);
    ReportPtr report(raw);

    if (csv) {
        std::printf("trial,outcome,final_x_m,final_alpha_rad\n");
        for (size_t i = 0; i < bs_report_trials(report.get()); ++i) {
            double x = 0, a = 0;
            bs_report_trial_state(report.get(), i, &x, &a);
            std::printf("%zu,%s,%.17g,%.17g\n", i, bs_report_trial_outcome(report.get(), i), x, a);
        }
    }
    std::printf("trials=%zu successes=%zu seed=%" PRIu64 "\n", bs_report_trials(report.get()),
                bs_report_successes(report.get()), bs_report_seed(report.get()));
    return 0;
}

int run_phases(const std::string& traj_path, bool csv) {
    bs_trajectory* raw = nullptr;
    bs_status status = bs_trajectory_load_csv(traj_path.c_str(), &raw);
    if (status != BS_OK) return fail_status(status);
    TrajectoryPtr traj(raw);

    bs_phase_times phases{};
    status = bs_detect_phases(traj.get(), &phases);
    if (status != BS_OK) return fail_status(status);

    struct Row {
        const char* name;
        int reached;
        double t;
    };
    const Row rows[] = {
        {"contact_lift", phases.contact_lift_reached, phases.contact_lift},
        {"orient_start", phases.orient_start_reached, phases.orient_start},
        {"descent_start", phases.descent_start_reached, phases.descent_start},
        {"stable_placement", phases.stable_placement_reached, phases.stable_placement},
    };
    if (csv) {
        std::printf("phase,reached,t_s\n");
        for (const Row& row : rows) {
            std::printf("%s,%d,%.17g\n", row.name, row.reached, row.reached ? row.t : 0.0);
        }
    } else {
        for (const Row& row : rows) {
            if (row.reached) {
                std::printf("%s: %.6g s\n", row.name, row.t);
            } else {
                std::printf("%s: not reached\n", row.name);
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"beltsim — belt-driven in-hand manipulation simulator and planner"};
    app.require_subcommand(1);

    // simulate
    auto* simulate_cmd = app.add_subcommand("simulate", "run a scenario file");
    std::string sim_scenario, sim_out;
    double sim_dt = 0.0;
    bool sim_csv = false;
    simulate_cmd->add_option("--scenario", sim_scenario, "scenario JSON file")->required();
    simulate_cmd->add_option("--dt", sim_dt, "timestep override [s]");
    simulate_cmd->add_option("--out", sim_out, "write trajectory CSV to this path");
    simulate_cmd->add_flag("--csv", sim_csv, "machine-readable summary");

    // plan
    auto* plan_cmd = app.add_subcommand("plan", "compute belt schedules");
    plan_cmd->require_subcommand(1);
    auto* repo_cmd = plan_cmd->add_subcommand("reposition", "synchronized-belt translation plan");
    std::string repo_scenario;
    double repo_dx = 0.0, repo_speed = 0.0;
    bool repo_csv = false;
    repo_cmd->add_option("--dx", repo_dx, "target displacement [m]")->required();
    repo_cmd->add_option("--speed", repo_speed, "belt surface speed [m/s]")->required();
    repo_cmd->add_option("--scenario", repo_scenario, "scenario JSON file")->required();
    repo_cmd->add_flag("--csv", repo_csv, "machine-readable output");

    auto* reor_cmd = plan_cmd->add_subcommand("reorient", "antisymmetric-belt rotation plan");
    std::string reor_scenario;
    double reor_alpha = 0.0, reor_speed = 0.0;
    bool reor_csv = false;
    reor_cmd->add_option("--alpha", reor_alpha, "target rotation [deg]")->required();
    reor_cmd->add_option("--speed", reor_speed, "belt surface speed [m/s]")->required();
    reor_cmd->add_option("--scenario", reor_scenario, "scenario JSON file")->required();
    reor_cmd->add_flag("--csv", reor_csv, "machine-readable output");

    // payload
    auto* payload_cmd = app.add_subcommand("payload", "maximum graspable mass estimate");
    double pl_mu = 0.0, pl_torque = 0.0, pl_lc = 0.0;
    bool pl_csv = false;
    payload_cmd->add_option("--mu", pl_mu, "belt-object friction coefficient")->required();
    payload_cmd->add_option("--torque-kgcm", pl_torque, "motor torque limit [kg*cm]")->required();
    payload_cmd->add_option("--lc-cm", pl_lc, "lever arm, shaft to contact [cm]")->required();
    payload_cmd->add_flag("--csv", pl_csv, "machine-readable output");

    // trials
    auto* trials_cmd = app.add_subcommand("trials", "seeded Monte Carlo robustness runs");
    std::string tr_scenario;
    std::size_t tr_n = 20;
    std::uint64_t tr_seed = 0;
    double tr_mu_jitter = 0.0, tr_x0_jitter = 0.0, tr_r_jitter = 0.0;
    double tr_dx = 0.0, tr_alpha = 0.0, tr_tol = 0.0;
    bool tr_csv = false;
    trials_cmd->add_option("--scenario", tr_scenario, "scenario JSON file")->required();
    trials_cmd->add_option("--n", tr_n, "number of trials")->required();
    trials_cmd->add_option("--seed", tr_seed, "master seed")->required();
    trials_cmd->add_option("--mu-jitter", tr_mu_jitter, "friction perturbation half-width");
    trials_cmd->add_option("--x0-jitter", tr_x0_jitter, "initial-height perturbation [m]");
    trials_cmd->add_option("--r-jitter", tr_r_jitter, "radius perturbation [m]");
    auto* opt_dx = trials_cmd->add_option("--target-dx", tr_dx, "success displacement target [m]");
    auto* opt_alpha =
        trials_cmd->add_option("--target-alpha", tr_alpha, "success rotation target [deg]");
    trials_cmd->add_option("--tol", tr_tol,
                           "success tolerance (m with --target-dx, deg with --target-alpha)");
    trials_cmd->add_flag("--csv", tr_csv, "per-trial CSV output");

    // phases
    auto* phases_cmd = app.add_subcommand("phases", "detect manipulation phases in a trajectory");
    std::string ph_traj;
    bool ph_csv = false;
    phases_cmd->add_option("--traj", ph_traj, "trajectory CSV file")->required();
    phases_cmd->add_flag("--csv", ph_csv, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        std::fprintf(stderr, "%s", app.help().c_str());
        return 2;
    }

    if (simulate_cmd->parsed()) return run_simulate(sim_scenario, sim_dt, sim_out, sim_csv);
    if (repo_cmd->parsed()) return run_plan_reposition(repo_scenario, repo_dx, repo_speed, repo_csv);
    if (reor_cmd->parsed()) return run_plan_reorient(reor_scenario, reor_alpha, reor_speed, reor_csv);
    if (payload_cmd->parsed()) return run_payload(pl_mu, pl_torque, pl_lc, pl_csv);
    if (trials_cmd->parsed()) {
        return run_trials(tr_scenario, tr_n, tr_seed, tr_mu_jitter, tr_x0_jitter, tr_r_jitter,
                          opt_dx->count() > 0, tr_dx, opt_alpha->count() > 0, tr_alpha, tr_tol,
                          tr_csv);
    }
    if (phases_cmd->parsed()) return run_phases(ph_traj, ph_csv);
    return 2;
}
