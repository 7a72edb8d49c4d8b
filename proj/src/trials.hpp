#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scenario.hpp"

namespace beltsim {

/// Trial-to-trial variation: uniform jitter on the friction coefficient, the
/// initial height, and the contact radius (the latter standing in for object
/// irregularity). Trials derive their random streams from (seed, trial index),
/// so reports reproduce bit-exactly and trials may run in any order.
struct PerturbationModel {
    double mu_jitter = 0.0;   // half-width of uniform friction perturbation
    double x0_jitter = 0.0;   // m
    double r_jitter = 0.0;    // m
    std::uint64_t seed = 0;

    void validate() const;

    bool operator==(const PerturbationModel&) const = default;
};

enum class TrialOutcome { success, dropped, ejected, off_target, error };

std::string to_string(TrialOutcome outcome);

/// What counts as success: displacement relative to the trial's own start
/// height, or net rotation, each within a tolerance.
struct SuccessSpec {
    enum class Kind { displacement, rotation } kind = Kind::displacement;
    double target = 0.0;     // m or rad
    double tolerance = 0.0;  // m or rad

    void validate() const;
};

struct TrialResult {
    TrialOutcome outcome = TrialOutcome::error;
    double final_x = 0.0;
    double final_alpha = 0.0;
    std::string reason;  // set when outcome == error

    bool operator==(const TrialResult&) const = default;
};

struct TrialReport {
    std::uint64_t master_seed = 0;
    std::size_t n = 0;
    std::size_t successes = 0;
    std::vector<TrialResult> trials;

    bool operator==(const TrialReport&) const = default;
};

/// Runs n independently perturbed simulations of the scenario. Simulation
/// errors inside a trial are recorded as failures with a reason, never thrown.
TrialReport run_trials(const Scenario& scenario, const PerturbationModel& perturbation,
                       std::size_t n, const SuccessSpec& success);

}  // namespace beltsim
