#include "trials.hpp"

#include <cmath>
#include <future>
#include <thread>

#include "error.hpp"

namespace beltsim {

void PerturbationModel::validate() const {
    if (mu_jitter < 0.0 || x0_jitter < 0.0 || r_jitter < 0.0) {
        fail(ErrorCode::invalid, "perturbation jitters must be non-negative");
    }
}

std::string to_string(TrialOutcome outcome) {
    switch (outcome) {
        case TrialOutcome::success: return "success";
        case TrialOutcome::dropped: return "dropped";
        case TrialOutcome::ejected: return "ejected";
        case TrialOutcome::off_target: return "off-target";
        case TrialOutcome::error: return "error";
    }
    return "unknown";
}

void SuccessSpec::validate() const {
    if (!(tolerance > 0.0) || !std::isfinite(tolerance) || !std::isfinite(target)) {
        fail(ErrorCode::invalid, "success spec needs a finite target and positive tolerance");
    }
}

namespace {

// splitmix64: tiny, well-mixed, and identical on every platform, which the
// bit-exact reproducibility contract needs (the standard distributions are
// implementation-defined).
class TrialRng {
public:
    TrialRng(std::uint64_t master_seed, std::uint64_t trial_index)
        : state_(master_seed ^ (0x9e3779b97f4a7c15ull * (trial_index + 1))) {}

    double uniform_signed(double half_width) {
        return half_width * (2.0 * next_unit() - 1.0);
    }

private:
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    std::uint64_t state_;
};

TrialResult run_one(const Scenario& scenario, const PerturbationModel& perturbation,
                    std::uint64_t index, const SuccessSpec& success) {
    TrialRng rng(perturbation.seed, index);
    const double mu_delta = rng.uniform_signed(perturbation.mu_jitter);
    const double x0_delta = rng.uniform_signed(perturbation.x0_jitter);
    const double r_delta = rng.uniform_signed(perturbation.r_jitter);

    TrialResult result;
    try {
        Scenario trial = scenario;
        trial.contact.mu = scenario.effective_mu() + mu_delta;
        trial.object.friction_override.reset();
        trial.sim.x0 = scenario.sim.x0 + x0_delta;
        if (r_delta != 0.0) {
            const double r = trial.object.require_radius("radius perturbation needs a radius");
            trial.object.radius = r + r_delta;
            if (trial.object.inertia_auto) {
                trial.object.inertia = auto_inertia(trial.object);
            }
        }
        trial.validate();

        const Trajectory traj = simulate(trial);
        const auto& last = traj.records.back();
        result.final_x = last.x;
        result.final_alpha = last.alpha;
        switch (traj.outcome) {
            case Outcome::dropped:
                result.outcome = TrialOutcome::dropped;
                return result;
            case Outcome::ejected:
                result.outcome = TrialOutcome::ejected;
                return result;
            case Outcome::completed:
                break;
        }
        const double achieved = success.kind == SuccessSpec::Kind::displacement
                                    ? last.x - trial.sim.x0
                                    : last.alpha - trial.sim.alpha0;
        result.outcome = std::abs(achieved - success.target) <= success.tolerance
                             ? TrialOutcome::success
                             : TrialOutcome::off_target;
    } catch (const Error& e) {
        result.outcome = TrialOutcome::error;
        result.reason = e.what();
    }
    return result;
}

}  // namespace

TrialReport run_trials(const Scenario& scenario, const PerturbationModel& perturbation,
                       std::size_t n, const SuccessSpec& success) {
    if (n < 1) fail(ErrorCode::invalid, "run_trials requires n >= 1");
    perturbation.validate();
    success.validate();
    scenario.validate();
    if (perturbation.mu_jitter >= scenario.effective_mu()) {
        fail(ErrorCode::invalid,
             "mu_jitter must stay below the effective friction coefficient");
    }

    TrialReport report;
    report.master_seed = perturbation.seed;
    report.n = n;
    report.trials.resize(n);

    // Trials own their state and RNG stream, so any partition gives the same
    // report; threads only split the index range.
    const std::size_t workers =
        std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                report.trials[i] = run_one(scenario, perturbation, i, success);
            }
        }));
    }
    for (auto& f : futures) f.get();

    for (const auto& trial : report.trials) {
        if (trial.outcome == TrialOutcome::success) ++report.successes;
    }
    return report;
}

}  // namespace beltsim
