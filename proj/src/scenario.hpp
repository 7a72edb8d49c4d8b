#pragma once

#include <string>

#include "contact.hpp"
#include "dynamics.hpp"
#include "schedule.hpp"

namespace beltsim {

struct SimulationSettings {
    double x0 = 0.0;         // m, initial object height
    double v0 = 0.0;         // m/s
    double alpha0 = 0.0;     // rad
    double omega0 = 0.0;     // rad/s
    double dt = 1e-4;        // s
    double t_end = 0.0;      // s
    int decimation = 1;      // record every n-th step

    bool operator==(const SimulationSettings&) const = default;
};

/// Everything a run needs, loaded from a versioned scenario file. Defaults
/// (measured stiffness profile, dt, torque limits) are applied at load time
/// and echoed back on save.
struct Scenario {
    int schema_version = 1;
    std::string name;
    ObjectSpec object;
    GripperConfig gripper;
    ContactParams contact;
    BeltSchedule schedule;
    SimulationSettings sim;

    void validate() const;
    BodyState initial_state() const;

    /// Friction coefficient the contact model runs with: the object override
    /// when present, otherwise the contact section's value.
    double effective_mu() const;

    bool operator==(const Scenario&) const = default;
};

Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);
std::string serialize_scenario(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::string& path);

/// Convenience wrapper wiring the effective friction coefficient into the
/// contact parameters.
Trajectory simulate(const Scenario& scenario);

}  // namespace beltsim
