#pragma once

#include <string>
#include <vector>

#include "contact.hpp"
#include "schedule.hpp"

namespace beltsim {

/// Largest admissible integrator step.
inline constexpr double kMaxTimestep = 1e-3;

/// Net vertical acceleration [m/s^2]: both shear forces against gravity.
double vertical_acceleration(const ContactForces& forces, const ObjectSpec& spec);

/// Angular acceleration [rad/s^2] from the shear force couple. Positive is
/// the sense driven by the right belt moving up and the left belt moving down.
double angular_acceleration(const ContactForces& forces, const ObjectSpec& spec);

enum class Outcome {
    completed,  // ran to t_end inside the characterized region
    dropped,    // fell below the lowest characterized height
    ejected,    // pushed above the highest characterized height
};

std::string to_string(Outcome outcome);
Outcome outcome_from_string(const std::string& name);

/// Complete mutable simulation state: the body plus both belts.
struct SimState {
    BodyState body;
    BeltState left;
    BeltState right;

    bool operator==(const SimState&) const = default;
};

/// One semi-implicit Euler step: velocities update from the accelerations at
/// the current state, then positions update from the new velocities. Belt
/// displacements advance by the clamped speed. Deterministic; throws if the
/// state goes non-finite.
SimState step(const SimState& state, double v_cmd_left, double v_cmd_right,
              const ObjectSpec& spec, const GripperConfig& gripper, const ContactParams& params,
              double dt);

/// State snapshot plus the contact forces evaluated at that snapshot (the
/// forces that drive the step leaving this state).
struct TrajectoryRecord {
    double t = 0.0;
    double x = 0.0;
    double v = 0.0;
    double alpha = 0.0;
    double omega = 0.0;
    double s_left = 0.0;
    double s_right = 0.0;
    double normal_left = 0.0;
    double normal_right = 0.0;
    double shear_left = 0.0;
    double shear_right = 0.0;

    bool in_contact() const { return normal_left > 0.0 || normal_right > 0.0; }

    bool operator==(const TrajectoryRecord&) const = default;
};

struct Trajectory {
    std::vector<TrajectoryRecord> records;
    Outcome outcome = Outcome::completed;
    double dt = 0.0;
    BodyState initial;

    bool operator==(const Trajectory&) const = default;
};

/// Fixed-timestep run of the schedule from the given initial state. Records
/// one row per `decimation` steps plus the final state. Leaving the
/// characterized height band ends the run early with the dropped/ejected
/// outcome; that is a result, not an error.
Trajectory simulate(const BodyState& initial, const BeltSchedule& schedule, const ObjectSpec& spec,
                    const GripperConfig& gripper, const ContactParams& params, double dt,
                    double t_end, int decimation = 1);

}  // namespace beltsim
