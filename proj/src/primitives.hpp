#pragma once

#include <optional>

#include "dynamics.hpp"
#include "schedule.hpp"

namespace beltsim {

/// Heaviest graspable mass [kg] for a friction coefficient, motor torque
/// limit [N*m], and lever arm [m]: both belts at the torque limit, weight
/// converted to mass with the same g the dynamics use. mu = 0 degenerates to
/// zero payload; negative inputs are rejected.
double max_payload(double mu, double tau_newton_meters, double lever_arm_meters);

enum class ReorientationMode {
    rolling,        // differential kinematics alpha = (S_R - S_L) / (2r)
    paper_literal,  // radius over displacement with the pi/180 factor, as printed
};

/// Rotation angle [rad] implied by the accumulated belt displacements. Rolling
/// mode assumes no slip; paper-literal mode evaluates the printed form, with
/// same-sign displacements selecting the difference denominator.
double reorientation_angle(double s_left, double s_right, double radius, ReorientationMode mode);

/// Synchronized-belt schedule moving the object by target_dx from
/// start_height, assuming no slip. Errors when the grip cannot hold the
/// object's weight anywhere along the path (the message carries required vs
/// available friction force).
BeltSchedule plan_reposition(double target_dx, double speed, double start_height,
                             const GripperConfig& gripper, const ObjectSpec& spec);

/// Antisymmetric-belt schedule rotating the object by target_alpha [rad];
/// duration follows the rolling kinematics |alpha| * r / speed.
BeltSchedule plan_reorient(double target_alpha, double speed, const GripperConfig& gripper,
                           const ObjectSpec& spec);

struct PhaseThresholds {
    double v_min = 1e-3;      // m/s
    double omega_min = 0.01;  // rad/s
    double dwell = 0.2;       // s of sustained stillness for stable placement
};

/// Key manipulation timestamps; a phase that never occurs is left empty.
struct PhaseTimes {
    std::optional<double> contact_lift;      // in contact and moving up
    std::optional<double> orient_start;      // rotation exceeds omega_min
    std::optional<double> descent_start;     // moving down after the lift
    std::optional<double> stable_placement;  // stillness sustained for the dwell window
};

PhaseTimes detect_phases(const Trajectory& traj, const PhaseThresholds& thresholds = {});

}  // namespace beltsim
