#pragma once

#include <optional>
#include <string>

#include "stiffness.hpp"

namespace beltsim {

// All internal quantities are SI. Torque given in kg*cm is converted once at
// the config boundary. Positive belt speed is upward surface motion; positive
// rotation is the sense driven by the right belt moving up.
inline constexpr double kGravity = 9.81;                  // m/s^2
inline constexpr double kKgCmToNewtonMeter = 0.0980665;   // N*m per kg*cm
inline constexpr double kDefaultFingerHeight = 0.125;     // m

enum class Shape { cube, cylinder, sphere, irregular };

std::string to_string(Shape shape);
Shape shape_from_string(const std::string& name);

/// Rigid body gripped between the two belts. `radius` is the half-width of
/// the contact cross-section; irregular objects may omit it, every other
/// shape requires it.
struct ObjectSpec {
    Shape shape = Shape::sphere;
    double mass = 0.0;                        // kg
    std::optional<double> radius;             // m
    double length = 0.0;                      // m, along the grip axis
    double inertia = 0.0;                     // kg*m^2 about the grip axis
    bool inertia_auto = false;                // inertia derived from shape, not supplied
    std::optional<double> friction_override;  // replaces the contact mu for this object

    static ObjectSpec make(Shape shape, double mass, std::optional<double> radius, double length,
                           std::optional<double> inertia,
                           std::optional<double> friction_override = std::nullopt);

    void validate() const;
    double require_radius(const std::string& what) const;

    bool operator==(const ObjectSpec&) const = default;
};

/// Standard-formula inertia about the grip axis for cube, cylinder (long
/// axis), and sphere. Irregular shapes must supply inertia explicitly.
double auto_inertia(const ObjectSpec& spec);

struct GripperConfig {
    double gap = 0.0;                              // m, between undeformed belt planes
    double finger_height = kDefaultFingerHeight;   // m
    double mu_bo = 0.0;                            // belt-object friction coefficient
    double tau_m = 0.0;                            // N*m, motor torque limit
    double lever_arm = 0.0;                        // m, motor shaft to contact (L_c)
    double belt_speed_limit = 0.0;                 // m/s
    std::optional<double> pulley_radius;           // m, for rad/s schedule inputs
    StiffnessProfile stiffness;

    void validate() const;

    bool operator==(const GripperConfig&) const = default;
};

/// Planar state of the grasped object: vertical translation along the finger
/// axis plus rotation about the grip axis. `alpha` is kept unwrapped so net
/// rotation stays measurable.
struct BodyState {
    double x = 0.0;      // m
    double v = 0.0;      // m/s
    double alpha = 0.0;  // rad
    double omega = 0.0;  // rad/s
    bool contact_left = false;
    bool contact_right = false;

    void validate() const;

    bool operator==(const BodyState&) const = default;
};

/// One belt. `v_actual` is the commanded speed after the speed-limit clamp
/// (clamping is the documented contract here, not an error). `displacement`
/// integrates v_actual over time, signed positive upward.
struct BeltState {
    double v_cmd = 0.0;
    double v_actual = 0.0;
    double displacement = 0.0;

    void command(double v, double speed_limit);

    bool operator==(const BeltState&) const = default;
};

/// Per-belt contact loads. Shear is signed positive upward on the object and
/// always lies inside the Coulomb cone |F_s| <= mu * F_N.
struct ContactForces {
    double normal_left = 0.0;
    double normal_right = 0.0;
    double shear_left = 0.0;
    double shear_right = 0.0;

    void validate(double mu) const;

    bool operator==(const ContactForces&) const = default;
};

}  // namespace beltsim
