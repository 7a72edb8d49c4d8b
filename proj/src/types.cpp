#include "types.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace beltsim {

std::string to_string(Shape shape) {
    switch (shape) {
        case Shape::cube: return "cube";
        case Shape::cylinder: return "cylinder";
        case Shape::sphere: return "sphere";
        case Shape::irregular: return "irregular";
    }
    return "unknown";
}

Shape shape_from_string(const std::string& name) {
    if (name == "cube") return Shape::cube;
    if (name == "cylinder") return Shape::cylinder;
    if (name == "sphere") return Shape::sphere;
    if (name == "irregular") return Shape::irregular;
    fail(ErrorCode::parse, "unknown shape \"" + name + "\"");
}

ObjectSpec ObjectSpec::make(Shape shape, double mass, std::optional<double> radius, double length,
                            std::optional<double> inertia,
                            std::optional<double> friction_override) {
    ObjectSpec spec;
    spec.shape = shape;
    spec.mass = mass;
    spec.radius = radius;
    spec.length = length;
    spec.friction_override = friction_override;
    if (inertia) {
        spec.inertia = *inertia;
        spec.inertia_auto = false;
    } else {
        spec.inertia = auto_inertia(spec);
        spec.inertia_auto = true;
    }
    spec.validate();
    return spec;
}

void ObjectSpec::validate() const {
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        fail(ErrorCode::invalid, "object invariant m_c > 0 violated (mass = " +
                                     std::to_string(mass) + " kg)");
    }
    if (radius) {
        if (!(*radius > 0.0) || !std::isfinite(*radius)) {
            fail(ErrorCode::invalid, "object invariant r > 0 violated");
        }
    } else if (shape != Shape::irregular) {
        fail(ErrorCode::invalid, "radius required for shape " + to_string(shape));
    }
    if (!(inertia > 0.0) || !std::isfinite(inertia)) {
        fail(ErrorCode::invalid, "object invariant I > 0 violated");
    }
    if (length < 0.0 || !std::isfinite(length)) {
        fail(ErrorCode::invalid, "object length must be non-negative");
    }
    if (friction_override && !(*friction_override > 0.0)) {
        fail(ErrorCode::invalid, "friction_override must be positive");
    }
}

double ObjectSpec::require_radius(const std::string& what) const {
    if (!radius) fail(ErrorCode::invalid, what);
    return *radius;
}

double auto_inertia(const ObjectSpec& spec) {
    if (!(spec.mass > 0.0)) {
        fail(ErrorCode::invalid, "object invariant m_c > 0 violated (mass = " +
                                     std::to_string(spec.mass) + " kg)");
    }
    switch (spec.shape) {
        case Shape::sphere: {
            const double r = spec.require_radius("inertia: sphere radius not set");
            return 0.4 * spec.mass * r * r;
        }
        case Shape::cylinder: {
            const double r = spec.require_radius("inertia: cylinder radius not set");
            return 0.5 * spec.mass * r * r;
        }
        case Shape::cube: {
            // Half-width r, side s = 2r, I = (1/6) m s^2.
            const double r = spec.require_radius("inertia: cube half-width not set");
            const double side = 2.0 * r;
            return spec.mass * side * side / 6.0;
        }
        case Shape::irregular:
            fail(ErrorCode::invalid, "inertia required for irregular objects");
    }
    fail(ErrorCode::invalid, "inertia required");
}

void GripperConfig::validate() const {
    if (!(gap > 0.0) || !std::isfinite(gap)) {
        fail(ErrorCode::invalid, "gripper invariant gap > 0 violated");
    }
    if (!(mu_bo > 0.0) || !(mu_bo <= 2.0)) {
        fail(ErrorCode::invalid, "gripper invariant mu_bo in (0, 2] violated (mu_bo = " +
                                     std::to_string(mu_bo) + ")");
    }
    if (!(tau_m > 0.0) || !std::isfinite(tau_m)) {
        fail(ErrorCode::invalid, "gripper invariant tau_m > 0 violated");
    }
    if (!(lever_arm > 0.0) || !std::isfinite(lever_arm)) {
        fail(ErrorCode::invalid, "gripper invariant L_c > 0 violated");
    }
    if (!(finger_height > 0.0) || !std::isfinite(finger_height)) {
        fail(ErrorCode::invalid, "gripper finger_height must be positive");
    }
    if (!(belt_speed_limit > 0.0) || !std::isfinite(belt_speed_limit)) {
        fail(ErrorCode::invalid, "gripper belt_speed_limit must be positive");
    }
    if (pulley_radius && !(*pulley_radius > 0.0)) {
        fail(ErrorCode::invalid, "gripper pulley_radius must be positive");
    }
    stiffness.validate(finger_height);
}

void BodyState::validate() const {
    if (!std::isfinite(x) || !std::isfinite(v) || !std::isfinite(alpha) || !std::isfinite(omega)) {
        fail(ErrorCode::invalid, "body state must be finite");
    }
}

void BeltState::command(double v, double speed_limit) {
    v_cmd = v;
    v_actual = std::clamp(v, -speed_limit, speed_limit);
}

void ContactForces::validate(double mu) const {
    if (normal_left < 0.0 || normal_right < 0.0) {
        fail(ErrorCode::invalid, "contact invariant F_N >= 0 violated");
    }
    if (std::abs(shear_left) > mu * normal_left + 1e-12 ||
        std::abs(shear_right) > mu * normal_right + 1e-12) {
        fail(ErrorCode::invalid, "contact invariant |F_s| <= mu*F_N violated");
    }
}

}  // namespace beltsim
