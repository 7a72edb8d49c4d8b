#include "contact.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace beltsim {

void ContactParams::validate() const {
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        fail(ErrorCode::invalid, "contact invariant mu_bo > 0 violated");
    }
    if (!(v_eps > 0.0) || !std::isfinite(v_eps)) {
        fail(ErrorCode::invalid, "contact invariant v_eps > 0 violated");
    }
}

double penetration_mm(const ObjectSpec& spec, const GripperConfig& gripper) {
    const double r = spec.require_radius("contact requires cross-section radius");
    const double squeeze = 2.0 * r - gripper.gap;
    if (squeeze <= 0.0) return 0.0;
    return 0.5 * squeeze * 1000.0;
}

double shear_force(double normal, double v_slip, const ContactParams& params) {
    if (!(normal >= 0.0)) {
        fail(ErrorCode::invalid, "shear_force requires F_N >= 0");
    }
    return params.mu * normal * std::tanh(v_slip / params.v_eps);
}

ContactForces contact_forces(const BodyState& body, const BeltState& left, const BeltState& right,
                             const ObjectSpec& spec, const GripperConfig& gripper,
                             const ContactParams& params) {
    params.validate();

    ContactForces forces;
    const double pen = penetration_mm(spec, gripper);
    if (pen == 0.0) return forces;  // object does not span the gap

    const double h_lo = gripper.stiffness.min_height();
    const double h_hi = gripper.stiffness.max_height();
    if (!(body.x >= h_lo) || !(body.x <= h_hi)) {
        fail(ErrorCode::domain, "contact outside characterized finger region: x=" +
                                    std::to_string(body.x) + " m not in [" +
                                    std::to_string(h_lo) + ", " + std::to_string(h_hi) + "]");
    }

    const double normal = normal_force(gripper.stiffness, pen, body.x, 0.0);
    forces.normal_left = normal;
    forces.normal_right = normal;

    const double r = *spec.radius;
    const double surface_left = body.v - body.omega * r;
    const double surface_right = body.v + body.omega * r;
    forces.shear_left = shear_force(normal, left.v_actual - surface_left, params);
    forces.shear_right = shear_force(normal, right.v_actual - surface_right, params);
    return forces;
}

}  // namespace beltsim
