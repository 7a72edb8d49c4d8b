#include "primitives.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"

namespace beltsim {

double max_payload(double mu, double tau_newton_meters, double lever_arm_meters) {
    if (mu < 0.0 || !std::isfinite(mu)) {
        fail(ErrorCode::invalid, "max_payload requires mu >= 0");
    }
    if (!(tau_newton_meters > 0.0) || !(lever_arm_meters > 0.0)) {
        fail(ErrorCode::invalid, "max_payload requires positive torque and lever arm");
    }
    return 2.0 * mu * tau_newton_meters / (lever_arm_meters * kGravity);
}

double reorientation_angle(double s_left, double s_right, double radius, ReorientationMode mode) {
    if (!(radius > 0.0)) {
        fail(ErrorCode::invalid, "reorientation requires cross-section radius");
    }
    if (mode == ReorientationMode::rolling) {
        return (s_right - s_left) / (2.0 * radius);
    }
    // Paper-literal form. Same-sign displacements stand in for the same-sign
    // velocity condition and select the difference denominator.
    const bool same_direction = s_left * s_right > 0.0;
    const double denom = same_direction ? (s_left - s_right) : (s_left + s_right);
    if (denom == 0.0) {
        fail(ErrorCode::invalid, "undefined: zero displacement difference");
    }
    constexpr double eta = std::numbers::pi / 180.0;
    return radius / denom * eta;
}

namespace {

// Smallest per-side normal force the grip produces between two heights,
// sampling the stiffness profile densely across the traversed band.
double min_normal_force_on_path(const GripperConfig& gripper, const ObjectSpec& spec, double h_a,
                                double h_b) {
    const double pen = penetration_mm(spec, gripper);
    if (pen == 0.0) return 0.0;
    const double lo = std::min(h_a, h_b);
    const double hi = std::max(h_a, h_b);
    constexpr int samples = 64;
    double worst = normal_force(gripper.stiffness, pen, lo, 0.0);
    for (int i = 1; i <= samples; ++i) {
        const double h = lo + (hi - lo) * static_cast<double>(i) / samples;
        worst = std::min(worst, normal_force(gripper.stiffness, pen, h, 0.0));
    }
    return worst;
}

void check_plan_speed(double speed, const GripperConfig& gripper) {
    if (!(speed > 0.0) || !std::isfinite(speed)) {
        fail(ErrorCode::invalid, "plan speed must be positive");
    }
    if (speed > gripper.belt_speed_limit) {
        fail(ErrorCode::invalid, "plan speed exceeds belt_speed_limit (" +
                                     std::to_string(gripper.belt_speed_limit) + " m/s)");
    }
}

}  // namespace

BeltSchedule plan_reposition(double target_dx, double speed, double start_height,
                             const GripperConfig& gripper, const ObjectSpec& spec) {
    if (target_dx == 0.0) return {};
    check_plan_speed(speed, gripper);

    const double h_lo = gripper.stiffness.min_height();
    const double h_hi = gripper.stiffness.max_height();
    const double end_height = start_height + target_dx;
    if (start_height < h_lo || start_height > h_hi || end_height < h_lo || end_height > h_hi) {
        fail(ErrorCode::invalid, "reposition path leaves the characterized finger region");
    }

    const double mu = spec.friction_override.value_or(gripper.mu_bo);
    const double required = spec.mass * kGravity / (2.0 * mu);
    const double available = min_normal_force_on_path(gripper, spec, start_height, end_height);
    if (available < required) {
        fail(ErrorCode::invalid,
             "reposition infeasible: holding needs " + std::to_string(required) +
                 " N per side, grip provides " + std::to_string(available) + " N");
    }

    const double v = target_dx > 0.0 ? speed : -speed;
    return BeltSchedule{{BeltSegment{std::abs(target_dx) / speed, v, v}}};
}

BeltSchedule plan_reorient(double target_alpha, double speed, const GripperConfig& gripper,
                           const ObjectSpec& spec) {
    if (target_alpha == 0.0) return {};
    check_plan_speed(speed, gripper);
    if (!spec.radius) {
        fail(ErrorCode::invalid, "reorientation requires cross-section radius");
    }
    const double duration = std::abs(target_alpha) * *spec.radius / speed;
    const double v = target_alpha > 0.0 ? speed : -speed;
    return BeltSchedule{{BeltSegment{duration, -v, v}}};
}

PhaseTimes detect_phases(const Trajectory& traj, const PhaseThresholds& thresholds) {
    PhaseTimes phases;
    const auto& rows = traj.records;
    if (rows.empty()) return phases;

    for (const auto& row : rows) {
        if (!phases.contact_lift && row.in_contact() && row.v > thresholds.v_min) {
            phases.contact_lift = row.t;
        }
        if (!phases.orient_start && std::abs(row.omega) > thresholds.omega_min) {
            phases.orient_start = row.t;
        }
        if (!phases.descent_start && phases.contact_lift && row.t > *phases.contact_lift &&
            row.v < -thresholds.v_min) {
            phases.descent_start = row.t;
        }
    }

    // Stable placement: earliest time by which stillness has been sustained
    // for the full dwell window, anchored after the descent when one exists.
    const double anchor = phases.descent_start ? *phases.descent_start : rows.front().t;
    std::optional<double> still_since;
    for (const auto& row : rows) {
        if (row.t < anchor) continue;
        const bool still =
            std::abs(row.v) < thresholds.v_min && std::abs(row.omega) < thresholds.omega_min;
        if (!still) {
            still_since.reset();
            continue;
        }
        if (!still_since) still_since = row.t;
        if (row.t - *still_since >= thresholds.dwell) {
            phases.stable_placement = row.t;
            break;
        }
    }
    return phases;
}

}  // namespace beltsim
