#include "dynamics.hpp"

#include <cmath>
#include <cstddef>

#include "error.hpp"

namespace beltsim {

double vertical_acceleration(const ContactForces& forces, const ObjectSpec& spec) {
    return (forces.shear_left + forces.shear_right - spec.mass * kGravity) / spec.mass;
}

double angular_acceleration(const ContactForces& forces, const ObjectSpec& spec) {
    const double r = spec.require_radius("angular acceleration requires cross-section radius");
    return r * (forces.shear_right - forces.shear_left) / spec.inertia;
}

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::completed: return "completed";
        case Outcome::dropped: return "dropped";
        case Outcome::ejected: return "ejected";
    }
    return "unknown";
}

Outcome outcome_from_string(const std::string& name) {
    if (name == "completed") return Outcome::completed;
    if (name == "dropped") return Outcome::dropped;
    if (name == "ejected") return Outcome::ejected;
    fail(ErrorCode::parse, "unknown outcome \"" + name + "\"");
}

namespace {

void check_timestep(double dt) {
    if (!(dt > 0.0) || !(dt <= kMaxTimestep)) {
        fail(ErrorCode::invalid, "dt must lie in (0, 1e-3] s");
    }
}

void check_finite(const BodyState& body) {
    const char* bad = nullptr;
    if (!std::isfinite(body.x)) bad = "x";
    else if (!std::isfinite(body.v)) bad = "v";
    else if (!std::isfinite(body.alpha)) bad = "alpha";
    else if (!std::isfinite(body.omega)) bad = "omega";
    if (bad) {
        fail(ErrorCode::diverged, std::string("integration diverged: ") + bad + " is non-finite");
    }
}

// Advances state in place; forces must be the contact forces at the incoming
// state. Semi-implicit Euler: velocity first, position from the new velocity.
void advance(SimState& state, const ContactForces& forces, const ObjectSpec& spec, double dt) {
    const double a = vertical_acceleration(forces, spec);
    const double aw = angular_acceleration(forces, spec);
    state.body.v += a * dt;
    state.body.omega += aw * dt;
    state.body.x += state.body.v * dt;
    state.body.alpha += state.body.omega * dt;
    state.left.displacement += state.left.v_actual * dt;
    state.right.displacement += state.right.v_actual * dt;
    state.body.contact_left = forces.normal_left > 0.0;
    state.body.contact_right = forces.normal_right > 0.0;
    check_finite(state.body);
}

TrajectoryRecord make_record(double t, const SimState& state, const ContactForces& forces) {
    return TrajectoryRecord{t,
                            state.body.x,
                            state.body.v,
                            state.body.alpha,
                            state.body.omega,
                            state.left.displacement,
                            state.right.displacement,
                            forces.normal_left,
                            forces.normal_right,
                            forces.shear_left,
                            forces.shear_right};
}

}  // namespace

SimState step(const SimState& state, double v_cmd_left, double v_cmd_right, const ObjectSpec& spec,
              const GripperConfig& gripper, const ContactParams& params, double dt) {
    check_timestep(dt);
    SimState next = state;
    next.left.command(v_cmd_left, gripper.belt_speed_limit);
    next.right.command(v_cmd_right, gripper.belt_speed_limit);
    const ContactForces forces = contact_forces(next.body, next.left, next.right, spec, gripper,
                                                params);
    advance(next, forces, spec, dt);
    return next;
}

Trajectory simulate(const BodyState& initial, const BeltSchedule& schedule, const ObjectSpec& spec,
                    const GripperConfig& gripper, const ContactParams& params, double dt,
                    double t_end, int decimation) {
    check_timestep(dt);
    if (decimation < 1) fail(ErrorCode::invalid, "decimation must be >= 1");
    if (!(t_end > 0.0) || !std::isfinite(t_end)) {
        fail(ErrorCode::invalid, "t_end must be positive and finite");
    }
    initial.validate();
    spec.validate();
    gripper.validate();
    params.validate();
    schedule.validate(gripper.belt_speed_limit);

    const double h_lo = gripper.stiffness.min_height();
    const double h_hi = gripper.stiffness.max_height();
    if (!(initial.x >= h_lo) || !(initial.x <= h_hi)) {
        fail(ErrorCode::invalid, "initial height outside characterized finger region");
    }
    // Geometry is fixed, so the characterized-depth bound is checked once.
    if (penetration_mm(spec, gripper) > kMaxPenetrationMm) {
        fail(ErrorCode::domain, "beyond characterized compression depth: penetration " +
                                    std::to_string(penetration_mm(spec, gripper)) + " mm > 15 mm");
    }

    const auto n_steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-12));

    Trajectory traj;
    traj.dt = dt;
    traj.initial = initial;
    traj.records.reserve(n_steps / static_cast<std::size_t>(decimation) + 2);

    SimState state;
    state.body = initial;
    ScheduleCursor cursor(schedule);

    double t = 0.0;
    bool exited = false;
    for (std::size_t i = 0; i < n_steps && !exited; ++i) {
        t = static_cast<double>(i) * dt;
        const auto [vl, vr] = cursor.speeds_at(t);
        state.left.command(vl, gripper.belt_speed_limit);
        state.right.command(vr, gripper.belt_speed_limit);
        const ContactForces forces = contact_forces(state.body, state.left, state.right, spec,
                                                    gripper, params);
        if (i > 0 && i % static_cast<std::size_t>(decimation) == 0) {
            traj.records.push_back(make_record(t, state, forces));
        }
        advance(state, forces, spec, dt);
        t = static_cast<double>(i + 1) * dt;

        if (state.body.x < h_lo) {
            traj.outcome = Outcome::dropped;
            exited = true;
        } else if (state.body.x > h_hi) {
            traj.outcome = Outcome::ejected;
            exited = true;
        }
    }

    // Final row; outside the characterized band the stiffness is unknown, so
    // the grip forces are reported as zero there.
    ContactForces final_forces;
    if (!exited) {
        final_forces = contact_forces(state.body, state.left, state.right, spec, gripper, params);
    }
    traj.records.push_back(make_record(t, state, final_forces));
    return traj;
}

}  // namespace beltsim
