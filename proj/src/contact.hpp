#pragma once

#include "types.hpp"

namespace beltsim {

/// Regularized Coulomb friction parameters. The tanh regularization keeps the
/// stick-slip law smooth; restitution is zero because contact is sustained and
/// compliant, never impacting.
struct ContactParams {
    double mu = 0.0;        // belt-object friction coefficient
    double v_eps = 1e-3;    // m/s, slip-velocity regularization scale
    static constexpr double restitution = 0.0;

    void validate() const;

    bool operator==(const ContactParams&) const = default;
};

/// Per-side penetration depth [mm]. The object stays centered, so the squeeze
/// splits equally; zero when the object does not span the gap.
double penetration_mm(const ObjectSpec& spec, const GripperConfig& gripper);

/// Shear force [N] for a given normal load and slip velocity
/// (belt surface velocity minus object surface velocity, positive upward).
/// Strictly inside the Coulomb cone, saturating as |v_slip| grows.
double shear_force(double normal, double v_slip, const ContactParams& params);

/// Full contact evaluation at the object's current height. Normal force comes
/// from the stiffness profile at theta = 0 (frontal grasp); slip per side uses
/// the object surface velocity v -/+ omega*r (left/right), so equal belt
/// speeds on a centered object produce zero net torque.
ContactForces contact_forces(const BodyState& body, const BeltState& left, const BeltState& right,
                             const ObjectSpec& spec, const GripperConfig& gripper,
                             const ContactParams& params);

}  // namespace beltsim
