#pragma once

#include <vector>

namespace beltsim {

/// Passive finger modeled as a height- and angle-dependent linear spring.
/// Knot values come from unidirectional compression measurements; queries are
/// answered by bilinear interpolation and never extrapolate.
struct StiffnessProfile {
    std::vector<double> angles_deg;            // propulsion angles, ascending
    std::vector<double> heights;               // knot heights h_i [m], strictly ascending
    std::vector<std::vector<double>> k;        // stiffness [N/mm], indexed [angle][height]

    /// Measured frontal-grasp column with the characteristic dip at h3. The
    /// 45/90 degree columns default to the frontal column times a caller
    /// supplied scale factor.
    static StiffnessProfile measured_default(double theta45_scale = 1.0,
                                             double theta90_scale = 1.0,
                                             std::vector<double> knot_heights = {
                                                 0.025, 0.050, 0.075, 0.100});

    void validate(double finger_height) const;

    double min_height() const { return heights.front(); }
    double max_height() const { return heights.back(); }
    double min_angle() const { return angles_deg.front(); }
    double max_angle() const { return angles_deg.back(); }

    bool operator==(const StiffnessProfile&) const = default;
};

/// Compression depth the profile was characterized for.
inline constexpr double kMaxPenetrationMm = 15.0;

/// Interpolated stiffness [N/mm] at height h [m] and propulsion angle
/// theta [deg]. Exact at knots; errors outside the characterized region.
double stiffness_at(const StiffnessProfile& profile, double h, double theta_deg);

/// Linear spring force [N] for a given penetration depth [mm].
double normal_force(const StiffnessProfile& profile, double penetration_mm, double h,
                    double theta_deg);

}  // namespace beltsim
