#include "stiffness.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "error.hpp"

namespace beltsim {

StiffnessProfile StiffnessProfile::measured_default(double theta45_scale, double theta90_scale,
                                                    std::vector<double> knot_heights) {
    // Frontal column: 1.699 N/mm at h1 falling to 0.838 N/mm at h3, rising
    // again to 1.051 N/mm at h4. The h2 value is the linear midpoint of its
    // neighbors (not published independently).
    const std::vector<double> frontal = {1.699, 1.2685, 0.838, 1.051};

    StiffnessProfile profile;
    profile.angles_deg = {0.0, 45.0, 90.0};
    profile.heights = std::move(knot_heights);
    profile.k.resize(3);
    profile.k[0] = frontal;
    profile.k[1].reserve(frontal.size());
    profile.k[2].reserve(frontal.size());
    for (double v : frontal) {
        profile.k[1].push_back(v * theta45_scale);
        profile.k[2].push_back(v * theta90_scale);
    }
    return profile;
}

void StiffnessProfile::validate(double finger_height) const {
    if (angles_deg.empty() || heights.empty()) {
        fail(ErrorCode::invalid, "stiffness profile needs at least one angle and one height");
    }
    for (std::size_t i = 1; i < angles_deg.size(); ++i) {
        if (!(angles_deg[i] > angles_deg[i - 1])) {
            fail(ErrorCode::invalid, "stiffness profile angles must be strictly ascending");
        }
    }
    for (std::size_t i = 0; i < heights.size(); ++i) {
        if (!(heights[i] > 0.0) || !(heights[i] < finger_height)) {
            fail(ErrorCode::invalid,
                 "stiffness profile heights must lie within (0, finger_height); got " +
                     std::to_string(heights[i]));
        }
        if (i > 0 && !(heights[i] > heights[i - 1])) {
            fail(ErrorCode::invalid, "stiffness profile heights must be strictly ascending");
        }
    }
    if (k.size() != angles_deg.size()) {
        fail(ErrorCode::invalid, "stiffness matrix must have one row per angle");
    }
    for (const auto& row : k) {
        if (row.size() != heights.size()) {
            fail(ErrorCode::invalid, "stiffness matrix must have one column per height");
        }
        for (double v : row) {
            if (!(v > 0.0) || !std::isfinite(v)) {
                fail(ErrorCode::invalid, "stiffness values must be positive and finite");
            }
        }
    }
}

namespace {

// Bracketing cell index and interpolation weight; t is exactly 0 at the lower
// knot and exactly 1 at the upper knot so knot queries return stored values
// bit for bit.
struct CellWeight {
    std::size_t lo;
    double t;
};

CellWeight locate(const std::vector<double>& knots, double value) {
    const std::size_t n = knots.size();
    if (n == 1) return {0, 0.0};
    std::size_t lo = 0;
    while (lo + 2 < n && value >= knots[lo + 1]) ++lo;
    if (value == knots[lo + 1]) return {lo, 1.0};
    return {lo, (value - knots[lo]) / (knots[lo + 1] - knots[lo])};
}

double lerp_knots(double a, double b, double t) { return (1.0 - t) * a + t * b; }

}  // namespace

double stiffness_at(const StiffnessProfile& profile, double h, double theta_deg) {
    if (!(h >= profile.min_height()) || !(h <= profile.max_height()) ||
        !(theta_deg >= profile.min_angle()) || !(theta_deg <= profile.max_angle())) {
        fail(ErrorCode::domain, "outside characterized region: h=" + std::to_string(h) +
                                    " m, theta=" + std::to_string(theta_deg) + " deg");
    }

    const CellWeight hw = locate(profile.heights, h);
    const CellWeight aw = locate(profile.angles_deg, theta_deg);

    const std::size_t a0 = aw.lo;
    const std::size_t a1 = profile.angles_deg.size() == 1 ? a0 : a0 + 1;
    const std::size_t h0 = hw.lo;
    const std::size_t h1 = profile.heights.size() == 1 ? h0 : h0 + 1;

    const double k_lo = lerp_knots(profile.k[a0][h0], profile.k[a0][h1], hw.t);
    const double k_hi = lerp_knots(profile.k[a1][h0], profile.k[a1][h1], hw.t);
    return lerp_knots(k_lo, k_hi, aw.t);
}

double normal_force(const StiffnessProfile& profile, double penetration_mm, double h,
                    double theta_deg) {
    if (!(penetration_mm >= 0.0)) {
        fail(ErrorCode::invalid, "penetration must be non-negative");
    }
    if (penetration_mm > kMaxPenetrationMm) {
        fail(ErrorCode::domain, "beyond characterized compression depth: " +
                                    std::to_string(penetration_mm) + " mm > 15 mm");
    }
    if (penetration_mm == 0.0) return 0.0;
    return stiffness_at(profile, h, theta_deg) * penetration_mm;
}

}  // namespace beltsim
