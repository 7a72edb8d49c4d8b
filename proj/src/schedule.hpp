#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace beltsim {

struct BeltSegment {
    double duration = 0.0;  // s
    double v_left = 0.0;    // m/s, commanded surface speed
    double v_right = 0.0;

    bool operator==(const BeltSegment&) const = default;
};

/// Open-loop belt command pattern: an ordered list of constant-speed segments.
/// Beyond the last segment both belts are commanded to zero.
struct BeltSchedule {
    std::vector<BeltSegment> segments;

    double total_duration() const;
    std::pair<double, double> speeds_at(double t) const;
    void validate(double belt_speed_limit) const;

    bool operator==(const BeltSchedule&) const = default;
};

/// Monotone-time lookup cursor for the simulation loop.
class ScheduleCursor {
public:
    explicit ScheduleCursor(const BeltSchedule& schedule);
    std::pair<double, double> speeds_at(double t);

private:
    const BeltSchedule& schedule_;
    std::size_t index_ = 0;
    double segment_end_ = 0.0;
};

}  // namespace beltsim
