#include "schedule.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace beltsim {

double BeltSchedule::total_duration() const {
    double total = 0.0;
    for (const auto& seg : segments) total += seg.duration;
    return total;
}

std::pair<double, double> BeltSchedule::speeds_at(double t) const {
    double end = 0.0;
    for (const auto& seg : segments) {
        end += seg.duration;
        if (t < end) return {seg.v_left, seg.v_right};
    }
    return {0.0, 0.0};
}

void BeltSchedule::validate(double belt_speed_limit) const {
    for (const auto& seg : segments) {
        if (!(seg.duration > 0.0) || !std::isfinite(seg.duration)) {
            fail(ErrorCode::invalid, "schedule segment durations must be positive");
        }
        if (!std::isfinite(seg.v_left) || !std::isfinite(seg.v_right) ||
            std::abs(seg.v_left) > belt_speed_limit || std::abs(seg.v_right) > belt_speed_limit) {
            fail(ErrorCode::invalid,
                 "schedule segment speed exceeds belt_speed_limit (" +
                     std::to_string(belt_speed_limit) + " m/s)");
        }
    }
}

ScheduleCursor::ScheduleCursor(const BeltSchedule& schedule) : schedule_(schedule) {
    segment_end_ = schedule_.segments.empty() ? 0.0 : schedule_.segments[0].duration;
}

std::pair<double, double> ScheduleCursor::speeds_at(double t) {
    while (index_ < schedule_.segments.size() && t >= segment_end_) {
        ++index_;
        if (index_ < schedule_.segments.size()) {
            segment_end_ += schedule_.segments[index_].duration;
        }
    }
    if (index_ >= schedule_.segments.size()) return {0.0, 0.0};
    const auto& seg = schedule_.segments[index_];
    return {seg.v_left, seg.v_right};
}

}  // namespace beltsim
