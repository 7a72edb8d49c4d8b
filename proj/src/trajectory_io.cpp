#include "trajectory_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <system_error>
#include <vector>

#include "error.hpp"

namespace beltsim {

namespace {

// Shortest decimal form that round-trips to the same double.
void append_double(std::string& out, double value) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    out.append(buf.data(), res.ptr);
}

double parse_double(std::string_view field, std::size_t line) {
    double value = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        fail(ErrorCode::parse, "trajectory line " + std::to_string(line) +
                                   ": bad number \"" + std::string(field) + "\"");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

std::string trajectory_to_csv(const Trajectory& traj) {
    std::string out(kTrajectoryCsvHeader);
    out.push_back('\n');
    const std::string outcome = to_string(traj.outcome);
    for (const auto& row : traj.records) {
        const double fields[] = {row.t,      row.x,           row.v,            row.alpha,
                                 row.omega,  row.s_left,      row.s_right,      row.normal_left,
                                 row.normal_right, row.shear_left, row.shear_right};
        for (double f : fields) {
            append_double(out, f);
            out.push_back(',');
        }
        out += outcome;
        out.push_back('\n');
    }
    return out;
}

void export_trajectory(const Trajectory& traj, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io, "cannot write trajectory file: " + path);
    out << trajectory_to_csv(traj);
    if (!out) fail(ErrorCode::io, "write failed: " + path);
}

Trajectory trajectory_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) fail(ErrorCode::parse, "trajectory CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kTrajectoryCsvHeader) {
        fail(ErrorCode::parse, "trajectory CSV header mismatch: \"" + line + "\"");
    }

    Trajectory traj;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split(line);
        if (fields.size() != 12) {
            fail(ErrorCode::parse,
                 "trajectory line " + std::to_string(line_no) + ": expected 12 fields");
        }
        TrajectoryRecord row;
        row.t = parse_double(fields[0], line_no);
        row.x = parse_double(fields[1], line_no);
        row.v = parse_double(fields[2], line_no);
        row.alpha = parse_double(fields[3], line_no);
        row.omega = parse_double(fields[4], line_no);
        row.s_left = parse_double(fields[5], line_no);
        row.s_right = parse_double(fields[6], line_no);
        row.normal_left = parse_double(fields[7], line_no);
        row.normal_right = parse_double(fields[8], line_no);
        row.shear_left = parse_double(fields[9], line_no);
        row.shear_right = parse_double(fields[10], line_no);
        if (!traj.records.empty() && !(row.t > traj.records.back().t)) {
            fail(ErrorCode::parse, "trajectory line " + std::to_string(line_no) +
                                       ": rows must be strictly time-ascending");
        }
        traj.outcome = outcome_from_string(std::string(fields[11]));
        traj.records.push_back(row);
    }
    if (traj.records.size() >= 2) {
        traj.dt = traj.records[1].t - traj.records[0].t;
    }
    return traj;
}

Trajectory load_trajectory(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open trajectory file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return trajectory_from_csv(buffer.str());
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

}  // namespace beltsim
