#pragma once

#include <string>

#include "dynamics.hpp"

namespace beltsim {

/// Column layout of exported trajectories; covered by a golden test.
inline constexpr char kTrajectoryCsvHeader[] =
    "t,x,v,alpha,omega,S_L,S_R,F_N_L,F_N_R,F_s_L,F_s_R,outcome";

/// CSV text for a trajectory: the fixed header plus one row per record, floats
/// in shortest round-trip decimal form, rows strictly time-ascending.
std::string trajectory_to_csv(const Trajectory& traj);

void export_trajectory(const Trajectory& traj, const std::string& path);

Trajectory trajectory_from_csv(const std::string& text);
Trajectory load_trajectory(const std::string& path);

}  // namespace beltsim
