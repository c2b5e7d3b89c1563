#pragma once

#include "mmrstp/regret.hpp"

namespace mmrstp {

struct HeuristicResult {
    SteinerTree tree;
    RegretReport report;
};

/// Algorithm Mean: solve the STP at the midpoint scenario, then evaluate the
/// maximum regret of that tree. With an exact oracle, Z(AM) <= 2 Z*.
HeuristicResult algorithm_mean(const Instance& inst, const StpSolver& solver);

/// Algorithm Upper: same with the upper scenario. Not bounded.
HeuristicResult algorithm_upper(const Instance& inst, const StpSolver& solver);

/// Algorithm Mean-Upper: runs both and keeps the smaller maximum regret
/// (AM wins ties).
HeuristicResult algorithm_mean_upper(const Instance& inst, const StpSolver& solver);

}  // namespace mmrstp
