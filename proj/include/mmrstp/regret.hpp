#pragma once

#include <utility>

#include "mmrstp/scenario.hpp"
#include "mmrstp/stp.hpp"

namespace mmrstp {

/// Maximum-regret certificate of a tree x: its cost in the worst-case
/// scenario S^x, the adversary optimum in S^x, and the difference
/// Z(x) = F(x,S^x) - F(z,S^x). Scenario and adversary tree are retained so
/// callers can turn them into cuts or print certificates.
struct RegretReport {
    Cost tree_cost_worst = 0;  // F(x, S^x)
    Cost adversary_cost = 0;   // F(z, S^x)
    Cost robust_cost = 0;      // Z(x) = tree_cost_worst - adversary_cost
    Scenario worst_scenario;   // S^x, always scale 1
    SteinerTree adversary_tree;
    bool exact = true;  // false when the adversary came from a heuristic oracle
};

/// Evaluates Z(t) with exactly one STP solve in the worst-case scenario of t.
/// With an exact oracle the report is exact. With a heuristic oracle the
/// adversary falls back to t itself whenever the heuristic tree is costlier,
/// so robust_cost stays >= 0; the report is then marked exact = false.
RegretReport robust_cost(const Instance& inst, const SteinerTree& t,
                         const StpSolver& solver);
RegretReport robust_cost(const Instance& inst, const SteinerTree& t);  // DW oracle

/// Independent min-max regret oracle: enumerates every Steiner tree and every
/// per-tree worst case, returns a global argmin (lexicographic tie-break).
/// Requires |E| <= 14. This is the reference exact algorithms are checked
/// against.
std::pair<SteinerTree, RegretReport> minmax_regret_bruteforce(const Instance& inst);

}  // namespace mmrstp
