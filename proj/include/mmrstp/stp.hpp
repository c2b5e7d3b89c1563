#pragma once

#include <functional>
#include <vector>

#include "mmrstp/instance.hpp"
#include "mmrstp/scenario.hpp"

namespace mmrstp {

/// Result of a deterministic STP solve. `cost` is expressed in the queried
/// scenario's scale; `optimal` is set only by the exact methods.
struct StpSolution {
    SteinerTree tree;
    Cost cost = 0;
    bool optimal = false;
};

/// Exact Dreyfus-Wagner dynamic program over terminal subsets; exponential
/// only in |Q|. Throws std::invalid_argument when |Q| exceeds terminal_cap.
/// Tie-breaks are deterministic (fixed submask and node orders), so equal
/// inputs always reproduce the same tree.
StpSolution solve_exact_dw(const Instance& inst, const Scenario& s,
                           int terminal_cap = 16);

/// Exact by exhaustion: enumerates every edge subset, keeps the cheapest
/// valid tree, lexicographic tie-break. Requires |E| <= 16.
StpSolution solve_bruteforce(const Instance& inst, const Scenario& s);

/// All valid Steiner trees of the instance, in lexicographic order of their
/// sorted edge-id sets. Requires |E| <= 16.
std::vector<SteinerTree> enumerate_steiner_trees(const Instance& inst);

/// Shortest-path construction heuristic (repeatedly connects the nearest
/// uncovered terminal to the growing tree). Valid tree, optimal = false.
StpSolution solve_heuristic_sp(const Instance& inst, const Scenario& s);

enum class SolverKind { DreyfusWagner, BruteForce, ShortestPath };

/// Callable STP oracle; regret evaluation, the heuristics and the Benders
/// subproblem all take one of these so tests can wrap and instrument them.
using StpSolver = std::function<StpSolution(const Instance&, const Scenario&)>;

StpSolver make_solver(SolverKind kind);

const char* solver_kind_name(SolverKind kind);

}  // namespace mmrstp
