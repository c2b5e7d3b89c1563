#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmrstp/regret.hpp"

namespace mmrstp {

/// One constraint of the exponential cut family, generated from an adversary
/// tree. Evaluated at a candidate x it yields
///   sum over e in tree of (l_e + (u_e - l_e) * [e in x]),
/// i.e. the cut tree's cost in the worst-case scenario of x.
struct Cut {
    SteinerTree tree;
};

Cost cut_value(const Instance& inst, const Cut& cut, const SteinerTree& x);

enum class MasterBackend { Enumerate, ExternalLp };

struct MasterSolution {
    SteinerTree tree;
    std::int64_t objective = 0;  // sum u_e x_e - min over cuts; may be negative
};

/// Exact master solve by implicit enumeration over Steiner trees with
/// branch-and-bound pruning. Requires a nonempty cut pool (the master is
/// unbounded otherwise) and |E| <= 24.
MasterSolution master_solve(const Instance& inst, const std::vector<Cut>& cuts);

/// Master solve through an LP file and an external MILP executable; see
/// milp_backend.hpp for the command contract.
MasterSolution master_solve_external(const Instance& inst,
                                     const std::vector<Cut>& cuts,
                                     const std::string& command_template);

struct IterationRecord {
    int iteration = 0;
    std::int64_t lower_bound = 0;
    Cost upper_bound = 0;
    std::size_t cuts = 0;
    double master_seconds = 0.0;
    double subproblem_seconds = 0.0;
};

struct BendersState {
    std::vector<Cut> cut_pool;
    SteinerTree incumbent;
    RegretReport incumbent_report;
    std::int64_t lower_bound = 0;
    int iterations = 0;
    bool optimal = false;
    std::vector<IterationRecord> trace;

    double gap_pct() const;  // 100 (UB - LB) / UB, 0 when UB == 0
};

struct BendersOptions {
    MasterBackend backend = MasterBackend::Enumerate;
    std::string milp_command;  // template with {lp} and {sol}, ExternalLp only
    SolverKind oracle = SolverKind::DreyfusWagner;  // subproblem oracle, exact
    int max_iterations = 1000;
    double time_limit_seconds = 600.0;
};

struct BendersResult {
    SteinerTree tree;
    RegretReport report;
    BendersState state;
};

/// Constraint-generation loop for the min-max regret problem. The cut pool is
/// seeded with the Algorithm Mean and Algorithm Upper trees (deduplicated),
/// which also provide the initial incumbent. Each iteration solves the
/// master restricted to the pool, re-evaluates the candidate's robust cost,
/// and either stops (lower bound equal to the incumbent, hence optimal) or
/// adds the cut of the freshly found adversary tree. Bounds are exact
/// integers throughout. On iteration/time cap expiry the incumbent is
/// returned with optimal = false and the final (LB, UB) gap in the state.
BendersResult benders_solve(const Instance& inst, const BendersOptions& opts = {});

}  // namespace mmrstp
