#include "mmrstp/heuristics.hpp"

namespace mmrstp {

namespace {

HeuristicResult solve_and_evaluate(const Instance& inst, const Scenario& s,
                                   const StpSolver& solver) {
    StpSolution sol = solver(inst, s);
    RegretReport report = robust_cost(inst, sol.tree, solver);
    return {std::move(sol.tree), std::move(report)};
}

}  // namespace

HeuristicResult algorithm_mean(const Instance& inst, const StpSolver& solver) {
    return solve_and_evaluate(inst, midpoint_scenario(inst), solver);
}

HeuristicResult algorithm_upper(const Instance& inst, const StpSolver& solver) {
    return solve_and_evaluate(inst, upper_scenario(inst), solver);
}

HeuristicResult algorithm_mean_upper(const Instance& inst,
                                     const StpSolver& solver) {
    HeuristicResult mean = algorithm_mean(inst, solver);
    HeuristicResult upper = algorithm_upper(inst, solver);
    // AM wins ties.
    return upper.report.robust_cost < mean.report.robust_cost ? upper : mean;
}

}  // namespace mmrstp
