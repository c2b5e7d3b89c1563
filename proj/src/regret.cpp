#include "mmrstp/regret.hpp"

#include <stdexcept>

namespace mmrstp {

RegretReport robust_cost(const Instance& inst, const SteinerTree& t,
                         const StpSolver& solver) {
    Scenario worst = worst_case_scenario(inst, t);  // validates t
    const Cost tree_worst = tree_cost(inst, t, worst);

    StpSolution adversary = solver(inst, worst);
    if (!adversary.optimal && adversary.cost > tree_worst) {
        // Heuristic oracle found nothing better than t itself; t is a valid
        // adversary candidate and keeps the regret nonnegative.
        adversary = {t, tree_worst, false};
    }

    RegretReport report;
    report.tree_cost_worst = tree_worst;
    report.adversary_cost = adversary.cost;
    report.robust_cost = tree_worst - adversary.cost;
    report.worst_scenario = std::move(worst);
    report.adversary_tree = std::move(adversary.tree);
    report.exact = adversary.optimal;
    return report;
}

RegretReport robust_cost(const Instance& inst, const SteinerTree& t) {
    return robust_cost(inst, t, make_solver(SolverKind::DreyfusWagner));
}

std::pair<SteinerTree, RegretReport> minmax_regret_bruteforce(
    const Instance& inst) {
    if (inst.edge_count() > 14)
        throw std::invalid_argument(
            "minmax_regret_bruteforce: instance exceeds 14 edges");

    const std::vector<SteinerTree> trees = enumerate_steiner_trees(inst);

    bool found = false;
    Cost best_z = 0;
    const SteinerTree* best_tree = nullptr;
    const SteinerTree* best_adversary = nullptr;
    Cost best_f = 0, best_adv_cost = 0;
    Scenario best_scenario;

    for (const SteinerTree& t : trees) {
        Scenario worst = worst_case_scenario(inst, t);
        const Cost f = tree_cost(inst, t, worst);

        // Adversary optimum over the same enumeration; trees are in
        // lexicographic order, so the first strict minimum is the tie-break
        // winner.
        const SteinerTree* adv = nullptr;
        Cost adv_cost = 0;
        for (const SteinerTree& z : trees) {
            Cost c = tree_cost(inst, z, worst);
            if (adv == nullptr || c < adv_cost) {
                adv = &z;
                adv_cost = c;
            }
        }

        const Cost z_value = f - adv_cost;
        if (!found || z_value < best_z) {
            found = true;
            best_z = z_value;
            best_tree = &t;
            best_adversary = adv;
            best_f = f;
            best_adv_cost = adv_cost;
            best_scenario = std::move(worst);
        }
    }
    if (!found)
        throw std::logic_error("minmax_regret_bruteforce: no Steiner tree");

    RegretReport report;
    report.tree_cost_worst = best_f;
    report.adversary_cost = best_adv_cost;
    report.robust_cost = best_z;
    report.worst_scenario = std::move(best_scenario);
    report.adversary_tree = *best_adversary;
    report.exact = true;
    return {*best_tree, std::move(report)};
}

}  // namespace mmrstp
