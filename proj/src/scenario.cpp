#include "mmrstp/scenario.hpp"

#include <stdexcept>
#include <string>

namespace mmrstp {

Scenario lower_scenario(const Instance& inst) {
    Scenario s;
    s.costs.reserve(inst.edge_count());
    for (const Edge& e : inst.edges()) s.costs.push_back(e.lower);
    return s;
}

Scenario upper_scenario(const Instance& inst) {
    Scenario s;
    s.costs.reserve(inst.edge_count());
    for (const Edge& e : inst.edges()) s.costs.push_back(e.upper);
    return s;
}

Scenario midpoint_scenario(const Instance& inst) {
    Scenario s;
    s.scale = 2;
    s.costs.reserve(inst.edge_count());
    for (const Edge& e : inst.edges()) s.costs.push_back(e.lower + e.upper);
    return s;
}

Scenario worst_case_scenario(const Instance& inst, const SteinerTree& t) {
    if (auto check = validate_tree(inst, t); !check)
        throw std::invalid_argument("worst_case_scenario: invalid tree (" +
                                    check.reason + ")");
    Scenario s;
    s.costs.reserve(inst.edge_count());
    for (int id = 0; id < inst.edge_count(); ++id) {
        const Edge& e = inst.edges()[id];
        s.costs.push_back(t.contains(id) ? e.upper : e.lower);
    }
    return s;
}

Scenario extreme_scenario(const Instance& inst, std::uint64_t mask) {
    if (inst.edge_count() > 63)
        throw std::invalid_argument("extreme_scenario: too many edges for a mask");
    Scenario s;
    s.costs.reserve(inst.edge_count());
    for (int id = 0; id < inst.edge_count(); ++id) {
        const Edge& e = inst.edges()[id];
        s.costs.push_back((mask >> id) & 1 ? e.upper : e.lower);
    }
    return s;
}

Scenario scenario_from_costs(const Instance& inst, std::vector<Cost> costs,
                             int scale) {
    Scenario s{std::move(costs), scale};
    if (scale != 1 && scale != 2)
        throw std::invalid_argument("scenario: scale must be 1 or 2");
    if (!scenario_in_box(inst, s))
        throw std::invalid_argument("scenario: cost outside its interval");
    return s;
}

Cost tree_cost(const Instance& inst, const SteinerTree& t, const Scenario& s) {
    if (static_cast<int>(s.costs.size()) != inst.edge_count())
        throw std::invalid_argument(
            "tree_cost: scenario has " + std::to_string(s.costs.size()) +
            " costs for " + std::to_string(inst.edge_count()) + " edges");
    Cost total = 0;
    for (int id : t.edge_ids) {
        if (id < 0 || id >= inst.edge_count())
            throw std::invalid_argument("tree_cost: edge id out of range");
        total += s.costs[id];
    }
    return total;
}

bool scenario_in_box(const Instance& inst, const Scenario& s) {
    if (static_cast<int>(s.costs.size()) != inst.edge_count()) return false;
    for (int id = 0; id < inst.edge_count(); ++id) {
        const Edge& e = inst.edges()[id];
        if (s.costs[id] < e.lower * s.scale || s.costs[id] > e.upper * s.scale)
            return false;
    }
    return true;
}

}  // namespace mmrstp
