#pragma once

#include <cstdint>
#include <vector>

#include "mmrstp/instance.hpp"

namespace mmrstp {

/// One realized cost per edge of a referenced Instance. Costs are stored as
/// integers together with a scale divisor (1 or 2): the true cost of edge e
/// is costs[e] / scale. Scale 2 appears only for midpoint scenarios, which
/// keeps (l+u)/2 exact without floating point.
struct Scenario {
    std::vector<Cost> costs;
    int scale = 1;

    double true_cost(int edge_id) const {
        return static_cast<double>(costs[edge_id]) / scale;
    }
};

Scenario lower_scenario(const Instance& inst);
Scenario upper_scenario(const Instance& inst);

/// costs[e] = l_e + u_e at scale 2, i.e. the exact interval midpoint.
Scenario midpoint_scenario(const Instance& inst);

/// The worst-case scenario of tree t: upper cost on edges of t, lower cost
/// elsewhere. Throws std::invalid_argument when t is not a valid tree.
Scenario worst_case_scenario(const Instance& inst, const SteinerTree& t);

/// Extreme scenario selected by a bitmask: edge e gets its upper cost when
/// bit e of `mask` is set, its lower cost otherwise. Requires |E| <= 63.
Scenario extreme_scenario(const Instance& inst, std::uint64_t mask);

/// Checked constructor for externally supplied cost vectors. Verifies the
/// dimension and the box invariant l <= c/scale <= u on every edge.
Scenario scenario_from_costs(const Instance& inst, std::vector<Cost> costs,
                             int scale = 1);

/// True iff the scenario is dimensioned to `inst` and within the cost box.
bool scenario_in_box(const Instance& inst, const Scenario& s);

/// F(t, s): sum of the scenario costs of the selected edges, in the
/// scenario's scale. Throws std::invalid_argument on a dimension mismatch.
Cost tree_cost(const Instance& inst, const SteinerTree& t, const Scenario& s);

}  // namespace mmrstp
