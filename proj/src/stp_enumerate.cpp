#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "mask_tree.hpp"
#include "mmrstp/stp.hpp"

namespace mmrstp {

using detail::mask_is_tree;
using detail::mask_lex_less;
using detail::tree_from_mask;

namespace {
constexpr int kMaxEnumerationEdges = 16;
}  // namespace

StpSolution solve_bruteforce(const Instance& inst, const Scenario& s) {
    const int m = inst.edge_count();
    if (m > kMaxEnumerationEdges)
        throw std::invalid_argument("solve_bruteforce: instance exceeds " +
                                    std::to_string(kMaxEnumerationEdges) +
                                    " edges");
    if (static_cast<int>(s.costs.size()) != m)
        throw std::invalid_argument("solve_bruteforce: scenario dimension mismatch");

    bool found = false;
    Cost best_cost = 0;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        if (!mask_is_tree(inst, mask)) continue;
        Cost cost = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            cost += s.costs[std::countr_zero(rest)];
        if (!found || cost < best_cost ||
            (cost == best_cost && mask_lex_less(mask, best_mask))) {
            found = true;
            best_cost = cost;
            best_mask = mask;
        }
    }
    // A connected instance always has at least one Steiner tree.
    if (!found) throw std::logic_error("solve_bruteforce: no tree found");
    return {tree_from_mask(best_mask), best_cost, true};
}

std::vector<SteinerTree> enumerate_steiner_trees(const Instance& inst) {
    const int m = inst.edge_count();
    if (m > kMaxEnumerationEdges)
        throw std::invalid_argument("enumerate_steiner_trees: instance exceeds " +
                                    std::to_string(kMaxEnumerationEdges) +
                                    " edges");
    std::vector<SteinerTree> trees;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask)
        if (mask_is_tree(inst, mask)) trees.push_back(tree_from_mask(mask));
    std::sort(trees.begin(), trees.end());
    return trees;
}

}  // namespace mmrstp
