#pragma once

// Seeded random instances small enough for the brute-force oracles, shared by
// the unit and acceptance suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "mmrstp/instance.hpp"
#include "mmrstp/rng.hpp"
#include "mmrstp/stp.hpp"

namespace testsupport {

// Connected instance with |V| <= 8, |E| <= 12, |Q| <= 4, interval bounds
// <= 20: a random spanning tree plus random extra edges.
inline mmrstp::Instance random_instance(mmrstp::SplitMix64& rng,
                                        bool degenerate = false) {
    const int n = static_cast<int>(rng.uniform(2, 8));
    std::vector<mmrstp::Edge> edges;
    std::vector<std::pair<int, int>> used;

    auto add_edge = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        if (a == b ||
            std::find(used.begin(), used.end(), std::make_pair(a, b)) !=
                used.end())
            return false;
        used.emplace_back(a, b);
        mmrstp::Cost u = rng.uniform(0, 20);
        mmrstp::Cost l = degenerate ? u : rng.uniform(0, u);
        edges.push_back({a, b, l, u});
        return true;
    };

    for (int v = 2; v <= n; ++v)
        add_edge(static_cast<int>(rng.uniform(1, v - 1)), v);

    const int max_edges = std::min<int>(12, n * (n - 1) / 2);
    const int target = static_cast<int>(rng.uniform(n - 1, max_edges));
    int guard = 0;
    while (static_cast<int>(edges.size()) < target && ++guard < 200)
        add_edge(static_cast<int>(rng.uniform(1, n)),
                 static_cast<int>(rng.uniform(1, n)));

    std::vector<int> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(nodes[i], nodes[rng.uniform(0, i)]);
    const int k = static_cast<int>(rng.uniform(1, std::min(4, n)));
    std::vector<int> terminals(nodes.begin(), nodes.begin() + k);

    return mmrstp::Instance(n, std::move(edges), std::move(terminals));
}

// Uniformly random member of the full tree family of `inst`.
inline mmrstp::SteinerTree random_tree(mmrstp::SplitMix64& rng,
                                       const mmrstp::Instance& inst) {
    const auto trees = mmrstp::enumerate_steiner_trees(inst);
    return trees[rng.next_below(trees.size())];
}

}  // namespace testsupport
