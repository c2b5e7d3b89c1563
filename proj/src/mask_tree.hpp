#pragma once

// Internal helpers for edge-subset search on small instances (|E| <= 32,
// |V| <= 63). Shared by the brute-force enumerator and the Benders master.

#include <bit>
#include <cstdint>
#include <vector>

#include "mmrstp/instance.hpp"

namespace mmrstp::detail {

// Tree test on an edge bitmask, no allocation: acyclic, one component,
// every terminal touched.
inline bool mask_is_tree(const Instance& inst, std::uint32_t mask) {
    const auto& edges = inst.edges();
    const int n = inst.node_count();

    if (mask == 0) return inst.terminals().size() == 1;

    int parent[64];
    for (int v = 1; v <= n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };

    std::uint64_t touched = 0;
    int edge_count = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        const Edge& e = edges[std::countr_zero(rest)];
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) return false;  // cycle
        parent[ra] = rb;
        touched |= (std::uint64_t{1} << e.a) | (std::uint64_t{1} << e.b);
        ++edge_count;
    }
    if (edge_count + 1 != std::popcount(touched)) return false;  // disconnected

    for (int q : inst.terminals())
        if (!((touched >> q) & 1)) return false;
    return true;
}

// Lexicographic order on the ascending bit-position sequences of two masks.
inline bool mask_lex_less(std::uint32_t x, std::uint32_t y) {
    while (x && y) {
        int bx = std::countr_zero(x), by = std::countr_zero(y);
        if (bx != by) return bx < by;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;
}

inline SteinerTree tree_from_mask(std::uint32_t mask) {
    std::vector<int> ids;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1)
        ids.push_back(std::countr_zero(rest));
    return SteinerTree(std::move(ids));
}

inline std::uint32_t mask_from_tree(const SteinerTree& t) {
    std::uint32_t mask = 0;
    for (int id : t.edge_ids) mask |= std::uint32_t{1} << id;
    return mask;
}

}  // namespace mmrstp::detail
