#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "mmrstp/stp.hpp"

namespace mmrstp {

namespace {

constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

// Backtrace tag for one (terminal-subset, node) state.
struct Tag {
    enum Kind : std::uint8_t { None, Seed, Merge, Arc } kind = None;
    std::uint32_t sub = 0;  // Merge: the subset split off
    int edge = -1;          // Arc: edge walked
    int from = 0;           // Arc: predecessor node
};

}  // namespace

// Dreyfus-Wagner: dp[S][v] = cost of a cheapest tree spanning S u {v}, where
// S ranges over subsets of the non-root terminals. Each subset round is a
// merge step over proper submasks followed by a Dijkstra relaxation over the
// graph. All tie-breaks are fixed (submask enumeration order, (dist, node)
// priority order, strict improvements only), so the backtraced tree is
// reproducible bit-for-bit.
StpSolution solve_exact_dw(const Instance& inst, const Scenario& s,
                           int terminal_cap) {
    const int n = inst.node_count();
    const auto& terminals = inst.terminals();
    if (static_cast<int>(s.costs.size()) != inst.edge_count())
        throw std::invalid_argument("solve_exact_dw: scenario dimension mismatch");
    if (static_cast<int>(terminals.size()) > terminal_cap)
        throw std::invalid_argument(
            "solve_exact_dw: terminal cap exceeded (" +
            std::to_string(terminals.size()) + " > " +
            std::to_string(terminal_cap) + ")");

    if (terminals.size() == 1) return {SteinerTree{}, 0, true};

    std::vector<int> others;  // terminals minus the root, ascending
    for (int q : terminals)
        if (q != inst.root()) others.push_back(q);
    const int k = static_cast<int>(others.size());
    const std::uint32_t full = (std::uint32_t{1} << k) - 1;

    std::vector<std::vector<Cost>> dp(full + 1,
                                      std::vector<Cost>(n + 1, kInf));
    std::vector<std::vector<Tag>> tag(full + 1, std::vector<Tag>(n + 1));

    using QueueItem = std::pair<Cost, int>;
    std::priority_queue<QueueItem, std::vector<QueueItem>,
                        std::greater<QueueItem>> queue;

    auto dijkstra = [&](std::uint32_t mask) {
        auto& dist = dp[mask];
        for (int v = 1; v <= n; ++v)
            if (dist[v] < kInf) queue.push({dist[v], v});
        while (!queue.empty()) {
            auto [d, v] = queue.top();
            queue.pop();
            if (d > dist[v]) continue;
            for (auto [u, e] : inst.adjacency()[v]) {
                Cost cand = d + s.costs[e];
                if (cand < dist[u]) {
                    dist[u] = cand;
                    tag[mask][u] = {Tag::Arc, 0, e, v};
                    queue.push({cand, u});
                }
            }
        }
    };

    for (int i = 0; i < k; ++i) {
        const std::uint32_t mask = std::uint32_t{1} << i;
        dp[mask][others[i]] = 0;
        tag[mask][others[i]] = {Tag::Seed, 0, -1, 0};
        dijkstra(mask);
    }

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) < 2) continue;
        const std::uint32_t low = mask & (~mask + 1);  // fix the lowest bit
        for (std::uint32_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue;
            const std::uint32_t rest = mask ^ sub;
            for (int v = 1; v <= n; ++v) {
                if (dp[sub][v] >= kInf || dp[rest][v] >= kInf) continue;
                Cost cand = dp[sub][v] + dp[rest][v];
                if (cand < dp[mask][v]) {
                    dp[mask][v] = cand;
                    tag[mask][v] = {Tag::Merge, sub, -1, 0};
                }
            }
        }
        dijkstra(mask);
    }

    const Cost best = dp[full][inst.root()];
    if (best >= kInf) throw std::logic_error("solve_exact_dw: unreachable terminal");

    // Collect the edges of the backtraced solution. Shared (mask, node)
    // states are expanded once.
    std::vector<int> edge_ids;
    std::vector<std::vector<char>> visited(full + 1,
                                           std::vector<char>(n + 1, 0));
    std::vector<std::pair<std::uint32_t, int>> stack{{full, inst.root()}};
    while (!stack.empty()) {
        auto [mask, v] = stack.back();
        stack.pop_back();
        if (visited[mask][v]) continue;
        visited[mask][v] = 1;
        const Tag& t = tag[mask][v];
        switch (t.kind) {
            case Tag::Seed:
                break;
            case Tag::Arc:
                edge_ids.push_back(t.edge);
                stack.push_back({mask, t.from});
                break;
            case Tag::Merge:
                stack.push_back({t.sub, v});
                stack.push_back({mask ^ t.sub, v});
                break;
            case Tag::None:
                throw std::logic_error("solve_exact_dw: broken backtrace");
        }
    }

    // The union of backtraced branches can close zero-cost cycles; a Kruskal
    // pass in edge-id order extracts a spanning tree of the same cost.
    std::sort(edge_ids.begin(), edge_ids.end());
    edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()),
                   edge_ids.end());
    std::vector<int> parent(n + 1);
    for (int v = 0; v <= n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    std::vector<int> kept;
    for (int e : edge_ids) {
        int ra = find(inst.edges()[e].a), rb = find(inst.edges()[e].b);
        if (ra == rb) continue;
        parent[ra] = rb;
        kept.push_back(e);
    }

    SteinerTree tree(std::move(kept));
    if (tree_cost(inst, tree, s) != best || !validate_tree(inst, tree))
        throw std::logic_error("solve_exact_dw: backtrace mismatch");
    return {std::move(tree), best, true};
}

}  // namespace mmrstp
