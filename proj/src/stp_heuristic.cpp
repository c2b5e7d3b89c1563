#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "mmrstp/stp.hpp"

namespace mmrstp {

// Shortest-path construction (Takahashi-Matsuyama): grow the tree from the
// root, each round attaching the terminal closest to the current tree along
// a shortest path. Deterministic: (dist, node) priority order, strict
// relaxations, lowest-id terminal on distance ties.
StpSolution solve_heuristic_sp(const Instance& inst, const Scenario& s) {
    constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
    const int n = inst.node_count();
    if (static_cast<int>(s.costs.size()) != inst.edge_count())
        throw std::invalid_argument(
            "solve_heuristic_sp: scenario dimension mismatch");

    std::vector<char> in_tree(n + 1, 0);
    in_tree[inst.root()] = 1;
    std::vector<char> covered(n + 1, 0);
    covered[inst.root()] = 1;
    int uncovered = static_cast<int>(inst.terminals().size()) - 1;
    std::vector<int> edge_ids;

    std::vector<Cost> dist(n + 1);
    std::vector<std::pair<int, int>> parent(n + 1);  // (prev node, edge id)

    while (uncovered > 0) {
        std::fill(dist.begin(), dist.end(), kInf);
        std::fill(parent.begin(), parent.end(), std::make_pair(0, -1));
        using QueueItem = std::pair<Cost, int>;
        std::priority_queue<QueueItem, std::vector<QueueItem>,
                            std::greater<QueueItem>> queue;
        for (int v = 1; v <= n; ++v)
            if (in_tree[v]) {
                dist[v] = 0;
                queue.push({0, v});
            }
        while (!queue.empty()) {
            auto [d, v] = queue.top();
            queue.pop();
            if (d > dist[v]) continue;
            for (auto [u, e] : inst.adjacency()[v]) {
                Cost cand = d + s.costs[e];
                if (cand < dist[u]) {
                    dist[u] = cand;
                    parent[u] = {v, e};
                    queue.push({cand, u});
                }
            }
        }

        int pick = 0;
        for (int q : inst.terminals()) {
            if (covered[q]) continue;
            if (pick == 0 || dist[q] < dist[pick]) pick = q;
        }
        if (pick == 0 || dist[pick] >= kInf)
            throw std::logic_error("solve_heuristic_sp: unreachable terminal");

        for (int v = pick; !in_tree[v]; v = parent[v].first) {
            edge_ids.push_back(parent[v].second);
            in_tree[v] = 1;
        }
        for (int v = 1; v <= n; ++v)
            if (in_tree[v] && !covered[v]) {
                covered[v] = 1;
                if (inst.is_terminal(v)) --uncovered;
            }
    }

    SteinerTree tree(std::move(edge_ids));
    Cost cost = tree_cost(inst, tree, s);
    if (!validate_tree(inst, tree))
        throw std::logic_error("solve_heuristic_sp: built an invalid tree");
    return {std::move(tree), cost, false};
}

StpSolver make_solver(SolverKind kind) {
    switch (kind) {
        case SolverKind::DreyfusWagner:
            return [](const Instance& inst, const Scenario& s) {
                return solve_exact_dw(inst, s);
            };
        case SolverKind::BruteForce:
            return [](const Instance& inst, const Scenario& s) {
                return solve_bruteforce(inst, s);
            };
        case SolverKind::ShortestPath:
            return [](const Instance& inst, const Scenario& s) {
                return solve_heuristic_sp(inst, s);
            };
    }
    throw std::invalid_argument("make_solver: unknown kind");
}

const char* solver_kind_name(SolverKind kind) {
    switch (kind) {
        case SolverKind::DreyfusWagner: return "dw";
        case SolverKind::BruteForce: return "brute";
        case SolverKind::ShortestPath: return "sp";
    }
    return "?";
}

}  // namespace mmrstp
