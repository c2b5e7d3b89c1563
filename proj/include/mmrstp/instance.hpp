#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mmrstp {

using Cost = std::int64_t;

/// One undirected edge with an interval cost [lower, upper].
/// Endpoints are 1-based node ids; a < b after normalization.
struct Edge {
    int a = 0;
    int b = 0;
    Cost lower = 0;
    Cost upper = 0;
};

/// Immutable problem instance: an undirected connected graph with interval
/// edge costs, a nonempty terminal set and a root terminal.
///
/// Construction validates everything (id ranges, no self-loops, no duplicate
/// edges, lower <= upper, root membership, connectivity) and throws
/// std::invalid_argument on the first violation.
class Instance {
public:
    Instance(int node_count, std::vector<Edge> edges, std::vector<int> terminals,
             int root);

    /// Root defaults to the lowest-id terminal.
    Instance(int node_count, std::vector<Edge> edges, std::vector<int> terminals);

    int node_count() const { return node_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& terminals() const { return terminals_; }  // sorted
    int root() const { return root_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }

    bool is_terminal(int v) const;

    /// True when every interval is a single point (l == u).
    bool degenerate() const;

    /// node id -> list of (neighbor id, edge id), in edge-id order.
    const std::vector<std::vector<std::pair<int, int>>>& adjacency() const {
        return adjacency_;
    }

    /// Copy with a different root (must be a terminal).
    Instance with_root(int new_root) const;

private:
    void validate_and_index();

    int node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> terminals_;
    int root_ = 0;
    std::string name_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

/// Edge subset forming (possibly) a Steiner tree. Ids are indices into the
/// owning Instance's edge list, kept sorted and unique.
struct SteinerTree {
    std::vector<int> edge_ids;

    SteinerTree() = default;
    explicit SteinerTree(std::vector<int> ids);

    bool empty() const { return edge_ids.empty(); }
    std::size_t size() const { return edge_ids.size(); }
    bool contains(int edge_id) const;

    friend bool operator==(const SteinerTree&, const SteinerTree&) = default;
    // Lexicographic order on the sorted id sequence; used for tie-breaking.
    friend auto operator<=>(const SteinerTree& x, const SteinerTree& y) {
        return x.edge_ids <=> y.edge_ids;
    }
};

struct TreeCheck {
    bool ok = false;
    std::string reason;  // "cycle", "disconnected", "terminal K uncovered", ...
    explicit operator bool() const { return ok; }
};

/// Checks the SteinerTree invariants of `t` against `inst`: selected edges
/// form a single acyclic connected subgraph covering every terminal. The
/// empty set is valid exactly when Q = {r}. Never throws; the reason string
/// explains a failure.
TreeCheck validate_tree(const Instance& inst, const SteinerTree& t);

/// Directed double cover of the instance: every edge yields both arcs.
struct DirectedModel {
    std::vector<std::pair<int, int>> arcs;  // (from, to), 2 per edge
    std::vector<int> arc_to_edge;           // arc id -> source edge id
};

DirectedModel bidirect(const Instance& inst);

}  // namespace mmrstp
