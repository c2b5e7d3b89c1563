#include "mmrstp/instance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmrstp {

namespace {

std::invalid_argument bad(const std::string& what) {
    return std::invalid_argument("instance: " + what);
}

// Union-find over node ids, path halving.
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    }
    // Returns false when u and v were already joined.
    bool unite(int u, int v) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
        return true;
    }
};

}  // namespace

Instance::Instance(int node_count, std::vector<Edge> edges,
                   std::vector<int> terminals, int root)
    : node_count_(node_count),
      edges_(std::move(edges)),
      terminals_(std::move(terminals)),
      root_(root) {
    validate_and_index();
}

Instance::Instance(int node_count, std::vector<Edge> edges,
                   std::vector<int> terminals)
    : node_count_(node_count),
      edges_(std::move(edges)),
      terminals_(std::move(terminals)) {
    if (terminals_.empty()) throw bad("empty terminal set");
    root_ = *std::min_element(terminals_.begin(), terminals_.end());
    validate_and_index();
}

void Instance::validate_and_index() {
    if (node_count_ <= 0) throw bad("node count must be positive");
    if (terminals_.empty()) throw bad("empty terminal set");

    std::sort(terminals_.begin(), terminals_.end());
    terminals_.erase(std::unique(terminals_.begin(), terminals_.end()),
                     terminals_.end());
    for (int q : terminals_) {
        if (q < 1 || q > node_count_)
            throw bad("terminal " + std::to_string(q) + " out of range");
    }
    if (!is_terminal(root_))
        throw bad("root " + std::to_string(root_) + " is not a terminal");

    std::set<std::pair<int, int>> seen;
    for (Edge& e : edges_) {
        if (e.a < 1 || e.a > node_count_ || e.b < 1 || e.b > node_count_)
            throw bad("edge (" + std::to_string(e.a) + "," + std::to_string(e.b) +
                      ") has an endpoint out of range");
        if (e.a == e.b)
            throw bad("self-loop at node " + std::to_string(e.a));
        if (e.a > e.b) std::swap(e.a, e.b);
        if (!seen.insert({e.a, e.b}).second)
            throw bad("duplicate edge (" + std::to_string(e.a) + "," +
                      std::to_string(e.b) + ")");
        if (e.lower < 0)
            throw bad("negative lower cost on edge (" + std::to_string(e.a) +
                      "," + std::to_string(e.b) + ")");
        if (e.lower > e.upper)
            throw bad("lower > upper on edge (" + std::to_string(e.a) + "," +
                      std::to_string(e.b) + ")");
    }

    adjacency_.assign(node_count_ + 1, {});
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
        const Edge& e = edges_[id];
        adjacency_[e.a].push_back({e.b, id});
        adjacency_[e.b].push_back({e.a, id});
    }

    DisjointSets ds(node_count_);
    int components = node_count_;
    for (const Edge& e : edges_) {
        if (ds.unite(e.a, e.b)) --components;
    }
    if (components != 1) throw bad("graph is not connected");
}

bool Instance::is_terminal(int v) const {
    return std::binary_search(terminals_.begin(), terminals_.end(), v);
}

bool Instance::degenerate() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.lower == e.upper; });
}

Instance Instance::with_root(int new_root) const {
    Instance copy(node_count_, edges_, terminals_, new_root);
    copy.name_ = name_;
    return copy;
}

SteinerTree::SteinerTree(std::vector<int> ids) : edge_ids(std::move(ids)) {
    std::sort(edge_ids.begin(), edge_ids.end());
    edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()),
                   edge_ids.end());
}

bool SteinerTree::contains(int edge_id) const {
    return std::binary_search(edge_ids.begin(), edge_ids.end(), edge_id);
}

TreeCheck validate_tree(const Instance& inst, const SteinerTree& t) {
    const auto& edges = inst.edges();
    for (int id : t.edge_ids) {
        if (id < 0 || id >= static_cast<int>(edges.size()))
            return {false, "edge id " + std::to_string(id) + " out of range"};
    }

    if (t.empty()) {
        if (inst.terminals().size() == 1) return {true, ""};
        for (int q : inst.terminals())
            if (q != inst.root())
                return {false, "terminal " + std::to_string(q) + " uncovered"};
    }

    DisjointSets ds(inst.node_count());
    std::set<int> touched;
    for (int id : t.edge_ids) {
        const Edge& e = edges[id];
        touched.insert(e.a);
        touched.insert(e.b);
        if (!ds.unite(e.a, e.b)) return {false, "cycle"};
    }

    // Acyclic; connected iff #edges == #touched nodes - 1.
    if (t.size() + 1 != touched.size()) return {false, "disconnected"};

    for (int q : inst.terminals()) {
        if (!touched.contains(q))
            return {false, "terminal " + std::to_string(q) + " uncovered"};
    }
    return {true, ""};
}

DirectedModel bidirect(const Instance& inst) {
    DirectedModel model;
    model.arcs.reserve(2 * inst.edges().size());
    model.arc_to_edge.reserve(2 * inst.edges().size());
    for (int id = 0; id < inst.edge_count(); ++id) {
        const Edge& e = inst.edges()[id];
        model.arcs.push_back({e.a, e.b});
        model.arc_to_edge.push_back(id);
        model.arcs.push_back({e.b, e.a});
        model.arc_to_edge.push_back(id);
    }
    return model;
}

}  // namespace mmrstp
