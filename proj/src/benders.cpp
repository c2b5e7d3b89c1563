#include "mmrstp/benders.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "mask_tree.hpp"
#include "mmrstp/heuristics.hpp"
#include "mmrstp/scenario.hpp"
#include "mmrstp/stp.hpp"

namespace mmrstp {

Cost cut_value(const Instance& inst, const Cut& cut, const SteinerTree& x) {
    Cost total = 0;
    for (int id : cut.tree.edge_ids) {
        const Edge& e = inst.edges()[id];
        total += e.lower;
        if (x.contains(id)) total += e.upper - e.lower;
    }
    return total;
}

double BendersState::gap_pct() const {
    const Cost ub = incumbent_report.robust_cost;
    if (ub <= 0) return 0.0;
    return 100.0 * static_cast<double>(ub - lower_bound) /
           static_cast<double>(ub);
}

namespace {

constexpr int kMaxMasterEdges = 24;

// Branch-and-bound master solver over edge subsets. At a partial assignment
// the objective is bounded below by
//   sum(u over included) - min over cuts of the largest achievable relief,
// where the relief of a cut counts every not-yet-excluded member edge at
// full width. Ties on the objective are kept open and resolved
// lexicographically, so the result does not depend on the search order.
class MasterSearch {
public:
    MasterSearch(const Instance& inst, const std::vector<Cut>& cuts)
        : inst_(inst), m_(inst.edge_count()) {
        for (const Cut& c : cuts) {
            cut_masks_.push_back(detail::mask_from_tree(c.tree));
            Cost base = 0;
            for (int id : c.tree.edge_ids) base += inst.edges()[id].lower;
            cut_base_.push_back(base);
        }
        for (const Edge& e : inst.edges()) width_.push_back(e.upper - e.lower);
    }

    MasterSolution run() {
        const StpSolution seed = solve_heuristic_sp(inst_, upper_scenario(inst_));
        best_mask_ = detail::mask_from_tree(seed.tree);
        best_obj_ = objective(best_mask_);
        descend(0, 0);
        return {detail::tree_from_mask(best_mask_), best_obj_};
    }

private:
    std::int64_t objective(std::uint32_t x_mask) const {
        Cost upper_sum = 0;
        for (std::uint32_t rest = x_mask; rest; rest &= rest - 1)
            upper_sum += inst_.edges()[std::countr_zero(rest)].upper;
        return upper_sum - best_relief(x_mask);
    }

    // min over cuts of the cut value, with member edges of `counted` at
    // full width. For counted == x this is the exact relief; for a superset
    // it is an upper bound.
    Cost best_relief(std::uint32_t counted) const {
        Cost best = std::numeric_limits<Cost>::max();
        for (std::size_t c = 0; c < cut_masks_.size(); ++c) {
            Cost value = cut_base_[c];
            for (std::uint32_t rest = cut_masks_[c] & counted; rest;
                 rest &= rest - 1)
                value += width_[std::countr_zero(rest)];
            best = std::min(best, value);
        }
        return best;
    }

    void descend(int idx, std::uint32_t in_mask) {
        if (idx == m_) {
            if (!detail::mask_is_tree(inst_, in_mask)) return;
            const std::int64_t obj = objective(in_mask);
            if (obj < best_obj_ ||
                (obj == best_obj_ &&
                 detail::mask_lex_less(in_mask, best_mask_))) {
                best_obj_ = obj;
                best_mask_ = in_mask;
            }
            return;
        }

        const std::uint32_t free_mask =
            ((std::uint32_t{1} << m_) - 1) & ~((std::uint32_t{1} << idx) - 1);
        const std::uint32_t allowed = in_mask | free_mask;

        if (!connectable(in_mask, allowed)) return;

        Cost in_upper = 0;
        for (std::uint32_t rest = in_mask; rest; rest &= rest - 1)
            in_upper += inst_.edges()[std::countr_zero(rest)].upper;
        const std::int64_t lb = in_upper - best_relief(allowed);
        if (lb > best_obj_) return;

        // Include idx unless it closes a cycle among the included edges.
        const std::uint32_t with = in_mask | (std::uint32_t{1} << idx);
        if (acyclic(with)) descend(idx + 1, with);
        descend(idx + 1, in_mask);
    }

    bool acyclic(std::uint32_t mask) const {
        int parent[64];
        const int n = inst_.node_count();
        for (int v = 1; v <= n; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            const Edge& e = inst_.edges()[std::countr_zero(rest)];
            int ra = find(e.a), rb = find(e.b);
            if (ra == rb) return false;
            parent[ra] = rb;
        }
        return true;
    }

    // All terminals and all included-edge endpoints must share one component
    // of the still-allowed subgraph, otherwise no completion is feasible.
    bool connectable(std::uint32_t in_mask, std::uint32_t allowed) const {
        int parent[64];
        const int n = inst_.node_count();
        for (int v = 1; v <= n; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        for (std::uint32_t rest = allowed; rest; rest &= rest - 1) {
            const Edge& e = inst_.edges()[std::countr_zero(rest)];
            parent[find(e.a)] = find(e.b);
        }
        const int rep = find(inst_.root());
        for (int q : inst_.terminals())
            if (find(q) != rep) return false;
        for (std::uint32_t rest = in_mask; rest; rest &= rest - 1) {
            const Edge& e = inst_.edges()[std::countr_zero(rest)];
            if (find(e.a) != rep) return false;
        }
        return true;
    }

    const Instance& inst_;
    const int m_;
    std::vector<std::uint32_t> cut_masks_;
    std::vector<Cost> cut_base_;
    std::vector<Cost> width_;

    std::int64_t best_obj_ = 0;
    std::uint32_t best_mask_ = 0;
};

}  // namespace

MasterSolution master_solve(const Instance& inst, const std::vector<Cut>& cuts) {
    if (cuts.empty())
        throw std::invalid_argument(
            "master_solve: empty cut pool leaves the master unbounded");
    if (inst.edge_count() > kMaxMasterEdges)
        throw std::invalid_argument("master_solve: instance exceeds " +
                                    std::to_string(kMaxMasterEdges) +
                                    " edges; use the external-lp backend");
    return MasterSearch(inst, cuts).run();
}

BendersResult benders_solve(const Instance& inst, const BendersOptions& opts) {
    using Clock = std::chrono::steady_clock;
    const auto started = Clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(Clock::now() - started).count();
    };

    if (opts.oracle == SolverKind::ShortestPath)
        throw std::invalid_argument(
            "benders_solve: the subproblem oracle must be exact (dw or brute)");
    const StpSolver solver = make_solver(opts.oracle);

    auto solve_master = [&](const std::vector<Cut>& cuts) {
        if (opts.backend == MasterBackend::Enumerate)
            return master_solve(inst, cuts);
        return master_solve_external(inst, cuts, opts.milp_command);
    };

    BendersState state;
    state.lower_bound = 0;  // Z(x) >= 0 for every tree

    // Seed cuts and incumbent from the two framework heuristics.
    HeuristicResult mean = algorithm_mean(inst, solver);
    HeuristicResult upper = algorithm_upper(inst, solver);
    state.cut_pool.push_back(Cut{mean.tree});
    if (upper.tree != mean.tree) state.cut_pool.push_back(Cut{upper.tree});
    HeuristicResult& seed =
        upper.report.robust_cost < mean.report.robust_cost ? upper : mean;
    state.incumbent = seed.tree;
    state.incumbent_report = seed.report;

    while (state.iterations < opts.max_iterations &&
           elapsed() < opts.time_limit_seconds) {
        const int h = ++state.iterations;

        const auto master_start = Clock::now();
        MasterSolution master = solve_master(state.cut_pool);
        const double master_secs =
            std::chrono::duration<double>(Clock::now() - master_start).count();

        if (master.objective < state.lower_bound)
            throw std::runtime_error(
                "benders_solve: master lower bound decreased; backend is not "
                "exact");
        state.lower_bound = master.objective;

        const auto sub_start = Clock::now();
        RegretReport report = robust_cost(inst, master.tree, solver);
        const double sub_secs =
            std::chrono::duration<double>(Clock::now() - sub_start).count();

        if (report.robust_cost < state.incumbent_report.robust_cost) {
            state.incumbent = master.tree;
            state.incumbent_report = report;
        }
        const Cost ub = state.incumbent_report.robust_cost;

        state.trace.push_back({h, state.lower_bound, ub,
                               state.cut_pool.size(), master_secs, sub_secs});

        if (state.lower_bound >= ub) {
            if (state.lower_bound > ub)
                throw std::runtime_error(
                    "benders_solve: lower bound exceeded the incumbent");
            state.optimal = true;
            break;
        }

        // The separated adversary is new whenever the gap is still open.
        Cut fresh{report.adversary_tree};
        for (const Cut& c : state.cut_pool)
            if (c.tree == fresh.tree)
                throw std::logic_error("benders_solve: repeated cut");
        state.cut_pool.push_back(std::move(fresh));
    }

    return {state.incumbent, state.incumbent_report, state};
}

}  // namespace mmrstp
