// Release gate: one self-contained check per shipped guarantee, one
// [PASS]/[FAIL] line each, nonzero exit if anything fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mmrstp/bench.hpp"
#include "mmrstp/heuristics.hpp"
#include "mmrstp/instgen.hpp"
#include "mmrstp/milp_backend.hpp"
#include "mmrstp/steinlib.hpp"
#include "support/random_instances.hpp"

using namespace mmrstp;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

std::string data_dir() {
#ifdef MMRSTP_DATA_DIR
    return MMRSTP_DATA_DIR;
#else
    return "data";
#endif
}

const StpSolver& dw() {
    static const StpSolver solver = make_solver(SolverKind::DreyfusWagner);
    return solver;
}

std::string tools_dir() {
#ifdef MMRSTP_TOOLS_DIR
    return MMRSTP_TOOLS_DIR;
#else
    return "tests/tools";
#endif
}

Instance tiny1() {
    return Instance(3, {{1, 2, 4, 8}, {1, 3, 1, 3}, {2, 3, 1, 3}}, {1, 2});
}

// Shared random suite for the exactness, bound and cross-check criteria.
struct SuiteEntry {
    Instance instance;
    Cost optimum;
};

const std::vector<SuiteEntry>& shared_suite() {
    static const std::vector<SuiteEntry> suite = [] {
        std::vector<SuiteEntry> out;
        SplitMix64 rng(20260823);
        while (out.size() < 200) {
            Instance inst = testsupport::random_instance(rng);
            out.push_back({inst, minmax_regret_bruteforce(inst).second.robust_cost});
        }
        return out;
    }();
    return suite;
}

void check_exactness() {
    for (const auto& entry : shared_suite()) {
        BendersResult res = benders_solve(entry.instance, {});
        require(res.state.optimal, "constraint generation did not converge");
        require(res.report.robust_cost == entry.optimum,
                "constraint generation returned " +
                    std::to_string(res.report.robust_cost) + ", brute force " +
                    std::to_string(entry.optimum));
    }
}

void check_extreme_sweep() {
    SplitMix64 rng(777);
    int pairs = 0;
    while (pairs < 100) {
        Instance inst = testsupport::random_instance(rng);
        SteinerTree tree = testsupport::random_tree(rng, inst);
        RegretReport report = robust_cost(inst, tree);

        Cost sweep = 0;
        const int m = inst.edge_count();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            Scenario s = extreme_scenario(inst, mask);
            Cost regret =
                tree_cost(inst, tree, s) - solve_bruteforce(inst, s).cost;
            if (regret > sweep) sweep = regret;
        }
        require(report.robust_cost == sweep,
                "closed-form worst case " +
                    std::to_string(report.robust_cost) +
                    " != extreme sweep " + std::to_string(sweep));
        ++pairs;
    }
}

void check_factor_two() {
    for (const auto& entry : shared_suite()) {
        const Cost mean = algorithm_mean(entry.instance, dw()).report.robust_cost;
        const Cost both = algorithm_mean_upper(entry.instance, dw()).report.robust_cost;
        require(mean <= 2 * entry.optimum,
                "midpoint heuristic exceeded twice the optimum (" +
                    std::to_string(mean) + " > 2*" +
                    std::to_string(entry.optimum) + ")");
        require(both <= 2 * entry.optimum,
                "combined heuristic exceeded twice the optimum");
    }
}

void check_combined_dominance() {
    for (const auto& entry : shared_suite()) {
        const Cost mean = algorithm_mean(entry.instance, dw()).report.robust_cost;
        const Cost upper = algorithm_upper(entry.instance, dw()).report.robust_cost;
        const Cost both = algorithm_mean_upper(entry.instance, dw()).report.robust_cost;
        require(both == std::min(mean, upper),
                "combined heuristic is not the better of its two parts");
    }
}

void check_oracle_equivalence() {
    SplitMix64 rng(31337);
    int pairs = 0;
    while (pairs < 200) {
        Instance inst = testsupport::random_instance(rng);
        Scenario s = extreme_scenario(
            inst, rng.next() & ((std::uint64_t{1} << inst.edge_count()) - 1));
        StpSolution dp = solve_exact_dw(inst, s);
        StpSolution brute = solve_bruteforce(inst, s);
        require(dp.cost == brute.cost,
                "dynamic program " + std::to_string(dp.cost) +
                    " != brute force " + std::to_string(brute.cost));
        ++pairs;
    }
}

void check_trace(const BendersResult& res) {
    const auto& trace = res.state.trace;
    require(!trace.empty(), "empty iteration trace");
    for (std::size_t i = 1; i < trace.size(); ++i) {
        require(trace[i].lower_bound >= trace[i - 1].lower_bound,
                "lower bound decreased between iterations");
        require(trace[i].upper_bound <= trace[i - 1].upper_bound,
                "upper bound increased between iterations");
    }
    require(res.state.optimal, "run did not certify optimality");
    require(res.state.lower_bound == res.report.robust_cost,
            "bounds did not meet at termination");
}

void check_trace_invariants() {
    SplitMix64 rng(606);
    for (int round = 0; round < 60; ++round)
        check_trace(benders_solve(testsupport::random_instance(rng), {}));

    BendersResult res = benders_solve(tiny1(), {});
    check_trace(res);
    require(res.report.robust_cost == 2,
            "reference instance optimum is not 2");
    require(res.state.iterations == 2,
            "reference instance took " +
                std::to_string(res.state.iterations) +
                " iterations instead of 2");
}

void check_degenerate_collapse() {
    SplitMix64 rng(99);
    for (int round = 0; round < 50; ++round) {
        Instance inst = testsupport::random_instance(rng, true);
        const Scenario fixed = lower_scenario(inst);
        const Cost best = solve_exact_dw(inst, fixed).cost;

        std::vector<std::pair<std::string, std::pair<Cost, SteinerTree>>> runs;
        HeuristicResult am = algorithm_mean(inst, dw());
        runs.push_back({"am", {am.report.robust_cost, am.tree}});
        HeuristicResult au = algorithm_upper(inst, dw());
        runs.push_back({"au", {au.report.robust_cost, au.tree}});
        HeuristicResult amu = algorithm_mean_upper(inst, dw());
        runs.push_back({"amu", {amu.report.robust_cost, amu.tree}});
        BendersResult bd = benders_solve(inst, {});
        runs.push_back({"benders", {bd.report.robust_cost, bd.tree}});
        auto [bt, br] = minmax_regret_bruteforce(inst);
        runs.push_back({"brute", {br.robust_cost, bt}});

        for (const auto& [name, zt] : runs) {
            require(zt.first == 0,
                    name + " regret is nonzero on a fixed-cost instance");
            require(tree_cost(inst, zt.second, fixed) == best,
                    name + " tree is not optimal at the fixed costs");
        }
    }
}

void check_instance(const std::string& path, int nodes, int edges,
                    int terminals) {
    Instance inst = load_instance(path);
    require(inst.node_count() == nodes,
            path + ": expected " + std::to_string(nodes) + " nodes, got " +
                std::to_string(inst.node_count()));
    require(inst.edge_count() == edges,
            path + ": expected " + std::to_string(edges) + " edges, got " +
                std::to_string(inst.edge_count()));
    require(static_cast<int>(inst.terminals().size()) == terminals,
            path + ": expected " + std::to_string(terminals) +
                " terminals, got " +
                std::to_string(inst.terminals().size()));
}

std::string check_parser_goldens() {
    namespace fs = std::filesystem;
    const char* env = std::getenv("MMRSTP_STEINLIB_DIR");
    if (env != nullptr && fs::exists(fs::path(env) / "wrp3-11.stp") &&
        fs::exists(fs::path(env) / "wrp3-15.stp")) {
        check_instance((fs::path(env) / "wrp3-11.stp").string(), 128, 227, 11);
        check_instance((fs::path(env) / "wrp3-15.stp").string(), 138, 257, 15);
        return "steinlib wrp3-11 and wrp3-15";
    }
    check_instance(data_dir() + "/wrp3like/wrp3like-11.stp", 128, 227, 11);
    check_instance(data_dir() + "/wrp3like/wrp3like-15.stp", 138, 257, 15);
    return "vendored goldens; real files skipped, set MMRSTP_STEINLIB_DIR "
           "to a directory holding wrp3-11.stp and wrp3-15.stp to cover them";
}

bool same_instance(const Instance& a, const Instance& b) {
    if (a.node_count() != b.node_count()) return false;
    if (a.terminals() != b.terminals() || a.root() != b.root()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    for (int e = 0; e < a.edge_count(); ++e) {
        const Edge &x = a.edges()[e], &y = b.edges()[e];
        if (x.a != y.a || x.b != y.b || x.lower != y.lower ||
            x.upper != y.upper)
            return false;
    }
    return true;
}

void check_generator() {
    std::vector<Edge> path_edges;
    for (int v = 1; v <= 1100; ++v)
        path_edges.push_back({v, v + 1, 37 + (v * 17) % 400,
                              37 + (v * 17) % 400});
    Instance base(1101, path_edges, {1, 1101});

    for (GenMethod method : {GenMethod::Be, GenMethod::Mo,
                             GenMethod::Kz}) {
        GeneratorConfig cfg;
        cfg.method = method;
        cfg.seed = 5150;
        require(same_instance(generate(base, cfg), generate(base, cfg)),
                std::string(gen_method_name(method)) +
                    " is not reproducible for a fixed seed");
    }

    GeneratorConfig narrow, mid, wide;
    narrow.beta = {1, 10};
    mid.beta = {1, 2};
    wide.beta = {9, 10};
    Instance g1 = generate(base, narrow), g2 = generate(base, mid),
             g3 = generate(base, wide);
    for (int e = 0; e < base.edge_count(); ++e) {
        const Cost w1 = g1.edges()[e].upper - g1.edges()[e].lower;
        const Cost w2 = g2.edges()[e].upper - g2.edges()[e].lower;
        const Cost w3 = g3.edges()[e].upper - g3.edges()[e].lower;
        require(w1 <= w2 && w2 <= w3,
                "interval widths are not monotone in the width fraction");
    }

    for (GenMethod method :
         {GenMethod::Mo, GenMethod::Kz}) {
        double previous = -1.0;
        for (Cost m : {10, 100, 750, 5000}) {
            GeneratorConfig cfg;
            cfg.method = method;
            cfg.m = m;
            cfg.seed = 4242;
            Instance g = generate(base, cfg);
            double total = 0.0;
            for (int e = 0; e < g.edge_count(); ++e)
                total += double(g.edges()[e].upper - g.edges()[e].lower);
            const double mean = total / g.edge_count();
            require(mean >= previous,
                    std::string(gen_method_name(method)) +
                        " mean width shrank when M grew");
            previous = mean;
        }
    }
}

std::string check_backend_crosscheck() {
    if (std::system("python3 -c 'import scipy.optimize' >/dev/null 2>&1") != 0)
        return "skipped: no MILP solver available (needs python3 + scipy)";
    const std::string cmd =
        "python3 " + tools_dir() + "/milp_solve.py {lp} {sol}";

    for (const auto& entry : shared_suite()) {
        const Instance& inst = entry.instance;
        HeuristicResult mean = algorithm_mean(inst, dw());
        HeuristicResult upper = algorithm_upper(inst, dw());
        std::vector<Cut> cuts{Cut{mean.tree}};
        if (upper.tree != mean.tree) cuts.push_back(Cut{upper.tree});

        MasterSolution direct = master_solve(inst, cuts);
        MasterSolution external = master_solve_external(inst, cuts, cmd);
        require(direct.objective == external.objective,
                "external master objective " +
                    std::to_string(external.objective) +
                    " != enumerated objective " +
                    std::to_string(direct.objective));
    }

    BendersOptions opts;
    opts.backend = MasterBackend::ExternalLp;
    opts.milp_command = cmd;
    BendersResult res = benders_solve(tiny1(), opts);
    require(res.state.optimal && res.report.robust_cost == 2,
            "external-backend run on the reference instance went wrong");
    return "external MILP agreed on all 200 masters";
}

struct Criterion {
    int number;
    std::string label;
    double budget_seconds;
    std::function<std::string()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "constraint generation matches brute force on 200 instances",
         120.0, [] { check_exactness(); return std::string(); }},
        {2, "worst-case regret equals the full extreme-scenario sweep",
         120.0, [] { check_extreme_sweep(); return std::string(); }},
        {3, "midpoint-guided heuristics stay within twice the optimum", 0.0,
         [] { check_factor_two(); return std::string(); }},
        {4, "combined heuristic equals the better of its two parts", 0.0,
         [] { check_combined_dominance(); return std::string(); }},
        {5, "dynamic program matches brute force on 200 scenario pairs", 0.0,
         [] { check_oracle_equivalence(); return std::string(); }},
        {6, "bound traces are monotone and close at the optimum", 0.0,
         [] { check_trace_invariants(); return std::string(); }},
        {7, "all methods collapse to the classic optimum at fixed costs", 0.0,
         [] { check_degenerate_collapse(); return std::string(); }},
        {8, "parser reproduces the published instance headers", 0.0,
         check_parser_goldens},
        {9, "generator is reproducible and monotone in its parameters", 0.0,
         [] { check_generator(); return std::string(); }},
        {10, "external MILP backend agrees with the enumerated master", 0.0,
         check_backend_crosscheck},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string note;
        std::string error;
        try {
            note = criterion.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (error.empty() && criterion.budget_seconds > 0.0 &&
            elapsed > criterion.budget_seconds) {
            std::ostringstream over;
            over << "exceeded the " << criterion.budget_seconds
                 << " s budget (" << elapsed << " s)";
            error = over.str();
        }

        std::ostringstream line;
        line << (error.empty() ? "[PASS]" : "[FAIL]") << " " << criterion.number
             << ". " << criterion.label;
        if (!note.empty()) line << " (" << note << ")";
        if (!error.empty()) line << ": " << error;
        char stamp[32];
        std::snprintf(stamp, sizeof(stamp), "  [%.1f s]", elapsed);
        line << stamp;
        std::cout << line.str() << "\n";
        if (!error.empty()) ++failures;
    }

    if (failures != 0) {
        std::cout << failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
