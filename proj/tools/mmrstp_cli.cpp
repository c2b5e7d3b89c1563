// Command-line front end: instance generation, single solves, tree
// evaluation, suite benchmarking and LP-file export.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mmrstp/bench.hpp"
#include "mmrstp/heuristics.hpp"
#include "mmrstp/instgen.hpp"
#include "mmrstp/lp_export.hpp"
#include "mmrstp/milp_backend.hpp"
#include "mmrstp/steinlib.hpp"

using json = nlohmann::json;
using namespace mmrstp;

namespace {

// Exit statuses: 0 ok, 2 unreadable input, 3 solver/configuration failure,
// 4 cap expiry without an optimality certificate.
constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitSolve = 3;
constexpr int kExitTimeout = 4;

SolverKind oracle_from_name(const std::string& name) {
    if (name == "dw") return SolverKind::DreyfusWagner;
    if (name == "brute") return SolverKind::BruteForce;
    if (name == "sp") return SolverKind::ShortestPath;
    throw CLI::ValidationError("--oracle", "expected dw, brute or sp");
}

MasterBackend backend_from_name(const std::string& name) {
    if (name == "enumerate") return MasterBackend::Enumerate;
    if (name == "external-lp") return MasterBackend::ExternalLp;
    throw CLI::ValidationError("--backend",
                               "expected enumerate or external-lp");
}

Instance load_with_root(const std::string& path, int root_override) {
    Instance inst = load_instance(path);
    if (root_override > 0) return inst.with_root(root_override);
    return inst;
}

std::vector<std::pair<int, int>> tree_endpoints(const Instance& inst,
                                                const SteinerTree& t) {
    std::vector<std::pair<int, int>> out;
    for (int id : t.edge_ids)
        out.emplace_back(inst.edges()[id].a, inst.edges()[id].b);
    return out;
}

json record_json(const BenchRecord& rec, const Instance* inst) {
    json j;
    j["instance"] = rec.instance_name;
    j["method"] = bench_method_name(rec.method);
    j["Z"] = rec.robust_cost ? json(*rec.robust_cost) : json();
    j["LB"] = rec.lower_bound ? json(*rec.lower_bound) : json();
    j["gap_pct"] = rec.gap_pct ? json(*rec.gap_pct) : json();
    j["dev_pct"] = rec.dev_pct ? json(*rec.dev_pct) : json();
    j["time_s"] = rec.wall_time_seconds;
    j["iters"] = rec.iterations ? json(*rec.iterations) : json();
    j["optimal"] = rec.optimal;
    j["edge_ids"] = rec.tree_edge_ids;
    if (inst != nullptr) {
        json tree = json::array();
        for (auto [a, b] : tree_endpoints(*inst, SteinerTree(rec.tree_edge_ids)))
            tree.push_back({a, b});
        j["tree"] = tree;
    }
    if (!rec.error.empty()) j["error"] = rec.error;
    return j;
}

// "1-2,2-3" -> edge ids, matched against the instance's edge list.
SteinerTree tree_from_spec(const Instance& inst, const std::string& spec) {
    std::vector<int> ids;
    std::stringstream in(spec);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) continue;
        const auto dash = part.find('-');
        if (dash == std::string::npos)
            throw CLI::ValidationError(
                "--tree", "bad edge '" + part + "' (expected A-B)");
        int a, b;
        try {
            a = std::stoi(part.substr(0, dash));
            b = std::stoi(part.substr(dash + 1));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--tree", "bad edge '" + part + "'");
        }
        if (a > b) std::swap(a, b);
        int found = -1;
        for (int e = 0; e < inst.edge_count(); ++e)
            if (inst.edges()[e].a == a && inst.edges()[e].b == b) found = e;
        if (found < 0)
            throw CLI::ValidationError("--tree", "no edge " +
                                                     std::to_string(a) + "-" +
                                                     std::to_string(b) +
                                                     " in the instance");
        ids.push_back(found);
    }
    return SteinerTree(ids);
}

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

struct SolveFlags {
    std::string oracle = "dw";
    std::string backend = "enumerate";
    std::string milp_cmd;
    int max_iters = 1000;
    double time_limit = 600.0;
    int root = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--oracle", oracle,
                        "deterministic subproblem solver: dw, brute or sp")
            ->capture_default_str();
        cmd->add_option("--backend", backend,
                        "master backend: enumerate or external-lp")
            ->capture_default_str();
        cmd->add_option("--milp-cmd", milp_cmd,
                        "external MILP command template with {lp} and {sol}")
            ->envname("MMRSTP_MILP_CMD");
        cmd->add_option("--max-iters", max_iters,
                        "iteration cap for constraint generation")
            ->capture_default_str();
        cmd->add_option("--time-limit", time_limit, "time cap in seconds")
            ->capture_default_str();
        cmd->add_option("--root", root, "override the root terminal");
    }

    BenchOptions bench_options() const {
        BenchOptions opts;
        opts.oracle = oracle_from_name(oracle);
        opts.backend = backend_from_name(backend);
        opts.milp_command = milp_cmd;
        opts.max_iterations = max_iters;
        opts.time_limit_seconds = time_limit;
        return opts;
    }
};

int cmd_gen(const std::string& base_path, const std::string& method,
            const std::string& param, std::uint64_t seed,
            const std::string& out_path) {
    Instance base = [&] {
        try {
            return load_instance(base_path);
        } catch (const ParseError& e) {
            std::cerr << "error: " << base_path << ": " << e.what() << "\n";
            std::exit(kExitParse);
        }
    }();

    GeneratorConfig cfg;
    cfg.method = gen_method_from_name(method);
    cfg.seed = seed;
    if (cfg.method == GenMethod::Be)
        cfg.beta = parse_rational(param.empty() ? "0.5" : param);
    else if (!param.empty())
        cfg.m = std::stoll(param);

    Instance out = generate(base, cfg);
    std::ostringstream text;
    write_interval_stp(out, text, generator_comments(base, cfg));
    write_text(out_path, text.str());
    return kExitOk;
}

int cmd_solve(const std::string& path, const std::string& method,
              const SolveFlags& flags, bool print_tree) {
    Instance inst = load_with_root(path, flags.root);
    BenchRecord rec =
        run_method(inst, bench_method_from_name(method), flags.bench_options());
    std::cout << record_json(rec, print_tree ? &inst : nullptr).dump(2) << "\n";
    if (!rec.error.empty()) return kExitSolve;
    if (rec.method == BenchMethod::Benders && !rec.optimal) return kExitTimeout;
    return kExitOk;
}

int cmd_eval(const std::string& path, const std::string& tree_spec,
             const SolveFlags& flags) {
    Instance inst = load_with_root(path, flags.root);
    SteinerTree tree = tree_from_spec(inst, tree_spec);

    RegretReport report =
        robust_cost(inst, tree, make_solver(oracle_from_name(flags.oracle)));
    json j;
    j["instance"] = inst.name();
    j["Z"] = report.robust_cost;
    j["tree_cost_worst"] = report.tree_cost_worst;
    j["adversary_cost"] = report.adversary_cost;
    j["worst_scenario"] = report.worst_scenario.costs;
    j["adversary_edge_ids"] = report.adversary_tree.edge_ids;
    j["exact"] = report.exact;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_bench(const std::string& dir, const std::string& methods_csv,
              const SolveFlags& flags, const std::string& out_path) {
    BenchOptions opts = flags.bench_options();
    opts.methods.clear();
    std::stringstream in(methods_csv);
    std::string name;
    while (std::getline(in, name, ','))
        if (!name.empty()) opts.methods.push_back(bench_method_from_name(name));

    auto records = run_bench(dir, opts);
    if (records.empty())
        std::cerr << "warning: no .stp instances under '" << dir << "'\n";
    write_text(out_path, bench_csv(records));
    return kExitOk;
}

int cmd_export_lp(const std::string& path, const std::string& model,
                  const std::string& scenario_name, const SolveFlags& flags,
                  const std::string& out_path) {
    Instance inst = load_with_root(path, flags.root);
    std::ostringstream text;

    if (model == "stp") {
        Scenario s = scenario_name == "lower"      ? lower_scenario(inst)
                     : scenario_name == "midpoint" ? midpoint_scenario(inst)
                     : scenario_name == "upper"
                         ? upper_scenario(inst)
                         : throw CLI::ValidationError(
                               "--scenario", "expected lower, upper or midpoint");
        export_stp_lp(inst, s, text);
    } else if (model == "master") {
        // Seed the cut pool the way constraint generation starts out.
        const StpSolver solver = make_solver(oracle_from_name(flags.oracle));
        HeuristicResult mean = algorithm_mean(inst, solver);
        HeuristicResult upper = algorithm_upper(inst, solver);
        std::vector<Cut> cuts{Cut{mean.tree}};
        if (upper.tree != mean.tree) cuts.push_back(Cut{upper.tree});
        export_master_lp(inst, cuts, text);
    } else {
        throw CLI::ValidationError("--model", "expected stp or master");
    }
    write_text(out_path, text.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Min-max regret Steiner trees over interval costs: exact "
        "constraint generation, heuristics and benchmark tooling"};
    app.require_subcommand(1);

    std::string instance_path, out_path, method, param, tree_spec;
    std::string gen_method, model = "stp", scenario = "upper";
    std::string methods_csv = "am,au,amu,benders";
    std::uint64_t seed = 0;
    bool no_tree = false;
    SolveFlags flags;

    auto* gen = app.add_subcommand("gen", "derive an interval instance");
    gen->add_option("base", instance_path, "deterministic base instance")
        ->required();
    gen->add_option("--method", gen_method, "recipe: be, mo or kz")->required();
    gen->add_option("--param", param,
                    "recipe parameter (width fraction for be, M otherwise)");
    gen->add_option("--seed", seed, "stream seed")->capture_default_str();
    gen->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* solve = app.add_subcommand("solve", "solve one instance");
    solve->add_option("instance", instance_path, "instance file")->required();
    solve->add_option("--method", method, "benders, am, au, amu or brute")
        ->default_val("benders")
        ->capture_default_str();
    solve->add_flag("--no-tree", no_tree, "omit the tree certificate");
    flags.attach(solve);

    auto* eval = app.add_subcommand(
        "eval", "evaluate the maximum regret of a given tree");
    eval->add_option("instance", instance_path, "instance file")->required();
    eval->add_option("--tree", tree_spec, "edge list like 1-3,2-3")->required();
    flags.attach(eval);

    auto* bench = app.add_subcommand("bench", "run a suite, emit CSV");
    bench->add_option("suite", instance_path, "directory of .stp files")
        ->required();
    bench->add_option("--methods", methods_csv, "comma-separated method list")
        ->capture_default_str();
    bench->add_option("-o,--out", out_path, "output CSV (default stdout)");
    flags.attach(bench);

    auto* exp = app.add_subcommand("export-lp", "write an LP-format model");
    exp->add_option("instance", instance_path, "instance file")->required();
    exp->add_option("--model", model, "stp or master")->capture_default_str();
    exp->add_option("--scenario", scenario,
                    "scenario for the stp model: lower, upper or midpoint")
        ->capture_default_str();
    exp->add_option("-o,--out", out_path, "output file (default stdout)");
    flags.attach(exp);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(instance_path, gen_method, param, seed, out_path);
        if (solve->parsed())
            return cmd_solve(instance_path, method, flags, !no_tree);
        if (eval->parsed()) return cmd_eval(instance_path, tree_spec, flags);
        if (bench->parsed())
            return cmd_bench(instance_path, methods_csv, flags, out_path);
        if (exp->parsed())
            return cmd_export_lp(instance_path, model, scenario, flags,
                                 out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << instance_path << ": " << e.what() << "\n";
        return kExitParse;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolve;
    }
    return kExitOk;
}
