#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>
#include <stdexcept>

#include "mmrstp/bench.hpp"
#include "mmrstp/heuristics.hpp"
#include "mmrstp/instgen.hpp"
#include "mmrstp/lp_export.hpp"
#include "mmrstp/steinlib.hpp"

namespace py = pybind11;
using namespace mmrstp;

namespace {

SolverKind kind_from_name(const std::string& name) {
    if (name == "dw") return SolverKind::DreyfusWagner;
    if (name == "brute") return SolverKind::BruteForce;
    if (name == "sp") return SolverKind::ShortestPath;
    throw std::invalid_argument("unknown oracle '" + name +
                                "' (expected dw, brute or sp)");
}

GeneratorConfig generator_config(const std::string& method,
                                 const std::string& param,
                                 std::uint64_t seed) {
    GeneratorConfig cfg;
    cfg.method = gen_method_from_name(method);
    cfg.seed = seed;
    if (cfg.method == GenMethod::Be)
        cfg.beta = parse_rational(param.empty() ? "0.5" : param);
    else if (!param.empty())
        cfg.m = std::stoll(param);
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_mmrstp, m) {
    m.doc() = "Min-max regret Steiner trees over interval edge costs";

    py::class_<Edge>(m, "Edge")
        .def(py::init([](int a, int b, Cost lower, Cost upper) {
                 return Edge{a, b, lower, upper};
             }),
             py::arg("a"), py::arg("b"), py::arg("lower"), py::arg("upper"))
        .def_readonly("a", &Edge::a)
        .def_readonly("b", &Edge::b)
        .def_readonly("lower", &Edge::lower)
        .def_readonly("upper", &Edge::upper)
        .def("__repr__", [](const Edge& e) {
            std::ostringstream out;
            out << "Edge(" << e.a << ", " << e.b << ", " << e.lower << ", "
                << e.upper << ")";
            return out.str();
        });

    py::class_<SteinerTree>(m, "SteinerTree")
        .def(py::init<>())
        .def(py::init<std::vector<int>>(), py::arg("edge_ids"))
        .def_readonly("edge_ids", &SteinerTree::edge_ids)
        .def(py::self == py::self)
        .def("__repr__", [](const SteinerTree& t) {
            std::ostringstream out;
            out << "SteinerTree([";
            for (std::size_t i = 0; i < t.edge_ids.size(); ++i)
                out << (i ? ", " : "") << t.edge_ids[i];
            out << "])";
            return out.str();
        });

    py::class_<TreeCheck>(m, "TreeCheck")
        .def_readonly("ok", &TreeCheck::ok)
        .def_readonly("reason", &TreeCheck::reason);

    py::class_<Instance>(m, "Instance")
        .def(py::init<int, std::vector<Edge>, std::vector<int>>(),
             py::arg("node_count"), py::arg("edges"), py::arg("terminals"))
        .def(py::init<int, std::vector<Edge>, std::vector<int>, int>(),
             py::arg("node_count"), py::arg("edges"), py::arg("terminals"),
             py::arg("root"))
        .def_property_readonly("node_count", &Instance::node_count)
        .def_property_readonly("edge_count", &Instance::edge_count)
        .def_property_readonly("edges", &Instance::edges)
        .def_property_readonly("terminals", &Instance::terminals)
        .def_property_readonly("root", &Instance::root)
        .def_property_readonly("degenerate", &Instance::degenerate)
        .def_property("name", &Instance::name, &Instance::set_name)
        .def("is_terminal", &Instance::is_terminal, py::arg("node"))
        .def("with_root", &Instance::with_root, py::arg("root"))
        .def("__repr__", [](const Instance& inst) {
            std::ostringstream out;
            out << "Instance('" << inst.name() << "', " << inst.node_count()
                << " nodes, " << inst.edge_count() << " edges, "
                << inst.terminals().size() << " terminals)";
            return out.str();
        });

    m.def("validate_tree", &validate_tree, py::arg("instance"),
          py::arg("tree"));

    py::class_<Scenario>(m, "Scenario")
        .def_readonly("costs", &Scenario::costs)
        .def_readonly("scale", &Scenario::scale)
        .def("value", [](const Scenario& s, int e) {
            return double(s.costs.at(e)) / s.scale;
        });

    m.def("lower_scenario", &lower_scenario);
    m.def("upper_scenario", &upper_scenario);
    m.def("midpoint_scenario", &midpoint_scenario);
    m.def("worst_case_scenario", &worst_case_scenario, py::arg("instance"),
          py::arg("tree"));
    m.def("extreme_scenario", &extreme_scenario, py::arg("instance"),
          py::arg("mask"));
    m.def("scenario_from_costs", &scenario_from_costs, py::arg("instance"),
          py::arg("costs"), py::arg("scale") = 1);
    m.def("scenario_in_box", &scenario_in_box);
    m.def("tree_cost", &tree_cost, py::arg("instance"), py::arg("tree"),
          py::arg("scenario"));

    m.def(
        "parse_steinlib",
        [](const std::string& text) { return parse_steinlib(text); },
        py::arg("text"));
    m.def("load_instance", &load_instance, py::arg("path"));
    m.def(
        "save_instance",
        [](const Instance& inst, const std::string& path,
           const std::vector<std::string>& comments) {
            save_instance(inst, path, comments);
        },
        py::arg("instance"), py::arg("path"),
        py::arg("comments") = std::vector<std::string>{});
    m.def(
        "instance_text",
        [](const Instance& inst, const std::vector<std::string>& comments) {
            std::ostringstream out;
            write_interval_stp(inst, out, comments);
            return out.str();
        },
        py::arg("instance"), py::arg("comments") = std::vector<std::string>{});

    py::class_<StpSolution>(m, "StpSolution")
        .def_readonly("tree", &StpSolution::tree)
        .def_readonly("cost", &StpSolution::cost)
        .def_readonly("optimal", &StpSolution::optimal);

    m.def(
        "solve_stp",
        [](const Instance& inst, const Scenario& s, const std::string& oracle) {
            return make_solver(kind_from_name(oracle))(inst, s);
        },
        py::arg("instance"), py::arg("scenario"), py::arg("oracle") = "dw");
    m.def("enumerate_steiner_trees", &enumerate_steiner_trees);

    py::class_<RegretReport>(m, "RegretReport")
        .def_readonly("tree_cost_worst", &RegretReport::tree_cost_worst)
        .def_readonly("adversary_cost", &RegretReport::adversary_cost)
        .def_readonly("robust_cost", &RegretReport::robust_cost)
        .def_readonly("worst_scenario", &RegretReport::worst_scenario)
        .def_readonly("adversary_tree", &RegretReport::adversary_tree)
        .def_readonly("exact", &RegretReport::exact);

    m.def(
        "robust_cost",
        [](const Instance& inst, const SteinerTree& t,
           const std::string& oracle) {
            return robust_cost(inst, t, make_solver(kind_from_name(oracle)));
        },
        py::arg("instance"), py::arg("tree"), py::arg("oracle") = "dw");
    m.def("minmax_regret_bruteforce", &minmax_regret_bruteforce,
          py::arg("instance"));

    py::class_<HeuristicResult>(m, "HeuristicResult")
        .def_readonly("tree", &HeuristicResult::tree)
        .def_readonly("report", &HeuristicResult::report);

    const auto heuristic = [](HeuristicResult (*fn)(const Instance&,
                                                    const StpSolver&)) {
        return [fn](const Instance& inst, const std::string& oracle) {
            return fn(inst, make_solver(kind_from_name(oracle)));
        };
    };
    m.def("algorithm_mean", heuristic(&algorithm_mean), py::arg("instance"),
          py::arg("oracle") = "dw");
    m.def("algorithm_upper", heuristic(&algorithm_upper), py::arg("instance"),
          py::arg("oracle") = "dw");
    m.def("algorithm_mean_upper", heuristic(&algorithm_mean_upper),
          py::arg("instance"), py::arg("oracle") = "dw");

    py::class_<IterationRecord>(m, "IterationRecord")
        .def_readonly("iteration", &IterationRecord::iteration)
        .def_readonly("lower_bound", &IterationRecord::lower_bound)
        .def_readonly("upper_bound", &IterationRecord::upper_bound)
        .def_readonly("cuts", &IterationRecord::cuts)
        .def_readonly("master_seconds", &IterationRecord::master_seconds)
        .def_readonly("subproblem_seconds",
                      &IterationRecord::subproblem_seconds);

    py::class_<BendersState>(m, "BendersState")
        .def_readonly("lower_bound", &BendersState::lower_bound)
        .def_readonly("iterations", &BendersState::iterations)
        .def_readonly("optimal", &BendersState::optimal)
        .def_readonly("trace", &BendersState::trace)
        .def("gap_pct", &BendersState::gap_pct);

    py::class_<BendersResult>(m, "BendersResult")
        .def_readonly("tree", &BendersResult::tree)
        .def_readonly("report", &BendersResult::report)
        .def_readonly("state", &BendersResult::state);

    m.def(
        "benders_solve",
        [](const Instance& inst, const std::string& oracle,
           const std::string& backend, const std::string& milp_command,
           int max_iterations, double time_limit_seconds) {
            BendersOptions opts;
            opts.oracle = kind_from_name(oracle);
            if (backend == "enumerate")
                opts.backend = MasterBackend::Enumerate;
            else if (backend == "external-lp")
                opts.backend = MasterBackend::ExternalLp;
            else
                throw std::invalid_argument(
                    "unknown backend '" + backend +
                    "' (expected enumerate or external-lp)");
            opts.milp_command = milp_command;
            opts.max_iterations = max_iterations;
            opts.time_limit_seconds = time_limit_seconds;
            return benders_solve(inst, opts);
        },
        py::arg("instance"), py::arg("oracle") = "dw",
        py::arg("backend") = "enumerate", py::arg("milp_command") = "",
        py::arg("max_iterations") = 1000,
        py::arg("time_limit_seconds") = 600.0);

    m.def(
        "generate",
        [](const Instance& base, const std::string& method,
           const std::string& param, std::uint64_t seed) {
            return generate(base, generator_config(method, param, seed));
        },
        py::arg("base"), py::arg("method"), py::arg("param") = "",
        py::arg("seed") = 0);
    m.def(
        "generator_comments",
        [](const Instance& base, const std::string& method,
           const std::string& param, std::uint64_t seed) {
            return generator_comments(base,
                                      generator_config(method, param, seed));
        },
        py::arg("base"), py::arg("method"), py::arg("param") = "",
        py::arg("seed") = 0);

    m.def(
        "export_stp_lp",
        [](const Instance& inst, const Scenario& s) {
            std::ostringstream out;
            export_stp_lp(inst, s, out);
            return out.str();
        },
        py::arg("instance"), py::arg("scenario"));
    m.def(
        "export_master_lp",
        [](const Instance& inst, const std::vector<SteinerTree>& cut_trees) {
            std::vector<Cut> cuts;
            for (const auto& t : cut_trees) cuts.push_back(Cut{t});
            std::ostringstream out;
            export_master_lp(inst, cuts, out);
            return out.str();
        },
        py::arg("instance"), py::arg("cut_trees"));

    m.def(
        "bench_dir_csv",
        [](const std::string& suite_dir) {
            return bench_csv(run_bench(suite_dir, BenchOptions{}));
        },
        py::arg("suite_dir"));
}
