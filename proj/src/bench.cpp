#include "mmrstp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>
#include <stdexcept>

#include "mmrstp/heuristics.hpp"
#include "mmrstp/steinlib.hpp"

namespace mmrstp {

const char* bench_method_name(BenchMethod m) {
    switch (m) {
        case BenchMethod::Benders: return "benders";
        case BenchMethod::AM: return "am";
        case BenchMethod::AU: return "au";
        case BenchMethod::AMU: return "amu";
        case BenchMethod::Brute: return "brute";
    }
    throw std::invalid_argument("unknown bench method");
}

BenchMethod bench_method_from_name(const std::string& name) {
    if (name == "benders") return BenchMethod::Benders;
    if (name == "am") return BenchMethod::AM;
    if (name == "au") return BenchMethod::AU;
    if (name == "amu") return BenchMethod::AMU;
    if (name == "brute") return BenchMethod::Brute;
    throw std::invalid_argument(
        "unknown method: " + name +
        " (expected benders, am, au, amu or brute)");
}

BenchRecord run_method(const Instance& inst, BenchMethod method,
                       const BenchOptions& opts) {
    BenchRecord rec;
    rec.instance_name = inst.name();
    rec.method = method;

    const auto start = std::chrono::steady_clock::now();
    try {
        switch (method) {
            case BenchMethod::Benders: {
                BendersOptions bo;
                bo.backend = opts.backend;
                bo.milp_command = opts.milp_command;
                bo.oracle = opts.oracle;
                bo.max_iterations = opts.max_iterations;
                bo.time_limit_seconds = opts.time_limit_seconds;
                BendersResult res = benders_solve(inst, bo);
                rec.robust_cost = res.report.robust_cost;
                rec.lower_bound = res.state.lower_bound;
                rec.gap_pct = res.state.gap_pct();
                rec.iterations = res.state.iterations;
                rec.optimal = res.state.optimal;
                rec.tree_edge_ids = res.tree.edge_ids;
                break;
            }
            case BenchMethod::AM:
            case BenchMethod::AU:
            case BenchMethod::AMU: {
                const StpSolver solver = make_solver(opts.oracle);
                HeuristicResult res =
                    method == BenchMethod::AM    ? algorithm_mean(inst, solver)
                    : method == BenchMethod::AU ? algorithm_upper(inst, solver)
                                                : algorithm_mean_upper(inst, solver);
                rec.robust_cost = res.report.robust_cost;
                rec.tree_edge_ids = res.tree.edge_ids;
                break;
            }
            case BenchMethod::Brute: {
                auto [tree, report] = minmax_regret_bruteforce(inst);
                rec.robust_cost = report.robust_cost;
                rec.gap_pct = 0.0;
                rec.optimal = true;
                rec.tree_edge_ids = tree.edge_ids;
                break;
            }
        }
    } catch (const std::exception& ex) {
        rec.error = ex.what();
    }
    rec.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return rec;
}

std::vector<BenchRecord> run_bench_files(
    const std::vector<std::filesystem::path>& files, const BenchOptions& opts) {
    std::vector<BenchRecord> out;
    for (const auto& file : files) {
        std::vector<BenchRecord> rows;
        try {
            Instance inst = load_instance(file);
            for (BenchMethod m : opts.methods)
                rows.push_back(run_method(inst, m, opts));
        } catch (const std::exception& ex) {
            for (BenchMethod m : opts.methods) {
                BenchRecord rec;
                rec.instance_name = file.stem().string();
                rec.method = m;
                rec.error = ex.what();
                rows.push_back(rec);
            }
        }

        // Heuristic deviations are relative to the same instance's exact
        // upper bound; undefined when that bound is 0 and the heuristic is
        // not (cannot happen for amu, which seeds the incumbent).
        const BenchRecord* exact = nullptr;
        for (const BenchRecord& r : rows)
            if (r.method == BenchMethod::Benders && r.error.empty() &&
                r.robust_cost)
                exact = &r;
        if (exact) {
            const Cost ub = *exact->robust_cost;
            for (BenchRecord& r : rows) {
                const bool heuristic = r.method == BenchMethod::AM ||
                                       r.method == BenchMethod::AU ||
                                       r.method == BenchMethod::AMU;
                if (!heuristic || !r.robust_cost) continue;
                if (ub > 0)
                    r.dev_pct = 100.0 *
                                static_cast<double>(*r.robust_cost - ub) /
                                static_cast<double>(ub);
                else if (*r.robust_cost == 0)
                    r.dev_pct = 0.0;
            }
        }
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

std::vector<BenchRecord> run_bench(const std::filesystem::path& suite_dir,
                                   const BenchOptions& opts) {
    std::vector<std::filesystem::path> files;
    if (std::filesystem::exists(suite_dir))
        for (const auto& entry : std::filesystem::directory_iterator(suite_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".stp")
                files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    return run_bench_files(files, opts);
}

namespace {

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

std::string bench_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;

    const std::time_t now = std::time(nullptr);
    char stamp[32] = "?";
    if (std::tm tm_utc; gmtime_r(&now, &tm_utc) != nullptr)
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    out << "# generated " << stamp << '\n';
    out << "instance,method,Z,LB,gap_pct,dev_pct,time_s,iters,optimal\n";

    for (const BenchRecord& r : records) {
        out << r.instance_name << ',' << bench_method_name(r.method) << ',';
        if (r.robust_cost) out << *r.robust_cost;
        out << ',';
        if (r.lower_bound) out << *r.lower_bound;
        out << ',';
        if (r.gap_pct) out << fixed(*r.gap_pct, 4);
        out << ',';
        if (r.dev_pct) out << fixed(*r.dev_pct, 4);
        out << ',';
        out << fixed(r.wall_time_seconds, 3) << ',';
        if (r.iterations) out << *r.iterations;
        out << ',';
        out << (r.optimal ? "true" : "false") << '\n';
    }

    // Suite averages per method over the clean rows, Table style.
    std::vector<BenchMethod> seen;
    for (const BenchRecord& r : records)
        if (std::find(seen.begin(), seen.end(), r.method) == seen.end())
            seen.push_back(r.method);
    for (BenchMethod m : seen) {
        double gap = 0, dev = 0, time = 0, iters = 0;
        int n_gap = 0, n_dev = 0, n_time = 0, n_iters = 0;
        for (const BenchRecord& r : records) {
            if (r.method != m || !r.error.empty()) continue;
            time += r.wall_time_seconds, ++n_time;
            if (r.gap_pct) gap += *r.gap_pct, ++n_gap;
            if (r.dev_pct) dev += *r.dev_pct, ++n_dev;
            if (r.iterations) iters += *r.iterations, ++n_iters;
        }
        if (n_time == 0) continue;
        out << "AVG," << bench_method_name(m) << ",,,";
        if (n_gap) out << fixed(gap / n_gap, 4);
        out << ',';
        if (n_dev) out << fixed(dev / n_dev, 4);
        out << ',';
        out << fixed(time / n_time, 3) << ',';
        if (n_iters) out << fixed(iters / n_iters, 2);
        out << ",\n";
    }

    for (const BenchRecord& r : records)
        if (!r.error.empty())
            out << "# error: " << r.instance_name << ' '
                << bench_method_name(r.method) << ": " << r.error << '\n';

    return out.str();
}

}  // namespace mmrstp
