#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mmrstp/benders.hpp"

namespace mmrstp {

enum class BenchMethod { Benders, AM, AU, AMU, Brute };

const char* bench_method_name(BenchMethod m);
BenchMethod bench_method_from_name(const std::string& name);

/// One report row, shaped after the usual gap% / %dev / t(s) benchmark
/// tables. Fields that do not apply to a method stay empty in the CSV.
struct BenchRecord {
    std::string instance_name;
    BenchMethod method = BenchMethod::AMU;
    std::optional<Cost> robust_cost;          // Z
    std::optional<std::int64_t> lower_bound;  // benders only
    std::optional<double> gap_pct;            // 100 (UB-LB)/UB, 0 when UB == 0
    std::optional<double> dev_pct;            // 100 (Z - UB_benders)/UB_benders
    double wall_time_seconds = 0.0;
    std::optional<int> iterations;            // benders master iterations
    bool optimal = false;
    std::vector<int> tree_edge_ids;           // certificate
    std::string error;                        // nonempty when the cell failed
};

struct BenchOptions {
    std::vector<BenchMethod> methods{BenchMethod::AM, BenchMethod::AU,
                                     BenchMethod::AMU, BenchMethod::Benders};
    SolverKind oracle = SolverKind::DreyfusWagner;
    MasterBackend backend = MasterBackend::Enumerate;
    std::string milp_command;
    int max_iterations = 1000;
    double time_limit_seconds = 600.0;
};

BenchRecord run_method(const Instance& inst, BenchMethod method,
                       const BenchOptions& opts);

/// Runs every (instance, method) cell over the .stp files of a directory,
/// sorted by file name. Per-cell failures land in the record's error field;
/// the harness keeps going. dev_pct is filled from the same instance's
/// Benders upper bound when one is available.
std::vector<BenchRecord> run_bench(const std::filesystem::path& suite_dir,
                                   const BenchOptions& opts);
std::vector<BenchRecord> run_bench_files(
    const std::vector<std::filesystem::path>& files, const BenchOptions& opts);

/// CSV with columns instance,method,Z,LB,gap_pct,dev_pct,time_s,iters,optimal
/// plus one AVG row per method (gap/dev/time averages, as in the usual
/// benchmark tables). First line is a `# generated <timestamp>` comment.
std::string bench_csv(const std::vector<BenchRecord>& records);

}  // namespace mmrstp
