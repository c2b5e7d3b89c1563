#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "mmrstp/heuristics.hpp"
#include "mmrstp/rng.hpp"
#include "support/random_instances.hpp"

using namespace mmrstp;

namespace {
const StpSolver kExact = make_solver(SolverKind::DreyfusWagner);
}

TEST_CASE("all three heuristics find the fixture optimum") {
    Instance inst = fixtures::tiny1();
    HeuristicResult am = algorithm_mean(inst, kExact);
    HeuristicResult au = algorithm_upper(inst, kExact);
    HeuristicResult amu = algorithm_mean_upper(inst, kExact);

    CHECK(am.tree == SteinerTree({1, 2}));
    CHECK(am.report.robust_cost == 2);
    CHECK(au.tree == SteinerTree({1, 2}));
    CHECK(au.report.robust_cost == 2);
    CHECK(amu.tree == SteinerTree({1, 2}));
    CHECK(amu.report.robust_cost == 2);
}

TEST_CASE("the midpoint guide can strictly beat the upper guide") {
    Instance inst = fixtures::tiny2();
    HeuristicResult am = algorithm_mean(inst, kExact);
    HeuristicResult au = algorithm_upper(inst, kExact);
    HeuristicResult amu = algorithm_mean_upper(inst, kExact);

    CHECK(am.tree == SteinerTree({0}));
    CHECK(am.report.robust_cost == 4);
    CHECK(au.tree == SteinerTree({1, 2}));
    CHECK(au.report.robust_cost == 6);
    CHECK(amu.tree == am.tree);
    CHECK(amu.report.robust_cost == 4);
}

TEST_CASE("combined heuristic equals the better branch, mean wins ties") {
    SplitMix64 rng(0xAB);
    for (int round = 0; round < 60; ++round) {
        Instance inst = testsupport::random_instance(rng);
        HeuristicResult am = algorithm_mean(inst, kExact);
        HeuristicResult au = algorithm_upper(inst, kExact);
        HeuristicResult amu = algorithm_mean_upper(inst, kExact);

        CHECK(amu.report.robust_cost ==
              std::min(am.report.robust_cost, au.report.robust_cost));
        if (am.report.robust_cost <= au.report.robust_cost)
            CHECK(amu.tree == am.tree);
        else
            CHECK(amu.tree == au.tree);
    }
}

TEST_CASE("midpoint-guided regret stays within twice the optimum") {
    SplitMix64 rng(0x2BD);
    for (int round = 0; round < 60; ++round) {
        Instance inst = testsupport::random_instance(rng);
        const Cost star = minmax_regret_bruteforce(inst).second.robust_cost;
        CHECK(algorithm_mean(inst, kExact).report.robust_cost <= 2 * star);
        CHECK(algorithm_mean_upper(inst, kExact).report.robust_cost <=
              2 * star);
    }
}

TEST_CASE("degenerate intervals collapse every heuristic to the optimum") {
    SplitMix64 rng(0xDE6);
    for (int round = 0; round < 30; ++round) {
        Instance inst = testsupport::random_instance(rng, /*degenerate=*/true);
        const Cost opt =
            solve_exact_dw(inst, upper_scenario(inst)).cost;
        for (auto* fn :
             {&algorithm_mean, &algorithm_upper, &algorithm_mean_upper}) {
            HeuristicResult res = (*fn)(inst, kExact);
            CHECK(res.report.robust_cost == 0);
            CHECK(tree_cost(inst, res.tree, upper_scenario(inst)) == opt);
        }
    }
}
