#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "mmrstp/benders.hpp"
#include "mmrstp/rng.hpp"
#include "support/random_instances.hpp"

using namespace mmrstp;

TEST_CASE("cut evaluation mixes interval endpoints by membership") {
    Instance inst = fixtures::tiny1();
    Cut via_steiner{SteinerTree({1, 2})};
    Cut direct{SteinerTree({0})};

    CHECK(cut_value(inst, via_steiner, SteinerTree({1, 2})) == 6);
    CHECK(cut_value(inst, via_steiner, SteinerTree({0})) == 2);
    CHECK(cut_value(inst, direct, SteinerTree({0})) == 8);
    CHECK(cut_value(inst, direct, SteinerTree({1, 2})) == 4);
}

TEST_CASE("cut value is the cut tree's cost in the candidate's worst case") {
    SplitMix64 rng(0xC07);
    for (int round = 0; round < 50; ++round) {
        Instance inst = testsupport::random_instance(rng);
        SteinerTree x = testsupport::random_tree(rng, inst);
        SteinerTree y = testsupport::random_tree(rng, inst);
        CHECK(cut_value(inst, Cut{y}, x) ==
              tree_cost(inst, y, worst_case_scenario(inst, x)));
    }
}

TEST_CASE("restricted master on the fixture cut pools") {
    Instance inst = fixtures::tiny1();
    const Cut t_b{SteinerTree({1, 2})};
    const Cut t_a{SteinerTree({0})};

    MasterSolution one = master_solve(inst, {t_b});
    CHECK(one.tree == SteinerTree({1, 2}));
    CHECK(one.objective == 0);

    MasterSolution two = master_solve(inst, {t_b, t_a});
    CHECK(two.tree == SteinerTree({1, 2}));
    CHECK(two.objective == 2);

    SUBCASE("an empty pool is rejected as unbounded") {
        CHECK_THROWS_AS(master_solve(inst, {}), std::invalid_argument);
    }
    SUBCASE("without uncertainty one self-cut closes the gap") {
        Instance flat(3, {{1, 2, 5, 5}, {2, 3, 2, 2}, {1, 3, 9, 9}}, {1, 3});
        MasterSolution m = master_solve(flat, {Cut{SteinerTree({0, 1})}});
        CHECK(m.objective == 0);
        CHECK(m.tree == SteinerTree({0, 1}));
    }
}

TEST_CASE("master enumeration cap") {
    std::vector<Edge> edges;
    for (int v = 1; v < 26; ++v) edges.push_back({v, v + 1, 1, 2});
    Instance chain(26, edges, {1, 26});  // 25 edges > 24
    CHECK_THROWS_AS(master_solve(chain, {Cut{SteinerTree({0})}}),
                    std::invalid_argument);
}

TEST_CASE("master optimum verified against direct enumeration") {
    SplitMix64 rng(0x3A57);
    for (int round = 0; round < 40; ++round) {
        Instance inst = testsupport::random_instance(rng);
        std::vector<Cut> cuts{Cut{testsupport::random_tree(rng, inst)},
                              Cut{testsupport::random_tree(rng, inst)}};

        MasterSolution got = master_solve(inst, cuts);

        bool found = false;
        std::int64_t best = 0;
        SteinerTree arg;
        for (const SteinerTree& x : enumerate_steiner_trees(inst)) {
            Cost upper_sum = 0;
            for (int e : x.edge_ids) upper_sum += inst.edges()[e].upper;
            Cost relief = cut_value(inst, cuts[0], x);
            for (std::size_t c = 1; c < cuts.size(); ++c)
                relief = std::min(relief, cut_value(inst, cuts[c], x));
            const std::int64_t obj = upper_sum - relief;
            if (!found || obj < best || (obj == best && x < arg)) {
                found = true;
                best = obj;
                arg = x;
            }
        }
        REQUIRE(found);
        CHECK(got.objective == best);
        CHECK(got.tree == arg);
    }
}

TEST_CASE("constraint generation on the hand-traced fixtures") {
    SUBCASE("two iterations close the canonical fixture") {
        BendersResult res = benders_solve(fixtures::tiny1());
        CHECK(res.report.robust_cost == 2);
        CHECK(res.tree == SteinerTree({1, 2}));
        CHECK(res.state.optimal);
        CHECK(res.state.iterations == 2);
        CHECK(res.state.lower_bound == 2);
        CHECK(res.state.gap_pct() == doctest::Approx(0.0));
        REQUIRE(res.state.trace.size() == 2);
        CHECK(res.state.trace[0].lower_bound == 0);
        CHECK(res.state.trace[0].upper_bound == 2);
        CHECK(res.state.trace[1].lower_bound == 2);
        // seeded with the single deduplicated heuristic tree, plus the
        // adversary separated in iteration 1
        CHECK(res.state.trace[0].cuts == 1);
        CHECK(res.state.trace[1].cuts == 2);
    }
    SUBCASE("distinct seed trees give two starting cuts and one iteration") {
        BendersResult res = benders_solve(fixtures::tiny2());
        CHECK(res.report.robust_cost == 4);
        CHECK(res.tree == SteinerTree({0}));
        CHECK(res.state.optimal);
        CHECK(res.state.iterations == 1);
        CHECK(res.state.trace[0].cuts == 2);
    }
    SUBCASE("degenerate instance closes at the first master solve") {
        Instance flat(3, {{1, 2, 5, 5}, {2, 3, 2, 2}, {1, 3, 9, 9}}, {1, 3});
        BendersResult res = benders_solve(flat);
        CHECK(res.state.optimal);
        CHECK(res.state.iterations == 1);
        CHECK(res.report.robust_cost == 0);
    }
}

TEST_CASE("trace bounds are monotone and meet at optimality") {
    SplitMix64 rng(0xBE2);
    for (int round = 0; round < 40; ++round) {
        Instance inst = testsupport::random_instance(rng);
        BendersResult res = benders_solve(inst);

        REQUIRE(res.state.optimal);
        const auto& trace = res.state.trace;
        REQUIRE_FALSE(trace.empty());
        for (std::size_t i = 1; i < trace.size(); ++i) {
            CHECK(trace[i].lower_bound >= trace[i - 1].lower_bound);
            CHECK(trace[i].upper_bound <= trace[i - 1].upper_bound);
        }
        CHECK(trace.back().lower_bound == trace.back().upper_bound);
        CHECK(res.state.lower_bound == res.report.robust_cost);

        // exactness against the reference oracle
        auto [ref_tree, ref] = minmax_regret_bruteforce(inst);
        CHECK(res.report.robust_cost == ref.robust_cost);
    }
}

TEST_CASE("caps stop the loop without losing the incumbent") {
    BendersOptions one_iter;
    one_iter.max_iterations = 1;
    BendersResult res = benders_solve(fixtures::tiny1(), one_iter);
    CHECK_FALSE(res.state.optimal);
    CHECK(res.state.iterations == 1);
    CHECK(res.report.robust_cost == 2);  // seed incumbent survives
    CHECK(res.state.lower_bound == 0);
    CHECK(res.state.gap_pct() == doctest::Approx(100.0));

    BendersOptions no_time;
    no_time.time_limit_seconds = 0.0;
    BendersResult frozen = benders_solve(fixtures::tiny1(), no_time);
    CHECK_FALSE(frozen.state.optimal);
    CHECK(frozen.state.iterations == 0);
    CHECK(frozen.report.robust_cost == 2);
}

TEST_CASE("subproblem oracle must be exact") {
    BendersOptions opts;
    opts.oracle = SolverKind::ShortestPath;
    CHECK_THROWS_AS(benders_solve(fixtures::tiny1(), opts),
                    std::invalid_argument);

    SUBCASE("the brute-force oracle is interchangeable") {
        BendersOptions brute;
        brute.oracle = SolverKind::BruteForce;
        BendersResult res = benders_solve(fixtures::tiny1(), brute);
        CHECK(res.report.robust_cost == 2);
        CHECK(res.state.iterations == 2);
    }
}
