#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fanofib/errors.hpp"
#include "fanofib/ledger.hpp"
#include "fanofib/resolution_graph.hpp"

#include <functional>
#include <random>

using namespace fanofib::maxsing;
using fanofib::exactmath::Integer;
using fanofib::exactmath::Rational;
using fanofib::exactmath::make_rational;

namespace {

// Oracle: enumerate every directed path from K to each vertex explicitly.
std::vector<Integer> brute_force_paths(const ResolutionGraph& g) {
    const int k = g.size();
    std::vector<Integer> counts(static_cast<std::size_t>(k), 0);
    std::function<void(int)> walk = [&](int at) {
        counts[static_cast<std::size_t>(at - 1)] += 1;
        for (const auto& [from, to] : g.arrows)
            if (from == at)
                walk(to);
    };
    walk(k);
    return counts;
}

}  // namespace

TEST_CASE("path counts on small graphs") {
    // single vertex
    CHECK(path_counts(make_graph({4}, 1, 1)) == std::vector<Integer>{1});
    // plain chain: one path to each vertex
    CHECK(path_counts(make_graph({4, 4, 3}, 3, 1)) == std::vector<Integer>{1, 1, 1});
    // chain plus shortcut 3->1 doubles the bottom count
    CHECK(path_counts(make_graph({4, 4, 3}, 3, 1, {{3, 1}})) ==
          std::vector<Integer>{2, 1, 1});
}

TEST_CASE("graph validation rejects malformed data") {
    ResolutionGraph g = make_graph({4, 3}, 2, 1);
    g.arrows.insert({1, 2});
    CHECK_THROWS_AS(validate_graph(g), fanofib::graph_error);

    CHECK_THROWS_AS(make_graph({3, 4}, 2, 1), fanofib::graph_error);   // codim increases
    CHECK_THROWS_AS(make_graph({4, 3}, 2, 3), fanofib::graph_error);   // bad mu_1
    CHECK_THROWS_AS(make_graph({}, 0, 1), fanofib::graph_error);

    ResolutionGraph chainless = make_graph({4, 4}, 2, 1);
    chainless.arrows.clear();
    CHECK_THROWS_AS(path_counts(chainless), fanofib::graph_error);
}

TEST_CASE("path recurrence against brute force on random graphs") {
    std::mt19937 rng(7010);
    for (int trial = 0; trial < 1000; ++trial) {
        const ResolutionGraph g = random_graph(rng);
        const auto p = path_counts(g);
        CHECK(p == brute_force_paths(g));
        // full in-neighborhood recurrence
        for (int i = 1; i < g.size(); ++i) {
            Integer sum = 0;
            for (const auto& [from, to] : g.arrows)
                if (to == i)
                    sum += p[static_cast<std::size_t>(from - 1)];
            CHECK(p[static_cast<std::size_t>(i - 1)] == sum);
        }
        CHECK(p[static_cast<std::size_t>(g.size() - 1)] == 1);
        // counts never increase with the level
        for (int i = 1; i < g.size(); ++i)
            CHECK(p[static_cast<std::size_t>(i - 1)] >= p[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("path counts are compatible weights") {
    std::mt19937 rng(7011);
    for (int trial = 0; trial < 1000; ++trial) {
        const ResolutionGraph g = random_graph(rng);
        const auto p = path_counts(g);
        std::map<int, Rational> weights;
        for (int i = 1; i <= g.size(); ++i)
            weights[i] = Rational(p[static_cast<std::size_t>(i - 1)]);
        CHECK(compatible_with_graph(g, weights));
    }
}

TEST_CASE("partition sums") {
    // three levels: codims 4, 4, 2, all in fiber
    {
        const ResolutionGraph g = make_graph({4, 4, 2}, 3, 1);
        const auto sums = partition_sums(g, path_counts(g));
        CHECK(sums.sigma_s == 2);
        CHECK(sums.sigma_u == 1);
        CHECK(sums.lower_l == 2);
        CHECK(sums.sigma_m == 0);
        CHECK(sums.sigma_f == 1);  // level 2 only
    }
    // single deep vertex
    {
        const ResolutionGraph g = make_graph({4}, 1, 1);
        const auto sums = partition_sums(g, path_counts(g));
        CHECK(sums.sigma_s == 1);
        CHECK(sums.sigma_m == 0);
        CHECK(sums.sigma_u == 0);
    }
    // codim-3 level outside the fiber goes to the minus bucket
    {
        const ResolutionGraph g = make_graph({4, 3}, 1, 1);
        const auto sums = partition_sums(g, path_counts(g));
        CHECK(sums.sigma_s == 1);
        CHECK(sums.sigma_m_minus == 1);
        CHECK(sums.sigma_m_plus == 0);
    }
}

TEST_CASE("noether-fano excess") {
    {
        const ResolutionGraph g = make_graph({3}, 1, 1);
        const auto holds = noether_fano(g, {Rational(3)}, 1);
        CHECK(holds.holds);
        CHECK(holds.excess == 1);
        const auto fails = noether_fano(g, {Rational(2)}, 1);
        CHECK_FALSE(fails.holds);  // equality is not enough
        CHECK(fails.excess == 0);
    }
    {
        const ResolutionGraph g = make_graph({3, 3, 3}, 3, 1, {{3, 1}});
        const auto res = noether_fano(g, {Rational(5), Rational(3), Rational(3)}, 1);
        CHECK(res.holds);
        CHECK(res.weighted_multiplicity == 16);  // p = (2,1,1)
        CHECK(res.excess == 8);
    }
}

TEST_CASE("quadratic lower bound") {
    const ResolutionGraph single = make_graph({3}, 1, 1);
    CHECK(quadratic_lower_bound(single, 1, Rational(1)) == 9);  // (2+1)^2/1
    // boundary toward zero excess
    CHECK(quadratic_lower_bound(single, 1, make_rational(1, 1000)) >
          Rational(4));  // > (n delta)^2
    CHECK_THROWS_AS(quadratic_lower_bound(single, 1, Rational(0)), fanofib::parameter_error);

    const ResolutionGraph chain = make_graph({3, 3}, 2, 1);
    CHECK(quadratic_lower_bound(chain, 1, Rational(2)) == 18);  // (4+2)^2/2

    // monotone in the excess
    Rational last = 0;
    for (int num = 1; num <= 40; ++num) {
        const Rational value = quadratic_lower_bound(chain, 1, make_rational(num, 4));
        CHECK(value > last);
        last = value;
    }
}

TEST_CASE("fiber excess accumulation") {
    using Entry = FiberExcess;
    CHECK(fiber_excess_check({{Entry{3, 1}}}, 2));               // 3 > 2
    CHECK(fiber_excess_check({{Entry{1, 2}}}, 0));               // any positive excess beats l=0
    CHECK_FALSE(fiber_excess_check({{Entry{1, 2}}}, 1));         // 1/2 <= 1
    CHECK(fiber_excess_check({{Entry{1, 2}, Entry{5, 2}}}, 2));  // max picks 5/2
    CHECK_FALSE(fiber_excess_check({}, 0));
    CHECK_THROWS_AS(fiber_excess_check({{Entry{1, 0}}}, 0), fanofib::data_error);
}

TEST_CASE("supermaximal threshold") {
    CHECK(supermaximal_test(Rational(2), Rational(1), Rational(8), 1, 8, Rational(0)));
    // eps = 0 reduces to e > nuF degZv / (2 n degV)
    const Rational e = make_rational(1, 2);
    CHECK(supermaximal_test(e, Rational(1), Rational(7), 1, 8, Rational(0)));
    CHECK_FALSE(supermaximal_test(e, Rational(1), Rational(9), 1, 8, Rational(0)));
    // nonpositive right side: any positive excess passes
    CHECK(supermaximal_test(make_rational(1, 100), Rational(1), Rational(0), 1, 8, Rational(2)));
    CHECK_THROWS_AS(supermaximal_test(e, Rational(1), Rational(1), 0, 8, Rational(0)),
                    fanofib::parameter_error);
}

TEST_CASE("condition thresholds") {
    CHECK(condition_threshold(ConditionKind::fiber, 8) == make_rational(1, 2));
    CHECK(condition_threshold(ConditionKind::fiber_singular_infnear, 6) == make_rational(1, 2));
    CHECK(condition_threshold(ConditionKind::vertical, 8) == make_rational(1, 4));
    CHECK(condition_threshold(ConditionKind::horizontal_depth, 8, Rational(0)) ==
          condition_threshold(ConditionKind::horizontal, 8));
    CHECK(condition_threshold(ConditionKind::horizontal_depth, 6, Rational(2)) ==
          make_rational(1, 3));
    CHECK_THROWS_AS(condition_threshold(ConditionKind::horizontal_depth, 6, Rational(5)),
                    fanofib::parameter_error);
    CHECK_THROWS_AS(condition_threshold(ConditionKind::fiber, 0), fanofib::parameter_error);
}
