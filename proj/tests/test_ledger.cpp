#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fanofib/errors.hpp"
#include "fanofib/json_io.hpp"
#include "fanofib/ledger.hpp"

#include <random>

using namespace fanofib::maxsing;
using fanofib::exactmath::Integer;
using fanofib::exactmath::Rational;
using fanofib::exactmath::make_rational;

namespace {

MultiplicityLedger single_level_ledger() {
    // m_y(1) mu_1 + d_1 = m_yf(1) with values (2, 1, 1, 3)
    MultiplicityLedger led;
    led.graph = make_graph({4}, 1, 1);
    led.m_y[1] = 2;
    led.d[1] = 1;
    led.m_yf[1] = 3;
    return led;
}

std::map<int, Rational> path_weights(const MultiplicityLedger& led) {
    const auto p = path_counts(led.graph);
    std::map<int, Rational> weights;
    for (int i = 1; i <= led.graph.size(); ++i)
        weights[i] = Rational(p[static_cast<std::size_t>(i - 1)]);
    return weights;
}

}  // namespace

TEST_CASE("single level ledger balances") {
    const auto led = single_level_ledger();
    CHECK(ledger_validate(led).valid);
    CHECK(ledger_b8_check(led, path_weights(led)));
    const auto bounds = weighted_mult_bounds(led, path_counts(led.graph));
    CHECK(bounds.holds_sharp);
    CHECK(bounds.holds_weak);
}

TEST_CASE("balance violations are reported") {
    auto led = single_level_ledger();
    led.m_yf[1] = 4;
    const auto report = ledger_validate(led);
    CHECK_FALSE(report.valid);
    REQUIRE_FALSE(report.issues.empty());
    CHECK(report.issues.front().find("balance") != std::string::npos);
}

TEST_CASE("cross terms need arrows and degree headroom") {
    MultiplicityLedger led;
    led.graph = make_graph({4, 4, 4}, 3, 1);
    led.m_y = {{1, Rational(1)}, {2, Rational(1)}, {3, Rational(1)}};
    led.d = {{1, Rational(2)}, {2, Rational(0)}, {3, Rational(0)}};
    led.cross[{1, 2}] = 1;
    led.m_yf = {{1, Rational(3)}, {2, Rational(0)}, {3, Rational(1)}};

    // cross(1,3) > 0 without the arrow 3->1
    auto bad_arrow = led;
    bad_arrow.cross[{1, 3}] = 1;
    bad_arrow.m_yf[3] = 0;
    const auto report = ledger_validate(bad_arrow);
    CHECK_FALSE(report.valid);
    bool support_issue = false;
    for (const auto& issue : report.issues)
        support_issue = support_issue || issue.find("without arrow") != std::string::npos;
    CHECK(support_issue);

    // cross exceeding the spilled degree
    auto bad_degree = led;
    bad_degree.cross[{2, 3}] = make_rational(1, 2);
    const auto degree_report = ledger_validate(bad_degree);
    CHECK_FALSE(degree_report.valid);
    bool degree_issue = false;
    for (const auto& issue : degree_report.issues)
        degree_issue = degree_issue || issue.find("exceeds d(") != std::string::npos;
    CHECK(degree_issue);
}

TEST_CASE("m_yf must vanish outside the fiber transform") {
    MultiplicityLedger led;
    led.graph = make_graph({4, 3}, 1, 1);  // level 2 out of the fiber
    led.m_y = {{1, Rational(1)}, {2, Rational(1)}};
    led.d = {{1, Rational(1)}};
    led.m_yf = {{1, Rational(2)}, {2, Rational(1)}};
    const auto report = ledger_validate(led);
    CHECK_FALSE(report.valid);
}

TEST_CASE("spillover bound at the deepest level") {
    MultiplicityLedger led;
    led.graph = make_graph({4, 3}, 2, 1);  // codim-3 level inside the fiber
    led.m_y = {{1, Rational(2)}, {2, Rational(1)}};
    led.d = {{1, Rational(0)}};  // must be >= m_y(2) * mu_2 = 1
    led.m_yf = {{1, Rational(2)}, {2, Rational(0)}};
    const auto report = ledger_validate(led);
    CHECK_FALSE(report.valid);
    led.d[1] = 1;
    led.m_yf[1] = 3;
    CHECK(ledger_validate(led).valid);
}

TEST_CASE("incompatible weights are rejected") {
    MultiplicityLedger led;
    led.graph = make_graph({4, 4}, 2, 1);
    led.m_y = {{1, Rational(1)}, {2, Rational(1)}};
    led.d = {{1, Rational(0)}, {2, Rational(0)}};
    led.m_yf = {{1, Rational(1)}, {2, Rational(1)}};
    std::map<int, Rational> weights{{1, Rational(0)}, {2, Rational(1)}};
    CHECK_FALSE(compatible_with_graph(led.graph, weights));
    CHECK_THROWS_AS(ledger_b8_check(led, weights), fanofib::parameter_error);
}

TEST_CASE("non-monotone ledgers are rejected by the bound check") {
    MultiplicityLedger led;
    led.graph = make_graph({4, 4}, 2, 1);
    led.m_y = {{1, Rational(1)}, {2, Rational(1)}};
    led.d = {{1, Rational(0)}, {2, Rational(1)}};
    led.m_yf = {{1, Rational(1)}, {2, Rational(2)}};  // increases
    CHECK_THROWS_AS(weighted_mult_bounds(led, path_counts(led.graph)), fanofib::data_error);
}

TEST_CASE("vacuous weighted-restriction inequality without deep levels") {
    MultiplicityLedger led;
    led.graph = make_graph({3}, 1, 1);
    led.m_y = {{1, Rational(5)}};
    led.m_yf = {{1, Rational(0)}};
    CHECK(ledger_b8_check(led, path_weights(led)));
}

TEST_CASE("random valid ledgers satisfy the counting inequalities") {
    std::mt19937 rng(7012);
    for (int trial = 0; trial < 10000; ++trial) {
        const auto led = random_valid_ledger(rng);
        REQUIRE(ledger_validate(led).valid);
        CHECK(ledger_b8_check(led, path_weights(led)));
        const auto bounds = weighted_mult_bounds(led, path_counts(led.graph));
        CHECK(bounds.holds_sharp);
        CHECK(bounds.holds_weak);
    }
}

TEST_CASE("arbitrary compatible weights keep the weighted restriction") {
    // not only the path counts: any compatible nonnegative weights work
    std::mt19937 rng(7013);
    std::uniform_int_distribution<int> bump(0, 3);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto led = random_valid_ledger(rng);
        auto weights = path_weights(led);
        for (auto& [level, value] : weights)
            value += bump(rng);  // adding headroom preserves compatibility
        if (!compatible_with_graph(led.graph, weights))
            continue;
        CHECK(ledger_b8_check(led, weights));
    }
}

TEST_CASE("ledger json round trip") {
    std::mt19937 rng(7014);
    for (int trial = 0; trial < 50; ++trial) {
        const auto led = random_valid_ledger(rng);
        const auto text = fanofib::io::ledger_to_json(led);
        const auto back = fanofib::io::ledger_from_json(text);
        CHECK(back.graph.vertices.size() == led.graph.vertices.size());
        CHECK(back.graph.arrows == led.graph.arrows);
        CHECK(back.m_y == led.m_y);
        CHECK(back.m_yf == led.m_yf);
        CHECK(back.d == led.d);
        CHECK(back.cross == led.cross);
        CHECK(ledger_validate(back).valid);
    }
}
