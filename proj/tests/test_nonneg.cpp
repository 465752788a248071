#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fanofib/nonneg.hpp"

#include <random>

using namespace fanofib::exactmath;

namespace {

struct Fixture {
    ContextPtr ctx = std::make_shared<VarContext>();
    Polynomial a = Polynomial::variable(ctx, "a");
    Polynomial b = Polynomial::variable(ctx, "b");
    std::set<int> nonneg{0, 1};
};

}  // namespace

TEST_CASE("single square certifies") {
    Fixture f;
    NonnegCombination combo;
    combo.target = (f.a - f.b).pow(2);
    combo.parts.push_back(Part{{Generator::square(f.a - f.b)}, Polynomial::constant(f.ctx, 1)});
    CHECK(check_nonneg_combination(combo, f.nonneg));
}

TEST_CASE("x - 1 is not a nonneg combination of {x}") {
    Fixture f;
    NonnegCombination combo;
    combo.target = f.a - Rational(1);
    combo.parts.push_back(Part{{Generator::nonneg_monomials(f.a, "a")},
                               Polynomial::constant(f.ctx, 1)});
    const auto report = check_nonneg_combination_report(combo, f.nonneg);
    CHECK_FALSE(report.ok);
    CHECK_FALSE(report.issues.empty());
}

TEST_CASE("negative multiplier is rejected") {
    Fixture f;
    NonnegCombination combo;
    combo.target = -(f.a * f.a);
    combo.parts.push_back(Part{{Generator::square(f.a)}, Polynomial::constant(f.ctx, -1)});
    CHECK_FALSE(check_nonneg_combination(combo, f.nonneg));
}

TEST_CASE("undeclared assumption is rejected") {
    Fixture f;
    NonnegCombination combo;
    combo.target = f.a - f.b;
    combo.parts.push_back(
        Part{{Generator::assumed(f.a - f.b, "a - b >= 0")}, Polynomial::constant(f.ctx, 1)});
    CHECK_FALSE(check_nonneg_combination(combo, f.nonneg));
    combo.assumption_labels = {"a - b >= 0"};
    CHECK(check_nonneg_combination(combo, f.nonneg));
}

TEST_CASE("broken square generator is rejected") {
    Fixture f;
    Generator g = Generator::square(f.a);
    g.poly = f.a * f.a + Rational(1);  // tampered
    NonnegCombination combo;
    combo.target = f.a * f.a + Rational(1);
    combo.parts.push_back(Part{{g}, Polynomial::constant(f.ctx, 1)});
    CHECK_FALSE(check_nonneg_combination(combo, f.nonneg));
}

TEST_CASE("verified combinations are pointwise nonnegative") {
    // a true check certifies target >= 0 on nonnegative assignments; sample it
    Fixture f;
    NonnegCombination combo;
    combo.target =
        (f.a - f.b).pow(2) + f.a * f.b * Rational(3) + f.b * make_rational(1, 2);
    combo.parts.push_back(Part{{Generator::square(f.a - f.b)}, Polynomial::constant(f.ctx, 1)});
    combo.parts.push_back(Part{
        {}, f.a * f.b * Rational(3) + f.b * make_rational(1, 2)});
    REQUIRE(check_nonneg_combination(combo, f.nonneg));

    std::mt19937 rng(7004);
    std::uniform_int_distribution<int> num(0, 40);
    std::uniform_int_distribution<int> den(1, 8);
    for (int i = 0; i < 1000; ++i) {
        const std::map<int, Rational> point{{0, make_rational(num(rng), den(rng))},
                                            {1, make_rational(num(rng), den(rng))}};
        CHECK(combo.target.evaluate(point) >= 0);
    }
}
