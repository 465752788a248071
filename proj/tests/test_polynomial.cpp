#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fanofib/errors.hpp"
#include "fanofib/polynomial.hpp"

#include "naive_poly.hpp"

#include <random>

using namespace fanofib::exactmath;

namespace {

struct Fixture {
    ContextPtr ctx = std::make_shared<VarContext>();
    Polynomial x = Polynomial::variable(ctx, "x");
    Polynomial y = Polynomial::variable(ctx, "y");
    Polynomial one = Polynomial::constant(ctx, 1);
};

Polynomial random_poly(const Fixture& f, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> deg(0, 3);
    Polynomial p(f.ctx);
    for (int t = 0; t < 4; ++t) {
        Polynomial term = Polynomial::constant(f.ctx, coeff(rng));
        for (int d = deg(rng); d > 0; --d)
            term = term * (coeff(rng) % 2 == 0 ? f.x : f.y);
        p += term;
    }
    return p;
}

}  // namespace

TEST_CASE("binomial identity expands") {
    Fixture f;
    CHECK(poly_equal((f.x + Rational(1)).pow(2), f.x * f.x + f.x * Rational(2) + f.one));
    CHECK_FALSE(poly_equal(f.x * f.x, f.x * f.y));
}

TEST_CASE("counting identity against the naive oracle") {
    // ((3s+2m+u)n+e)^2 - (8s+4m)n^2(s+m+u) - 4ne(s+m+u) == (n(s-u)+e)^2
    Fixture f;
    auto s = Polynomial::variable(f.ctx, "s");
    auto m = Polynomial::variable(f.ctx, "m");
    auto u = Polynomial::variable(f.ctx, "u");
    auto n = Polynomial::variable(f.ctx, "n");
    auto e = Polynomial::variable(f.ctx, "e");
    const Polynomial lhs =
        ((s * Rational(3) + m * Rational(2) + u) * n + e).pow(2) -
        (s * Rational(8) + m * Rational(4)) * n * n * (s + m + u) -
        n * e * Rational(4) * (s + m + u);
    const Polynomial rhs = (n * (s - u) + e).pow(2);
    CHECK(poly_equal(lhs, rhs));

    // same computation in the independent dense representation
    using naive::Poly;
    const Poly ns = Poly::var(naive::S);
    const Poly nm = Poly::var(naive::M);
    const Poly nu = Poly::var(naive::U);
    const Poly nn = Poly::var(naive::N);
    const Poly ne = Poly::var(naive::E);
    const Poly nlhs = ((3 * ns + 2 * nm + nu) * nn + ne).square() -
                      (8 * ns + 4 * nm) * nn * nn * (ns + nm + nu) -
                      4 * nn * ne * (ns + nm + nu);
    const Poly nrhs = (nn * (ns - nu) + ne).square();
    CHECK(nlhs == nrhs);
}

TEST_CASE("contexts never mix") {
    Fixture f;
    auto other = std::make_shared<VarContext>();
    auto z = Polynomial::variable(other, "x");
    CHECK_THROWS_AS((void)(f.x + z), fanofib::context_error);
    CHECK_THROWS_AS((void)poly_equal(f.x, z), fanofib::context_error);
}

TEST_CASE("canonical text is graded lex") {
    Fixture f;
    const Polynomial p = f.x * f.x - f.y * Rational(make_rational(1, 2)) + Rational(3);
    CHECK(p.to_string() == "x^2 - 1/2*y + 3");
    CHECK(Polynomial(f.ctx).to_string() == "0");
    const Polynomial q = f.x * f.y * f.y - f.x * f.x * f.y;
    CHECK(q.to_string() == "-x^2*y + x*y^2");
}

TEST_CASE("substitution expands powers") {
    Fixture f;
    // (x+1)^2 with x -> y-1 collapses to y^2
    const Polynomial p = (f.x + Rational(1)).pow(2);
    const Polynomial q = p.substitute(f.ctx->id_of("x"), f.y - Rational(1));
    CHECK(poly_equal(q, f.y * f.y));
    CHECK(poly_equal(p.substitute(f.ctx->id_of("x"), Rational(2)),
                     Polynomial::constant(f.ctx, 9)));
}

TEST_CASE("poly_equal is an equivalence relation on random polys") {
    Fixture f;
    std::mt19937 rng(7002);
    for (int i = 0; i < 200; ++i) {
        const Polynomial a = random_poly(f, rng);
        const Polynomial b = random_poly(f, rng);
        const Polynomial c = random_poly(f, rng);
        CHECK(poly_equal(a, a));
        if (poly_equal(a, b))
            CHECK(poly_equal(b, a));
        if (poly_equal(a, b) && poly_equal(b, c))
            CHECK(poly_equal(a, c));
        // rewriting a - b term by term never changes equality
        CHECK(poly_equal(a - b, -(b - a)));
    }
}

TEST_CASE("evaluation agrees with arithmetic at random points") {
    Fixture f;
    std::mt19937 rng(7003);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    const int x_id = f.ctx->id_of("x");
    const int y_id = f.ctx->id_of("y");
    for (int i = 0; i < 1000; ++i) {
        const Polynomial a = random_poly(f, rng);
        const Polynomial b = random_poly(f, rng);
        const std::map<int, Rational> point{{x_id, make_rational(num(rng), den(rng))},
                                            {y_id, make_rational(num(rng), den(rng))}};
        CHECK((a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point));
        CHECK((a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point));
    }
}

TEST_CASE("no zero terms are stored") {
    Fixture f;
    const Polynomial p = f.x - f.x;
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    CHECK((f.x * f.y - f.y * f.x).is_zero());
    CHECK(p.degree() == -1);
}
