#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fanofib/errors.hpp"
#include "fanofib/families.hpp"

#include <random>
#include <set>

using namespace fanofib::families;
using fanofib::chow::Divisor;
using fanofib::chow::FamilyKind;
using fanofib::chow::FamilyParams;
using fanofib::exactmath::Integer;
using fanofib::exactmath::Rational;
using fanofib::exactmath::make_rational;

namespace {

std::set<std::string> texts(const std::vector<EnumeratedFamily>& rows, bool listed_only) {
    std::set<std::string> out;
    for (const auto& row : rows)
        if (!listed_only || row.listed)
            out.insert(row.family_text());
    return out;
}

}  // namespace

TEST_CASE("depth values") {
    CHECK(generalized_k2_depth(FamilyParams::hypersurface({}, 4, 3, 2, 0)) ==
          make_rational(1, 2));
    // depth 2 boundary families
    CHECK(generalized_k2_depth(FamilyParams::hypersurface({2}, 5, 2, 0, 0)) == 2);
    CHECK(generalized_k2_depth(FamilyParams::space({2}, 0)) == 2);
    CHECK(generalized_k2_depth(FamilyParams::space({2, 2}, 0)) == 0);
}

TEST_CASE("the eight hypersurface families under the default caps") {
    const EnumCaps caps;
    const auto rows = enumerate_k2_failing(caps, FamilyKind::double_hypersurface);
    const std::set<std::string> expected = {
        "((0),(2,0))", "((0),(1,1))",   "((1),(0,1))",  "((2),(1,0))",
        "((2),(0,0))", "((3),(0,0))",   "((1,2),(0,0))", "((1,1,1),(0,0))"};
    CHECK(texts(rows, true) == expected);
    // every row in range has positive k2 for the full m range (no m-dependent bucket)
    for (const auto& row : rows)
        CHECK(row.m_independent);
    // the complement under these caps
    CHECK(rows.size() - expected.size() == 7);
    // ((0),(0,2)) is excluded: the pairing is exactly 0
    CHECK(texts(rows, false).count("((0),(0,2))") == 0);
}

TEST_CASE("the five double space families under the default caps") {
    const EnumCaps caps;
    const auto rows = enumerate_k2_failing(caps, FamilyKind::double_space);
    const std::set<std::string> expected = {"((1),1)", "((2),0)", "((3),0)", "((1,2),0)",
                                            "((1,1,1),0)"};
    CHECK(texts(rows, true) == expected);
    CHECK(rows.size() - expected.size() == 4);
}

TEST_CASE("enumeration order is canonical") {
    const EnumCaps caps;
    const auto once = enumerate_k2_failing(caps, FamilyKind::double_hypersurface);
    const auto twice = enumerate_k2_failing(caps, FamilyKind::double_hypersurface);
    REQUIRE(once.size() == twice.size());
    for (std::size_t i = 0; i < once.size(); ++i)
        CHECK(once[i].family_text() == twice[i].family_text());
    for (std::size_t i = 1; i < once.size(); ++i)
        CHECK(once[i - 1].family_text() != once[i].family_text());
}

TEST_CASE("divisor witness certifies ((1,2),(0,0))") {
    for (int m = 2; m <= 8; ++m) {
        const auto fp = FamilyParams::hypersurface({1, 2}, m, 2, 0, 0);
        const auto witnesses = builtin_witnesses(fp);
        REQUIRE(witnesses.size() == 1);
        const auto res = k_condition_certify(fp, witnesses.front());
        REQUIRE(res.status == KStatus::certified);
        CHECK(res.certificate->pairing_main == 0);  // ((L-2F).(L-F).L^(M-1)) = 0
        CHECK(res.certificate->pairing_fiber == 2 * m);
    }
}

TEST_CASE("pseudo-effective witness certifies ((1,1,1),(0,0))") {
    const auto fp = FamilyParams::hypersurface({1, 1, 1}, 4, 3, 0, 0);
    const auto witnesses = builtin_witnesses(fp);
    REQUIRE(witnesses.size() == 1);
    const auto res = k_condition_certify(fp, witnesses.front());
    REQUIRE(res.status == KStatus::certified);
    CHECK(res.certificate->pairing_main == 0);  // ((L-F)^3.L^(M-2)) = 0
}

TEST_CASE("divisor witness pairing for ((2),(1,0)) is 2(1-m)") {
    for (int m = 2; m <= 9; ++m) {
        const auto fp = FamilyParams::hypersurface({2}, m, 2, 1, 0);
        const auto res = k_condition_certify(fp, KWitness::divisor(Divisor{1, -2}, "divisor:L-2F"));
        REQUIRE(res.status == KStatus::certified);
        CHECK(res.certificate->pairing_main == 2 * (1 - m));
    }
}

TEST_CASE("the critical family has no certifying builtin witness") {
    const auto fp = FamilyParams::hypersurface({}, 4, 3, 2, 0);
    CHECK(builtin_witnesses(fp).empty());
    const auto report = theorem1_report(fp);
    CHECK(report.k_condition == KStatus::fails);
    CHECK_FALSE(report.superrigid);
    CHECK(report.rigid);
    CHECK(report.bir_group_order == 4);
    CHECK(report.fibration_structures == 2);
}

TEST_CASE("witness validation") {
    const auto fp = FamilyParams::hypersurface({1, 2}, 3, 2, 0, 0);
    // fiber pairing of a vertical witness is zero: rejected as a witness
    CHECK_THROWS_AS(k_condition_certify(fp, KWitness::curve_family(1, 0, "bad")),
                    fanofib::witness_error);
    CHECK_THROWS_AS(k_condition_certify(fp, KWitness::divisor(Divisor{0, 1}, "vertical")),
                    fanofib::witness_error);
    // a witness that does not certify reports unknown, not failure
    const auto res = k_condition_certify(fp, KWitness::curve_family(5, 1, "useless"));
    CHECK(res.status == KStatus::unknown);
}

TEST_CASE("catalog lookups") {
    CHECK(in_catalog(FamilyParams::space({3}, 0)));
    CHECK_FALSE(in_catalog(FamilyParams::space({}, 1)));
    CHECK_THROWS_AS(builtin_witnesses(FamilyParams::space({}, 1)), fanofib::catalog_error);
    CHECK_THROWS_AS(theorem1_report(FamilyParams::hypersurface({}, 2, 2, 0, 0)),
                    fanofib::catalog_error);
    CHECK(catalog_hypersurfaces(4, 3).size() == 8);
    CHECK(catalog_spaces().size() == 5);
}

TEST_CASE("all thirteen catalog families pass the depth-2 check") {
    for (int m = 2; m <= 8; ++m)
        for (const auto& fp : catalog_hypersurfaces(m, 2))
            CHECK(generalized_k2_depth(fp) <= 2);
    for (const auto& fp : catalog_spaces())
        CHECK(generalized_k2_depth(fp) <= 2);
}

TEST_CASE("superrigid reports for the listed families") {
    const auto report = theorem1_report(FamilyParams::hypersurface({}, 4, 3, 1, 1));
    CHECK(report.superrigid);
    CHECK(report.fibration_structures == 1);
    CHECK(report.bir_group_order == 2);
    CHECK(report.depth2_ok);
    REQUIRE_FALSE(report.witness_ids.empty());

    const auto space_report = theorem1_report(FamilyParams::space({2}, 0));
    CHECK(space_report.superrigid);
    CHECK(space_report.depth2_ok);
}

TEST_CASE("involution action on the lattice") {
    std::mt19937 rng(7008);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int m = 2; m <= 10; ++m) {
        for (int i = 0; i < 200; ++i) {
            const Divisor d{coeff(rng), coeff(rng)};
            const Divisor once = tau_pushforward(d, m);
            CHECK(tau_pushforward(once, m) == d);
        }
        CHECK(tau_pushforward(Divisor{1, 0}, m) == Divisor{1, 0});
        CHECK(tau_pushforward(Divisor{0, 1}, m) == Divisor{m, -1});
    }
    // linear system coordinates: (n, l) -> (n + l m, -l)
    const auto moved = tau_on_system(3, -2, 4);
    CHECK(moved.first == 3 - 2 * 4);
    CHECK(moved.second == 2);
}

TEST_CASE("divisor certificates are re-derivable from the closed forms") {
    // (-K.(L+beta F).L^(M-1)) = 2(m a_X + a_Q) + (beta - b) 2m for hypersurfaces
    const auto fp = FamilyParams::hypersurface({2}, 5, 2, 1, 0);
    const Integer b = fp.canonical_fiber_coeff();
    for (int beta = -4; beta <= 4; ++beta) {
        std::vector<Divisor> classes(static_cast<std::size_t>(fp.dim_v()), Divisor{1, 0});
        classes[0] = Divisor{1, -b};
        classes[1] = Divisor{1, beta};
        const Integer direct = fanofib::chow::top_intersection_v(classes, fp);
        const Integer closed =
            2 * (Integer(fp.m) * fp.a_x() + fp.a_q) + (Integer(beta) - b) * 2 * fp.m;
        CHECK(direct == closed);
    }
}
