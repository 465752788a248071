#include "fanofib/nonneg.hpp"

#include <algorithm>

namespace fanofib::exactmath {

Generator Generator::square(const Polynomial& base) {
    Generator g;
    g.kind = Kind::square;
    g.square_base = base;
    g.poly = base * base;
    g.label = "(" + base.to_string() + ")^2";
    return g;
}

Generator Generator::nonneg_monomials(const Polynomial& p, std::string label) {
    Generator g;
    g.kind = Kind::nonneg_monomials;
    g.poly = p;
    g.label = std::move(label);
    return g;
}

Generator Generator::assumed(const Polynomial& p, std::string label) {
    Generator g;
    g.kind = Kind::assumed;
    g.poly = p;
    g.label = std::move(label);
    return g;
}

namespace {

bool vars_subset(const Polynomial& p, const std::set<int>& allowed) {
    const auto used = p.variables_used();
    return std::includes(allowed.begin(), allowed.end(), used.begin(), used.end());
}

}  // namespace

Polynomial expand_parts(const NonnegCombination& combo) {
    Polynomial sum(combo.target.context());
    for (const auto& part : combo.parts) {
        Polynomial product = part.multiplier;
        for (const auto& gen : part.generators)
            product = product * gen.poly;
        sum += product;
    }
    return sum;
}

CheckReport check_nonneg_combination_report(const NonnegCombination& combo,
                                            const std::set<int>& nonneg_vars) {
    CheckReport report;
    std::size_t part_index = 0;
    for (const auto& part : combo.parts) {
        ++part_index;
        const std::string where = "part " + std::to_string(part_index);
        if (!part.multiplier.all_coefficients_nonnegative())
            report.issues.push_back(where + ": multiplier has a negative coefficient");
        if (!vars_subset(part.multiplier, nonneg_vars))
            report.issues.push_back(where + ": multiplier uses a variable of unknown sign");
        for (const auto& gen : part.generators) {
            switch (gen.kind) {
                case Generator::Kind::square:
                    if (!poly_equal(gen.poly, gen.square_base * gen.square_base))
                        report.issues.push_back(where + ": generator '" + gen.label +
                                                "' is not the square of its base");
                    break;
                case Generator::Kind::nonneg_monomials:
                    if (!gen.poly.all_coefficients_nonnegative())
                        report.issues.push_back(where + ": generator '" + gen.label +
                                                "' has a negative coefficient");
                    if (!vars_subset(gen.poly, nonneg_vars))
                        report.issues.push_back(where + ": generator '" + gen.label +
                                                "' uses a variable of unknown sign");
                    break;
                case Generator::Kind::assumed:
                    if (std::find(combo.assumption_labels.begin(), combo.assumption_labels.end(),
                                  gen.label) == combo.assumption_labels.end())
                        report.issues.push_back(where + ": generator '" + gen.label +
                                                "' is not among the declared assumptions");
                    break;
            }
        }
    }
    if (!poly_equal(expand_parts(combo), combo.target))
        report.issues.push_back("parts do not sum to the target polynomial");
    report.ok = report.issues.empty();
    return report;
}

}  // namespace fanofib::exactmath
