#pragma once

#include "fanofib/polynomial.hpp"

#include <set>
#include <string>
#include <vector>

namespace fanofib::exactmath {

// One nonnegative factor of a certificate part, with the reason it is
// nonnegative: a literal square, a polynomial with nonnegative coefficients
// in nonnegative variables, or an explicitly assumed sign constraint.
struct Generator {
    enum class Kind { square, nonneg_monomials, assumed };

    Kind kind = Kind::nonneg_monomials;
    Polynomial poly;
    Polynomial square_base;  // only for Kind::square; poly must equal square_base^2
    std::string label;

    static Generator square(const Polynomial& base);
    static Generator nonneg_monomials(const Polynomial& p, std::string label);
    static Generator assumed(const Polynomial& p, std::string label);
};

struct Part {
    std::vector<Generator> generators;  // empty product means 1
    Polynomial multiplier;              // must have nonnegative coefficients
};

// target == sum of parts, each part a product of nonnegative generators times
// a multiplier with nonnegative coefficients. A successful check certifies
// target >= 0 at every assignment where the declared variables and assumed
// generators are nonnegative.
struct NonnegCombination {
    Polynomial target;
    std::vector<Part> parts;
    std::vector<std::string> assumption_labels;  // which `assumed` generators are allowed
};

struct CheckReport {
    bool ok = false;
    std::vector<std::string> issues;
};

CheckReport check_nonneg_combination_report(const NonnegCombination& combo,
                                            const std::set<int>& nonneg_vars);

inline bool check_nonneg_combination(const NonnegCombination& combo,
                                     const std::set<int>& nonneg_vars) {
    return check_nonneg_combination_report(combo, nonneg_vars).ok;
}

// The expanded sum of parts (for dumps and independent re-checks).
Polynomial expand_parts(const NonnegCombination& combo);

}  // namespace fanofib::exactmath
