#pragma once

#include "fanofib/nonneg.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fanofib::maxsing {

using exactmath::NonnegCombination;
using exactmath::Polynomial;
using exactmath::Rational;

// Exact value of the quadratic exclusion form
//   (4-k_h) S_l (S_l+S_u) n^2 + S_u^2 n^2 + e^2 + 2(2-k_v) S_l n e + 2(1-k_v) S_u n e,
// which a supermaximal singularity would force to be negative.
Rational exclusion_form(const Rational& sigma_l, const Rational& sigma_u, const Rational& n,
                        const Rational& e, const Rational& k_h, const Rational& k_v);

// Depth-adjusted variant: (4-k_h-2*eps) S_l (S_l+S_u) n^2 + (n S_u - e)^2.
Rational exclusion_form_depth(const Rational& sigma_l, const Rational& sigma_u,
                              const Rational& n, const Rational& e, const Rational& k_h,
                              const Rational& eps);

enum class ExclusionCase { corollary11, depth_balance, smooth_case, singular_case, theorem2 };

std::string to_string(ExclusionCase c);

// An exact algebraic witness that the corresponding exclusion expression is
// a nonnegative combination, contradicting the strict negativity a maximal
// singularity would force.
struct Certificate {
    std::string name;
    std::string conclusion;
    std::vector<std::string> assumption_text;
    std::vector<std::pair<std::string, NonnegCombination>> identities;
    std::set<int> nonneg_vars;
    std::string note;
};

Certificate exclusion_certificate(ExclusionCase which);

// Runs the nonneg-combination checker on every identity; throws
// certificate_error if any fails.
void verify_certificate(const Certificate& cert);

// The four atomic certificates in canonical order.
std::vector<ExclusionCase> atomic_cases();

struct GridBounds {
    int int_max = 6;        // range of the integer variables (n starts at 1)
    Rational step{1, 4};    // grid step for the rational variables
    Rational rat_max = 6;   // range for e
};

struct Counterexample {
    std::map<std::string, Rational> assignment;
    Rational value;
};

// Exhaustively evaluates the certified expression over the grid (in exact
// scaled-integer arithmetic) and returns the first assignment where the
// perturbed expression is negative, in lexicographic grid order. The
// unperturbed expressions admit none.
std::optional<Counterexample> falsification_search(ExclusionCase which, const GridBounds& bounds,
                                                   const Rational& perturbation = Rational(0));

// Theorem-2 style summary: the numeric layer of the superrigidity argument
// for a family profile. Geometric condition flags are caller-supplied facts,
// never computed here.
struct NumericLayerFlags {
    bool vertical = false;
    bool vertical_singular = false;
    bool fiber_or_fiber_singular = false;
};

struct NumericLayerReport {
    bool depth2_ok = false;
    bool flags_ok = false;
    bool certificates_ok = false;
    bool verified() const { return depth2_ok && flags_ok && certificates_ok; }
};

NumericLayerReport superrigidity_numeric_report(const Rational& depth,
                                                const NumericLayerFlags& flags);

}  // namespace fanofib::maxsing
