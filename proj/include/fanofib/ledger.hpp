#pragma once

#include "fanofib/resolution_graph.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace fanofib::maxsing {

// Per-level accounting for the restriction of a horizontal codimension-2
// cycle Y to the fiber: at each deep level i the books must balance as
//
//   m_y(i) * mu_i + d_i = m_yf(i) + sum_{j < i} cross(j, i).
//
// m_y is the multiplicity of the cycle transform along the center, m_yf the
// multiplicity of the restricted cycle transform, d_i the degree spilled
// into the exceptional divisor, cross(j, i) the part of level j's spill
// that is still visible at level i.
struct MultiplicityLedger {
    ResolutionGraph graph;
    std::map<int, Rational> m_y;   // levels with codim >= 3
    std::map<int, Rational> m_yf;  // same levels; forced 0 outside the fiber
    std::map<int, Rational> d;     // levels with codim >= 4
    std::map<std::pair<int, int>, Rational> cross;  // (j, i) with j < i, both codim >= 4
};

struct LedgerReport {
    bool valid = false;
    std::vector<std::string> issues;
};

// Checks the balance equalities, the arrow-support rule (cross(j, i) > 0
// needs an arrow i -> j), the degree bound cross(j, i) <= d_j, vanishing of
// m_yf outside the fiber, nonnegativity, and the spillover bound
// d_S >= sum over in-fiber codim-3 levels of m_y * mu at the deepest
// codim-4 level S (the consequence of restricting a divisor to a curve-
// dimensional center that the balance system presupposes).
LedgerReport ledger_validate(const MultiplicityLedger& led);

// Compatibility in the sense of the counting argument: a(i) >= sum of a(j)
// over arrows j -> i restricted to the deep levels.
bool compatible_with_graph(const ResolutionGraph& g, const std::map<int, Rational>& a);

// Weighted comparison sum a(i) m_yf(i) >= sum a(i) m_y(i) mu_i
// + a(S) * sum_{codim-3, in fiber} m_y(i) mu_i. Throws parameter_error when
// `a` is not compatible. Vacuously true when no level has codim >= 4.
bool ledger_b8_check(const MultiplicityLedger& led, const std::map<int, Rational>& a);

struct MultBoundResult {
    bool holds_sharp = false;  // <= p_1 m_yf(1) + (sigma_s - p_1) m_yf(2)
    bool holds_weak = false;   // <= sigma_s m_yf(1)
};

// The two path-weighted multiplicity bounds. Requires the first level to be
// deep (codim >= 4) and the declared monotonicity m_y, m_yf nonincreasing;
// throws data_error otherwise.
MultBoundResult weighted_mult_bounds(const MultiplicityLedger& led,
                                     const std::vector<Integer>& p);

struct LedgerGenConfig {
    int max_deep = 3;      // codim >= 4 levels
    int max_mid = 2;       // codim 3 levels
    int max_top = 2;       // codim 2 levels
    int value_cap = 8;     // numerators drawn from [0, value_cap]
    int denominator = 4;   // all values are multiples of 1/denominator
};

// Random graph with valid structure (chain + extra arrows); used by the
// fuzzing harness and the property tests.
ResolutionGraph random_graph(std::mt19937& rng, int max_vertices = 6);

// Random ledger satisfying every admissibility constraint by construction:
// draws m_y nonincreasing, d freely (with the spillover bound enforced at
// the deepest level), cross terms supported on arrows and bounded by d,
// then solves the balance equalities for m_yf, rejecting draws that would
// make m_yf negative or increasing.
MultiplicityLedger random_valid_ledger(std::mt19937& rng, const LedgerGenConfig& cfg = {});

}  // namespace fanofib::maxsing
