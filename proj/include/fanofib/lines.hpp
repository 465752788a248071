#pragma once

#include "fanofib/numeric.hpp"

#include <set>
#include <utility>
#include <vector>

namespace fanofib::lines {

using exactmath::Integer;
using exactmath::Rational;

// Upper bound for the degree of the 0-cycle of lines through a point of a
// fiber: m!/6 * (2l-1)!/(l-1)! - 1. Requires m >= 3, l >= 2.
Integer lambda_ml(int m, int l);

// Setup for the codimension lower bound: an a-dimensional cycle in
// N-space, polynomials of degree <= e, tangency orders c_1..c_k at k points.
struct DeltaParams {
    int ambient_n = 0;
    int degree_cap = 0;  // e
    int cycle_dim = 0;   // a >= 1
    std::vector<int> c;  // positive tangency orders, one per point
};

// sum of binomial(a_i + c*_i, c*_i) with the truncated last entry.
Integer delta_bound(const DeltaParams& params);

// The tangency-order bookkeeping for the sweeping-family construction:
// c_e counts usable systems of degree <= e, chi maps slot -> degree.
struct OrderingFunction {
    std::vector<Integer> c;  // indexed by e = 0 .. 2l-1
    std::vector<int> chi;    // indexed by slot 1 .. m+l-4 (chi[0] unused)
};

// Requires m >= 4, l >= 3 and the domain-size consistency c_{2l-1} = m+l-4,
// which restricts to m <= 2l; anything else throws parameter_error.
OrderingFunction ordering_function(int m, int l);

enum class HyperBound {
    first_pass_low,     // 4l / (m(2l-1)),   for m <= 2l
    first_pass_high,    // 2 / (m-1),        for m >= 2l+1
    refined_low,        // 8l / (3m(2l-1)),  for m <= 2l
    refined_high,       // 4 / (3(m-1)),     for m >= 2l+1
};

Rational hypertangent_bound(int m, int l, HyperBound variant);

// Pairs where the applicable refined bound exceeds the 3/(2m) target, i.e.
// where the generic tangency argument fails and lines must be counted.
std::set<std::pair<int, int>> exceptional_set(int m_lo, int m_hi, int l_lo, int l_hi);

struct MobileRatio {
    Rational value;
    bool exceeds_two_thirds = false;
    Integer numerator;    // m!/4 * (2l)!/l! - lambda
    Integer denominator;  // 2m!/3 * (2l-1)!/(l-1)! - lambda
    Integer lambda;
};

// Multiplicity/degree ratio of the general sweeping curve after removing
// the line cycle. Requires m >= 4, l >= 3.
MobileRatio mobile_ratio(int m, int l);

// The raw product 2m!/3 * (2l-1)!/(l-1)!; identically 4*(lambda_ml + 1).
Integer mobile_denominator_raw(int m, int l);

struct GrowthExample {
    Integer degree_lower_bound;  // 2^a
    Integer condition_count;     // a(a+1)
};

// Model showing how the max line-cycle degree grows: a stacked double
// conditions at one point cost a(a+1) coefficients and force degree 2^a.
GrowthExample lines_growth_example(int a);

}  // namespace fanofib::lines
