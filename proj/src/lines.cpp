#include "fanofib/lines.hpp"

#include "fanofib/errors.hpp"

#include <algorithm>

namespace fanofib::lines {

using exactmath::binomial;
using exactmath::factorial;
using exactmath::make_rational;

namespace {

// (2l-1)!/(l-1)! = l * (l+1) * ... * (2l-1)
Integer rising_half(int l) {
    Integer out = 1;
    for (int i = l; i <= 2 * l - 1; ++i)
        out *= i;
    return out;
}

}  // namespace

Integer lambda_ml(int m, int l) {
    if (m < 3 || l < 2)
        throw parameter_error("lambda_ml: need m >= 3 and l >= 2");
    const Integer value = factorial(static_cast<unsigned>(m)) / 6 * rising_half(l) - 1;
    if (value < 0)
        throw parameter_error("lambda_ml: formula out of range");
    return value;
}

Integer delta_bound(const DeltaParams& params) {
    const int k = static_cast<int>(params.c.size());
    if (k < 1)
        throw parameter_error("delta_bound: need at least one point");
    if (params.cycle_dim < 1)
        throw parameter_error("delta_bound: cycle dimension must be >= 1");
    if (params.degree_cap < 0 || params.ambient_n < 1)
        throw parameter_error("delta_bound: bad ambient data");
    for (int ci : params.c)
        if (ci < 1)
            throw parameter_error("delta_bound: tangency orders must be positive");
    int prefix = k - 1;  // c_1 + ... + c_{k-1} + (k-1)
    for (int i = 0; i + 1 < k; ++i)
        prefix += params.c[static_cast<std::size_t>(i)];
    if (k >= 2) {
        if (prefix > params.degree_cap)
            throw parameter_error("delta_bound: degree cap too small for the point count");
        if ((k - 1) * params.cycle_dim > params.ambient_n)
            throw parameter_error("delta_bound: too many points for the ambient dimension");
    }

    Integer total = 0;
    for (int i = 1; i <= k; ++i) {
        const int a_i = i < k ? params.cycle_dim
                              : std::min(params.cycle_dim,
                                         params.ambient_n - (k - 1) * params.cycle_dim);
        const int c_raw = params.c[static_cast<std::size_t>(i - 1)];
        const int c_i = i < k ? c_raw
                              : std::min(c_raw, params.degree_cap - (prefix - (k - 1)) - (k - 1));
        total += binomial(a_i + c_i, c_i);
    }
    return total;
}

OrderingFunction ordering_function(int m, int l) {
    if (m < 4 || l < 3)
        throw parameter_error("ordering_function: need m >= 4 and l >= 3");
    OrderingFunction out;
    const int slots = m + l - 4;
    out.c.resize(static_cast<std::size_t>(2 * l), 0);
    for (int e = 0; e <= 2 * l - 1; ++e) {
        Integer count = 0;
        // degrees {2,...,m-1} usable from 4 on, degrees {l,...,2l-1} from 3 on
        for (int i = 4; i <= e; ++i)
            if (i >= 2 && i <= m - 1)
                ++count;
        for (int j = 3; j <= e; ++j)
            if (j >= l && j <= 2 * l - 1)
                ++count;
        out.c[static_cast<std::size_t>(e)] = count;
    }
    if (out.c[static_cast<std::size_t>(2 * l - 1)] != slots)
        throw parameter_error("ordering_function: domain size mismatch at (m,l)=(" +
                              std::to_string(m) + "," + std::to_string(l) +
                              "); the slot count " + out.c.back().str() + " differs from " +
                              std::to_string(slots) + " (holds only for m <= 2l)");
    out.chi.resize(static_cast<std::size_t>(slots) + 1, 0);
    for (int e = 1; e <= 2 * l - 1; ++e) {
        const Integer lo = out.c[static_cast<std::size_t>(e - 1)] + 1;
        const Integer hi = out.c[static_cast<std::size_t>(e)];
        for (Integer slot = lo; slot <= hi; ++slot)
            out.chi[static_cast<std::size_t>(slot)] = e;
    }
    return out;
}

Rational hypertangent_bound(int m, int l, HyperBound variant) {
    if (m < 3 || l < 2)
        throw parameter_error("hypertangent_bound: need m >= 3 and l >= 2");
    const bool low_range = m <= 2 * l;
    switch (variant) {
        case HyperBound::first_pass_low:
            if (!low_range)
                throw parameter_error("first_pass_low needs m <= 2l");
            return make_rational(4 * l, Integer(m) * (2 * l - 1));
        case HyperBound::first_pass_high:
            if (low_range)
                throw parameter_error("first_pass_high needs m >= 2l+1");
            return make_rational(2, m - 1);
        case HyperBound::refined_low:
            if (!low_range)
                throw parameter_error("refined_low needs m <= 2l");
            return make_rational(8 * l, Integer(3) * m * (2 * l - 1));
        case HyperBound::refined_high:
            if (low_range)
                throw parameter_error("refined_high needs m >= 2l+1");
            return make_rational(4, 3 * (m - 1));
    }
    throw parameter_error("unknown bound variant");
}

std::set<std::pair<int, int>> exceptional_set(int m_lo, int m_hi, int l_lo, int l_hi) {
    if (m_lo < 3 || l_lo < 3)
        throw parameter_error("exceptional_set: ranges start at m >= 3, l >= 3");
    std::set<std::pair<int, int>> out;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int l = l_lo; l <= l_hi; ++l) {
            const Rational target = make_rational(3, 2 * m);
            const Rational bound = hypertangent_bound(
                m, l, m <= 2 * l ? HyperBound::refined_low : HyperBound::refined_high);
            if (bound > target)
                out.insert({m, l});
        }
    }
    return out;
}

Integer mobile_denominator_raw(int m, int l) {
    if (m < 3 || l < 2)
        throw parameter_error("mobile_denominator_raw: need m >= 3 and l >= 2");
    return Integer(2) * factorial(static_cast<unsigned>(m)) / 3 * rising_half(l);
}

MobileRatio mobile_ratio(int m, int l) {
    if (m < 4 || l < 3)
        throw parameter_error("mobile_ratio: need m >= 4 and l >= 3");
    MobileRatio out;
    out.lambda = lambda_ml(m, l);
    // (2l)!/l! = 2 * (2l-1)!/(l-1)!
    const Integer full_rising = 2 * rising_half(l);
    out.numerator = factorial(static_cast<unsigned>(m)) / 4 * full_rising - out.lambda;
    out.denominator = mobile_denominator_raw(m, l) - out.lambda;
    if (out.denominator <= 0)
        throw parameter_error("mobile_ratio: nonpositive denominator");
    out.value = make_rational(out.numerator, out.denominator);
    out.exceeds_two_thirds = out.value > make_rational(2, 3);
    return out;
}

GrowthExample lines_growth_example(int a) {
    if (a < 0)
        throw parameter_error("lines_growth_example: a must be nonnegative");
    GrowthExample out;
    out.degree_lower_bound = Integer(1) << static_cast<unsigned>(a);
    out.condition_count = Integer(a) * (a + 1);
    return out;
}

}  // namespace fanofib::lines
