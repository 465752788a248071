#include "fanofib/numeric.hpp"

#include "fanofib/errors.hpp"

#include <cstddef>

namespace fanofib::exactmath {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw parameter_error("make_rational: zero denominator");
    Rational r(num);
    r /= Rational(den);
    return r;
}

Integer binomial(const Integer& n, const Integer& k) {
    if (n < 0 || k < 0)
        throw parameter_error("binomial: arguments must be nonnegative");
    if (k > n)
        return 0;
    Integer kk = (k > n - k) ? n - k : k;
    Integer result = 1;
    // result stays integral at every step: after i factors it equals C(n - kk + i, i).
    for (Integer i = 1; i <= kk; ++i) {
        result *= n - kk + i;
        result /= i;
    }
    return result;
}

Integer factorial(unsigned n) {
    Integer result = 1;
    for (unsigned i = 2; i <= n; ++i)
        result *= i;
    return result;
}

std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) {
        s += '/';
        s += denominator(q).str();
    }
    return s;
}

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw parameter_error("parse_rational: empty input");
    const std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::runtime_error&) {
        throw parameter_error("parse_rational: bad rational literal '" + text + "'");
    }
}

}  // namespace fanofib::exactmath
