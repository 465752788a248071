#pragma once

#include "fanofib/numeric.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fanofib::exactmath {

// Interning table for polynomial variables. Two polynomials may be combined
// only when they share the same context object; this rules out silent
// aliasing of symbols created by different modules.
class VarContext {
  public:
    int intern(const std::string& name);
    int id_of(const std::string& name) const;  // throws parameter_error when unknown
    const std::string& name_of(int id) const;
    int size() const { return static_cast<int>(names_.size()); }

  private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

using ContextPtr = std::shared_ptr<VarContext>;

// Sparse exponent vector, sorted by variable id, no zero exponents stored.
struct Monomial {
    std::vector<std::pair<int, int>> exps;

    int degree() const;
    int exponent(int var) const;
    bool operator==(const Monomial& other) const { return exps == other.exps; }
    static Monomial unit() { return {}; }
    static Monomial var(int id, int exp = 1);
    Monomial operator*(const Monomial& other) const;
};

// Graded lexicographic order, higher first: larger total degree wins, ties
// broken lexicographically with lower variable ids ranking higher. Fixed so
// that serialized polynomials are canonical and diffable.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

    static Polynomial constant(ContextPtr ctx, const Rational& value);
    static Polynomial variable(const ContextPtr& ctx, const std::string& name);

    const ContextPtr& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;
    const std::map<Monomial, Rational, GrlexGreater>& terms() const { return terms_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial operator*(const Rational& scalar) const;
    Polynomial operator+(const Rational& scalar) const;
    Polynomial operator-(const Rational& scalar) const;
    Polynomial pow(unsigned exponent) const;

    bool operator==(const Polynomial& other) const;

    // Replace one variable by a polynomial (or constant) and re-expand.
    Polynomial substitute(int var, const Polynomial& replacement) const;
    Polynomial substitute(int var, const Rational& value) const;

    // Full evaluation; every variable that occurs must be assigned.
    Rational evaluate(const std::map<int, Rational>& assignment) const;

    std::set<int> variables_used() const;
    bool all_coefficients_nonnegative() const;

    // Canonical textual form: sorted graded-lex, explicit rational coefficients.
    std::string to_string() const;

  private:
    void insert_term(const Monomial& m, const Rational& coeff);
    void require_same_context(const Polynomial& other) const;

    ContextPtr ctx_;
    std::map<Monomial, Rational, GrlexGreater> terms_;
};

inline Polynomial operator*(const Rational& scalar, const Polynomial& p) { return p * scalar; }

// Exact equality of the expanded forms; both arguments must share a context.
bool poly_equal(const Polynomial& p, const Polynomial& q);

}  // namespace fanofib::exactmath
