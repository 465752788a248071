#include "fanofib/polynomial.hpp"

#include "fanofib/errors.hpp"

#include <algorithm>

namespace fanofib::exactmath {

int VarContext::intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end())
        return it->second;
    const int id = static_cast<int>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
}

int VarContext::id_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw parameter_error("unknown variable '" + name + "'");
    return it->second;
}

const std::string& VarContext::name_of(int id) const {
    if (id < 0 || id >= size())
        throw parameter_error("variable id out of range");
    return names_[static_cast<std::size_t>(id)];
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [var, exp] : exps)
        d += exp;
    return d;
}

int Monomial::exponent(int var) const {
    for (const auto& [v, e] : exps)
        if (v == var)
            return e;
    return 0;
}

Monomial Monomial::var(int id, int exp) {
    Monomial m;
    if (exp > 0)
        m.exps.emplace_back(id, exp);
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.exps.reserve(exps.size() + other.exps.size());
    auto a = exps.begin();
    auto b = other.exps.begin();
    while (a != exps.end() || b != other.exps.end()) {
        if (b == other.exps.end() || (a != exps.end() && a->first < b->first)) {
            out.exps.push_back(*a++);
        } else if (a == exps.end() || b->first < a->first) {
            out.exps.push_back(*b++);
        } else {
            out.exps.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree();
    const int db = b.degree();
    if (da != db)
        return da > db;
    // Lexicographic on the dense exponent sequence; lower ids rank higher.
    auto ia = a.exps.begin();
    auto ib = b.exps.begin();
    while (ia != a.exps.end() && ib != b.exps.end()) {
        if (ia->first != ib->first)
            return ia->first < ib->first;  // the one holding the higher-ranked var wins
        if (ia->second != ib->second)
            return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return ia != a.exps.end();
}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& value) {
    Polynomial p(std::move(ctx));
    p.insert_term(Monomial::unit(), value);
    return p;
}

Polynomial Polynomial::variable(const ContextPtr& ctx, const std::string& name) {
    if (!ctx)
        throw context_error("variable: null context");
    Polynomial p(ctx);
    p.insert_term(Monomial::var(ctx->intern(name)), 1);
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty())
        return -1;
    return terms_.begin()->first.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::insert_term(const Monomial& m, const Rational& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Polynomial::require_same_context(const Polynomial& other) const {
    if (ctx_ && other.ctx_ && ctx_ != other.ctx_)
        throw context_error("polynomials from different variable contexts");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ctx_);
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_context(other);
    if (!ctx_)
        ctx_ = other.ctx_;
    for (const auto& [m, c] : other.terms_)
        insert_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_context(other);
    if (!ctx_)
        ctx_ = other.ctx_;
    for (const auto& [m, c] : other.terms_)
        insert_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    out -= other;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    require_same_context(other);
    Polynomial out(ctx_ ? ctx_ : other.ctx_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            out.insert_term(ma * mb, ca * cb);
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
    Polynomial out(ctx_);
    if (scalar == 0)
        return out;
    for (const auto& [m, c] : terms_)
        out.terms_.emplace(m, c * scalar);
    return out;
}

Polynomial Polynomial::operator+(const Rational& scalar) const {
    Polynomial out = *this;
    out.insert_term(Monomial::unit(), scalar);
    return out;
}

Polynomial Polynomial::operator-(const Rational& scalar) const {
    return *this + (-scalar);
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = Polynomial::constant(ctx_, 1);
    for (unsigned i = 0; i < exponent; ++i)
        result = result * *this;
    return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
    require_same_context(other);
    return terms_ == other.terms_;
}

Polynomial Polynomial::substitute(int var, const Polynomial& replacement) const {
    require_same_context(replacement);
    Polynomial out(ctx_);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::constant(ctx_, c);
        Monomial rest;
        for (const auto& [v, e] : m.exps) {
            if (v == var)
                term = term * replacement.pow(static_cast<unsigned>(e));
            else
                rest.exps.emplace_back(v, e);
        }
        Polynomial rest_poly(ctx_);
        rest_poly.insert_term(rest, 1);
        out += term * rest_poly;
    }
    return out;
}

Polynomial Polynomial::substitute(int var, const Rational& value) const {
    return substitute(var, Polynomial::constant(ctx_, value));
}

Rational Polynomial::evaluate(const std::map<int, Rational>& assignment) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [v, e] : m.exps) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw parameter_error("evaluate: unassigned variable '" +
                                      (ctx_ ? ctx_->name_of(v) : std::to_string(v)) + "'");
            for (int i = 0; i < e; ++i)
                term *= it->second;
        }
        total += term;
    }
    return total;
}

std::set<int> Polynomial::variables_used() const {
    std::set<int> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.exps)
            vars.insert(v);
    return vars;
}

bool Polynomial::all_coefficients_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second >= 0; });
}

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const Rational abs_c = negative ? Rational(-c) : c;
        if (first) {
            if (negative)
                out += '-';
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string vars;
        for (const auto& [v, e] : m.exps) {
            if (!vars.empty())
                vars += '*';
            vars += ctx_ ? ctx_->name_of(v) : ("x" + std::to_string(v));
            if (e != 1)
                vars += '^' + std::to_string(e);
        }
        if (vars.empty()) {
            out += exactmath::to_string(abs_c);
        } else {
            if (abs_c != 1) {
                out += exactmath::to_string(abs_c);
                out += '*';
            }
            out += vars;
        }
    }
    return out;
}

bool poly_equal(const Polynomial& p, const Polynomial& q) {
    return (p - q).is_zero();
}

}  // namespace fanofib::exactmath
