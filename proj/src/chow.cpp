#include "fanofib/chow.hpp"

#include "fanofib/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <numeric>

namespace fanofib::chow {

namespace {

void validate_twists(const std::vector<int>& twists) {
    for (std::size_t i = 0; i < twists.size(); ++i) {
        if (twists[i] <= 0)
            throw parameter_error("twists are stored zero-suppressed; entries must be positive");
        if (i > 0 && twists[i] < twists[i - 1])
            throw parameter_error("twists must be nondecreasing");
    }
}

}  // namespace

FamilyParams FamilyParams::hypersurface(std::vector<int> twists, int m, int l, int a_q, int a_w) {
    validate_twists(twists);
    if (m < 2)
        throw parameter_error("hypersurface degree m must be >= 2");
    if (l < 2)
        throw parameter_error("half branch degree l must be >= 2");
    if (a_q < 0 || a_w < 0)
        throw parameter_error("a_q and a_w must be nonnegative");
    FamilyParams fp;
    fp.kind = FamilyKind::double_hypersurface;
    fp.twists = std::move(twists);
    fp.m = m;
    fp.l = l;
    fp.a_q = a_q;
    fp.a_w = a_w;
    if (static_cast<int>(fp.twists.size()) > fp.big_m() + 1)
        throw parameter_error("more nonzero twists than bundle summands");
    return fp;
}

FamilyParams FamilyParams::space(std::vector<int> twists, int a_w, int big_m_override) {
    validate_twists(twists);
    if (a_w < 0)
        throw parameter_error("a_w must be nonnegative");
    FamilyParams fp;
    fp.kind = FamilyKind::double_space;
    fp.twists = std::move(twists);
    fp.a_w = a_w;
    const int min_m = std::max<int>(3, static_cast<int>(fp.twists.size()));
    fp.space_m = big_m_override == 0 ? min_m : big_m_override;
    if (fp.space_m < static_cast<int>(fp.twists.size()))
        throw parameter_error("M smaller than the number of nonzero twists");
    return fp;
}

int FamilyParams::a_x() const {
    return std::accumulate(twists.begin(), twists.end(), 0);
}

int FamilyParams::big_m() const {
    return kind == FamilyKind::double_hypersurface ? m + l - 1 : space_m;
}

int FamilyParams::rank_e() const {
    return kind == FamilyKind::double_hypersurface ? big_m() + 2 : big_m() + 1;
}

int FamilyParams::canonical_fiber_coeff() const {
    int b = a_x() + a_w - 2;
    if (kind == FamilyKind::double_hypersurface)
        b += a_q;
    return b;
}

std::string FamilyParams::to_text() const {
    std::string t = "((";
    if (twists.empty()) {
        t += '0';
    } else {
        for (std::size_t i = 0; i < twists.size(); ++i) {
            if (i)
                t += ',';
            t += std::to_string(twists[i]);
        }
    }
    t += ")";
    if (kind == FamilyKind::double_hypersurface)
        t += ",(" + std::to_string(a_q) + "," + std::to_string(a_w) + ")";
    else
        t += "," + std::to_string(a_w);
    t += ")";
    return t;
}

std::string FamilyParams::to_text_full() const {
    std::string t = to_text();
    if (kind == FamilyKind::double_hypersurface)
        t += ",m=" + std::to_string(m) + ",l=" + std::to_string(l);
    else
        t += ",M=" + std::to_string(space_m);
    return t;
}

bool FamilyParams::same_family(const FamilyParams& other) const {
    return kind == other.kind && twists == other.twists && a_q == other.a_q && a_w == other.a_w;
}

AmbientClass AmbientClass::monomial(int xi_deg, int r_deg, const Integer& coeff) {
    AmbientClass c;
    c.insert(xi_deg, r_deg, coeff);
    return c;
}

Integer AmbientClass::coefficient(int xi_deg, int r_deg) const {
    auto it = terms.find({xi_deg, r_deg});
    return it == terms.end() ? Integer(0) : it->second;
}

void AmbientClass::insert(int xi_deg, int r_deg, const Integer& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms.emplace(std::make_pair(xi_deg, r_deg), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms.erase(it);
    }
}

AmbientClass AmbientClass::operator+(const AmbientClass& other) const {
    AmbientClass out = *this;
    for (const auto& [key, coeff] : other.terms)
        out.insert(key.first, key.second, coeff);
    return out;
}

AmbientClass AmbientClass::operator*(const AmbientClass& other) const {
    AmbientClass out;
    for (const auto& [ka, ca] : terms)
        for (const auto& [kb, cb] : other.terms)
            out.insert(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

AmbientClass AmbientClass::operator*(const Integer& scalar) const {
    AmbientClass out;
    if (scalar == 0)
        return out;
    for (const auto& [key, coeff] : terms)
        out.terms.emplace(key, coeff * scalar);
    return out;
}

AmbientClass reduce_ambient(AmbientClass c, const FamilyParams& fp) {
    const int rank = fp.rank_e();
    const Integer a_x = fp.a_x();
    AmbientClass out;
    for (const auto& [key, coeff] : c.terms) {
        const auto [xi_deg, r_deg] = key;
        if (r_deg >= 2)
            continue;  // R^2 = 0
        if (r_deg == 1) {
            // xi^r * R = a_X * xi^(r-1) * R^2 = 0
            if (xi_deg >= rank)
                continue;
            out = out + AmbientClass::monomial(xi_deg, 1, coeff);
            continue;
        }
        if (xi_deg > rank)
            continue;  // reduces through xi^r to a multiple of xi^(>=r) * R
        if (xi_deg == rank) {
            out = out + AmbientClass::monomial(rank - 1, 1, coeff * a_x);
            continue;
        }
        out = out + AmbientClass::monomial(xi_deg, 0, coeff);
    }
    return out;
}

DivisorK to_k_basis(const Divisor& d, const FamilyParams& fp) {
    // L_V = -K_V + b*F
    const Integer b = fp.canonical_fiber_coeff();
    return DivisorK{-d.l, d.l * b + d.f};
}

Divisor from_k_basis(const DivisorK& d, const FamilyParams& fp) {
    const Integer b = fp.canonical_fiber_coeff();
    return Divisor{-d.k, d.k * b + d.f};
}

CodimTwo square_of(const Divisor& d, const FamilyParams& fp) {
    // L^2 = K^2 + 2b*H_F, L.F = H_F, F^2 = 0.
    const Integer b = fp.canonical_fiber_coeff();
    return CodimTwo{d.l * d.l, d.l * d.l * 2 * b + 2 * d.l * d.f};
}

Integer pair_with_l_power(const CodimTwo& c, const FamilyParams& fp) {
    return c.k2 * k2_number(fp) + c.hf * degree_v(fp);
}

Integer top_intersection_v(const std::vector<Divisor>& classes, const FamilyParams& fp) {
    if (static_cast<int>(classes.size()) != fp.dim_v())
        throw dimension_error("top_intersection_v: expected " + std::to_string(fp.dim_v()) +
                              " degree-1 classes, got " + std::to_string(classes.size()));
    AmbientClass product = AmbientClass::one();
    for (const Divisor& d : classes) {
        const AmbientClass factor =
            AmbientClass::monomial(1, 0, d.l) + AmbientClass::monomial(0, 1, d.f);
        product = reduce_ambient(product * factor, fp);
    }
    if (fp.kind == FamilyKind::double_hypersurface) {
        const AmbientClass q_class =
            AmbientClass::monomial(1, 0, fp.m) + AmbientClass::monomial(0, 1, fp.a_q);
        product = reduce_ambient(product * q_class, fp);
    }
    // Point class of the bundle is xi^(rank-1) * R; the cover has degree 2.
    return 2 * product.coefficient(fp.rank_e() - 1, 1);
}

Divisor canonical_class(const FamilyParams& fp) {
    return Divisor{-1, fp.canonical_fiber_coeff()};
}

Integer k2_number(const FamilyParams& fp) {
    const Divisor k = canonical_class(fp);
    std::vector<Divisor> classes(static_cast<std::size_t>(fp.dim_v()), Divisor{1, 0});
    classes[0] = k;
    classes[1] = k;
    return top_intersection_v(classes, fp);
}

Integer k2_closed_form_hypersurface(int m, int a_x, int a_q, int a_w) {
    return Integer(2) * m * (4 - a_x - 2 * a_q - 2 * a_w) + 2 * a_q;
}

Integer k2_closed_form_space(int a_x, int a_w) {
    return Integer(8) - 2 * a_x - 4 * a_w;
}

Integer k2_closed_form(const FamilyParams& fp) {
    if (fp.kind == FamilyKind::double_hypersurface)
        return k2_closed_form_hypersurface(fp.m, fp.a_x(), fp.a_q, fp.a_w);
    return k2_closed_form_space(fp.a_x(), fp.a_w);
}

Integer degree_v(const FamilyParams& fp) {
    const Divisor minus_k{1, -Integer(fp.canonical_fiber_coeff())};
    std::vector<Divisor> classes(static_cast<std::size_t>(fp.dim_v()), Divisor{1, 0});
    classes[0] = minus_k;
    classes[1] = Divisor{0, 1};
    return top_intersection_v(classes, fp);
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    char take() {
        if (pos >= text.size())
            throw parameter_error("family notation: unexpected end of input");
        return text[pos++];
    }
    void expect(char c) {
        if (take() != c)
            throw parameter_error(std::string("family notation: expected '") + c + "'");
    }
    int integer() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw parameter_error("family notation: expected an integer");
        return std::stoi(text.substr(start, pos - start));
    }
};

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out += c;
    return out;
}

}  // namespace

FamilyParams parse_family(const std::string& raw) {
    const std::string text = strip_spaces(raw);
    Cursor cur{text};
    cur.expect('(');
    cur.expect('(');
    std::vector<int> twists;
    twists.push_back(cur.integer());
    while (cur.peek() == ',') {
        cur.take();
        twists.push_back(cur.integer());
    }
    cur.expect(')');
    cur.expect(',');
    if (twists.size() == 1 && twists[0] == 0)
        twists.clear();

    bool is_hypersurface = cur.peek() == '(';
    int a_q = 0, a_w = 0;
    if (is_hypersurface) {
        cur.expect('(');
        a_q = cur.integer();
        cur.expect(',');
        a_w = cur.integer();
        cur.expect(')');
    } else {
        a_w = cur.integer();
    }
    cur.expect(')');

    int m = 0, l = 0, big_m = 0;
    while (cur.peek() == ',') {
        cur.take();
        const char key = cur.take();
        cur.expect('=');
        const int value = cur.integer();
        if (key == 'm')
            m = value;
        else if (key == 'l')
            l = value;
        else if (key == 'M')
            big_m = value;
        else
            throw parameter_error("family notation: unknown attribute");
    }
    if (cur.pos != text.size())
        throw parameter_error("family notation: trailing characters in '" + raw + "'");

    if (is_hypersurface) {
        if (m == 0)
            throw parameter_error("family notation: double hypersurfaces need m=...");
        if (l == 0)
            l = 2;
        return FamilyParams::hypersurface(std::move(twists), m, l, a_q, a_w);
    }
    return FamilyParams::space(std::move(twists), a_w, big_m);
}

}  // namespace fanofib::chow
