#pragma once

#include "fanofib/numeric.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fanofib::chow {

using exactmath::Integer;
using exactmath::Rational;

enum class FamilyKind { double_hypersurface, double_space };

// Discrete parameters of one fibration family. Twists hold the nonzero
// bundle degrees only (zero-suppressed, nondecreasing); the full tuple is
// padded with zeros in front and always starts with an implicit a_0 = 0.
//
// Double hypersurface: rank(E) = M+2 with M = m + l - 1, the cover is
// branched over a degree-2l divisor class 2l*L + 2a_w*R cut on the degree-m
// hypersurface m*L + a_q*R. Double space: rank(E) = M+1, branch class
// 2M*L + 2a_w*R; M itself is a free parameter of the notation, every exposed
// quantity is independent of it.
struct FamilyParams {
    FamilyKind kind = FamilyKind::double_hypersurface;
    std::vector<int> twists;
    int m = 0;
    int l = 0;
    int space_m = 0;  // M for double spaces
    int a_q = 0;
    int a_w = 0;

    static FamilyParams hypersurface(std::vector<int> twists, int m, int l, int a_q, int a_w);
    static FamilyParams space(std::vector<int> twists, int a_w, int big_m_override = 0);

    int a_x() const;
    int big_m() const;  // M
    int dim_v() const { return big_m() + 1; }
    int rank_e() const;
    // K_V = -L_V + b*F with b = a_x + a_q + a_w - 2 (a_q absent for spaces).
    int canonical_fiber_coeff() const;

    // Zero-suppressed family notation: "((1,2),(0,0))" or "((2),0)".
    std::string to_text() const;
    // Family notation plus the m=/l= (or M=) attributes.
    std::string to_text_full() const;

    bool same_family(const FamilyParams& other) const;
};

// Integer polynomial in the tautological class (xi) and the fiber class (R)
// of the bundle X, graded by codimension. Keys are (xi degree, R degree).
struct AmbientClass {
    std::map<std::pair<int, int>, Integer> terms;

    static AmbientClass zero() { return {}; }
    static AmbientClass one() { return monomial(0, 0, 1); }
    static AmbientClass xi() { return monomial(1, 0, 1); }
    static AmbientClass fiber() { return monomial(0, 1, 1); }
    static AmbientClass monomial(int xi_deg, int r_deg, const Integer& coeff);

    Integer coefficient(int xi_deg, int r_deg) const;
    AmbientClass operator+(const AmbientClass& other) const;
    AmbientClass operator*(const AmbientClass& other) const;
    AmbientClass operator*(const Integer& scalar) const;
    bool operator==(const AmbientClass& other) const { return terms == other.terms; }

  private:
    void insert(int xi_deg, int r_deg, const Integer& coeff);
};

// Normal form: R^2 = 0 and xi^r = a_X * xi^(r-1) * R with r = rank(E).
// Idempotent and linear.
AmbientClass reduce_ambient(AmbientClass c, const FamilyParams& fp);

// Degree-1 class alpha*L_V + beta*F on the cover.
struct Divisor {
    Integer l = 0;
    Integer f = 0;
    bool operator==(const Divisor& other) const { return l == other.l && f == other.f; }
};

// The same lattice in the basis {K_V, F}.
struct DivisorK {
    Integer k = 0;
    Integer f = 0;
    bool operator==(const DivisorK& other) const { return k == other.k && f == other.f; }
};

DivisorK to_k_basis(const Divisor& d, const FamilyParams& fp);
Divisor from_k_basis(const DivisorK& d, const FamilyParams& fp);

// Degree-2 class gamma*K_V^2 + rho*H_F.
struct CodimTwo {
    Integer k2 = 0;
    Integer hf = 0;
    bool operator==(const CodimTwo& other) const { return k2 == other.k2 && hf == other.hf; }
};

CodimTwo square_of(const Divisor& d, const FamilyParams& fp);
// (c . L_V^(M-1)) through the basis pairings.
Integer pair_with_l_power(const CodimTwo& c, const FamilyParams& fp);

// Exact top intersection number of dim V degree-1 classes on the cover:
// push to the bundle (cover degree 2, hypersurface class factor for the
// double-hypersurface kind), reduce, read off the point class.
Integer top_intersection_v(const std::vector<Divisor>& classes, const FamilyParams& fp);

Divisor canonical_class(const FamilyParams& fp);

// (K_V^2 . L_V^(M-1)) computed through top_intersection_v.
Integer k2_number(const FamilyParams& fp);

// The closed-form value of the same number: 2m(4 - a_X - 2a_Q - 2a_W) + 2a_Q
// for double hypersurfaces, 8 - 2a_X - 4a_W for double spaces. This is the
// classification formula; the ring computation above must agree with it.
Integer k2_closed_form(const FamilyParams& fp);
Integer k2_closed_form_hypersurface(int m, int a_x, int a_q, int a_w);
Integer k2_closed_form_space(int a_x, int a_w);

// Fiber degree (H_F . L_V^(M-1)): 2m respectively 2.
Integer degree_v(const FamilyParams& fp);

// Parse "((1,2),(0,0)),m=4,l=3" / "((2),0),M=5" back into FamilyParams.
FamilyParams parse_family(const std::string& text);

}  // namespace fanofib::chow
