#pragma once

#include "fanofib/chow.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fanofib::families {

using chow::Divisor;
using chow::FamilyKind;
using chow::FamilyParams;
using exactmath::Integer;
using exactmath::Rational;

// Minimal eps >= 0 such that ((K_V^2 - eps*H_F) . L_V^(M-1)) <= 0, i.e.
// max(0, k2 / deg V). The family satisfies the (numerically certified)
// generalized twistedness condition of depth eps iff the value is <= eps.
Rational generalized_k2_depth(const FamilyParams& fp);

enum class KStatus { certified, fails, unknown };

std::string to_string(KStatus s);

// A sufficiency witness for the movable-cone condition on -K_V.
//   divisor:          a horizontal prime divisor class E with
//                     (-K.E.L^(M-1)) <= 0 and (F.E.L^(M-1)) > 0;
//   curve_family:     a family of irreducible horizontal curves sweeping a
//                     divisor, recorded through the pairings (L.C), (F.C),
//                     certifying when (-K.C) <= 0 and (F.C) > 0;
//   pseudo_effective: a degree-1 class c whose square cuts every
//                     pseudo-effective divisor nonnegatively, certifying
//                     when (-K.c^2.L^(M-2)) = 0 and (F.c^2.L^(M-2)) > 0.
struct KWitness {
    enum class Kind { divisor, curve_family, pseudo_effective };
    Kind kind = Kind::divisor;
    Divisor divisor_class;   // divisor / pseudo_effective (the square base)
    Integer curve_l = 0;     // (L.C)
    Integer curve_f = 0;     // (F.C)
    std::string id;
    std::string note;

    static KWitness divisor(Divisor d, std::string id);
    static KWitness curve_family(Integer l_pairing, Integer f_pairing, std::string id);
    static KWitness pseudo_effective(Divisor square_base, std::string id);
};

struct KCertificate {
    std::string witness_id;
    Integer pairing_main;   // the quantity that must be <= 0 (= 0 for pseudo_effective)
    Integer pairing_fiber;  // the quantity that must be > 0
    std::string detail;
};

struct KConditionResult {
    KStatus status = KStatus::unknown;
    std::optional<KCertificate> certificate;
    std::string reason;
};

// Sufficiency-only: returns `certified` with the recomputed pairings, or
// `unknown`. Throws witness_error when the fiber pairing is nonpositive.
KConditionResult k_condition_certify(const FamilyParams& fp, const KWitness& witness);

// The built-in witness catalog for the thirteen classified families.
// Throws catalog_error for anything else. The k2-critical family
// ((0),(2,0)) is in the catalog but has no witness (its K-condition fails).
std::vector<KWitness> builtin_witnesses(const FamilyParams& fp);

bool in_catalog(const FamilyParams& fp);

// The classified families instantiated at concrete degrees: the eight
// double-hypersurface types at (m, l) and the five double-space types.
std::vector<FamilyParams> catalog_hypersurfaces(int m, int l);
std::vector<FamilyParams> catalog_spaces();

// Action of the fiber-exchanging involution of the ((0),(2,0)) family on
// the divisor lattice: L -> L, F -> m*L - F. An involution.
Divisor tau_pushforward(const Divisor& d, int m);

// The same map in linear-system coordinates (n, l) for systems n*(-K) + l*F:
// (n, l) -> (n + l*m, -l).
std::pair<Integer, Integer> tau_on_system(const Integer& n, const Integer& l, int m);

// Enumeration of families violating the twistedness inequality.
struct EnumCaps {
    int max_a_x = 3;
    int max_a_q = 2;
    int max_a_w = 1;
    int max_twist_count = 3;
    int m_min = 2;
    int m_max = 8;
};

struct EnumeratedFamily {
    FamilyKind kind = FamilyKind::double_hypersurface;
    std::vector<int> twists;
    int a_q = 0;
    int a_w = 0;
    bool m_independent = true;   // sign of k2 identical for every m in range
    std::vector<int> failing_m;  // when m-dependent: the m with k2 > 0
    Integer k2_at_m_min;         // double spaces: the constant value
    bool listed = false;         // member of the built-in catalog

    std::string family_text() const;
};

// All parameter tuples within the caps whose k2 value is positive (for the
// whole m range, or for part of it -> m_dependent bucket). Canonically
// sorted, deduplicated by the zero-suppressed notation.
std::vector<EnumeratedFamily> enumerate_k2_failing(const EnumCaps& caps, FamilyKind kind);

struct Theorem1Report {
    FamilyParams family;
    bool superrigid = false;
    bool rigid = false;
    KStatus k_condition = KStatus::unknown;
    int bir_group_order = 0;        // order of the birational self-map group
    int fibration_structures = 0;   // rationally connected fibration structures
    Rational depth;                 // generalized twistedness depth
    bool depth2_ok = false;
    std::vector<std::string> witness_ids;
};

// Structured classification of a catalog family; throws catalog_error
// for unlisted parameters.
Theorem1Report theorem1_report(const FamilyParams& fp);

}  // namespace fanofib::families
