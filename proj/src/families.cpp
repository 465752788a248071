#include "fanofib/families.hpp"

#include "fanofib/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace fanofib::families {

using chow::FamilyKind;

Rational generalized_k2_depth(const FamilyParams& fp) {
    const Rational depth = exactmath::make_rational(chow::k2_number(fp), chow::degree_v(fp));
    return depth > 0 ? depth : Rational(0);
}

std::string to_string(KStatus s) {
    switch (s) {
        case KStatus::certified: return "certified";
        case KStatus::fails: return "fails";
        case KStatus::unknown: return "unknown";
    }
    return "unknown";
}

KWitness KWitness::divisor(Divisor d, std::string id) {
    KWitness w;
    w.kind = Kind::divisor;
    w.divisor_class = d;
    w.id = std::move(id);
    return w;
}

KWitness KWitness::curve_family(Integer l_pairing, Integer f_pairing, std::string id) {
    KWitness w;
    w.kind = Kind::curve_family;
    w.curve_l = std::move(l_pairing);
    w.curve_f = std::move(f_pairing);
    w.id = std::move(id);
    return w;
}

KWitness KWitness::pseudo_effective(Divisor square_base, std::string id) {
    KWitness w;
    w.kind = Kind::pseudo_effective;
    w.divisor_class = square_base;
    w.id = std::move(id);
    return w;
}

namespace {

std::vector<chow::Divisor> with_l_padding(const FamilyParams& fp,
                                          std::vector<chow::Divisor> front) {
    const std::size_t dim = static_cast<std::size_t>(fp.dim_v());
    if (front.size() > dim)
        throw dimension_error("too many classes for this family");
    while (front.size() < dim)
        front.push_back(chow::Divisor{1, 0});
    return front;
}

}  // namespace

KConditionResult k_condition_certify(const FamilyParams& fp, const KWitness& witness) {
    const chow::Divisor minus_k{1, -Integer(fp.canonical_fiber_coeff())};
    KConditionResult result;
    switch (witness.kind) {
        case KWitness::Kind::divisor: {
            const Integer fiber = chow::top_intersection_v(
                with_l_padding(fp, {chow::Divisor{0, 1}, witness.divisor_class}), fp);
            if (fiber <= 0)
                throw witness_error("divisor witness has nonpositive fiber pairing");
            const Integer main = chow::top_intersection_v(
                with_l_padding(fp, {minus_k, witness.divisor_class}), fp);
            if (main <= 0) {
                result.status = KStatus::certified;
                result.certificate = KCertificate{
                    witness.id, main, fiber,
                    "(-K.E.L^(M-1)) = " + main.str() + " <= 0, (F.E.L^(M-1)) = " + fiber.str() +
                        " > 0: movable systems have nonnegative fiber coefficient"};
            } else {
                result.reason = "divisor pairing positive: " + main.str();
            }
            return result;
        }
        case KWitness::Kind::curve_family: {
            if (witness.curve_f <= 0)
                throw witness_error("curve witness has nonpositive fiber pairing");
            // (-K.C) = (L.C) - b (F.C)
            const Integer main =
                witness.curve_l - Integer(fp.canonical_fiber_coeff()) * witness.curve_f;
            if (main <= 0) {
                result.status = KStatus::certified;
                result.certificate = KCertificate{
                    witness.id, main, witness.curve_f,
                    "(-K.C) = " + main.str() + " <= 0 on a horizontal sweeping family with (F.C) = " +
                        witness.curve_f.str()};
            } else {
                result.reason = "curve pairing positive: " + main.str();
            }
            return result;
        }
        case KWitness::Kind::pseudo_effective: {
            if (fp.big_m() < 2)
                throw witness_error("pseudo-effective witness needs M >= 2");
            const chow::Divisor c = witness.divisor_class;
            const Integer fiber =
                chow::top_intersection_v(with_l_padding(fp, {chow::Divisor{0, 1}, c, c}), fp);
            if (fiber <= 0)
                throw witness_error("cutting class has nonpositive fiber pairing");
            const Integer main =
                chow::top_intersection_v(with_l_padding(fp, {minus_k, c, c}), fp);
            if (main == 0) {
                result.status = KStatus::certified;
                result.certificate = KCertificate{
                    witness.id, main, fiber,
                    "(-K.c^2.L^(M-2)) = 0 and (F.c^2.L^(M-2)) = " + fiber.str() +
                        " > 0: every pseudo-effective n(-K)+lF has l >= 0"};
            } else {
                result.reason = "cutting pairing nonzero: " + main.str();
            }
            return result;
        }
    }
    return result;
}

namespace {

struct CatalogEntry {
    FamilyKind kind;
    std::vector<int> twists;
    int a_q;
    int a_w;
    std::vector<KWitness> witnesses;  // empty <=> K-condition fails (critical family)
    std::string note;
};

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        const FamilyKind dh = FamilyKind::double_hypersurface;
        const FamilyKind ds = FamilyKind::double_space;
        v.push_back({dh, {}, 2, 0, {}, "fiber-exchanging involution; movable systems with l < 0 exist"});
        v.push_back({dh, {}, 1, 1,
                     {KWitness::curve_family(0, 1, "curve:branch-locus-lines")}, ""});
        v.push_back({dh, {1}, 0, 1,
                     {KWitness::curve_family(0, 1, "curve:split-summand-lines")}, ""});
        {
            auto w = KWitness::divisor(Divisor{1, -2}, "divisor:L-2F");
            w.note = "engine pairing 2(1-m)";
            v.push_back({dh, {2}, 1, 0, {w}, ""});
        }
        v.push_back({dh, {2}, 0, 0,
                     {KWitness::curve_family(0, 1, "curve:contracted-summand")}, ""});
        v.push_back({dh, {3}, 0, 0,
                     {KWitness::curve_family(0, 1, "curve:contracted-summand")}, ""});
        v.push_back({dh, {1, 2}, 0, 0,
                     {KWitness::divisor(Divisor{1, -2}, "divisor:L-2F")}, ""});
        v.push_back({dh, {1, 1, 1}, 0, 0,
                     {KWitness::pseudo_effective(Divisor{1, -1}, "pseff:(L-F)^2")}, ""});
        v.push_back({ds, {1}, 0, 1,
                     {KWitness::curve_family(0, 1, "curve:split-summand-lines")}, ""});
        v.push_back({ds, {2}, 0, 0,
                     {KWitness::curve_family(0, 1, "curve:contracted-summand")}, ""});
        v.push_back({ds, {3}, 0, 0,
                     {KWitness::curve_family(0, 1, "curve:contracted-summand")}, ""});
        v.push_back({ds, {1, 2}, 0, 0,
                     {KWitness::divisor(Divisor{1, -2}, "divisor:L-2F")}, ""});
        v.push_back({ds, {1, 1, 1}, 0, 0,
                     {KWitness::pseudo_effective(Divisor{1, -1}, "pseff:(L-F)^2")}, ""});
        return v;
    }();
    return entries;
}

const CatalogEntry* find_entry(const FamilyParams& fp) {
    for (const auto& entry : catalog_entries()) {
        if (entry.kind == fp.kind && entry.twists == fp.twists &&
            (fp.kind == FamilyKind::double_space || entry.a_q == fp.a_q) && entry.a_w == fp.a_w)
            return &entry;
    }
    return nullptr;
}

bool is_critical_family(const FamilyParams& fp) {
    return fp.kind == FamilyKind::double_hypersurface && fp.twists.empty() && fp.a_q == 2 &&
           fp.a_w == 0;
}

}  // namespace

std::vector<KWitness> builtin_witnesses(const FamilyParams& fp) {
    const CatalogEntry* entry = find_entry(fp);
    if (!entry)
        throw catalog_error("family " + fp.to_text() + " has no catalog entry");
    return entry->witnesses;
}

bool in_catalog(const FamilyParams& fp) {
    return find_entry(fp) != nullptr;
}

std::vector<FamilyParams> catalog_hypersurfaces(int m, int l) {
    std::vector<FamilyParams> out;
    for (const auto& entry : catalog_entries())
        if (entry.kind == FamilyKind::double_hypersurface)
            out.push_back(FamilyParams::hypersurface(entry.twists, m, l, entry.a_q, entry.a_w));
    return out;
}

std::vector<FamilyParams> catalog_spaces() {
    std::vector<FamilyParams> out;
    for (const auto& entry : catalog_entries())
        if (entry.kind == FamilyKind::double_space)
            out.push_back(FamilyParams::space(entry.twists, entry.a_w));
    return out;
}

Divisor tau_pushforward(const Divisor& d, int m) {
    return Divisor{d.l + d.f * m, -d.f};
}

std::pair<Integer, Integer> tau_on_system(const Integer& n, const Integer& l, int m) {
    return {n + l * m, -l};
}

std::string EnumeratedFamily::family_text() const {
    FamilyParams fp = kind == FamilyKind::double_hypersurface
                          ? FamilyParams::hypersurface(twists, 2, 2, a_q, a_w)
                          : FamilyParams::space(twists, a_w);
    return fp.to_text();
}

namespace {

// All nondecreasing tuples of positive integers with the given sum and count caps.
void twist_tuples(int max_sum, int max_count, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
    out.push_back(current);
    if (static_cast<int>(current.size()) >= max_count)
        return;
    int used = 0;
    for (int t : current)
        used += t;
    const int low = current.empty() ? 1 : current.back();
    for (int next = low; used + next <= max_sum; ++next) {
        current.push_back(next);
        twist_tuples(max_sum, max_count, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<EnumeratedFamily> enumerate_k2_failing(const EnumCaps& caps, FamilyKind kind) {
    if (caps.m_min < 2 || caps.m_max < caps.m_min)
        throw parameter_error("enumeration caps need 2 <= m_min <= m_max");
    std::vector<std::vector<int>> tuples;
    std::vector<int> scratch;
    twist_tuples(caps.max_a_x, caps.max_twist_count, scratch, tuples);

    std::vector<EnumeratedFamily> out;
    for (const auto& twists : tuples) {
        int a_x = 0;
        for (int t : twists)
            a_x += t;
        if (kind == FamilyKind::double_space) {
            for (int a_w = 0; a_w <= caps.max_a_w; ++a_w) {
                const Integer k2 = chow::k2_closed_form_space(a_x, a_w);
                if (k2 <= 0)
                    continue;
                EnumeratedFamily fam;
                fam.kind = kind;
                fam.twists = twists;
                fam.a_w = a_w;
                fam.k2_at_m_min = k2;
                fam.listed = in_catalog(FamilyParams::space(twists, a_w));
                out.push_back(std::move(fam));
            }
            continue;
        }
        for (int a_q = 0; a_q <= caps.max_a_q; ++a_q) {
            for (int a_w = 0; a_w <= caps.max_a_w; ++a_w) {
                std::vector<int> failing;
                for (int m = caps.m_min; m <= caps.m_max; ++m)
                    if (chow::k2_closed_form_hypersurface(m, a_x, a_q, a_w) > 0)
                        failing.push_back(m);
                if (failing.empty())
                    continue;
                EnumeratedFamily fam;
                fam.kind = kind;
                fam.twists = twists;
                fam.a_q = a_q;
                fam.a_w = a_w;
                fam.k2_at_m_min = chow::k2_closed_form_hypersurface(failing.front(), a_x, a_q, a_w);
                fam.m_independent =
                    static_cast<int>(failing.size()) == caps.m_max - caps.m_min + 1;
                if (!fam.m_independent)
                    fam.failing_m = std::move(failing);
                fam.listed =
                    in_catalog(FamilyParams::hypersurface(twists, caps.m_min, 2, a_q, a_w));
                out.push_back(std::move(fam));
            }
        }
    }
    // Canonical order: total twist, tuple length, tuple entries, a_q descending, a_w.
    std::sort(out.begin(), out.end(), [](const EnumeratedFamily& a, const EnumeratedFamily& b) {
        int ax_a = 0, ax_b = 0;
        for (int t : a.twists) ax_a += t;
        for (int t : b.twists) ax_b += t;
        return std::make_tuple(ax_a, a.twists.size(), a.twists, -a.a_q, a.a_w) <
               std::make_tuple(ax_b, b.twists.size(), b.twists, -b.a_q, b.a_w);
    });
    return out;
}

Theorem1Report theorem1_report(const FamilyParams& fp) {
    const CatalogEntry* entry = find_entry(fp);
    if (!entry)
        throw catalog_error("family " + fp.to_text() + " is not classified here");
    Theorem1Report report;
    report.family = fp;
    report.depth = generalized_k2_depth(fp);
    report.depth2_ok = report.depth <= 2;
    if (is_critical_family(fp)) {
        report.superrigid = false;
        report.rigid = true;
        report.k_condition = KStatus::fails;
        report.bir_group_order = 4;
        report.fibration_structures = 2;
        return report;
    }
    report.superrigid = true;
    report.rigid = true;
    report.bir_group_order = 2;
    report.fibration_structures = 1;
    report.k_condition = KStatus::unknown;
    for (const auto& witness : entry->witnesses) {
        const KConditionResult res = k_condition_certify(fp, witness);
        if (res.status == KStatus::certified) {
            report.k_condition = KStatus::certified;
            report.witness_ids.push_back(res.certificate->witness_id);
        }
    }
    if (report.k_condition != KStatus::certified)
        throw certificate_error("catalog witness failed to certify for " + fp.to_text());
    return report;
}

}  // namespace fanofib::families
