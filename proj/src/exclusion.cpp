#include "fanofib/exclusion.hpp"

#include "fanofib/errors.hpp"

#include <cstdint>

namespace fanofib::maxsing {

using exactmath::ContextPtr;
using exactmath::Generator;
using exactmath::Part;
using exactmath::VarContext;

Rational exclusion_form(const Rational& sigma_l, const Rational& sigma_u, const Rational& n,
                        const Rational& e, const Rational& k_h, const Rational& k_v) {
    return (4 - k_h) * sigma_l * (sigma_l + sigma_u) * n * n + sigma_u * sigma_u * n * n +
           e * e + 2 * (2 - k_v) * sigma_l * n * e + 2 * (1 - k_v) * sigma_u * n * e;
}

Rational exclusion_form_depth(const Rational& sigma_l, const Rational& sigma_u,
                              const Rational& n, const Rational& e, const Rational& k_h,
                              const Rational& eps) {
    const Rational square_root = n * sigma_u - e;
    return (4 - k_h - 2 * eps) * sigma_l * (sigma_l + sigma_u) * n * n +
           square_root * square_root;
}

std::string to_string(ExclusionCase c) {
    switch (c) {
        case ExclusionCase::corollary11: return "quadratic-form";
        case ExclusionCase::depth_balance: return "depth-balance";
        case ExclusionCase::smooth_case: return "smooth-center";
        case ExclusionCase::singular_case: return "singular-center";
        case ExclusionCase::theorem2: return "depth-2-pipeline";
    }
    return "?";
}

namespace {

struct Vars {
    ContextPtr ctx;
    Polynomial n, e, s, m, u, p1, sl, kh, kv, eps;
    std::set<int> nonneg;

    Vars() : ctx(std::make_shared<VarContext>()) {
        n = Polynomial::variable(ctx, "n");
        e = Polynomial::variable(ctx, "e");
        s = Polynomial::variable(ctx, "sum_s");
        m = Polynomial::variable(ctx, "sum_m");
        u = Polynomial::variable(ctx, "sum_u");
        p1 = Polynomial::variable(ctx, "p1");
        sl = Polynomial::variable(ctx, "sum_l");
        kh = Polynomial::variable(ctx, "k_h");
        kv = Polynomial::variable(ctx, "k_v");
        eps = Polynomial::variable(ctx, "eps");
        for (int id = 0; id < ctx->size(); ++id)
            nonneg.insert(id);
    }
};

Polynomial c(const Vars& v, int value) { return Polynomial::constant(v.ctx, Rational(value)); }

Certificate make_corollary11() {
    Vars v;
    // Build the form with k_h, k_v symbolic, then pin the extreme admissible
    // values k_h = 4, k_v = 2; what is left is a perfect square.
    Polynomial form = (c(v, 4) - v.kh) * v.sl * (v.sl + v.u) * v.n * v.n +
                      v.u * v.u * v.n * v.n + v.e * v.e +
                      c(v, 2) * (c(v, 2) - v.kv) * v.sl * v.n * v.e +
                      c(v, 2) * (c(v, 1) - v.kv) * v.u * v.n * v.e;
    form = form.substitute(v.ctx->id_of("k_h"), Rational(4));
    form = form.substitute(v.ctx->id_of("k_v"), Rational(2));

    Certificate cert;
    cert.name = to_string(ExclusionCase::corollary11);
    cert.conclusion =
        "the quadratic exclusion form is < 0 under a supermaximal singularity; at the extreme "
        "admissible coefficients it equals a perfect square, so no such singularity exists";
    cert.assumption_text = {"sum_l >= 0", "sum_u >= 0", "n >= 0", "e >= 0",
                            "k_h <= 4", "k_v <= 2"};
    cert.nonneg_vars = v.nonneg;
    cert.note = "the sum_u^2*n^2 term is implemented as the derivation yields it; "
                "a variant text shows sum_u^2*n";
    NonnegCombination combo;
    combo.target = form;
    combo.parts.push_back(Part{{Generator::square(v.u * v.n - v.e)}, c(v, 1)});
    cert.identities.emplace_back("collapse at k_h=4, k_v=2", std::move(combo));
    return cert;
}

Certificate make_depth_balance() {
    Vars v;
    Polynomial form = (c(v, 4) - v.kh - c(v, 2) * v.eps) * v.sl * (v.sl + v.u) * v.n * v.n +
                      (v.n * v.u - v.e) * (v.n * v.u - v.e);
    // Horizontal depth delta exactly balancing twice the twistedness depth:
    // k_h = 4 - delta with delta = 2*eps.
    form = form.substitute(v.ctx->id_of("k_h"), c(v, 4) - c(v, 2) * v.eps);

    Certificate cert;
    cert.name = to_string(ExclusionCase::depth_balance);
    cert.conclusion = "with horizontal depth delta = 2 * eps the depth-adjusted exclusion form "
                      "collapses to a perfect square, so the strict negativity fails";
    cert.assumption_text = {"sum_l >= 0", "sum_u >= 0", "n >= 0", "e >= 0",
                            "k_h = 4 - delta", "delta = 2*eps"};
    cert.nonneg_vars = v.nonneg;
    NonnegCombination combo;
    combo.target = form;
    combo.parts.push_back(Part{{Generator::square(v.n * v.u - v.e)}, c(v, 1)});
    cert.identities.emplace_back("collapse at delta = 2*eps", std::move(combo));
    return cert;
}

NonnegCombination smooth_case_combo(const Vars& v) {
    // ((3s+2m+u)n+e)^2 - (4n^2(2s+m) + 4ne)(s+m+u)  ==  (n(s-u)+e)^2
    const Polynomial lhs =
        (( c(v, 3) * v.s + c(v, 2) * v.m + v.u) * v.n + v.e).pow(2) -
        (c(v, 4) * v.n * v.n * (c(v, 2) * v.s + v.m) + c(v, 4) * v.n * v.e) *
            (v.s + v.m + v.u);
    NonnegCombination combo;
    combo.target = lhs;
    combo.parts.push_back(Part{{Generator::square(v.n * (v.s - v.u) + v.e)}, c(v, 1)});
    return combo;
}

NonnegCombination singular_case_combo(const Vars& v) {
    // (n(s-u)+e)^2 + (s-3p1)(s+m+u)n^2 + n p1 (n p1 + 2(3s+2m+u)n + 2e)
    //   ==  (n(s-u)+e)^2 + (s-p1)(s+m+u)n^2 + p1 n (n(p1+4s+2m) + 2e)
    const Polynomial printed =
        (v.n * (v.s - v.u) + v.e).pow(2) +
        (v.s - c(v, 3) * v.p1) * (v.s + v.m + v.u) * v.n * v.n +
        v.n * v.p1 *
            (v.n * v.p1 + c(v, 2) * (c(v, 3) * v.s + c(v, 2) * v.m + v.u) * v.n +
             c(v, 2) * v.e);
    NonnegCombination combo;
    combo.target = printed;
    combo.assumption_labels = {"sum_s - p1 >= 0"};
    combo.parts.push_back(Part{{Generator::square(v.n * (v.s - v.u) + v.e)}, c(v, 1)});
    combo.parts.push_back(Part{{Generator::assumed(v.s - v.p1, "sum_s - p1 >= 0")},
                               (v.s + v.m + v.u) * v.n * v.n});
    combo.parts.push_back(
        Part{{}, v.p1 * v.n * (v.n * (v.p1 + c(v, 4) * v.s + c(v, 2) * v.m) + c(v, 2) * v.e)});
    return combo;
}

Certificate make_smooth_case() {
    Vars v;
    Certificate cert;
    cert.name = to_string(ExclusionCase::smooth_case);
    cert.conclusion = "at depth 2 the center-in-smooth-locus bound chain would force the "
                      "expression below 0; it is identically a perfect square";
    cert.assumption_text = {"sum_s >= 0", "sum_m >= 0", "sum_u >= 0", "n >= 0", "e >= 0"};
    cert.nonneg_vars = v.nonneg;
    cert.identities.emplace_back("square decomposition", smooth_case_combo(v));
    return cert;
}

Certificate make_singular_case() {
    Vars v;
    Certificate cert;
    cert.name = to_string(ExclusionCase::singular_case);
    cert.conclusion = "at a singular fiber point the bound chain would force the expression "
                      "below 0; it is a nonnegative combination whenever sum_s >= p1";
    cert.assumption_text = {"sum_s >= p1 >= 0", "sum_m >= 0", "sum_u >= 0", "n >= 0",
                            "e >= 0"};
    cert.nonneg_vars = v.nonneg;
    cert.identities.emplace_back("nonnegative regrouping", singular_case_combo(v));
    return cert;
}

Certificate make_theorem2() {
    Vars v;
    Certificate cert;
    cert.name = to_string(ExclusionCase::theorem2);
    cert.conclusion = "families of twistedness depth <= 2 with the vertical and fiber "
                      "multiplicity conditions admit no maximal singularity: both center "
                      "positions are excluded";
    cert.assumption_text = {"depth <= 2", "sum_s >= p1 >= 0", "all partition sums >= 0"};
    cert.nonneg_vars = v.nonneg;
    cert.identities.emplace_back("smooth-center identity", smooth_case_combo(v));
    cert.identities.emplace_back("singular-center identity", singular_case_combo(v));
    return cert;
}

}  // namespace

Certificate exclusion_certificate(ExclusionCase which) {
    switch (which) {
        case ExclusionCase::corollary11: return make_corollary11();
        case ExclusionCase::depth_balance: return make_depth_balance();
        case ExclusionCase::smooth_case: return make_smooth_case();
        case ExclusionCase::singular_case: return make_singular_case();
        case ExclusionCase::theorem2: return make_theorem2();
    }
    throw parameter_error("unknown exclusion case");
}

void verify_certificate(const Certificate& cert) {
    for (const auto& [label, combo] : cert.identities) {
        const auto report = exactmath::check_nonneg_combination_report(combo, cert.nonneg_vars);
        if (!report.ok) {
            std::string message = "certificate '" + cert.name + "' identity '" + label +
                                  "' failed:";
            for (const auto& issue : report.issues)
                message += "\n  " + issue;
            throw certificate_error(message);
        }
    }
}

std::vector<ExclusionCase> atomic_cases() {
    return {ExclusionCase::corollary11, ExclusionCase::depth_balance,
            ExclusionCase::smooth_case, ExclusionCase::singular_case};
}

namespace {

// Grid sweeps run in exact integer arithmetic: with step 1/q every rational
// grid value is k/q, and q^2 times each expression clears denominators.
struct ScaledGrid {
    std::int64_t q;        // denominator of the step
    std::int64_t int_max;
    std::int64_t rat_steps;   // e (and the bounded coefficients) run over 0..rat_steps
    std::int64_t pert_num;    // perturbation * q^2, must be integral

    ScaledGrid(const GridBounds& bounds, const Rational& perturbation) {
        using exactmath::Integer;
        const Rational inv = 1 / bounds.step;
        if (bounds.step <= 0 || bounds.step > 1 || denominator(inv) != 1)
            throw parameter_error("falsification grid step must be the inverse of a positive "
                                  "integer");
        q = static_cast<std::int64_t>(numerator(inv));
        int_max = bounds.int_max;
        const Rational steps = bounds.rat_max / bounds.step;
        rat_steps = static_cast<std::int64_t>(numerator(steps) / denominator(steps));
        const Rational scaled = perturbation * q * q;
        if (denominator(scaled) != 1)
            throw parameter_error("perturbation must be representable on the grid");
        pert_num = static_cast<std::int64_t>(numerator(scaled));
    }
};

Counterexample found(std::initializer_list<std::pair<const char*, Rational>> values,
                     std::int64_t scaled_value, std::int64_t q) {
    Counterexample cex;
    for (const auto& [name, value] : values)
        cex.assignment.emplace(name, value);
    cex.value = exactmath::make_rational(scaled_value, q * q);
    return cex;
}

}  // namespace

std::optional<Counterexample> falsification_search(ExclusionCase which, const GridBounds& bounds,
                                                   const Rational& perturbation) {
    const ScaledGrid grid(bounds, perturbation);
    const std::int64_t q = grid.q;
    const Rational step = bounds.step;

    switch (which) {
        case ExclusionCase::corollary11: {
            // q^2 * form, with kh = a/q (0..4), kv = b/q (0..2), e = c/q.
            for (std::int64_t sl = 0; sl <= grid.int_max; ++sl)
                for (std::int64_t su = 0; su <= grid.int_max; ++su)
                    for (std::int64_t n = 1; n <= grid.int_max; ++n)
                        for (std::int64_t a = 0; a <= 4 * q; ++a)
                            for (std::int64_t b = 0; b <= 2 * q; ++b)
                                for (std::int64_t c = 0; c <= grid.rat_steps; ++c) {
                                    const std::int64_t value =
                                        q * (4 * q - a) * sl * (sl + su) * n * n +
                                        q * q * su * su * n * n + c * c +
                                        2 * (2 * q - b) * sl * n * c +
                                        2 * (q - b) * su * n * c + grid.pert_num;
                                    if (value < 0)
                                        return found({{"sum_l", Rational(sl)},
                                                      {"sum_u", Rational(su)},
                                                      {"n", Rational(n)},
                                                      {"k_h", Rational(a) * step},
                                                      {"k_v", Rational(b) * step},
                                                      {"e", Rational(c) * step}},
                                                     value, q);
                                }
            return std::nullopt;
        }
        case ExclusionCase::depth_balance: {
            // eps = d/q in [0, 2], kh = a/q in [0, 4 - 2*eps].
            for (std::int64_t sl = 0; sl <= grid.int_max; ++sl)
                for (std::int64_t su = 0; su <= grid.int_max; ++su)
                    for (std::int64_t n = 1; n <= grid.int_max; ++n)
                        for (std::int64_t d = 0; d <= 2 * q; ++d)
                            for (std::int64_t a = 0; a + 2 * d <= 4 * q; ++a)
                                for (std::int64_t c = 0; c <= grid.rat_steps; ++c) {
                                    const std::int64_t root = q * n * su - c;
                                    const std::int64_t value =
                                        q * (4 * q - a - 2 * d) * sl * (sl + su) * n * n +
                                        root * root + grid.pert_num;
                                    if (value < 0)
                                        return found({{"sum_l", Rational(sl)},
                                                      {"sum_u", Rational(su)},
                                                      {"n", Rational(n)},
                                                      {"eps", Rational(d) * step},
                                                      {"k_h", Rational(a) * step},
                                                      {"e", Rational(c) * step}},
                                                     value, q);
                                }
            return std::nullopt;
        }
        case ExclusionCase::smooth_case: {
            for (std::int64_t s = 0; s <= grid.int_max; ++s)
                for (std::int64_t m = 0; m <= grid.int_max; ++m)
                    for (std::int64_t u = 0; u <= grid.int_max; ++u)
                        for (std::int64_t n = 1; n <= grid.int_max; ++n)
                            for (std::int64_t c = 0; c <= grid.rat_steps; ++c) {
                                const std::int64_t lead = (3 * s + 2 * m + u) * n * q + c;
                                const std::int64_t value =
                                    lead * lead -
                                    (4 * q * q * n * n * (2 * s + m) + 4 * q * n * c) *
                                        (s + m + u) +
                                    grid.pert_num;
                                if (value < 0)
                                    return found({{"sum_s", Rational(s)},
                                                  {"sum_m", Rational(m)},
                                                  {"sum_u", Rational(u)},
                                                  {"n", Rational(n)},
                                                  {"e", Rational(c) * step}},
                                                 value, q);
                            }
            return std::nullopt;
        }
        case ExclusionCase::singular_case: {
            for (std::int64_t s = 0; s <= grid.int_max; ++s)
                for (std::int64_t p1 = 0; p1 <= s; ++p1)
                    for (std::int64_t m = 0; m <= grid.int_max; ++m)
                        for (std::int64_t u = 0; u <= grid.int_max; ++u)
                            for (std::int64_t n = 1; n <= grid.int_max; ++n)
                                for (std::int64_t c = 0; c <= grid.rat_steps; ++c) {
                                    const std::int64_t root = q * n * (s - u) + c;
                                    const std::int64_t value =
                                        root * root +
                                        q * q * (s - 3 * p1) * (s + m + u) * n * n +
                                        q * n * p1 *
                                            (q * n * p1 +
                                             2 * q * (3 * s + 2 * m + u) * n + 2 * c) +
                                        grid.pert_num;
                                    if (value < 0)
                                        return found({{"sum_s", Rational(s)},
                                                      {"p1", Rational(p1)},
                                                      {"sum_m", Rational(m)},
                                                      {"sum_u", Rational(u)},
                                                      {"n", Rational(n)},
                                                      {"e", Rational(c) * step}},
                                                     value, q);
                                }
            return std::nullopt;
        }
        case ExclusionCase::theorem2: {
            if (auto cex = falsification_search(ExclusionCase::smooth_case, bounds, perturbation))
                return cex;
            return falsification_search(ExclusionCase::singular_case, bounds, perturbation);
        }
    }
    throw parameter_error("unknown exclusion case");
}

NumericLayerReport superrigidity_numeric_report(const Rational& depth,
                                                const NumericLayerFlags& flags) {
    NumericLayerReport report;
    report.depth2_ok = depth <= 2;
    report.flags_ok = flags.vertical && flags.vertical_singular && flags.fiber_or_fiber_singular;
    report.certificates_ok = true;
    try {
        for (ExclusionCase c : atomic_cases())
            verify_certificate(exclusion_certificate(c));
    } catch (const certificate_error&) {
        report.certificates_ok = false;
    }
    return report;
}

}  // namespace fanofib::maxsing
