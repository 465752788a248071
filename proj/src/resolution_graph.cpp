#include "fanofib/resolution_graph.hpp"

#include "fanofib/errors.hpp"

#include <algorithm>
#include <string>

namespace fanofib::maxsing {

int ResolutionGraph::fiber_depth() const {
    int n = 0;
    for (int i = 1; i <= size(); ++i)
        if (vertex(i).in_fiber)
            n = i;
    return n;
}

int ResolutionGraph::lower_length() const {
    int l = 0;
    for (int i = 1; i <= size(); ++i)
        if (vertex(i).codim >= 3)
            l = i;
    return l;
}

void validate_graph(const ResolutionGraph& g) {
    const int k = g.size();
    if (k < 1)
        throw graph_error("graph needs at least one vertex");
    for (int i = 1; i <= k; ++i) {
        const Vertex& v = g.vertex(i);
        if (v.codim < 2)
            throw graph_error("vertex " + std::to_string(i) + ": codim must be >= 2");
        if (i > 1 && v.codim > g.vertex(i - 1).codim)
            throw graph_error("codimensions must not increase along the blow-up sequence");
        if (i == 1) {
            if (!v.in_fiber)
                throw graph_error("the first center lies in a fiber");
            if (v.mu != 1 && v.mu != 2)
                throw graph_error("mu_1 must be 1 or 2");
        } else {
            if (v.in_fiber && !g.vertex(i - 1).in_fiber)
                throw graph_error("a center cannot re-enter the fiber transform");
            if (v.mu != (v.in_fiber ? 1 : 0))
                throw graph_error("vertex " + std::to_string(i) + ": mu must be " +
                                  (v.in_fiber ? "1 inside" : "0 outside") + " the fiber transform");
        }
    }
    for (const auto& [from, to] : g.arrows) {
        if (to < 1 || from > k)
            throw graph_error("arrow endpoint out of range");
        if (from <= to)
            throw graph_error("arrow " + std::to_string(from) + "->" + std::to_string(to) +
                              " violates the blow-up order (cycles are impossible only with "
                              "strictly decreasing arrows)");
    }
    for (int i = 1; i < k; ++i)
        if (!g.arrows.count({i + 1, i}))
            throw graph_error("missing consecutive arrow " + std::to_string(i + 1) + "->" +
                              std::to_string(i));
}

ResolutionGraph make_graph(const std::vector<int>& codims, int fiber_prefix, int mu_first,
                           const std::vector<std::pair<int, int>>& extra_arrows) {
    ResolutionGraph g;
    for (std::size_t i = 0; i < codims.size(); ++i) {
        Vertex v;
        v.codim = codims[i];
        v.in_fiber = static_cast<int>(i) < fiber_prefix;
        v.mu = i == 0 ? mu_first : (v.in_fiber ? 1 : 0);
        g.vertices.push_back(v);
    }
    for (int i = 1; i < g.size(); ++i)
        g.arrows.insert({i + 1, i});
    for (const auto& a : extra_arrows)
        g.arrows.insert(a);
    validate_graph(g);
    return g;
}

std::vector<Integer> path_counts(const ResolutionGraph& g) {
    validate_graph(g);
    const int k = g.size();
    std::vector<Integer> p(static_cast<std::size_t>(k), 0);
    p[static_cast<std::size_t>(k - 1)] = 1;
    for (int i = k - 1; i >= 1; --i) {
        Integer total = 0;
        for (const auto& [from, to] : g.arrows)
            if (to == i)
                total += p[static_cast<std::size_t>(from - 1)];
        p[static_cast<std::size_t>(i - 1)] = total;
    }
    return p;
}

PartitionSums partition_sums(const ResolutionGraph& g, const std::vector<Integer>& p) {
    if (p.size() != static_cast<std::size_t>(g.size()))
        throw parameter_error("partition_sums: path count vector has wrong length");
    PartitionSums sums;
    sums.fiber_n = g.fiber_depth();
    sums.lower_l = g.lower_length();
    for (int i = 1; i <= g.size(); ++i) {
        const Vertex& v = g.vertex(i);
        const Integer& pi = p[static_cast<std::size_t>(i - 1)];
        if (v.codim >= 4)
            sums.sigma_s += pi;
        else if (v.codim == 3)
            (v.in_fiber ? sums.sigma_m_plus : sums.sigma_m_minus) += pi;
        if (i > sums.lower_l)
            sums.sigma_u += pi;
        if (i >= 2 && i <= std::min(sums.fiber_n, sums.lower_l))
            sums.sigma_f += pi;
    }
    sums.sigma_m = sums.sigma_m_plus + sums.sigma_m_minus;
    sums.sigma_l = sums.sigma_s + sums.sigma_m;
    return sums;
}

NoetherFanoResult noether_fano(const ResolutionGraph& g, const std::vector<Rational>& nu,
                               const Integer& n) {
    if (nu.size() != static_cast<std::size_t>(g.size()))
        throw parameter_error("noether_fano: multiplicity vector has wrong length");
    const auto p = path_counts(g);
    NoetherFanoResult result;
    for (int i = 1; i <= g.size(); ++i) {
        const Rational pi(p[static_cast<std::size_t>(i - 1)]);
        result.weighted_multiplicity += pi * nu[static_cast<std::size_t>(i - 1)];
        result.weighted_discrepancy += pi * (g.vertex(i).codim - 1);
    }
    result.excess = result.weighted_multiplicity - Rational(n) * result.weighted_discrepancy;
    result.holds = result.excess > 0;
    return result;
}

Rational quadratic_lower_bound(const ResolutionGraph& g, const Integer& n, const Rational& e) {
    if (e <= 0)
        throw parameter_error("quadratic_lower_bound: excess must be positive");
    const auto p = path_counts(g);
    Rational weighted_discrepancy = 0;
    Rational total = 0;
    for (int i = 1; i <= g.size(); ++i) {
        const Rational pi(p[static_cast<std::size_t>(i - 1)]);
        weighted_discrepancy += pi * (g.vertex(i).codim - 1);
        total += pi;
    }
    const Rational numerator_root = Rational(n) * weighted_discrepancy + e;
    return numerator_root * numerator_root / total;
}

bool fiber_excess_check(const std::vector<std::vector<FiberExcess>>& fibers, const Integer& l) {
    Rational total = 0;
    for (const auto& fiber : fibers) {
        if (fiber.empty())
            continue;
        bool first = true;
        Rational best = 0;
        for (const auto& entry : fiber) {
            if (entry.fiber_mult <= 0)
                throw data_error("fiber_excess_check: nonpositive fiber multiplicity");
            const Rational ratio = entry.excess / entry.fiber_mult;
            if (first || ratio > best) {
                best = ratio;
                first = false;
            }
        }
        total += best;
    }
    return total > Rational(l);
}

bool supermaximal_test(const Rational& e, const Rational& nu_f, const Rational& deg_zv,
                       const Integer& n, const Integer& deg_v, const Rational& eps) {
    if (n < 1)
        throw parameter_error("supermaximal_test: n must be >= 1");
    if (deg_v <= 0)
        throw parameter_error("supermaximal_test: deg V must be positive");
    const Rational rhs =
        nu_f / 2 * (deg_zv / (Rational(n) * Rational(deg_v)) - eps * Rational(n));
    return e > rhs;
}

Rational condition_threshold(ConditionKind kind, const Integer& deg_v, const Rational& delta) {
    if (deg_v <= 0)
        throw parameter_error("condition_threshold: deg V must be positive");
    const Rational d(deg_v);
    switch (kind) {
        case ConditionKind::vertical: return Rational(2) / d;
        case ConditionKind::vertical_singular_point: return Rational(4) / d;
        case ConditionKind::vertical_singular_infnear: return Rational(2) / d;
        case ConditionKind::horizontal: return Rational(4) / d;
        case ConditionKind::fiber: return Rational(4) / d;
        case ConditionKind::fiber_singular_point: return Rational(6) / d;
        case ConditionKind::fiber_singular_infnear: return Rational(3) / d;
        case ConditionKind::horizontal_depth:
            if (delta < 0 || delta > 4)
                throw parameter_error("condition_threshold: depth must lie in [0, 4]");
            return (Rational(4) - delta) / d;
    }
    throw parameter_error("condition_threshold: unknown kind");
}

}  // namespace fanofib::maxsing
