#pragma once

#include "fanofib/numeric.hpp"

#include <set>
#include <utility>
#include <vector>

namespace fanofib::maxsing {

using exactmath::Integer;
using exactmath::Rational;

// One blow-up center in the resolution of a divisorial valuation:
// codim is the codimension of the center in the current model, mu the
// multiplicity of the fiber strict transform along it (0 when the center
// has left the fiber), in_fiber whether the center lies in that transform.
struct Vertex {
    int codim = 2;
    int mu = 0;
    bool in_fiber = false;
};

// The blow-up DAG. Vertices are 1-based in blow-up order; an arrow
// (i, j) with i > j records that the i-th center lies in the strict
// transform of the j-th exceptional divisor. Every consecutive pair
// i+1 -> i is an arrow (each center sits inside the previous exceptional
// divisor), codimensions never increase along the sequence, and once a
// center leaves the fiber transform it never returns.
struct ResolutionGraph {
    std::vector<Vertex> vertices;
    std::set<std::pair<int, int>> arrows;

    int size() const { return static_cast<int>(vertices.size()); }

    // N: the last level whose center still lies in the fiber transform.
    int fiber_depth() const;
    // L: the last level with codim >= 3 (0 when there is none).
    int lower_length() const;

    const Vertex& vertex(int i) const { return vertices[static_cast<std::size_t>(i - 1)]; }
};

// Throws graph_error describing the first violated structural rule.
void validate_graph(const ResolutionGraph& g);

// Builds the chain graph with the given codimensions, all centers in the
// fiber up to fiber_prefix, plus extra arrows. Convenience for tests/CLI.
ResolutionGraph make_graph(const std::vector<int>& codims, int fiber_prefix, int mu_first,
                           const std::vector<std::pair<int, int>>& extra_arrows = {});

// Number of directed paths from the top vertex K to each vertex; p[K-1] = 1.
// Satisfies p_i = sum of p_j over arrows j -> i.
std::vector<Integer> path_counts(const ResolutionGraph& g);

struct PartitionSums {
    Integer sigma_s;        // levels with codim >= 4
    Integer sigma_m_plus;   // codim 3, center in the fiber transform
    Integer sigma_m_minus;  // codim 3, center outside
    Integer sigma_m;
    Integer sigma_u;        // levels above L
    Integer sigma_l;        // sigma_s + sigma_m
    Integer sigma_f;        // levels 2..min(N, L)
    int fiber_n = 0;
    int lower_l = 0;
};

PartitionSums partition_sums(const ResolutionGraph& g, const std::vector<Integer>& p);

struct NoetherFanoResult {
    bool holds = false;
    Rational excess;                // sum p_i nu_i - n sum p_i delta_i
    Rational weighted_multiplicity; // sum p_i nu_i
    Rational weighted_discrepancy;  // sum p_i delta_i
};

// delta_i = codim_i - 1; the inequality is strict.
NoetherFanoResult noether_fano(const ResolutionGraph& g, const std::vector<Rational>& nu,
                               const Integer& n);

// (n*sum p_i delta_i + e)^2 / sum p_i, the quadratic lower bound that
// weighted multiplicity sums of the self-intersection must exceed.
Rational quadratic_lower_bound(const ResolutionGraph& g, const Integer& n, const Rational& e);

struct FiberExcess {
    Rational excess;      // e(E) > 0
    Rational fiber_mult;  // nu_E(F) > 0
};

// Sum over fibers of the best excess/multiplicity ratio must exceed l.
bool fiber_excess_check(const std::vector<std::vector<FiberExcess>>& fibers, const Integer& l);

// e > (nu_F / 2) * (deg Z^v / (n deg V) - eps * n).
bool supermaximal_test(const Rational& e, const Rational& nu_f, const Rational& deg_zv,
                       const Integer& n, const Integer& deg_v, const Rational& eps);

enum class ConditionKind {
    vertical,          // 2 / deg V
    vertical_singular_point,    // 4 / deg V
    vertical_singular_infnear,  // 2 / deg V
    horizontal,        // 4 / deg V
    fiber,             // 4 / deg V
    fiber_singular_point,    // 6 / deg V
    fiber_singular_infnear,  // 3 / deg V
    horizontal_depth,  // (4 - delta) / deg V
};

Rational condition_threshold(ConditionKind kind, const Integer& deg_v,
                             const Rational& delta = Rational(0));

}  // namespace fanofib::maxsing
