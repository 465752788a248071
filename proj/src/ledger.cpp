#include "fanofib/ledger.hpp"

#include "fanofib/errors.hpp"

#include <algorithm>

namespace fanofib::maxsing {

namespace {

std::vector<int> deep_levels(const ResolutionGraph& g) {
    std::vector<int> out;
    for (int i = 1; i <= g.size(); ++i)
        if (g.vertex(i).codim >= 4)
            out.push_back(i);
    return out;
}

std::vector<int> mid_levels(const ResolutionGraph& g) {
    std::vector<int> out;
    for (int i = 1; i <= g.size(); ++i)
        if (g.vertex(i).codim == 3)
            out.push_back(i);
    return out;
}

Rational lookup(const std::map<int, Rational>& values, int key) {
    auto it = values.find(key);
    return it == values.end() ? Rational(0) : it->second;
}

Rational lookup(const std::map<std::pair<int, int>, Rational>& values, std::pair<int, int> key) {
    auto it = values.find(key);
    return it == values.end() ? Rational(0) : it->second;
}

}  // namespace

LedgerReport ledger_validate(const MultiplicityLedger& led) {
    LedgerReport report;
    try {
        validate_graph(led.graph);
    } catch (const graph_error& err) {
        report.issues.emplace_back(err.what());
        return report;
    }
    const auto deep = deep_levels(led.graph);
    const auto mid = mid_levels(led.graph);

    const auto in_range = [&](int i) { return i >= 1 && i <= led.graph.size(); };
    for (const auto& [i, value] : led.m_y) {
        if (!in_range(i) || led.graph.vertex(i).codim < 3) {
            report.issues.push_back("m_y(" + std::to_string(i) + ") on a level with codim < 3");
            continue;
        }
        if (value < 0)
            report.issues.push_back("m_y(" + std::to_string(i) + ") negative");
    }
    for (const auto& [i, value] : led.m_yf) {
        if (!in_range(i) || led.graph.vertex(i).codim < 3) {
            report.issues.push_back("m_yf(" + std::to_string(i) + ") on a level with codim < 3");
            continue;
        }
        if (value < 0)
            report.issues.push_back("m_yf(" + std::to_string(i) + ") negative");
        if (!led.graph.vertex(i).in_fiber && value != 0)
            report.issues.push_back("m_yf(" + std::to_string(i) +
                                    ") must vanish outside the fiber transform");
    }
    for (const auto& [i, value] : led.d) {
        if (!in_range(i) || led.graph.vertex(i).codim < 4) {
            report.issues.push_back("d(" + std::to_string(i) + ") on a level with codim < 4");
            continue;
        }
        if (value < 0)
            report.issues.push_back("d(" + std::to_string(i) + ") negative");
    }

    for (const auto& [key, value] : led.cross) {
        const auto [j, i] = key;
        if (!in_range(j) || !in_range(i) || led.graph.vertex(j).codim < 4 ||
            led.graph.vertex(i).codim < 4) {
            report.issues.push_back("cross(" + std::to_string(j) + "," + std::to_string(i) +
                                    ") on a level with codim < 4");
            continue;
        }
        if (value < 0)
            report.issues.push_back("cross(" + std::to_string(j) + "," + std::to_string(i) +
                                    ") negative");
        if (j >= i) {
            report.issues.push_back("cross(" + std::to_string(j) + "," + std::to_string(i) +
                                    ") must have j < i");
            continue;
        }
        if (value > 0 && !led.graph.arrows.count({i, j}))
            report.issues.push_back("cross(" + std::to_string(j) + "," + std::to_string(i) +
                                    ") positive without arrow " + std::to_string(i) + "->" +
                                    std::to_string(j));
        if (value > lookup(led.d, j))
            report.issues.push_back("cross(" + std::to_string(j) + "," + std::to_string(i) +
                                    ") exceeds d(" + std::to_string(j) + ")");
    }

    for (int i : deep) {
        Rational incoming = 0;
        for (int j : deep) {
            if (j >= i)
                break;
            incoming += lookup(led.cross, {j, i});
        }
        const Rational lhs = lookup(led.m_y, i) * led.graph.vertex(i).mu + lookup(led.d, i);
        const Rational rhs = lookup(led.m_yf, i) + incoming;
        if (lhs != rhs)
            report.issues.push_back("balance fails at level " + std::to_string(i));
    }

    if (!deep.empty()) {
        const int s = deep.back();
        Rational spill = 0;
        for (int i : mid)
            if (led.graph.vertex(i).in_fiber)
                spill += lookup(led.m_y, i) * led.graph.vertex(i).mu;
        if (lookup(led.d, s) < spill)
            report.issues.push_back("spillover bound fails: d(" + std::to_string(s) +
                                    ") < in-fiber codim-3 multiplicity sum");
    }

    report.valid = report.issues.empty();
    return report;
}

bool compatible_with_graph(const ResolutionGraph& g, const std::map<int, Rational>& a) {
    const auto deep = deep_levels(g);
    for (int i : deep) {
        Rational incoming = 0;
        for (int j : deep)
            if (j > i && g.arrows.count({j, i}))
                incoming += lookup(a, j);
        if (lookup(a, i) < incoming)
            return false;
    }
    return true;
}

bool ledger_b8_check(const MultiplicityLedger& led, const std::map<int, Rational>& a) {
    if (!compatible_with_graph(led.graph, a))
        throw parameter_error("ledger_b8_check: weight function is not compatible");
    const auto deep = deep_levels(led.graph);
    if (deep.empty())
        return true;
    const int s = deep.back();
    Rational lhs = 0;
    Rational rhs = 0;
    for (int i : deep) {
        lhs += lookup(a, i) * lookup(led.m_yf, i);
        rhs += lookup(a, i) * lookup(led.m_y, i) * led.graph.vertex(i).mu;
    }
    for (int i : mid_levels(led.graph))
        if (led.graph.vertex(i).in_fiber)
            rhs += lookup(a, s) * lookup(led.m_y, i) * led.graph.vertex(i).mu;
    return lhs >= rhs;
}

MultBoundResult weighted_mult_bounds(const MultiplicityLedger& led,
                                     const std::vector<Integer>& p) {
    if (p.size() != static_cast<std::size_t>(led.graph.size()))
        throw parameter_error("weighted_mult_bounds: path vector has wrong length");
    const auto deep = deep_levels(led.graph);
    if (deep.empty() || deep.front() != 1)
        throw data_error("weighted_mult_bounds: the first level must have codim >= 4");
    Rational prev;
    bool first = true;
    for (int i : deep) {
        const Rational current = lookup(led.m_yf, i);
        if (!first && current > prev)
            throw data_error("weighted_mult_bounds: m_yf must be nonincreasing");
        prev = current;
        first = false;
    }
    first = true;
    for (int i : deep) {
        const Rational current = lookup(led.m_y, i);
        if (!first && current > prev)
            throw data_error("weighted_mult_bounds: m_y must be nonincreasing");
        prev = current;
        first = false;
    }

    Rational lhs = 0;
    Rational sigma_s = 0;
    for (int i : deep) {
        lhs += Rational(p[static_cast<std::size_t>(i - 1)]) * lookup(led.m_y, i) *
               led.graph.vertex(i).mu;
        sigma_s += Rational(p[static_cast<std::size_t>(i - 1)]);
    }
    for (int i : mid_levels(led.graph))
        if (led.graph.vertex(i).in_fiber)
            lhs += Rational(p[static_cast<std::size_t>(i - 1)]) * lookup(led.m_y, i) *
                   led.graph.vertex(i).mu;

    const Rational p1(p[0]);
    const Rational second_level = deep.size() >= 2 ? lookup(led.m_yf, deep[1]) : Rational(0);
    const Rational sharp = p1 * lookup(led.m_yf, 1) + (sigma_s - p1) * second_level;
    const Rational weak = sigma_s * lookup(led.m_yf, 1);
    return MultBoundResult{lhs <= sharp, lhs <= weak};
}

ResolutionGraph random_graph(std::mt19937& rng, int max_vertices) {
    std::uniform_int_distribution<int> vcount(1, max_vertices);
    const int k = vcount(rng);
    std::vector<int> codims(static_cast<std::size_t>(k));
    std::uniform_int_distribution<int> codim_start(2, 7);
    int current = codim_start(rng);
    for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<int> drop(0, 2);
        current = std::max(2, current - drop(rng));
        codims[static_cast<std::size_t>(i)] = current;
    }
    std::uniform_int_distribution<int> fiber(1, k);
    const int fiber_prefix = fiber(rng);
    std::uniform_int_distribution<int> mu1(1, 2);
    ResolutionGraph g = make_graph(codims, fiber_prefix, mu1(rng));
    std::bernoulli_distribution extra(0.35);
    for (int from = 3; from <= k; ++from)
        for (int to = 1; to <= from - 2; ++to)
            if (extra(rng))
                g.arrows.insert({from, to});
    return g;
}

MultiplicityLedger random_valid_ledger(std::mt19937& rng, const LedgerGenConfig& cfg) {
    std::uniform_int_distribution<int> deep_count(1, cfg.max_deep);
    std::uniform_int_distribution<int> mid_count(0, cfg.max_mid);
    std::uniform_int_distribution<int> top_count(0, cfg.max_top);
    std::uniform_int_distribution<int> numerator(0, cfg.value_cap);
    std::bernoulli_distribution extra(0.35);

    for (;;) {
        const int n_deep = deep_count(rng);
        const int n_mid = mid_count(rng);
        const int n_top = top_count(rng);
        std::vector<int> codims;
        for (int i = 0; i < n_deep; ++i)
            codims.push_back(4);
        for (int i = 0; i < n_mid; ++i)
            codims.push_back(3);
        for (int i = 0; i < n_top; ++i)
            codims.push_back(2);
        const int k = static_cast<int>(codims.size());
        std::uniform_int_distribution<int> fiber(1, k);
        std::uniform_int_distribution<int> mu1(1, 2);
        ResolutionGraph graph = make_graph(codims, fiber(rng), mu1(rng));
        for (int from = 3; from <= k; ++from)
            for (int to = 1; to <= from - 2; ++to)
                if (extra(rng))
                    graph.arrows.insert({from, to});

        MultiplicityLedger led;
        led.graph = graph;
        const auto deep = deep_levels(graph);
        const auto mid = mid_levels(graph);
        const Rational step = exactmath::make_rational(1, cfg.denominator);

        // Nonincreasing m_y over all codim >= 3 levels.
        std::vector<int> lower = deep;
        lower.insert(lower.end(), mid.begin(), mid.end());
        Rational level = Rational(numerator(rng)) * step + Rational(cfg.value_cap) * step;
        for (int i : lower) {
            const Rational decrease = Rational(numerator(rng)) * step / 2;
            level -= decrease;
            if (level < 0)
                level = 0;
            led.m_y[i] = level;
        }
        for (int i : mid)
            if (!graph.vertex(i).in_fiber)
                led.m_yf[i] = 0;

        Rational spill = 0;
        for (int i : mid)
            if (graph.vertex(i).in_fiber)
                spill += led.m_y[i] * graph.vertex(i).mu;
        for (int i : deep)
            led.d[i] = Rational(numerator(rng)) * step;
        led.d[deep.back()] += spill;  // spillover bound, by construction

        for (std::size_t a = 0; a < deep.size(); ++a) {
            for (std::size_t b = a + 1; b < deep.size(); ++b) {
                const int j = deep[a];
                const int i = deep[b];
                if (!graph.arrows.count({i, j}))
                    continue;
                // cross(j, i) <= d(j)
                const Rational bound = led.d[j];
                if (bound == 0)
                    continue;
                std::uniform_int_distribution<int> share(0, cfg.denominator);
                led.cross[{j, i}] = bound * share(rng) / cfg.denominator;
            }
        }

        bool ok = true;
        Rational prev;
        bool first = true;
        for (int i : deep) {
            Rational incoming = 0;
            for (int j : deep) {
                if (j >= i)
                    break;
                incoming += lookup(led.cross, {j, i});
            }
            const Rational value = led.m_y[i] * graph.vertex(i).mu + led.d[i] - incoming;
            if (value < 0 || (!first && value > prev)) {
                ok = false;
                break;
            }
            led.m_yf[i] = value;
            prev = value;
            first = false;
        }
        if (!ok)
            continue;
        const LedgerReport report = ledger_validate(led);
        if (report.valid)
            return led;
    }
}

}  // namespace fanofib::maxsing
