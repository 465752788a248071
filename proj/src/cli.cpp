#include "fanofib/cli.hpp"

#include "fanofib/errors.hpp"
#include "fanofib/json_io.hpp"
#include "fanofib/ledger.hpp"
#include "fanofib/lines.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace fanofib::cli {

using exactmath::Integer;
using exactmath::Rational;
using nlohmann::json;

namespace {

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::text: return "text";
        case OutputFormat::csv: return "csv";
        case OutputFormat::json: return "json";
    }
    return "?";
}

OutputFormat parse_format(const std::string& name) {
    if (name == "text")
        return OutputFormat::text;
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    throw parameter_error("unknown format '" + name + "' (text|csv|json)");
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

void apply_caps(RunConfig& config, const std::string& spec) {
    std::stringstream stream(spec);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw parameter_error("caps entries look like key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (key == "ax") {
            config.caps.max_a_x = std::stoi(value);
        } else if (key == "aq") {
            config.caps.max_a_q = std::stoi(value);
        } else if (key == "aw") {
            config.caps.max_a_w = std::stoi(value);
        } else if (key == "twists") {
            config.caps.max_twist_count = std::stoi(value);
        } else if (key == "m") {
            const auto [lo, hi] = parse_range(value);
            config.caps.m_min = lo;
            config.caps.m_max = hi;
            config.lines_m_min = lo;
            config.lines_m_max = hi;
        } else if (key == "l") {
            const auto [lo, hi] = parse_range(value);
            config.l_min = lo;
            config.l_max = hi;
        } else {
            throw parameter_error("unknown caps key '" + key + "'");
        }
        if (config.caps.max_a_x < 0 || config.caps.max_a_q < 0 || config.caps.max_a_w < 0 ||
            config.caps.max_twist_count < 1)
            throw parameter_error("caps must be positive");
    }
}

void apply_grid(RunConfig& config, const std::string& spec) {
    std::stringstream stream(spec);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty())
            continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw parameter_error("grid entries look like key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (key == "int") {
            config.grid.int_max = std::stoi(value);
        } else if (key == "step") {
            config.grid.step = exactmath::parse_rational(value);
            if (config.grid.step <= 0 || config.grid.step > 1)
                throw parameter_error("grid step must be a positive rational <= 1");
        } else if (key == "max") {
            config.grid.rat_max = exactmath::parse_rational(value);
        } else {
            throw parameter_error("unknown grid key '" + key + "'");
        }
    }
}

// FNV-1a; stable content hash for the artifact cache.
std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ULL;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

std::string hex64(std::uint64_t value) {
    static const char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

}  // namespace

std::string RunConfig::canonical_string() const {
    std::string s;
    s += "ax=" + std::to_string(caps.max_a_x);
    s += ";aq=" + std::to_string(caps.max_a_q);
    s += ";aw=" + std::to_string(caps.max_a_w);
    s += ";twists=" + std::to_string(caps.max_twist_count);
    s += ";m=" + std::to_string(caps.m_min) + ".." + std::to_string(caps.m_max);
    s += ";l=" + std::to_string(l_min) + ".." + std::to_string(l_max);
    s += ";lines_m=" + std::to_string(lines_m_min) + ".." + std::to_string(lines_m_max);
    s += ";grid_int=" + std::to_string(grid.int_max);
    s += ";grid_step=" + exactmath::to_string(grid.step);
    s += ";grid_max=" + exactmath::to_string(grid.rat_max);
    s += ";format=" + format_name(format);
    s += ";seed=" + std::to_string(seed);
    s += ";fuzz=" + std::to_string(fuzz_count);
    return s;
}

// ---------------------------------------------------------------------------
// classify

namespace {

struct ClassifyRow {
    std::string family;
    std::string kind;
    std::string m_range;
    std::string k2;
    std::string depth;
    std::string k_condition;
    std::string theorem1_class;
    std::string tag;
};

std::string k2_formula_text(int t, int a_q) {
    // k2 = 2t*m + 2 a_Q for hypersurfaces
    const int slope = 2 * t;
    const int offset = 2 * a_q;
    if (slope == 0)
        return std::to_string(offset);
    std::string s = (slope == 1) ? "m" : (slope == -1 ? "-m" : std::to_string(slope) + "m");
    if (offset > 0)
        s += "+" + std::to_string(offset);
    return s;
}

std::vector<ClassifyRow> classify_rows(const RunConfig& config) {
    std::vector<ClassifyRow> rows;
    const auto& caps = config.caps;

    const auto hyper = families::enumerate_k2_failing(caps, chow::FamilyKind::double_hypersurface);
    for (const auto& fam : hyper) {
        ClassifyRow row;
        row.family = fam.family_text();
        row.kind = "hypersurface";
        if (fam.m_independent) {
            row.m_range = std::to_string(caps.m_min) + ".." + std::to_string(caps.m_max);
        } else {
            row.m_range = "m in {";
            for (std::size_t i = 0; i < fam.failing_m.size(); ++i)
                row.m_range += (i ? "," : "") + std::to_string(fam.failing_m[i]);
            row.m_range += "}";
        }
        int a_x = 0;
        for (int t : fam.twists)
            a_x += t;
        const int t = 4 - a_x - 2 * fam.a_q - 2 * fam.a_w;
        row.k2 = k2_formula_text(t, fam.a_q);
        // depth is maximal at the smallest degree
        const auto fp_min =
            chow::FamilyParams::hypersurface(fam.twists, caps.m_min, 2, fam.a_q, fam.a_w);
        row.depth = exactmath::to_string(families::generalized_k2_depth(fp_min));
        if (fam.listed) {
            const auto report = families::theorem1_report(fp_min);
            // re-certify across the whole m range; pairings can depend on m
            for (int m = caps.m_min + 1; m <= caps.m_max; ++m)
                families::theorem1_report(
                    chow::FamilyParams::hypersurface(fam.twists, m, 2, fam.a_q, fam.a_w));
            row.k_condition = families::to_string(report.k_condition);
            if (!report.witness_ids.empty())
                row.k_condition += "(" + report.witness_ids.front() + ")";
            row.theorem1_class = report.superrigid ? "superrigid" : "rigid";
            row.tag = report.superrigid ? "unique-structure" : "involution-pair";
        } else {
            row.k_condition = "unknown";
            row.theorem1_class = "unlisted";
            row.tag = "outside-catalog";
        }
        rows.push_back(std::move(row));
    }

    const auto spaces = families::enumerate_k2_failing(caps, chow::FamilyKind::double_space);
    for (const auto& fam : spaces) {
        ClassifyRow row;
        row.family = fam.family_text();
        row.kind = "space";
        row.m_range = "-";
        row.k2 = fam.k2_at_m_min.str();
        const auto fp = chow::FamilyParams::space(fam.twists, fam.a_w);
        row.depth = exactmath::to_string(families::generalized_k2_depth(fp));
        if (fam.listed) {
            const auto report = families::theorem1_report(fp);
            row.k_condition = families::to_string(report.k_condition);
            if (!report.witness_ids.empty())
                row.k_condition += "(" + report.witness_ids.front() + ")";
            row.theorem1_class = report.superrigid ? "superrigid" : "rigid";
            row.tag = report.superrigid ? "unique-structure" : "involution-pair";
        } else {
            row.k_condition = "unknown";
            row.theorem1_class = "unlisted";
            row.tag = "outside-catalog";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size() + 1, ' ');
}

}  // namespace

std::string classify_artifact(const RunConfig& config) {
    const auto rows = classify_rows(config);
    std::string out;
    const std::string caps_line =
        "a_X<=" + std::to_string(config.caps.max_a_x) + " a_Q<=" +
        std::to_string(config.caps.max_a_q) + " a_W<=" + std::to_string(config.caps.max_a_w) +
        " twists<=" + std::to_string(config.caps.max_twist_count) + " m=" +
        std::to_string(config.caps.m_min) + ".." + std::to_string(config.caps.m_max);

    switch (config.format) {
        case OutputFormat::text: {
            out += "# families with positive k2 pairing under caps " + caps_line + "\n";
            out += pad("family", 16) + pad("kind", 12) + pad("m-range", 12) + pad("k2", 8) +
                   pad("depth-max", 10) + pad("k-condition", 34) + pad("class", 11) + "tag\n";
            std::size_t classified = 0;
            for (const auto& row : rows) {
                if (row.theorem1_class == "unlisted")
                    continue;
                ++classified;
                out += pad(row.family, 16) + pad(row.kind, 12) + pad(row.m_range, 12) +
                       pad(row.k2, 8) + pad(row.depth, 10) + pad(row.k_condition, 34) +
                       pad(row.theorem1_class, 11) + row.tag + "\n";
            }
            out += "# " + std::to_string(classified) + " classified families\n";
            out += "# k2-positive outside the catalog (movable-cone status unknown here):\n";
            std::size_t extras = 0;
            for (const auto& row : rows) {
                if (row.theorem1_class != "unlisted")
                    continue;
                ++extras;
                out += pad(row.family, 16) + pad(row.kind, 12) + pad(row.m_range, 12) +
                       pad(row.k2, 8) + pad(row.depth, 10) + pad(row.k_condition, 34) +
                       pad(row.theorem1_class, 11) + row.tag + "\n";
            }
            out += "# " + std::to_string(extras) + " unlisted families\n";
            out += "# numeric layer: depth and exclusion certificates check for every "
                   "classified row\n";
            return out;
        }
        case OutputFormat::csv: {
            out += "family,kind,m_range,k2_value,depth,k_condition,theorem1_class,tag\n";
            for (const auto& row : rows)
                out += "\"" + row.family + "\"," + row.kind + ",\"" + row.m_range + "\"," +
                       row.k2 + "," + row.depth + "," + row.k_condition + "," +
                       row.theorem1_class + "," + row.tag + "\n";
            return out;
        }
        case OutputFormat::json: {
            json j = json::array();
            for (const auto& row : rows)
                j.push_back({{"family", row.family},
                             {"kind", row.kind},
                             {"m_range", row.m_range},
                             {"k2_value", row.k2},
                             {"depth", row.depth},
                             {"k_condition", row.k_condition},
                             {"theorem1_class", row.theorem1_class},
                             {"tag", row.tag}});
            return j.dump(2) + "\n";
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// certify

std::string certify_artifact(const RunConfig& config, bool& failed) {
    std::string out;
    failed = false;
    std::size_t verified = 0;
    for (const auto which : maxsing::atomic_cases()) {
        const auto cert = maxsing::exclusion_certificate(which);
        out += "certificate " + cert.name + "\n";
        for (const auto& [label, combo] : cert.identities) {
            out += "  identity (" + label + "):\n";
            out += "    target = " + combo.target.to_string() + "\n";
            for (const auto& part : combo.parts) {
                std::string part_text = part.multiplier.to_string();
                for (const auto& gen : part.generators)
                    part_text += " * [" + gen.label + "]";
                out += "    part   = " + part_text + "\n";
            }
        }
        try {
            maxsing::verify_certificate(cert);
            out += "  verified\n";
            ++verified;
        } catch (const certificate_error& err) {
            out += std::string("  FAILED: ") + err.what() + "\n";
            failed = true;
        }
    }

    std::size_t counterexamples = 0;
    for (const auto which : maxsing::atomic_cases()) {
        const auto cex = maxsing::falsification_search(which, config.grid);
        if (cex) {
            ++counterexamples;
            failed = true;
            out += "falsification " + maxsing::to_string(which) + ": counterexample at";
            for (const auto& [name, value] : cex->assignment)
                out += " " + name + "=" + exactmath::to_string(value);
            out += " value=" + exactmath::to_string(cex->value) + "\n";
        } else {
            out += "falsification " + maxsing::to_string(which) + ": no counterexample (grid " +
                   std::to_string(config.grid.int_max) + ", step " +
                   exactmath::to_string(config.grid.step) + ")\n";
        }
    }
    out += std::to_string(verified) + " certificates verified, " +
           std::to_string(counterexamples) + " counterexamples\n";
    return out;
}

// ---------------------------------------------------------------------------
// lines-table

std::string lines_table_artifact(const RunConfig& config) {
    const auto exceptional = lines::exceptional_set(config.lines_m_min, config.lines_m_max,
                                                    config.l_min, config.l_max);
    const bool csv = config.format == OutputFormat::csv;
    json rows = json::array();
    std::string out;
    if (csv)
        out += "m,l,lambda,refined_bound,target,exceptional,ratio,verdict,tag\n";
    else if (config.format == OutputFormat::text)
        out += pad("m", 4) + pad("l", 4) + pad("lambda", 12) + pad("refined", 10) +
               pad("target", 8) + pad("exceptional", 12) + pad("ratio", 14) + "verdict\n";
    for (int m = config.lines_m_min; m <= config.lines_m_max; ++m) {
        for (int l = config.l_min; l <= config.l_max; ++l) {
            const Integer lambda = lines::lambda_ml(m, l);
            const Rational bound = lines::hypertangent_bound(
                m, l,
                m <= 2 * l ? lines::HyperBound::refined_low : lines::HyperBound::refined_high);
            const Rational target = exactmath::make_rational(3, 2 * m);
            const bool exc = exceptional.count({m, l}) > 0;
            std::string ratio_text = "-";
            std::string verdict = "-";
            if (m >= 4) {
                const auto ratio = lines::mobile_ratio(m, l);
                ratio_text = exactmath::to_string(ratio.value);
                verdict = ratio.exceeds_two_thirds ? ">2/3" : "<=2/3";
            }
            if (csv) {
                out += std::to_string(m) + "," + std::to_string(l) + "," + lambda.str() + "," +
                       exactmath::to_string(bound) + "," + exactmath::to_string(target) + "," +
                       (exc ? "yes" : "no") + "," + ratio_text + "," + verdict +
                       ",line-count-bound\n";
            } else if (config.format == OutputFormat::text) {
                out += pad(std::to_string(m), 4) + pad(std::to_string(l), 4) +
                       pad(lambda.str(), 12) + pad(exactmath::to_string(bound), 10) +
                       pad(exactmath::to_string(target), 8) + pad(exc ? "yes" : "no", 12) +
                       pad(ratio_text, 14) + verdict + "\n";
            } else {
                rows.push_back({{"m", m},
                                {"l", l},
                                {"lambda", lambda.str()},
                                {"refined_bound", exactmath::to_string(bound)},
                                {"target", exactmath::to_string(target)},
                                {"exceptional", exc},
                                {"ratio", ratio_text},
                                {"verdict", verdict},
                                {"tag", "line-count-bound"}});
            }
        }
    }
    if (config.format == OutputFormat::json)
        return rows.dump(2) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// ledger-fuzz

std::string ledger_fuzz_artifact(const RunConfig& config, bool& failed) {
    failed = false;
    std::mt19937 rng(config.seed);
    long long b8_ok = 0;
    long long bounds_ok = 0;
    long long violations = 0;
    std::string out;
    for (long long i = 0; i < config.fuzz_count; ++i) {
        const auto led = maxsing::random_valid_ledger(rng);
        const auto p = maxsing::path_counts(led.graph);
        std::map<int, Rational> weights;
        for (int v = 1; v <= led.graph.size(); ++v)
            weights[v] = Rational(p[static_cast<std::size_t>(v - 1)]);
        const bool b8 = maxsing::ledger_b8_check(led, weights);
        const auto bounds = maxsing::weighted_mult_bounds(led, p);
        if (b8)
            ++b8_ok;
        if (bounds.holds_sharp && bounds.holds_weak)
            ++bounds_ok;
        if (!b8 || !bounds.holds_sharp || !bounds.holds_weak) {
            failed = true;
            ++violations;
            out += "violation on ledger " + std::to_string(i) + ":\n";
            out += io::ledger_to_json(led) + "\n";
        }
    }
    out += "checked " + std::to_string(config.fuzz_count) + " ledgers (seed " +
           std::to_string(config.seed) + "): weighted-restriction ok " + std::to_string(b8_ok) +
           ", path-weighted bounds ok " + std::to_string(bounds_ok) + ", violations " +
           std::to_string(violations) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// graph-eval

std::string graph_eval_artifact(const RunConfig& config, const std::string& graph_json,
                                const std::vector<Rational>& nu, const Integer& n) {
    const auto graph = io::graph_from_json(graph_json);
    const auto p = maxsing::path_counts(graph);
    const auto sums = maxsing::partition_sums(graph, p);

    json j;
    json path_list = json::array();
    for (const auto& value : p)
        path_list.push_back(value.str());
    j["path_counts"] = path_list;
    j["sigma_s"] = sums.sigma_s.str();
    j["sigma_m_plus"] = sums.sigma_m_plus.str();
    j["sigma_m_minus"] = sums.sigma_m_minus.str();
    j["sigma_u"] = sums.sigma_u.str();
    j["sigma_l"] = sums.sigma_l.str();
    j["sigma_f"] = sums.sigma_f.str();
    j["fiber_depth"] = sums.fiber_n;
    j["lower_length"] = sums.lower_l;
    if (!nu.empty()) {
        const auto nf = maxsing::noether_fano(graph, nu, n);
        j["noether_fano_holds"] = nf.holds;
        j["excess"] = exactmath::to_string(nf.excess);
        if (nf.holds)
            j["quadratic_lower_bound"] =
                exactmath::to_string(maxsing::quadratic_lower_bound(graph, n, nf.excess));
    }
    if (config.format == OutputFormat::json)
        return j.dump(2) + "\n";

    std::string out;
    out += "path counts:";
    for (const auto& value : p)
        out += " " + value.str();
    out += "\n";
    out += "sigma_s=" + sums.sigma_s.str() + " sigma_m+=" + sums.sigma_m_plus.str() +
           " sigma_m-=" + sums.sigma_m_minus.str() + " sigma_u=" + sums.sigma_u.str() +
           " sigma_l=" + sums.sigma_l.str() + " sigma_f=" + sums.sigma_f.str() + "\n";
    out += "fiber depth N=" + std::to_string(sums.fiber_n) +
           ", lower length L=" + std::to_string(sums.lower_l) + "\n";
    if (!nu.empty()) {
        const auto nf = maxsing::noether_fano(graph, nu, n);
        out += std::string("noether-fano: ") + (nf.holds ? "holds" : "fails") +
               ", excess e=" + exactmath::to_string(nf.excess) + "\n";
        if (nf.holds)
            out += "quadratic lower bound: " +
                   exactmath::to_string(maxsing::quadratic_lower_bound(graph, n, nf.excess)) +
                   "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// chow-eval

namespace {

struct ExprFactor {
    char symbol;       // K, L, F, H
    int exp_const;     // constant part of the exponent
    int exp_m_coeff;   // coefficient of M in the exponent
};

std::vector<ExprFactor> parse_expression(const std::string& text) {
    std::vector<ExprFactor> factors;
    std::size_t i = 0;
    const auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '*' || text[i] == '.'))
            ++i;
    };
    skip();
    while (i < text.size()) {
        const char sym = text[i];
        if (sym != 'K' && sym != 'L' && sym != 'F' && sym != 'H')
            throw parameter_error(std::string("expression: unknown class symbol '") + sym + "'");
        ++i;
        ExprFactor factor{sym, 1, 0};
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool parens = false;
            if (i < text.size() && text[i] == '(') {
                parens = true;
                ++i;
            }
            int sign = 1;
            int constant = 0;
            int m_coeff = 0;
            bool any = false;
            while (i < text.size()) {
                const char c = text[i];
                if (c == '+') {
                    sign = 1;
                    ++i;
                } else if (c == '-') {
                    sign = -1;
                    ++i;
                } else if (c == 'M') {
                    m_coeff += sign;
                    sign = 1;
                    any = true;
                    ++i;
                } else if (std::isdigit(static_cast<unsigned char>(c))) {
                    int value = 0;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                        value = value * 10 + (text[i] - '0');
                        ++i;
                    }
                    constant += sign * value;
                    sign = 1;
                    any = true;
                } else {
                    break;
                }
            }
            if (!any)
                throw parameter_error("expression: empty exponent");
            if (parens) {
                if (i >= text.size() || text[i] != ')')
                    throw parameter_error("expression: missing ')'");
                ++i;
            }
            factor.exp_const = constant;
            factor.exp_m_coeff = m_coeff;
        }
        factors.push_back(factor);
        skip();
    }
    if (factors.empty())
        throw parameter_error("expression: no class symbols");
    return factors;
}

}  // namespace

Integer eval_class_expression(const std::string& expression, const chow::FamilyParams& family) {
    const auto factors = parse_expression(expression);
    const int big_m = family.big_m();
    std::vector<chow::Divisor> classes;
    const chow::Divisor k = chow::canonical_class(family);
    const chow::Divisor minus_k{1, -Integer(family.canonical_fiber_coeff())};
    for (const auto& factor : factors) {
        const int exponent = factor.exp_const + factor.exp_m_coeff * big_m;
        if (exponent < 0)
            throw parameter_error("expression: negative exponent for this family");
        for (int rep = 0; rep < exponent; ++rep) {
            switch (factor.symbol) {
                case 'K': classes.push_back(k); break;
                case 'L': classes.push_back(chow::Divisor{1, 0}); break;
                case 'F': classes.push_back(chow::Divisor{0, 1}); break;
                case 'H':
                    classes.push_back(minus_k);
                    classes.push_back(chow::Divisor{0, 1});
                    break;
            }
        }
    }
    return chow::top_intersection_v(classes, family);
}

std::string chow_eval_artifact(const RunConfig& config, const std::string& expression,
                               const chow::FamilyParams& family) {
    const Integer value = eval_class_expression(expression, family);
    if (config.format == OutputFormat::json) {
        json j{{"expression", expression},
               {"family", family.to_text_full()},
               {"value", value.str()}};
        return j.dump(2) + "\n";
    }
    return value.str() + "\n";
}

// ---------------------------------------------------------------------------
// driver

namespace {

std::string cache_lookup_or_store(const RunConfig& config, const std::string& command,
                                  const std::string& extra_key,
                                  const std::function<std::string()>& build) {
    if (config.cache_dir.empty())
        return build();
    namespace fs = std::filesystem;
    fs::create_directories(config.cache_dir);
    const std::string key = command + "\n" + config.canonical_string() + "\n" + extra_key;
    const fs::path path = fs::path(config.cache_dir) / (hex64(fnv1a(key)) + ".txt");
    if (fs::exists(path)) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    const std::string artifact = build();
    std::ofstream out(path, std::ios::binary);
    out << artifact;
    return artifact;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    RunResult result;
    RunConfig config;
    std::string caps_spec;
    std::string grid_spec;
    std::string format_spec = "text";
    std::string family_spec;
    std::string expression;
    std::string input_path;
    std::string nu_spec;
    long long n_value = 1;

    CLI::App app{"exact numeric layer for fibration rigidity classification"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--caps", caps_spec, "enumeration caps, e.g. ax=3,aq=2,aw=1,twists=3,m=2..8,l=3..8");
        cmd->add_option("--grid", grid_spec, "falsification grid, e.g. int=6,step=1/4,max=6");
        cmd->add_option("--format", format_spec, "output format: text|csv|json");
        cmd->add_option("--cache", config.cache_dir, "cache directory for artifacts");
        cmd->add_option("--seed", config.seed, "random seed (ledger fuzzing)");
        return cmd;
    };

    auto* classify = add_common(app.add_subcommand("classify", "reproduce the family lists"));
    auto* chow_eval =
        add_common(app.add_subcommand("chow-eval", "evaluate a class monomial on a family"));
    chow_eval->add_option("expression", expression, "e.g. \"K^2 L^(M-1)\"")->required();
    chow_eval->add_option("--family", family_spec, "family, e.g. \"((0),(2,0)),m=4\"")->required();
    auto* certify = add_common(
        app.add_subcommand("certify", "verify the exclusion certificates and sweep the grid"));
    auto* lines_cmd =
        add_common(app.add_subcommand("lines-table", "line-count bounds and exceptional pairs"));
    auto* fuzz = add_common(
        app.add_subcommand("ledger-fuzz", "random valid ledgers vs the counting inequalities"));
    fuzz->add_option("--count", config.fuzz_count, "number of ledgers");
    auto* graph_eval = add_common(
        app.add_subcommand("graph-eval", "path counts and bounds for a resolution graph"));
    graph_eval->add_option("--input", input_path, "graph JSON file")->required();
    graph_eval->add_option("--nu", nu_spec, "per-vertex multiplicities, e.g. 5,3,3");
    graph_eval->add_option("--n", n_value, "system degree n");

    std::vector<const char*> argv;
    argv.push_back("fanofib");
    for (const auto& arg : args)
        argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        result.output = app.help();
        return result;
    } catch (const CLI::ParseError& err) {
        result.exit_code = 1;
        result.error = std::string("usage error: ") + err.what() + "\n";
        return result;
    }

    try {
        if (!caps_spec.empty())
            apply_caps(config, caps_spec);
        if (!grid_spec.empty())
            apply_grid(config, grid_spec);
        config.format = parse_format(format_spec);

        if (classify->parsed()) {
            result.output = cache_lookup_or_store(config, "classify", "",
                                                  [&] { return classify_artifact(config); });
        } else if (chow_eval->parsed()) {
            const auto family = chow::parse_family(family_spec);
            result.output = cache_lookup_or_store(config, "chow-eval",
                                                  expression + "|" + family.to_text_full(), [&] {
                                                      return chow_eval_artifact(config, expression,
                                                                                family);
                                                  });
        } else if (certify->parsed()) {
            bool failed = false;
            result.output = certify_artifact(config, failed);
            if (failed)
                result.exit_code = 2;
        } else if (lines_cmd->parsed()) {
            result.output = cache_lookup_or_store(config, "lines-table", "",
                                                  [&] { return lines_table_artifact(config); });
        } else if (fuzz->parsed()) {
            bool failed = false;
            result.output = ledger_fuzz_artifact(config, failed);
            if (failed)
                result.exit_code = 2;
        } else if (graph_eval->parsed()) {
            std::ifstream in(input_path, std::ios::binary);
            if (!in)
                throw parameter_error("cannot open '" + input_path + "'");
            std::ostringstream buffer;
            buffer << in.rdbuf();
            std::vector<Rational> nu;
            if (!nu_spec.empty()) {
                std::stringstream stream(nu_spec);
                std::string item;
                while (std::getline(stream, item, ','))
                    nu.push_back(exactmath::parse_rational(item));
            }
            result.output =
                graph_eval_artifact(config, buffer.str(), nu, Integer(n_value));
        }
    } catch (const certificate_error& err) {
        result.exit_code = 2;
        result.error = std::string("certificate failure: ") + err.what() + "\n";
    } catch (const std::exception& err) {
        result.exit_code = 1;
        result.error = std::string("error: ") + err.what() + "\n";
    }
    return result;
}

}  // namespace fanofib::cli
