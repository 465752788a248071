#include "fanofib/json_io.hpp"

#include "fanofib/errors.hpp"

#include <json.hpp>

namespace fanofib::io {

using nlohmann::json;

namespace {

json rational_json(const exactmath::Rational& q) {
    return exactmath::to_string(q);
}

exactmath::Rational rational_from(const json& j) {
    if (j.is_number_integer())
        return exactmath::Rational(j.get<long long>());
    if (j.is_string())
        return exactmath::parse_rational(j.get<std::string>());
    throw parameter_error("expected a rational as integer or \"p/q\" string");
}

json graph_json(const maxsing::ResolutionGraph& g) {
    json vertices = json::array();
    for (const auto& v : g.vertices)
        vertices.push_back({{"codim", v.codim}, {"mu", v.mu}, {"in_fiber", v.in_fiber}});
    json arrows = json::array();
    for (const auto& [from, to] : g.arrows)
        arrows.push_back({from, to});
    return {{"vertices", vertices}, {"arrows", arrows}};
}

maxsing::ResolutionGraph graph_parse(const json& j) {
    maxsing::ResolutionGraph g;
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw parameter_error("graph JSON needs a \"vertices\" array");
    for (const auto& vj : j["vertices"]) {
        maxsing::Vertex v;
        v.codim = vj.at("codim").get<int>();
        v.in_fiber = vj.value("in_fiber", false);
        v.mu = vj.value("mu", v.in_fiber ? 1 : 0);
        g.vertices.push_back(v);
    }
    if (j.contains("arrows"))
        for (const auto& aj : j["arrows"])
            g.arrows.insert({aj.at(0).get<int>(), aj.at(1).get<int>()});
    // Consecutive arrows are part of every resolution; accept inputs that omit them.
    for (int i = 1; i < g.size(); ++i)
        g.arrows.insert({i + 1, i});
    maxsing::validate_graph(g);
    return g;
}

json level_map_json(const std::map<int, exactmath::Rational>& values) {
    json out = json::object();
    for (const auto& [level, value] : values)
        out[std::to_string(level)] = rational_json(value);
    return out;
}

std::map<int, exactmath::Rational> level_map_parse(const json& j) {
    std::map<int, exactmath::Rational> out;
    for (const auto& [key, value] : j.items())
        out[std::stoi(key)] = rational_from(value);
    return out;
}

}  // namespace

std::string graph_to_json(const maxsing::ResolutionGraph& g) {
    return graph_json(g).dump(2);
}

maxsing::ResolutionGraph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& err) {
        throw parameter_error(std::string("bad JSON: ") + err.what());
    }
    return graph_parse(j);
}

std::string ledger_to_json(const maxsing::MultiplicityLedger& led) {
    json j;
    j["graph"] = graph_json(led.graph);
    j["m_y"] = level_map_json(led.m_y);
    j["m_yf"] = level_map_json(led.m_yf);
    j["d"] = level_map_json(led.d);
    json cross = json::array();
    for (const auto& [key, value] : led.cross)
        cross.push_back({{"from_level", key.first},
                         {"at_level", key.second},
                         {"value", rational_json(value)}});
    j["cross"] = cross;
    return j.dump(2);
}

maxsing::MultiplicityLedger ledger_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& err) {
        throw parameter_error(std::string("bad JSON: ") + err.what());
    }
    maxsing::MultiplicityLedger led;
    led.graph = graph_parse(j.at("graph"));
    if (j.contains("m_y"))
        led.m_y = level_map_parse(j["m_y"]);
    if (j.contains("m_yf"))
        led.m_yf = level_map_parse(j["m_yf"]);
    if (j.contains("d"))
        led.d = level_map_parse(j["d"]);
    if (j.contains("cross"))
        for (const auto& cj : j["cross"])
            led.cross[{cj.at("from_level").get<int>(), cj.at("at_level").get<int>()}] =
                rational_from(cj.at("value"));
    return led;
}

}  // namespace fanofib::io
