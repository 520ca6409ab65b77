#include "shiarr/json_io.hpp"

namespace shiarr {

using nlohmann::json;

namespace {

json pair_array(const std::set<std::pair<int, int>>& pairs) {
    json out = json::array();
    for (const auto& [a, b] : pairs) out.push_back(json::array({a, b}));
    return out;
}

std::set<std::pair<int, int>> pair_set(const json& j, const char* what) {
    if (!j.is_array()) throw InvalidInput(std::string(what) + " must be an array of pairs");
    std::set<std::pair<int, int>> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InvalidInput(std::string(what) + " entries must be 2-element integer arrays");
        out.insert({e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

}  // namespace

std::vector<int> int_sequence_from_json(const json& j) {
    if (!j.is_array()) throw InvalidInput("expected a JSON array of integers");
    std::vector<int> out;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw InvalidInput("expected a JSON array of integers");
        out.push_back(e.get<int>());
    }
    return out;
}

json graph_to_json(const SimpleGraph& g) { return pair_array(g.edges); }

SimpleGraph graph_from_json(const json& j, int n) {
    return SimpleGraph(n, pair_set(j, "graph"));
}

json diagram_to_json(const Diagram& d) {
    return json{{"n", d.n}, {"word", d.word}, {"arcs", pair_array(d.arcs)}};
}

Diagram diagram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("word") || !j.contains("arcs"))
        throw InvalidInput("diagram JSON needs word and arcs");
    return Diagram(int_sequence_from_json(j["word"]), pair_set(j["arcs"], "arcs"));
}

json kdiagram_to_json(const KDiagram& d) {
    return json{{"n", d.n}, {"k", d.k}, {"word", d.word}, {"arcs", pair_array(d.arcs)}};
}

KDiagram kdiagram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("word") || !j.contains("arcs"))
        throw InvalidInput("k-diagram JSON needs k, word and arcs");
    if (!j["k"].is_number_integer()) throw InvalidInput("k must be an integer");
    return KDiagram(j["k"].get<int>(), int_sequence_from_json(j["word"]),
                    pair_set(j["arcs"], "arcs"));
}

json arrangement_to_json(const Arrangement& a) {
    json planes = json::array();
    for (const auto& h : a.hyperplanes) planes.push_back(json::array({h.i, h.j, h.c}));
    return json{{"n", a.n}, {"hyperplanes", planes}};
}

Arrangement arrangement_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("hyperplanes"))
        throw InvalidInput("arrangement JSON needs n and hyperplanes");
    Arrangement a;
    a.n = j["n"].get<int>();
    for (const auto& e : j["hyperplanes"]) {
        if (!e.is_array() || e.size() != 3)
            throw InvalidInput("hyperplanes must be [i, j, c] triples");
        a.hyperplanes.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    }
    return a;
}

json region_to_json(const Region& r) {
    json witness = json::array();
    for (const auto& x : r.witness) witness.push_back(x.str());
    return json{{"signs", r.signs}, {"witness", witness}};
}

Region region_from_json(const json& j) {
    if (!j.is_object() || !j.contains("signs") || !j.contains("witness"))
        throw InvalidInput("region JSON needs signs and witness");
    Region r;
    r.signs = j["signs"].get<std::string>();
    for (const auto& e : j["witness"]) {
        auto parsed = Rational::parse(e.get<std::string>());
        if (!parsed) throw InvalidInput("witness entries must be rational strings");
        r.witness.push_back(*parsed);
    }
    return r;
}

json face_to_json(const Face& f) {
    json witness = json::array();
    for (const auto& x : f.witness) witness.push_back(x.str());
    return json{{"signs", f.signs}, {"dim", f.dim}, {"witness", witness}};
}

}  // namespace shiarr
