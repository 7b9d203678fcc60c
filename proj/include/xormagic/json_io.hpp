#pragma once

#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "xormagic/labeling.hpp"

namespace xormagic {

using nlohmann::json;

// {"order": m, "edges": [[u,v], ...]} with u < v, sorted lexicographically.
inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({u, v});
    return json{{"order", g.order()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("edges"))
        throw std::invalid_argument("graph json needs {order, edges}");
    const int order = j.at("order").get<int>();
    if (order < 1)
        throw std::invalid_argument("graph json: order must be >= 1");
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph json: each edge is a pair");
        const int u = e.at(0).get<int>();
        const int v = e.at(1).get<int>();
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::invalid_argument("graph json: vertex index out of range");
        if (u == v)
            throw std::invalid_argument("graph json: loops are not allowed");
        if (u > v)
            throw std::invalid_argument("graph json: edges must be written with u < v");
        if (!seen.insert({u, v}).second)
            throw std::invalid_argument("graph json: duplicate edge");
        edges.emplace_back(u, v);
    }
    return Graph(order, edges);
}

// {"n": n, "labels": ["0101", ...]} — big-endian bitstrings indexed by vertex.
inline json labeling_to_json(const Labeling& l) {
    json labels = json::array();
    for (const BitLabel& b : l.labels())
        labels.push_back(b.to_string());
    return json{{"n", l.n()}, {"labels", labels}};
}

inline Labeling labeling_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("labels"))
        throw std::invalid_argument("labeling json needs {n, labels}");
    const int n = j.at("n").get<int>();
    std::vector<BitLabel> labels;
    for (const auto& s : j.at("labels")) {
        const BitLabel b = BitLabel::from_string(s.get<std::string>());
        if (b.n() != n)
            throw std::invalid_argument("labeling json: label length does not match n");
        labels.push_back(b);
    }
    return Labeling(n, std::move(labels));
}

// Combined certificate: {"graph": ..., "labeling": ..., "mode": "open"|"closed"}.
struct Certificate {
    Graph graph;
    Labeling labeling;
    Mode mode;
};

inline json certificate_to_json(const Certificate& c) {
    return json{{"graph", graph_to_json(c.graph)},
                {"labeling", labeling_to_json(c.labeling)},
                {"mode", to_string(c.mode)}};
}

inline Certificate certificate_from_json(const json& j) {
    if (!j.is_object() || !j.contains("graph") || !j.contains("labeling") || !j.contains("mode"))
        throw std::invalid_argument("certificate json needs {graph, labeling, mode}");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "open" && mode != "closed")
        throw std::invalid_argument("certificate json: mode must be open or closed");
    return Certificate{graph_from_json(j.at("graph")), labeling_from_json(j.at("labeling")),
                       mode == "open" ? Mode::open : Mode::closed};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed json in " + path + ": " + e.what());
    }
    return j;
}

inline void save_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

inline void save_json_file(const std::string& path, const json& j) {
    save_text_file(path, j.dump(1) + "\n");
}

} // namespace xormagic
