#include "boxkit/graph_io.hpp"

#include <nlohmann/json.hpp>

namespace boxkit {

using json = nlohmann::ordered_json;

Graph read_graph_json(std::string_view bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph json: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph json: expected object with fields 'n' and 'edges'");
    if (!j["n"].is_number_integer()) throw ParseError("graph json: 'n' must be an integer");
    int n = j["n"].get<int>();
    if (!j["edges"].is_array()) throw ParseError("graph json: 'edges' must be an array");

    std::vector<std::pair<int, int>> edges;
    std::pair<int, int> prev{-1, -1};
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError("graph json: each edge must be a pair of integers");
        int u = e[0].get<int>();
        int v = e[1].get<int>();
        if (u == v) throw ParseError("graph json: self-loop [" + std::to_string(u) + "," +
                                     std::to_string(v) + "]");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("graph json: edge endpoint out of range");
        if (u > v) throw ParseError("graph json: edges must be written [u,v] with u < v");
        std::pair<int, int> cur{u, v};
        if (cur == prev) throw ParseError("graph json: duplicate edge");
        if (cur < prev) throw ParseError("graph json: edges must be sorted lexicographically");
        prev = cur;
        edges.push_back(cur);
    }

    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw ParseError("graph json: 'labels' must be an array");
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw ParseError("graph json: labels must be strings");
            labels.push_back(l.get<std::string>());
        }
    }

    try {
        return Graph(n, edges, std::move(labels));
    } catch (const ParamError& e) {
        throw ParseError(std::string("graph json: ") + e.what());
    }
}

std::string write_graph_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    if (g.has_labels()) j["labels"] = g.labels();
    return j.dump(2) + "\n";
}

std::string write_graph_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(v);
        if (g.has_labels()) {
            std::string esc;
            for (char c : g.label(v)) {
                if (c == '"' || c == '\\') esc += '\\';
                esc += c;
            }
            out += " [label=\"" + esc + "\"]";
        }
        out += ";\n";
    }
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

std::string write_graph(const Graph& g, GraphFormat fmt) {
    return fmt == GraphFormat::json ? write_graph_json(g) : write_graph_dot(g);
}

}  // namespace boxkit
