#include "boxkit/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "boxkit/combinatorics.hpp"
#include "boxkit/sha256.hpp"

namespace boxkit {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::vector<std::string> labels)
    : n_(n), m_(0) {
    if (n < 0) throw ParamError("graph: negative vertex count");
    if (n > kVertexCap)
        throw ParamError("graph: vertex count " + std::to_string(n) + " exceeds cap " +
                         std::to_string(kVertexCap));
    adj_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParamError("graph: edge endpoint out of range");
        if (u == v) throw ParamError("graph: self-loop at vertex " + std::to_string(u));
        if (adj_[u].test(v)) throw ParamError("graph: duplicate edge");
        adj_[u].set(v);
        adj_[v].set(u);
        ++m_;
    }
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw ParamError("graph: label count does not match vertex count");
        std::unordered_set<std::string> seen(labels.begin(), labels.end());
        if (static_cast<int>(seen.size()) != n)
            throw ParamError("graph: labels must be distinct");
        labels_ = std::move(labels);
    }
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each_set([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::string Graph::content_hash() const {
    std::string s = "n=" + std::to_string(n_) + ";";
    for (auto [u, v] : edges()) s += std::to_string(u) + "-" + std::to_string(v) + ";";
    return sha256_hex(s);
}

void validate_kneser_params(const KneserParams& p) {
    if (p.k < 1) throw ParamError("kneser: need k >= 1");
    if (p.n < 2 * p.k)
        throw ParamError("kneser: need n >= 2k (got k=" + std::to_string(p.k) +
                         ", n=" + std::to_string(p.n) + ")");
}

Graph kneser_graph(const KneserParams& p) {
    validate_kneser_params(p);
    if (binom(p.n, p.k) > Graph::kVertexCap)
        throw ParamError("kneser: C(n,k) exceeds vertex cap");
    auto subsets = k_subsets_lex(p.n, p.k);
    int nv = static_cast<int>(subsets.size());

    // Element-membership masks make the disjointness test a bitwise AND.
    std::vector<Bitset> mask(nv, Bitset(p.n));
    for (int v = 0; v < nv; ++v)
        for (int e : subsets[v]) mask[v].set(e - 1);

    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(nv);
    for (int u = 0; u < nv; ++u) {
        labels[u] = subset_label(subsets[u]);
        for (int v = u + 1; v < nv; ++v)
            if (!mask[u].intersects(mask[v])) edges.emplace_back(u, v);
    }
    return Graph(nv, edges, std::move(labels));
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges, g.labels());
}

Graph line_graph(const Graph& g) {
    auto ge = g.edges();
    int nv = static_cast<int>(ge.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(nv);
    for (int a = 0; a < nv; ++a) {
        labels[a] = "{" + std::to_string(ge[a].first) + "," + std::to_string(ge[a].second) + "}";
        for (int b = a + 1; b < nv; ++b) {
            auto [u1, v1] = ge[a];
            auto [u2, v2] = ge[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) edges.emplace_back(a, b);
        }
    }
    return Graph(nv, edges, std::move(labels));
}

Graph extended_double_cover(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels;
    for (int u = 0; u < n; ++u) edges.emplace_back(u, n + u);
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, n + v);
        edges.emplace_back(v, n + u);
    }
    std::sort(edges.begin(), edges.end());
    if (g.has_labels()) {
        labels.reserve(2 * n);
        for (int u = 0; u < n; ++u) labels.push_back(g.label(u) + "_1");
        for (int u = 0; u < n; ++u) labels.push_back(g.label(u) + "_2");
    }
    return Graph(2 * n, edges, std::move(labels));
}

Graph complete_graph(int n) {
    if (n < 1) throw ParamError("complete graph: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw ParamError("path graph: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw ParamError("cycle graph: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    edges.emplace_back(0, n - 1);
    std::sort(edges.begin(), edges.end());
    return Graph(n, edges);
}

Graph empty_graph(int n) {
    if (n < 0) throw ParamError("empty graph: need n >= 0");
    return Graph(n, {});
}

Graph petersen_graph() { return kneser_graph({2, 5}); }

Graph standard_graph(const std::string& name, int n) {
    if (name == "complete") return complete_graph(n);
    if (name == "path") return path_graph(n);
    if (name == "cycle") return cycle_graph(n);
    if (name == "empty") return empty_graph(n);
    if (name == "petersen") return petersen_graph();
    throw ParamError("standard graph: unknown name '" + name + "'");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int na = a.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(na + u, na + v);
    std::vector<std::string> labels;
    if (a.has_labels() && b.has_labels()) {
        labels = a.labels();
        for (const auto& l : b.labels()) labels.push_back(l + "'");
    }
    return Graph(na + b.vertex_count(), edges, std::move(labels));
}

std::vector<int> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            g.neighbors(u).for_each_set([&](int v) {
                if (comp[v] == -1) {
                    comp[v] = next;
                    stack.push_back(v);
                }
            });
        }
        ++next;
    }
    return comp;
}

}  // namespace boxkit
