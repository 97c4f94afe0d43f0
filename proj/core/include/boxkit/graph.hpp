#ifndef BOXKIT_GRAPH_HPP
#define BOXKIT_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "boxkit/bitset.hpp"
#include "boxkit/errors.hpp"

namespace boxkit {

// Undirected simple graph on labeled vertices, adjacency kept as bit rows.
// Immutable after construction; transformations return new graphs.
class Graph {
public:
    static constexpr int kVertexCap = 1 << 20;

    Graph() : n_(0), m_(0) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }
    const Bitset& neighbors(int v) const { return adj_[v]; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[v]; }

    std::vector<std::pair<int, int>> edges() const;  // lexicographic, u < v
    int max_degree() const;
    bool is_complete() const { return m_ == static_cast<long long>(n_) * (n_ - 1) / 2; }

    // Structural identity only: vertex count and edge set, labels excluded.
    std::string content_hash() const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && adj_ == o.adj_ && labels_ == o.labels_;
    }

private:
    int n_;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
    long long m_;
};

inline bool same_structure(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    for (int v = 0; v < a.vertex_count(); ++v)
        if (!(a.neighbors(v) == b.neighbors(v))) return false;
    return true;
}

struct KneserParams {
    int k = 0;
    int n = 0;
};

// Throws ParamError unless k >= 1 and n >= 2k.
void validate_kneser_params(const KneserParams& p);

// Vertices are the k-subsets of {1..n} in lexicographic order (the canonical
// vertex-id contract); edges join disjoint subsets; labels are the subsets.
Graph kneser_graph(const KneserParams& p);

Graph complement(const Graph& g);

// Vertices are the edges of g in lexicographic endpoint order; adjacency is
// sharing an endpoint; labels name the endpoint pairs.
Graph line_graph(const Graph& g);

// Two vertex copies V1, V2; u1 ~ v2 iff u == v or uv is an edge of g.
Graph extended_double_cover(const Graph& g);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph empty_graph(int n);
Graph petersen_graph();

// name in {complete, path, cycle, empty, petersen}; n ignored for petersen.
Graph standard_graph(const std::string& name, int n = 0);

Graph disjoint_union(const Graph& a, const Graph& b);

// Component id per vertex, ids assigned in order of first appearance.
std::vector<int> connected_components(const Graph& g);

}  // namespace boxkit

#endif
