#ifndef BOXKIT_INTERVALS_HPP
#define BOXKIT_INTERVALS_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boxkit/graph.hpp"

namespace boxkit {

// One closed integer interval per vertex: a single dimension of a box
// representation. A vertex meant to span the whole line is stored with
// concrete endpoints strictly outside every finite endpoint of the rep.
struct IntervalRep {
    std::vector<std::pair<long long, long long>> intervals;

    IntervalRep() = default;
    explicit IntervalRep(int n) : intervals(n, {0, 0}) {}

    int vertex_count() const { return static_cast<int>(intervals.size()); }
    void validate() const;  // lo <= hi for every vertex
};

// Ordered list of interval representations over a common vertex set.
struct Cover {
    int dimension = 0;
    std::vector<IntervalRep> reps;

    Cover() = default;
    explicit Cover(std::vector<IntervalRep> r)
        : dimension(static_cast<int>(r.size())), reps(std::move(r)) {}
    void validate() const;  // dimension == reps.size(), equal vertex counts
};

struct VerificationReport {
    bool ok = false;
    // Non-edges of the target graph separated by no rep.
    std::vector<std::pair<int, int>> missing_complement_edges;
    // Edges of the target graph separated by some rep.
    std::vector<std::pair<int, int>> extra_complement_edges;
    std::vector<long long> per_rep_edge_counts;
};

inline bool intervals_intersect(std::pair<long long, long long> a,
                                std::pair<long long, long long> b) {
    return a.first <= b.second && b.first <= a.second;
}

Graph intersection_graph(const IntervalRep& rep);

// ok iff every edge of g intersects in all reps and every non-edge is
// separated in at least one rep. Violation lists are exhaustive, sorted
// lexicographically. An empty cover realizes the complete graph.
VerificationReport verify_cover(const Graph& g, const Cover& cover);

// The explicit construction of n-2 interval representations covering the
// complement of the Kneser graph. Requires k >= 2 and n >= 2k+1.
Cover build_upper_cover(const KneserParams& p);

bool is_interval_rep_of(const Graph& g, const IntervalRep& rep);

// Cover JSON: {"dimension": d, "reps": [{"intervals": [[lo,hi],...]}]}
std::string write_cover_json(const Cover& c);
Cover read_cover_json(std::string_view bytes);

}  // namespace boxkit

#endif
