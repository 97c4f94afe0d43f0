#ifndef BOXKIT_PROFILE_HPP
#define BOXKIT_PROFILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "boxkit/combinatorics.hpp"
#include "boxkit/graph.hpp"

namespace boxkit {

// Guardrails for the exhaustive subset searches. max_nodes = 0 disables the
// node cap; jobs > 1 partitions the search on the smallest chosen vertex.
struct ProfileLimits {
    int max_vertices = 40;
    unsigned long long max_nodes = 0;
    int jobs = 1;
};

// The sequence c(1), c(2), ..., where c(i) is the maximum number of common
// neighbors over all i-subsets of vertices. Read as a partition it is
// self-conjugate, which several operations below rely on.
struct CommonNeighborProfile {
    std::vector<long long> values;
    std::string graph_id;
    // True when values run to the first zero entry (or to |V|-1).
    bool complete = false;
};

// Vertices outside s adjacent to every vertex of s; s must be non-empty.
Bitset common_neighbors(const Graph& g, const std::vector<int>& s);

// Exact maximum of |common_neighbors| over all i-subsets, by exhaustive
// enumeration with pruning. Requires 1 <= i <= |V|-1.
long long c_value(const Graph& g, int i, const ProfileLimits& limits = {});

// c(1..max_i); once some c(i) = 0 the remaining entries are zero-filled
// without further search.
CommonNeighborProfile profile(const Graph& g, int max_i, const ProfileLimits& limits = {});

// c(1..m) where m is the first index with c(m) = 0, capped at |V|-1.
CommonNeighborProfile complete_profile(const Graph& g, const ProfileLimits& limits = {});

// Conjugate of a partition given as a non-increasing sequence (trailing
// zeros allowed).
std::vector<long long> conjugate_partition(const std::vector<long long>& part);

// True iff the complete profile, read as a partition, equals its conjugate.
bool check_young_symmetry(const CommonNeighborProfile& p);

// max{i : c(i) >= i}, 0 for the all-zero profile.
long long t_value(const CommonNeighborProfile& p);

// Checks sum_i c(i) == 2*(sum_{i<=t} c(i) - t^2/2) in exact arithmetic.
// Requires a complete, self-conjugate profile.
bool area_identity_check(const CommonNeighborProfile& p);

// floor(C(n-1,k-1)/2); applicable for k >= 2 and n >= 2k^3-2k^2+1.
std::optional<BigInt> t_kneser_closed(const KneserParams& p);

// Largest s such that the graph contains a complete bipartite subgraph with
// two disjoint parts of size s (edges inside the parts are irrelevant).
long long max_balanced_biclique(const Graph& g, const ProfileLimits& limits = {});

// Closed form for c(i) on the complement of a Kneser graph in the regime
// n >= 2k^3-2k^2+1. Indices in the leading region admit only an aggregate
// sum bound, reported as SumBoundRegion; past the midpoint the value is
// completed through conjugate symmetry where the known ranges determine it.
struct CClosedForm {
    enum class Kind { Exact, SumBoundRegion, NotApplicable };
    Kind kind = Kind::NotApplicable;
    BigInt value = 0;

    bool is_exact() const { return kind == Kind::Exact; }
};

CClosedForm c_closed_form_kneser(const KneserParams& p, const BigInt& i);

}  // namespace boxkit

#endif
