#ifndef BOXKIT_BOUNDS_HPP
#define BOXKIT_BOUNDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boxkit/combinatorics.hpp"
#include "boxkit/exactbox.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/profile.hpp"

namespace boxkit {

struct BoundEntry {
    enum class Kind { Lower, Upper, Exact };
    Kind kind;
    long long value;
    std::string source;
    bool applicable;
};

struct BoundInput {
    std::string kind;  // "kneser-params" or "graph"
    int k = 0, n = 0;
    std::string graph_sha;
    int vertices = 0;
};

// Aggregated bounds with provenance. best_lower/best_upper cover applicable
// entries only; a crossing pair (lower > upper) is a bug and raises.
struct BoundReport {
    BoundInput input;
    std::vector<BoundEntry> bounds;
    std::optional<long long> best_lower;
    std::optional<long long> best_upper;

    void add(BoundEntry::Kind kind, long long value, std::string source, bool applicable);
    void finalize();  // computes best_lower/best_upper, checks consistency
};

// |E(g^c)| / sum_i c(i, g^c) as an exact rational; its ceiling bounds the
// boxicity from below. complement_profile must be the complete profile of
// complement(g). Complete graphs are rejected (their boxicity is 0).
Rational acs_lower_bound(const Graph& g, const CommonNeighborProfile& complement_profile);

// n - 2 for k >= 2, n >= 2k+1.
std::optional<long long> kneser_upper_bound(const KneserParams& p);

// n - (13k^2 - 11k + 16)/2, exact (the numerator is always even); applicable
// for n >= 2k^3 - 2k^2 + 1. May be negative, in which case it is vacuous.
std::optional<BigInt> kneser_lower_bound_closed(const KneserParams& p);

// Bounds for the complement of the line graph H = L(g). For max degree >= 3
// the report holds the degree-split lower bounds and the n-2 upper bound;
// for max degree <= 2 the exact value sum_components ceil(|E(H_i)|/3) is
// recorded as both lower and upper.
BoundReport linegraph_complement_bounds(const Graph& g);

// Upper bound for sum_i c(i, L(g)): 12 (delta 3), 16 (delta 4),
// delta(delta+3)/2 (delta >= 5).
std::optional<long long> c_sum_upper_linegraph(long long delta);

// (n-3, n-2) for n >= 5: the two possible boxicity values of Kn(2,n).
std::optional<std::pair<long long, long long>> kneser2_range(long long n);

struct PosetBound {
    Rational value;
    std::string source;
};

// Lower bounds through the extended-double-cover / poset-dimension route:
// (n-2k-1)/2 for 2k+1 <= n <= 3k+1, (n-k-4)/2 for n >= 3k+2.
std::vector<PosetBound> poset_remark_bounds(const KneserParams& p);

// k^2 * C(n-3,k-3) * C(n-1,k-1): aggregate bound on the leading profile
// region sum; applicable for k >= 2, n >= 2k^3 - 2k^2 + 1.
std::optional<BigInt> range0_sum_bound(const KneserParams& p);

struct BoundOptions {
    bool with_profile = false;  // add the ratio bound from a computed profile
    bool with_exact = false;    // add the exact value from the search engine
    ProfileLimits limits{};
    SearchBudget budget{};
};

BoundReport bound_report(const KneserParams& p, const BoundOptions& opt = {});
BoundReport bound_report(const Graph& g, const BoundOptions& opt = {});

std::string write_bound_report_json(const BoundReport& r);

}  // namespace boxkit

#endif
