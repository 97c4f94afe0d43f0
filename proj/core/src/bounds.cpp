#include "boxkit/bounds.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

namespace boxkit {

void BoundReport::add(BoundEntry::Kind kind, long long value, std::string source,
                      bool applicable) {
    bounds.push_back(BoundEntry{kind, value, std::move(source), applicable});
}

void BoundReport::finalize() {
    best_lower.reset();
    best_upper.reset();
    for (const auto& b : bounds) {
        if (!b.applicable) continue;
        if (b.kind == BoundEntry::Kind::Lower)
            best_lower = std::max(best_lower.value_or(b.value), b.value);
        if (b.kind == BoundEntry::Kind::Upper)
            best_upper = std::min(best_upper.value_or(b.value), b.value);
    }
    if (best_lower) best_lower = std::max(*best_lower, 0LL);
    // A crossing is a bug somewhere upstream, never silently clamped.
    if (best_lower && best_upper && *best_lower > *best_upper)
        throw std::logic_error("bound report: lower bound " + std::to_string(*best_lower) +
                               " exceeds upper bound " + std::to_string(*best_upper));
    for (const auto& b : bounds) {
        if (!b.applicable || b.kind != BoundEntry::Kind::Exact) continue;
        if ((best_lower && b.value < *best_lower) || (best_upper && b.value > *best_upper))
            throw std::logic_error("bound report: exact value " + std::to_string(b.value) +
                                   " escapes [lower, upper]");
    }
}

Rational acs_lower_bound(const Graph& g, const CommonNeighborProfile& complement_profile) {
    if (g.is_complete())
        throw ParamError("acs_lower_bound: not applicable to complete graphs (boxicity 0)");
    if (!complement_profile.complete)
        throw ParamError("acs_lower_bound: profile of the complement must be complete");
    long long n = g.vertex_count();
    BigInt complement_edges = BigInt(n) * (n - 1) / 2 - g.edge_count();
    BigInt denom = 0;
    for (long long c : complement_profile.values) denom += c;
    if (denom == 0)
        throw std::logic_error("acs_lower_bound: zero profile sum for a non-complete graph");
    return Rational(complement_edges, denom);
}

std::optional<long long> kneser_upper_bound(const KneserParams& p) {
    if (p.k < 2 || p.n < 2 * p.k + 1) return std::nullopt;
    return static_cast<long long>(p.n) - 2;
}

std::optional<BigInt> kneser_lower_bound_closed(const KneserParams& p) {
    long long k = p.k, n = p.n;
    if (k < 2 || n < 2 * k * k * k - 2 * k * k + 1) return std::nullopt;
    BigInt num = 13 * k * k - 11 * k + 16;
    if (num % 2 != 0)
        throw std::logic_error("kneser_lower_bound_closed: 13k^2-11k+16 must be even");
    return BigInt(n) - num / 2;
}

std::optional<long long> c_sum_upper_linegraph(long long delta) {
    if (delta < 3) return std::nullopt;
    if (delta == 3) return 12;
    if (delta == 4) return 16;
    return delta * (delta + 3) / 2;
}

std::optional<std::pair<long long, long long>> kneser2_range(long long n) {
    if (n < 5) return std::nullopt;
    return std::make_pair(n - 3, n - 2);
}

std::vector<PosetBound> poset_remark_bounds(const KneserParams& p) {
    if (p.k < 2 || p.n < 2 * p.k + 1)
        throw ParamError("poset_remark_bounds: need k >= 2 and n >= 2k+1");
    std::vector<PosetBound> out;
    long long k = p.k, n = p.n;
    if (n <= 3 * k + 1)
        out.push_back({Rational(n - 2 * k - 1, 2), "double-cover-poset-near"});
    else
        out.push_back({Rational(n - k - 4, 2), "double-cover-poset-far"});
    return out;
}

std::optional<BigInt> range0_sum_bound(const KneserParams& p) {
    long long k = p.k, n = p.n;
    if (k < 2 || n < 2 * k * k * k - 2 * k * k + 1) return std::nullopt;
    return BigInt(k) * k * binom(n - 3, k - 3) * binom(n - 1, k - 1);
}

BoundReport linegraph_complement_bounds(const Graph& g) {
    BoundReport r;
    Graph h = line_graph(g);
    r.input.kind = "graph";
    r.input.graph_sha = complement(h).content_hash();
    r.input.vertices = h.vertex_count();

    long long delta = g.max_degree();
    long long m = h.edge_count();
    long long n = g.vertex_count();

    if (delta <= 2) {
        // Disjoint paths and cycles: the boxicity of the complement is the
        // sum of ceil(|E(H_i)|/3) over components of H.
        auto comp = connected_components(h);
        std::map<int, long long> comp_edges;
        for (auto [u, v] : h.edges()) comp_edges[comp[u]] += 1;
        long long exact = 0;
        for (auto [c, e] : comp_edges) exact += (e + 2) / 3;
        r.add(BoundEntry::Kind::Exact, exact, "path-cycle-exact", true);
        r.finalize();
        return r;
    }

    r.add(BoundEntry::Kind::Upper, n - 2, "linegraph-upper", true);
    if (delta == 3)
        r.add(BoundEntry::Kind::Lower, (m + 11) / 12, "linegraph-delta3", true);
    else if (delta == 4)
        r.add(BoundEntry::Kind::Lower, (m + 15) / 16, "linegraph-delta4", true);
    else
        r.add(BoundEntry::Kind::Lower,
              static_cast<long long>(ceil_div(2 * BigInt(m), BigInt(delta) * (delta + 3))),
              "linegraph-delta5plus", true);
    r.finalize();
    return r;
}

namespace {

void add_kneser_formula_bounds(BoundReport& r, const KneserParams& p) {
    if (auto up = kneser_upper_bound(p))
        r.add(BoundEntry::Kind::Upper, *up, "kneser-cover-upper", true);
    if (auto lo = kneser_lower_bound_closed(p)) {
        long long v = static_cast<long long>(*lo);
        r.add(BoundEntry::Kind::Lower, v, "kneser-closed-lower", v >= 1);
    }
    if (p.k == 2) {
        if (auto range = kneser2_range(p.n))
            r.add(BoundEntry::Kind::Lower, range->first, "kneser2-range-lower", true);
    }
    if (p.k >= 2 && p.n >= 2 * p.k + 1) {
        for (const auto& pb : poset_remark_bounds(p)) {
            long long v = static_cast<long long>(ceil_rational(pb.value));
            r.add(BoundEntry::Kind::Lower, v, pb.source, v >= 1);
        }
    }
}

void add_graph_bounds(BoundReport& r, const Graph& g, const BoundOptions& opt) {
    if (opt.with_profile && !g.is_complete()) {
        CommonNeighborProfile p = complete_profile(complement(g), opt.limits);
        Rational ratio = acs_lower_bound(g, p);
        long long v = static_cast<long long>(ceil_rational(ratio));
        r.add(BoundEntry::Kind::Lower, v, "neighborhood-ratio", v >= 1);
    }
    if (opt.with_exact) {
        ExactResult ex = exact_boxicity(g, opt.budget);
        if (ex.exact)
            r.add(BoundEntry::Kind::Exact, ex.value, "exact-search", true);
        else
            r.add(BoundEntry::Kind::Lower, ex.value, "exact-search-partial", ex.value >= 1);
    }
}

}  // namespace

BoundReport bound_report(const KneserParams& p, const BoundOptions& opt) {
    validate_kneser_params(p);
    BoundReport r;
    r.input.kind = "kneser-params";
    r.input.k = p.k;
    r.input.n = p.n;
    if (p.k == 1) {
        // Complete graph: boxicity 0 by convention.
        r.add(BoundEntry::Kind::Exact, 0, "complete-graph", true);
        r.finalize();
        return r;
    }
    add_kneser_formula_bounds(r, p);
    if (opt.with_profile || opt.with_exact) {
        Graph g = kneser_graph(p);
        r.input.vertices = g.vertex_count();
        r.input.graph_sha = g.content_hash();
        add_graph_bounds(r, g, opt);
    }
    r.finalize();
    return r;
}

BoundReport bound_report(const Graph& g, const BoundOptions& opt) {
    BoundReport r;
    r.input.kind = "graph";
    r.input.graph_sha = g.content_hash();
    r.input.vertices = g.vertex_count();
    if (g.is_complete()) {
        r.add(BoundEntry::Kind::Exact, 0, "complete-graph", true);
        r.finalize();
        return r;
    }
    add_graph_bounds(r, g, opt);
    r.finalize();
    return r;
}

using json = nlohmann::ordered_json;

std::string write_bound_report_json(const BoundReport& r) {
    json j;
    json input;
    input["kind"] = r.input.kind;
    if (r.input.kind == "kneser-params") {
        input["k"] = r.input.k;
        input["n"] = r.input.n;
    }
    if (!r.input.graph_sha.empty()) input["graph_sha"] = r.input.graph_sha;
    if (r.input.vertices) input["vertices"] = r.input.vertices;
    j["input"] = std::move(input);
    json bounds = json::array();
    for (const auto& b : r.bounds) {
        const char* kind = b.kind == BoundEntry::Kind::Lower   ? "lower"
                           : b.kind == BoundEntry::Kind::Upper ? "upper"
                                                               : "exact";
        bounds.push_back(json{{"kind", kind},
                              {"value", b.value},
                              {"source", b.source},
                              {"applicable", b.applicable}});
    }
    j["bounds"] = std::move(bounds);
    if (r.best_lower) j["best_lower"] = *r.best_lower;
    if (r.best_upper) j["best_upper"] = *r.best_upper;
    return j.dump(2) + "\n";
}

}  // namespace boxkit
