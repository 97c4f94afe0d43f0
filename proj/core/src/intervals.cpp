#include "boxkit/intervals.hpp"

#include <algorithm>
#include <limits>

#include <nlohmann/json.hpp>

#include "boxkit/combinatorics.hpp"

namespace boxkit {

void IntervalRep::validate() const {
    for (std::size_t v = 0; v < intervals.size(); ++v)
        if (intervals[v].first > intervals[v].second)
            throw ParamError("interval rep: lo > hi at vertex " + std::to_string(v));
}

void Cover::validate() const {
    if (dimension != static_cast<int>(reps.size()))
        throw ParamError("cover: dimension field does not match rep count");
    for (const auto& r : reps) {
        r.validate();
        if (r.vertex_count() != (reps.empty() ? 0 : reps.front().vertex_count()))
            throw ParamError("cover: reps disagree on vertex count");
    }
}

Graph intersection_graph(const IntervalRep& rep) {
    rep.validate();
    int n = rep.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (intervals_intersect(rep.intervals[u], rep.intervals[v]))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

VerificationReport verify_cover(const Graph& g, const Cover& cover) {
    cover.validate();
    int n = g.vertex_count();
    for (const auto& r : cover.reps)
        if (r.vertex_count() != n)
            throw ParamError("verify_cover: rep vertex count does not match graph");

    VerificationReport rep;
    rep.per_rep_edge_counts.assign(cover.reps.size(), 0);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool separated_somewhere = false;
            for (std::size_t i = 0; i < cover.reps.size(); ++i)
                if (!intervals_intersect(cover.reps[i].intervals[u], cover.reps[i].intervals[v]))
                    separated_somewhere = true;
            if (g.has_edge(u, v)) {
                if (separated_somewhere) rep.extra_complement_edges.emplace_back(u, v);
            } else {
                if (!separated_somewhere) rep.missing_complement_edges.emplace_back(u, v);
            }
        }
    }
    for (std::size_t i = 0; i < cover.reps.size(); ++i) {
        const auto& iv = cover.reps[i].intervals;
        long long cnt = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (intervals_intersect(iv[u], iv[v])) ++cnt;
        rep.per_rep_edge_counts[i] = cnt;
    }
    rep.ok = rep.missing_complement_edges.empty() && rep.extra_complement_edges.empty();
    return rep;
}

// Layout of rep I_i, classified by the intersection of each k-set with
// {i, n-1, n} (b3 = C(n-3,k-3), b2 = C(n-3,k-2), b1 = C(n-3,k-1)):
//
//   {i,n-1,n}  unit intervals [2t, 2t+1],           t = 0..b3-1
//   {i,n}      unit intervals offset by 2*b3,       t = 0..b2-1
//   {i}        unit intervals offset by 2*b3+2*b2,  t = 0..b1-1
//   {i,n-1}    unit intervals offset by 2*b3+2*b2+2*b1, t = 0..b2-1
//   {n-1,n}    one interval spanning the {i} block
//   {n-1}      one interval spanning the {i,n} and {i} blocks
//   {n}        one interval spanning the {i} and {i,n-1} blocks
//   {}         the whole line
//
// Unit intervals are assigned within each group in lexicographic set order.
// Every pair of sets containing i lands on disjoint unit intervals, so I_i
// separates the full clique of the complement induced by element i.
Cover build_upper_cover(const KneserParams& p) {
    if (p.k < 2 || p.n < 2 * p.k + 1)
        throw ParamError("build_upper_cover: need k >= 2 and n >= 2k+1");
    const long long b3 = binom_ll(p.n - 3, p.k - 3);
    const long long b2 = binom_ll(p.n - 3, p.k - 2);
    const long long b1 = binom_ll(p.n - 3, p.k - 1);
    const long long off_in = 2 * b3;             // start of the {i,n} block
    const long long off_i = 2 * b3 + 2 * b2;     // start of the {i} block
    const long long off_in1 = off_i + 2 * b1;    // start of the {i,n-1} block
    const std::pair<long long, long long> span_n1n{off_i, off_in1 - 1};
    const std::pair<long long, long long> span_n1{off_in, off_in1 - 1};
    const std::pair<long long, long long> span_n{off_i, off_in1 + 2 * b2 - 1};

    auto subsets = k_subsets_lex(p.n, p.k);
    int nv = static_cast<int>(subsets.size());

    std::vector<IntervalRep> reps;
    reps.reserve(p.n - 2);
    for (int i = 1; i <= p.n - 2; ++i) {
        IntervalRep rep(nv);
        std::vector<int> whole_line;
        long long t2 = 0, t3 = 0, t4 = 0, t5 = 0;
        long long lo_min = std::numeric_limits<long long>::max();
        long long hi_max = std::numeric_limits<long long>::min();
        for (int v = 0; v < nv; ++v) {
            const auto& s = subsets[v];
            bool has_i = std::binary_search(s.begin(), s.end(), i);
            bool has_n1 = std::binary_search(s.begin(), s.end(), p.n - 1);
            bool has_n = s.back() == p.n;
            std::pair<long long, long long> iv;
            if (!has_i && !has_n1 && !has_n) {
                whole_line.push_back(v);
                continue;
            } else if (has_i && has_n1 && has_n) {
                iv = {2 * t2, 2 * t2 + 1};
                ++t2;
            } else if (has_i && has_n) {
                iv = {off_in + 2 * t3, off_in + 2 * t3 + 1};
                ++t3;
            } else if (has_i && !has_n1) {
                iv = {off_i + 2 * t4, off_i + 2 * t4 + 1};
                ++t4;
            } else if (has_i) {
                iv = {off_in1 + 2 * t5, off_in1 + 2 * t5 + 1};
                ++t5;
            } else if (has_n1 && has_n) {
                iv = span_n1n;
            } else if (has_n1) {
                iv = span_n1;
            } else {
                iv = span_n;
            }
            rep.intervals[v] = iv;
            lo_min = std::min(lo_min, iv.first);
            hi_max = std::max(hi_max, iv.second);
        }
        if (t2 != b3 || t3 != b2 || t4 != b1 || t5 != b2)
            throw ParamError("build_upper_cover: internal group count mismatch");
        // b1 >= 1 whenever k >= 2 and n >= 2k+1, so finite endpoints exist.
        for (int v : whole_line) rep.intervals[v] = {lo_min - 1, hi_max + 1};
        reps.push_back(std::move(rep));
    }
    return Cover(std::move(reps));
}

bool is_interval_rep_of(const Graph& g, const IntervalRep& rep) {
    if (rep.vertex_count() != g.vertex_count())
        throw ParamError("is_interval_rep_of: vertex count mismatch");
    return same_structure(intersection_graph(rep), g);
}

using json = nlohmann::ordered_json;

std::string write_cover_json(const Cover& c) {
    json j;
    j["dimension"] = c.dimension;
    json reps = json::array();
    for (const auto& r : c.reps) {
        json intervals = json::array();
        for (auto [lo, hi] : r.intervals) intervals.push_back(json::array({lo, hi}));
        reps.push_back(json{{"intervals", std::move(intervals)}});
    }
    j["reps"] = std::move(reps);
    return j.dump(2) + "\n";
}

Cover read_cover_json(std::string_view bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("cover json: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("dimension") || !j.contains("reps"))
        throw ParseError("cover json: expected object with 'dimension' and 'reps'");
    Cover c;
    c.dimension = j["dimension"].get<int>();
    for (const auto& jr : j["reps"]) {
        if (!jr.contains("intervals")) throw ParseError("cover json: rep without 'intervals'");
        IntervalRep r;
        for (const auto& iv : jr["intervals"]) {
            if (!iv.is_array() || iv.size() != 2)
                throw ParseError("cover json: interval must be [lo, hi]");
            r.intervals.emplace_back(iv[0].get<long long>(), iv[1].get<long long>());
        }
        c.reps.push_back(std::move(r));
    }
    try {
        c.validate();
    } catch (const ParamError& e) {
        throw ParseError(std::string("cover json: ") + e.what());
    }
    return c;
}

}  // namespace boxkit
