#include "boxkit/exactbox.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <deque>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "boxkit/sha256.hpp"

namespace boxkit {

namespace {

using u64 = std::uint64_t;

// Per-dimension state of the interval-order search. For every dimension t
// and ordered pair (u,v), req holds committed "interval of u lies entirely
// left of interval of v" facts and forb holds pairs that may never become
// left-of (edges of g, reverses of commitments, the diagonal). Propagation
// keeps the committed relation closed under the interval-order axiom
//   B(a,b) and B(c,d)  =>  B(a,d) or B(c,b)
// whenever one side of the disjunction is forbidden; transitivity is the
// c = b case because the diagonal is forbidden.
struct State {
    std::vector<u64> req;   // d * n rows
    std::vector<u64> forb;  // d * n rows
    std::vector<std::uint8_t> satisfied;
    int unsatisfied = 0;
};

enum class SubResult { Found, Exhausted, Aborted };

constexpr int kMaxDim = 15;

class Solver {
public:
    Solver(const Graph& g, int d, const SearchBudget& budget)
        : g_(g), n_(g.vertex_count()), d_(d), budget_(budget) {
        adj_.assign(n_, 0);
        for (int u = 0; u < n_; ++u)
            g.neighbors(u).for_each_set([&](int v) { adj_[u] |= bit(v); });
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!g.has_edge(u, v)) non_edges_.emplace_back(u, v);
    }

    DecideResult run() {
        DecideResult out;
        if (non_edges_.empty()) {
            out.status = DecideStatus::Yes;
            out.certificate = trivial_certificate();
            out.nodes = 0;
            return out;
        }
        if (d_ == 0) {
            out.status = DecideStatus::No;
            out.nodes = 0;
            return out;
        }

        State root = initial_state();
        SubResult r;
        if (budget_.jobs > 1)
            r = run_parallel(std::move(root));
        else
            r = dfs(std::move(root));

        out.nodes = nodes_.load();
        if (found_.load()) {
            out.status = DecideStatus::Yes;
            std::lock_guard<std::mutex> lk(cert_mutex_);
            out.certificate = certificate_;
        } else if (r == SubResult::Aborted) {
            out.status = DecideStatus::Unknown;
        } else {
            out.status = DecideStatus::No;
        }
        return out;
    }

private:
    static u64 bit(int v) { return u64(1) << v; }

    u64& req(State& s, int t, int v) const { return s.req[std::size_t(t) * n_ + v]; }
    u64& forb(State& s, int t, int v) const { return s.forb[std::size_t(t) * n_ + v]; }
    u64 req(const State& s, int t, int v) const { return s.req[std::size_t(t) * n_ + v]; }
    u64 forb(const State& s, int t, int v) const { return s.forb[std::size_t(t) * n_ + v]; }

    State initial_state() const {
        State s;
        s.req.assign(std::size_t(d_) * n_, 0);
        s.forb.assign(std::size_t(d_) * n_, 0);
        for (int t = 0; t < d_; ++t)
            for (int v = 0; v < n_; ++v) forb(s, t, v) = adj_[v] | bit(v);
        s.satisfied.assign(non_edges_.size(), 0);
        s.unsatisfied = static_cast<int>(non_edges_.size());
        return s;
    }

    bool dim_used(const State& s, int t) const {
        for (int v = 0; v < n_; ++v)
            if (req(s, t, v)) return true;
        return false;
    }

    // Commits B_t(u,v) and propagates the axiom to fixpoint. Returns false
    // on contradiction.
    bool commit(State& s, int t, int u, int v) const {
        if (req(s, t, u) & bit(v)) return true;
        if (forb(s, t, u) & bit(v)) return false;
        std::vector<std::array<int, 3>> queue{{t, u, v}};
        req(s, t, u) |= bit(v);
        forb(s, t, v) |= bit(u);
        while (!queue.empty()) {
            auto [tq, a, b] = queue.back();
            queue.pop_back();
            if (!propagate_one(s, tq, a, b, queue)) return false;
        }
        return true;
    }

    bool enqueue(State& s, std::vector<std::array<int, 3>>& queue, int t, int p,
                 int q) const {
        if (req(s, t, p) & bit(q)) return true;
        if (forb(s, t, p) & bit(q)) return false;
        req(s, t, p) |= bit(q);
        forb(s, t, q) |= bit(p);
        queue.push_back({t, p, q});
        return true;
    }

    // One committed pair (a,b) in dimension t: derive every conclusion the
    // axiom forces against existing pairs, both through the new premise and
    // through the forbid of (b,a) it introduces.
    bool propagate_one(State& s, int t, int a, int b,
                       std::vector<std::array<int, 3>>& queue) const {
        // New premise (a,b) against every premise (c,d): need (a,d) or (c,b).
        for (int c = 0; c < n_; ++c) {
            u64 row = req(s, t, c);
            while (row) {
                int d = std::countr_zero(row);
                row &= row - 1;
                bool have1 = req(s, t, a) & bit(d);
                bool have2 = req(s, t, c) & bit(b);
                if (have1 || have2) continue;
                bool f1 = forb(s, t, a) & bit(d);
                bool f2 = forb(s, t, c) & bit(b);
                if (f1 && f2) return false;
                if (f1 && !enqueue(s, queue, t, c, b)) return false;
                if (f2 && !enqueue(s, queue, t, a, d)) return false;
            }
        }
        // New forbid (b,a) against premise pairs (b,y), (x,a): need (x,y).
        u64 rowb = req(s, t, b);
        if (rowb) {
            for (int x = 0; x < n_; ++x) {
                if (!(req(s, t, x) & bit(a))) continue;
                u64 ys = rowb;
                while (ys) {
                    int y = std::countr_zero(ys);
                    ys &= ys - 1;
                    if (req(s, t, x) & bit(y)) continue;
                    if (!enqueue(s, queue, t, x, y)) return false;
                }
            }
        }
        return true;
    }

    struct Options {
        int count = 0;
        std::array<std::array<int, 3>, 2 * kMaxDim + 1> opt;  // (t, from, to)
    };

    Options feasible_options(const State& s, int u, int v) const {
        Options o;
        bool fresh_added = false;
        for (int t = 0; t < d_; ++t) {
            if (dim_used(s, t)) {
                if (!(forb(s, t, u) & bit(v))) o.opt[o.count++] = {t, u, v};
                if (!(forb(s, t, v) & bit(u))) o.opt[o.count++] = {t, v, u};
            } else if (!fresh_added) {
                // Unused dimensions are interchangeable and reversal-symmetric:
                // only the lowest one, with a pinned orientation, is tried.
                o.opt[o.count++] = {t, u, v};
                fresh_added = true;
            }
        }
        return o;
    }

    // Marks separated non-edges, commits forced single-option ones, and
    // returns the branching candidate (fewest options) if any remain.
    // Result: -2 contradiction, -1 all satisfied, else candidate index.
    int simplify(State& s, Options& branch_options) const {
        for (;;) {
            bool changed = false;
            int best_idx = -1;
            Options best_opts;
            for (std::size_t e = 0; e < non_edges_.size(); ++e) {
                if (s.satisfied[e]) continue;
                auto [u, v] = non_edges_[e];
                bool sep = false;
                for (int t = 0; t < d_ && !sep; ++t)
                    if ((req(s, t, u) & bit(v)) || (req(s, t, v) & bit(u))) sep = true;
                if (sep) {
                    s.satisfied[e] = 1;
                    --s.unsatisfied;
                    continue;
                }
                Options o = feasible_options(s, u, v);
                if (o.count == 0) return -2;
                if (o.count == 1) {
                    auto [t, x, y] = o.opt[0];
                    if (!commit(s, t, x, y)) return -2;
                    s.satisfied[e] = 1;
                    --s.unsatisfied;
                    changed = true;
                    break;  // state moved; rescan from the start
                }
                if (best_idx < 0 || o.count < best_opts.count) {
                    best_idx = static_cast<int>(e);
                    best_opts = o;
                }
            }
            if (changed) continue;
            if (s.unsatisfied == 0) return -1;
            branch_options = best_opts;
            return best_idx;
        }
    }

    // Looks for an axiom instance whose disjunction is still open. Returns
    // 0 none (state is an interval order per dimension), -1 contradiction,
    // 1 found with both conclusions open (out_p/out_q), 2 forced a commit.
    int closure_scan(State& s, std::array<int, 3>& out_p, std::array<int, 3>& out_q) const {
        for (int t = 0; t < d_; ++t) {
            std::vector<std::pair<int, int>> pairs;
            for (int a = 0; a < n_; ++a) {
                u64 row = req(s, t, a);
                while (row) {
                    int b = std::countr_zero(row);
                    row &= row - 1;
                    pairs.emplace_back(a, b);
                }
            }
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                for (std::size_t j = i + 1; j < pairs.size(); ++j) {
                    auto [a, b] = pairs[i];
                    auto [c, d] = pairs[j];
                    if (req(s, t, a) & bit(d)) continue;
                    if (req(s, t, c) & bit(b)) continue;
                    bool f1 = forb(s, t, a) & bit(d);
                    bool f2 = forb(s, t, c) & bit(b);
                    if (f1 && f2) return -1;
                    if (f1) {
                        if (!commit(s, t, c, b)) return -1;
                        return 2;
                    }
                    if (f2) {
                        if (!commit(s, t, a, d)) return -1;
                        return 2;
                    }
                    out_p = {t, a, d};
                    out_q = {t, c, b};
                    return 1;
                }
            }
        }
        return 0;
    }

    SubResult dfs(State s) {
        if (found_.load(std::memory_order_relaxed)) return SubResult::Exhausted;
        if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_.max_nodes)
            return SubResult::Aborted;

        Options opts;
        int pick = simplify(s, opts);
        if (pick == -2) return SubResult::Exhausted;
        if (pick >= 0) return branch_all(s, opts);

        // Every non-edge is witnessed; resolve remaining open disjunctions.
        for (;;) {
            std::array<int, 3> p{}, q{};
            int r = closure_scan(s, p, q);
            if (r == -1) return SubResult::Exhausted;
            if (r == 2) continue;
            if (r == 0) {
                record_solution(s);
                return SubResult::Found;
            }
            Options two;
            two.count = 2;
            two.opt[0] = p;
            two.opt[1] = q;
            return branch_all(s, two);
        }
    }

    SubResult branch_all(const State& s, const Options& opts) {
        bool aborted = false;
        for (int i = 0; i < opts.count; ++i) {
            auto [t, x, y] = opts.opt[i];
            State child = s;
            if (!commit(child, t, x, y)) continue;
            SubResult r = dfs(std::move(child));
            if (r == SubResult::Found) return r;
            if (r == SubResult::Aborted) aborted = true;
            if (found_.load(std::memory_order_relaxed)) return SubResult::Found;
        }
        return aborted ? SubResult::Aborted : SubResult::Exhausted;
    }

    // Frontier split: expand the decision tree breadth-first until there are
    // enough independent subtrees, then let workers exhaust them.
    SubResult run_parallel(State root) {
        std::deque<State> frontier;
        frontier.push_back(std::move(root));
        const std::size_t target = static_cast<std::size_t>(budget_.jobs) * 8;
        bool aborted = false;
        while (!frontier.empty() && frontier.size() < target) {
            State s = std::move(frontier.front());
            frontier.pop_front();
            if (nodes_.fetch_add(1, std::memory_order_relaxed) >= budget_.max_nodes) {
                aborted = true;
                break;
            }
            Options opts;
            int pick = simplify(s, opts);
            if (pick == -2) continue;
            if (pick == -1) {
                // Rare at this depth: finish the subtree inline.
                SubResult r = dfs(std::move(s));
                if (r == SubResult::Found) return r;
                if (r == SubResult::Aborted) aborted = true;
                continue;
            }
            for (int i = 0; i < opts.count; ++i) {
                auto [t, x, y] = opts.opt[i];
                State child = s;
                if (commit(child, t, x, y)) frontier.push_back(std::move(child));
            }
        }
        if (frontier.empty() || found_.load())
            return found_.load() ? SubResult::Found
                                 : (aborted ? SubResult::Aborted : SubResult::Exhausted);

        std::vector<State> work(std::make_move_iterator(frontier.begin()),
                                std::make_move_iterator(frontier.end()));
        std::atomic<std::size_t> next{0};
        std::atomic<bool> any_abort{aborted};
        std::vector<std::thread> threads;
        int jobs = std::max(1, budget_.jobs);
        for (int t = 0; t < jobs; ++t) {
            threads.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < work.size();
                     i = next.fetch_add(1)) {
                    if (found_.load(std::memory_order_relaxed)) return;
                    SubResult r = dfs(work[i]);
                    if (r == SubResult::Aborted) any_abort.store(true);
                    if (r == SubResult::Found) return;
                }
            });
        }
        for (auto& th : threads) th.join();
        if (found_.load()) return SubResult::Found;
        return any_abort.load() ? SubResult::Aborted : SubResult::Exhausted;
    }

    // Canonical realization of an interval order: the down-sets form a chain;
    // the left endpoint is the rank of the down-set, the right endpoint one
    // less than the smallest left endpoint among successors.
    IntervalRep realize_dim(const State& s, int t) const {
        std::vector<u64> down(n_, 0);
        for (int u = 0; u < n_; ++u) {
            u64 row = req(s, t, u);
            while (row) {
                int v = std::countr_zero(row);
                row &= row - 1;
                down[v] |= bit(u);
            }
        }
        std::vector<u64> distinct(down);
        std::sort(distinct.begin(), distinct.end(),
                  [](u64 a, u64 b) { return std::popcount(a) < std::popcount(b); });
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::size_t i = 1; i < distinct.size(); ++i)
            if (distinct[i - 1] & ~distinct[i])
                throw std::logic_error("exactbox: down-sets do not form a chain");
        auto rank = [&](u64 dset) {
            return static_cast<long long>(
                std::find(distinct.begin(), distinct.end(), dset) - distinct.begin());
        };
        long long m = static_cast<long long>(distinct.size());
        IntervalRep rep(n_);
        std::vector<long long> lo(n_);
        for (int v = 0; v < n_; ++v) lo[v] = rank(down[v]);
        for (int v = 0; v < n_; ++v) {
            long long hi = m;
            u64 ups = req(s, t, v);
            while (ups) {
                int w = std::countr_zero(ups);
                ups &= ups - 1;
                hi = std::min(hi, lo[w] - 1);
            }
            rep.intervals[v] = {lo[v], hi};
        }
        return rep;
    }

    void record_solution(const State& s) {
        std::vector<IntervalRep> reps;
        reps.reserve(d_);
        for (int t = 0; t < d_; ++t) reps.push_back(realize_dim(s, t));
        BoxicityCertificate cert{d_, Cover(std::move(reps)), g_.content_hash()};
        VerificationReport vr = verify_cover(g_, cert.cover);
        if (!vr.ok) throw std::logic_error("exactbox: realized cover failed verification");
        std::lock_guard<std::mutex> lk(cert_mutex_);
        if (!found_.load()) {
            certificate_ = std::move(cert);
            found_.store(true);
        }
    }

    BoxicityCertificate trivial_certificate() const {
        std::vector<IntervalRep> reps(d_, IntervalRep(n_));
        for (auto& r : reps)
            for (auto& iv : r.intervals) iv = {0, 1};
        return BoxicityCertificate{d_, Cover(std::move(reps)), g_.content_hash()};
    }

    const Graph& g_;
    int n_, d_;
    SearchBudget budget_;
    std::vector<u64> adj_;
    std::vector<std::pair<int, int>> non_edges_;
    std::atomic<unsigned long long> nodes_{0};
    std::atomic<bool> found_{false};
    std::mutex cert_mutex_;
    BoxicityCertificate certificate_;
};

}  // namespace

DecideResult decide_boxicity_leq(const Graph& g, int d, const SearchBudget& budget) {
    if (d < 0) throw ParamError("decide_boxicity_leq: negative dimension");
    if (d > kMaxDim)
        throw ParamError("decide_boxicity_leq: engine supports dimension <= " +
                         std::to_string(kMaxDim));
    if (g.vertex_count() > budget.max_vertices)
        throw ParamError("decide_boxicity_leq: vertex count exceeds cap " +
                         std::to_string(budget.max_vertices));
    if (g.vertex_count() > 64)
        throw ParamError("decide_boxicity_leq: engine is limited to 64 vertices");
    Solver solver(g, d, budget);
    return solver.run();
}

ExactResult exact_boxicity(const Graph& g, const SearchBudget& budget) {
    ExactResult out;
    for (int d = 0; d <= budget.max_dimension; ++d) {
        DecideResult r = decide_boxicity_leq(g, d, budget);
        out.nodes += r.nodes;
        if (r.status == DecideStatus::Yes) {
            out.exact = true;
            out.value = d;
            out.certificate = std::move(r.certificate);
            return out;
        }
        if (r.status == DecideStatus::Unknown) {
            out.exact = false;
            out.value = d;  // every dimension below d was refuted
            return out;
        }
    }
    out.exact = false;
    out.value = budget.max_dimension + 1;
    return out;
}

VerificationReport verify_certificate(const Graph& g, const BoxicityCertificate& cert) {
    if (cert.dimension != cert.cover.dimension)
        throw ParamError("verify_certificate: dimension fields disagree");
    if (!cert.graph_sha.empty() && cert.graph_sha != g.content_hash())
        throw ParamError("verify_certificate: certificate was built for a different graph");
    return verify_cover(g, cert.cover);
}

using json = nlohmann::ordered_json;

std::string write_certificate_json(const BoxicityCertificate& cert) {
    json j;
    j["dimension"] = cert.dimension;
    json reps = json::array();
    for (const auto& r : cert.cover.reps) {
        json intervals = json::array();
        for (auto [lo, hi] : r.intervals) intervals.push_back(json::array({lo, hi}));
        reps.push_back(json{{"intervals", std::move(intervals)}});
    }
    j["reps"] = std::move(reps);
    j["graph_sha"] = cert.graph_sha;
    return j.dump(2) + "\n";
}

BoxicityCertificate read_certificate_json(std::string_view bytes) {
    json j;
    try {
        j = json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("certificate json: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("dimension") || !j.contains("reps") ||
        !j.contains("graph_sha"))
        throw ParseError("certificate json: expected 'dimension', 'reps', 'graph_sha'");
    BoxicityCertificate cert;
    cert.dimension = j["dimension"].get<int>();
    cert.graph_sha = j["graph_sha"].get<std::string>();
    Cover c;
    c.dimension = cert.dimension;
    for (const auto& jr : j["reps"]) {
        IntervalRep r;
        for (const auto& iv : jr["intervals"])
            r.intervals.emplace_back(iv[0].get<long long>(), iv[1].get<long long>());
        c.reps.push_back(std::move(r));
    }
    try {
        c.validate();
    } catch (const ParamError& e) {
        throw ParseError(std::string("certificate json: ") + e.what());
    }
    cert.cover = std::move(c);
    return cert;
}

}  // namespace boxkit
