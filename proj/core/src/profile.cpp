#include "boxkit/profile.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace boxkit {

Bitset common_neighbors(const Graph& g, const std::vector<int>& s) {
    if (s.empty()) throw ParamError("common_neighbors: empty vertex set");
    int n = g.vertex_count();
    for (int v : s)
        if (v < 0 || v >= n) throw ParamError("common_neighbors: vertex out of range");
    Bitset r = g.neighbors(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) r &= g.neighbors(s[i]);
    // Members of s are never their own neighbors, so r excludes s already.
    return r;
}

namespace {

struct SubsetSearch {
    const Graph& g;
    int target;  // subset size
    unsigned long long max_nodes;
    std::atomic<long long>& best;
    std::atomic<unsigned long long>& nodes;
    std::vector<Bitset> layer;  // preallocated running intersections

    SubsetSearch(const Graph& g_, int target_, unsigned long long max_nodes_,
                 std::atomic<long long>& best_, std::atomic<unsigned long long>& nodes_)
        : g(g_), target(target_), max_nodes(max_nodes_), best(best_), nodes(nodes_) {
        layer.assign(target + 1, Bitset(g.vertex_count()));
    }

    void bump_best(long long cnt) {
        long long cur = best.load(std::memory_order_relaxed);
        while (cnt > cur && !best.compare_exchange_weak(cur, cnt, std::memory_order_relaxed)) {
        }
    }

    // Extend the current subset (size depth, intersection layer[depth]) with
    // vertices from `from` upward. The intersection only shrinks, so any
    // branch whose running count cannot beat `best` is cut.
    void rec(int from, int depth, int count) {
        if (max_nodes && nodes.fetch_add(1, std::memory_order_relaxed) >= max_nodes)
            throw BudgetError("subset search: node budget exhausted");
        if (depth == target) {
            bump_best(count);
            return;
        }
        int n = g.vertex_count();
        for (int v = from; v <= n - (target - depth); ++v) {
            Bitset::and_into(layer[depth + 1], layer[depth], g.neighbors(v));
            int c2 = layer[depth + 1].count();
            if (c2 > best.load(std::memory_order_relaxed)) rec(v + 1, depth + 1, c2);
        }
    }

    // As rec, but fixing the smallest vertex; used to partition across jobs.
    void run_from_root(int v0) {
        Bitset::and_into(layer[1], layer[0], g.neighbors(v0));
        int c = layer[1].count();
        if (c > best.load(std::memory_order_relaxed)) rec(v0 + 1, 1, c);
    }
};

void check_limits(const Graph& g, const ProfileLimits& limits, const char* who) {
    if (g.vertex_count() > limits.max_vertices)
        throw BudgetError(std::string(who) + ": vertex count " +
                          std::to_string(g.vertex_count()) + " exceeds cap " +
                          std::to_string(limits.max_vertices));
}

long long c_value_impl(const Graph& g, int i, const ProfileLimits& limits) {
    int n = g.vertex_count();
    std::atomic<long long> best{0};
    std::atomic<unsigned long long> nodes{0};
    int jobs = std::max(1, limits.jobs);
    if (jobs == 1) {
        SubsetSearch s(g, i, limits.max_nodes, best, nodes);
        s.layer[0].set_all();
        s.rec(0, 0, n);
        return best.load();
    }
    std::atomic<int> next_root{0};
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    for (int t = 0; t < jobs; ++t) {
        threads.emplace_back([&, t] {
            try {
                SubsetSearch s(g, i, limits.max_nodes, best, nodes);
                s.layer[0].set_all();
                for (int v0 = next_root.fetch_add(1); v0 <= n - i;
                     v0 = next_root.fetch_add(1))
                    s.run_from_root(v0);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return best.load();
}

}  // namespace

long long c_value(const Graph& g, int i, const ProfileLimits& limits) {
    if (i < 1 || i > g.vertex_count() - 1)
        throw ParamError("c_value: index must satisfy 1 <= i <= |V|-1");
    check_limits(g, limits, "c_value");
    return c_value_impl(g, i, limits);
}

CommonNeighborProfile profile(const Graph& g, int max_i, const ProfileLimits& limits) {
    if (max_i < 1 || max_i > g.vertex_count() - 1)
        throw ParamError("profile: max_i must satisfy 1 <= max_i <= |V|-1");
    check_limits(g, limits, "profile");
    CommonNeighborProfile p;
    p.graph_id = g.content_hash();
    bool zero = false;
    for (int i = 1; i <= max_i; ++i) {
        long long c = zero ? 0 : c_value_impl(g, i, limits);
        if (c == 0) zero = true;  // c is non-increasing
        p.values.push_back(c);
    }
    p.complete = zero || max_i == g.vertex_count() - 1;
    return p;
}

CommonNeighborProfile complete_profile(const Graph& g, const ProfileLimits& limits) {
    check_limits(g, limits, "profile");
    CommonNeighborProfile p;
    p.graph_id = g.content_hash();
    p.complete = true;
    for (int i = 1; i <= g.vertex_count() - 1; ++i) {
        long long c = c_value_impl(g, i, limits);
        p.values.push_back(c);
        if (c == 0) break;
    }
    return p;
}

std::vector<long long> conjugate_partition(const std::vector<long long>& part) {
    long long width = part.empty() ? 0 : part.front();
    std::vector<long long> conj(static_cast<std::size_t>(width), 0);
    for (long long j = 1; j <= width; ++j)
        conj[j - 1] = static_cast<long long>(
            std::count_if(part.begin(), part.end(), [&](long long v) { return v >= j; }));
    return conj;
}

namespace {

std::vector<long long> strip_zeros(const std::vector<long long>& v) {
    std::vector<long long> out(v);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

void require_complete(const CommonNeighborProfile& p, const char* who) {
    if (!p.complete) throw ParamError(std::string(who) + ": profile is not complete");
}

}  // namespace

bool check_young_symmetry(const CommonNeighborProfile& p) {
    require_complete(p, "check_young_symmetry");
    auto part = strip_zeros(p.values);
    return conjugate_partition(part) == part;
}

long long t_value(const CommonNeighborProfile& p) {
    require_complete(p, "t_value");
    long long t = 0;
    for (std::size_t i = 0; i < p.values.size(); ++i)
        if (p.values[i] >= static_cast<long long>(i + 1)) t = static_cast<long long>(i + 1);
    return t;
}

bool area_identity_check(const CommonNeighborProfile& p) {
    if (!check_young_symmetry(p))
        throw ParamError("area_identity_check: profile is not self-conjugate");
    long long t = t_value(p);
    long long total = 0, head = 0;
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        total += p.values[i];
        if (static_cast<long long>(i + 1) <= t) head += p.values[i];
    }
    // total == 2*(head - t^2/2), cleared of the half to stay integral.
    return total == 2 * head - t * t;
}

std::optional<BigInt> t_kneser_closed(const KneserParams& p) {
    long long k = p.k, n = p.n;
    if (k < 2 || n < 2 * k * k * k - 2 * k * k + 1) return std::nullopt;
    return binom(n - 1, k - 1) / 2;
}

long long max_balanced_biclique(const Graph& g, const ProfileLimits& limits) {
    check_limits(g, limits, "max_balanced_biclique");
    // K_{s,s} with parts A, B exists iff some |A| = s has |N(A)| >= s,
    // i.e. c(s) >= s; c(s) - s is strictly decreasing, so scan upward.
    int n = g.vertex_count();
    long long s = 0;
    for (int i = 1; i <= n / 2; ++i) {
        if (c_value_impl(g, i, limits) < i) break;
        s = i;
    }
    return s;
}

CClosedForm c_closed_form_kneser(const KneserParams& p, const BigInt& i) {
    long long k = p.k, n = p.n;
    CClosedForm out;
    if (k < 2 || n < 2 * k * k * k - 2 * k * k + 1 || i < 1) return out;

    const BigInt D = binom(n - 2, k - 2);
    const BigInt E = binom(n - 2 - k, k - 2);
    const BigInt F = binom(n - 1, k - 1);
    const BigInt H = binom(n - 1 - k, k - 1);
    const BigInt P = (k - 1) * (k - 1) * binom(n - 3, k - 2);
    const BigInt t = F / 2;

    if (i <= D - E) {
        out.kind = CClosedForm::Kind::SumBoundRegion;
        return out;
    }
    if (i <= D) {
        out.kind = CClosedForm::Kind::Exact;
        out.value = 2 * F - D - i;
        return out;
    }
    if (i <= F - H) {
        out.kind = CClosedForm::Kind::Exact;
        out.value = F - i + P;
        return out;
    }
    if (i <= t) {
        out.kind = CClosedForm::Kind::Exact;
        out.value = F - i;
        return out;
    }

    // Past the midpoint, self-conjugacy gives c(i) = #{j <= t : c(j) >= i}.
    // Count per closed-form range; the ranges have decreasing values, so each
    // contributes a prefix.
    auto range_count = [&](const BigInt& lo, const BigInt& hi,
                           const BigInt& last_ok) -> BigInt {
        // #{j in [lo, hi] : j <= last_ok}
        BigInt upper = std::min(hi, last_ok);
        if (upper < lo) return 0;
        return upper - lo + 1;
    };
    BigInt count = 0;
    count += range_count(D - E + 1, D, 2 * F - D - i);  // c(j) = 2F - D - j >= i
    count += range_count(D + 1, F - H, F + P - i);      // c(j) = F + P - j >= i
    count += range_count(F - H + 1, t, F - i);          // c(j) = F - j >= i
    if (D - E >= 1) {
        // Leading region: c(1) = C(n,k) - C(n-k,k) - 1 is known exactly, the
        // rest of the region only via the aggregate sum bound.
        const BigInt c1 = binom(n, k) - binom(n - k, k) - 1;
        const BigInt c_first = 2 * F - 2 * D + E - 1;  // value at j = D-E+1
        if (i <= c_first) {
            count += D - E;  // every leading j qualifies by monotonicity
        } else if (i <= c1) {
            if (D - E == 1) {
                count += 1;  // only j = 1 in the region, and c(1) >= i
            } else {
                out.kind = CClosedForm::Kind::SumBoundRegion;
                return out;  // depends on per-j values with no closed form
            }
        }
        // i > c1: no leading j qualifies.
    }
    out.kind = CClosedForm::Kind::Exact;
    out.value = count;
    return out;
}

}  // namespace boxkit
