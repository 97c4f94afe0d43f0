#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "boxkit/bounds.hpp"
#include "boxkit/exactbox.hpp"
#include "boxkit/graph.hpp"
#include "boxkit/profile.hpp"

using namespace boxkit;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Recover the left-of relation of one rep and check the interval-order
// axioms directly on the certificate.
void check_interval_order_axioms(const IntervalRep& rep) {
    int n = rep.vertex_count();
    auto before = [&](int u, int v) {
        return rep.intervals[u].second < rep.intervals[v].first;
    };
    for (int a = 0; a < n; ++a) {
        CHECK(!before(a, a));
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (before(a, b) && before(b, c)) CHECK(before(a, c));
                for (int d = 0; d < n; ++d)
                    if (before(a, b) && before(c, d))
                        CHECK((before(a, d) || before(c, b)));
            }
    }
}

}  // namespace

TEST_CASE("complete graphs have boxicity zero") {
    for (int n = 1; n <= 10; n += 3) {
        ExactResult r = exact_boxicity(complete_graph(n));
        CHECK(r.exact);
        CHECK(r.value == 0);
        REQUIRE(r.certificate.has_value());
        CHECK(r.certificate->cover.dimension == 0);
        CHECK(verify_certificate(complete_graph(n), *r.certificate).ok);
    }
    DecideResult d0 = decide_boxicity_leq(complete_graph(5), 0);
    CHECK(d0.status == DecideStatus::Yes);
}

TEST_CASE("interval graphs have boxicity one") {
    ExactResult p4 = exact_boxicity(path_graph(4));
    CHECK(p4.exact);
    CHECK(p4.value == 1);
    CHECK(verify_certificate(path_graph(4), *p4.certificate).ok);

    ExactResult e = exact_boxicity(empty_graph(4));
    CHECK(e.value == 1);
}

TEST_CASE("C4 needs two dimensions") {
    Graph c4 = cycle_graph(4);
    CHECK(decide_boxicity_leq(c4, 0).status == DecideStatus::No);
    CHECK(decide_boxicity_leq(c4, 1).status == DecideStatus::No);
    DecideResult d2 = decide_boxicity_leq(c4, 2);
    REQUIRE(d2.status == DecideStatus::Yes);
    CHECK(verify_certificate(c4, *d2.certificate).ok);

    ExactResult ex = exact_boxicity(c4);
    CHECK(ex.exact);
    CHECK(ex.value == 2);
}

TEST_CASE("monotonicity: a yes at d stays a yes at d+1") {
    for (const Graph& g : {cycle_graph(4), path_graph(5), cycle_graph(5)}) {
        ExactResult ex = exact_boxicity(g);
        REQUIRE(ex.exact);
        for (int d = ex.value; d <= ex.value + 2; ++d) {
            DecideResult r = decide_boxicity_leq(g, d);
            CHECK(r.status == DecideStatus::Yes);
            CHECK(verify_certificate(g, *r.certificate).ok);
        }
    }
}

TEST_CASE("petersen graph: dimension 3 certificate, dimension 1 refused") {
    Graph pet = petersen_graph();
    CHECK(decide_boxicity_leq(pet, 1).status == DecideStatus::No);
    DecideResult d3 = decide_boxicity_leq(pet, 3);
    REQUIRE(d3.status == DecideStatus::Yes);
    CHECK(verify_certificate(pet, *d3.certificate).ok);
    for (const auto& rep : d3.certificate->cover.reps) check_interval_order_axioms(rep);
}

TEST_CASE("complement of the line graph of C6 has boxicity 2") {
    Graph h = complement(line_graph(cycle_graph(6)));
    ExactResult r = exact_boxicity(h);
    CHECK(r.exact);
    CHECK(r.value == 2);  // ceil(6/3) from the path/cycle formula
}

TEST_CASE("independent certificate: the constructed cover certifies petersen") {
    Graph pet = kneser_graph({2, 5});
    BoxicityCertificate cert;
    cert.dimension = 3;
    cert.cover = build_upper_cover({2, 5});
    cert.graph_sha = pet.content_hash();
    CHECK(verify_certificate(pet, cert).ok);
}

TEST_CASE("bogus certificates are rejected or fail verification") {
    Graph c4 = cycle_graph(4);
    BoxicityCertificate claim;
    claim.dimension = 1;
    IntervalRep rep(4);
    rep.intervals = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    claim.cover = Cover(std::vector<IntervalRep>{rep});
    claim.graph_sha = c4.content_hash();
    CHECK(!verify_certificate(c4, claim).ok);

    claim.graph_sha = path_graph(4).content_hash();
    CHECK_THROWS_AS(verify_certificate(c4, claim), ParamError);

    claim.graph_sha = c4.content_hash();
    claim.dimension = 2;  // disagrees with the cover
    CHECK_THROWS_AS(verify_certificate(c4, claim), ParamError);
}

TEST_CASE("certificate json round trip") {
    DecideResult d2 = decide_boxicity_leq(cycle_graph(4), 2);
    REQUIRE(d2.status == DecideStatus::Yes);
    BoxicityCertificate back = read_certificate_json(write_certificate_json(*d2.certificate));
    CHECK(back.dimension == d2.certificate->dimension);
    CHECK(back.graph_sha == d2.certificate->graph_sha);
    CHECK(verify_certificate(cycle_graph(4), back).ok);

    CHECK_THROWS_AS(read_certificate_json("{}"), ParseError);
}

TEST_CASE("budget exhaustion reports unknown, never a wrong answer") {
    SearchBudget tiny;
    tiny.max_nodes = 3;
    DecideResult r = decide_boxicity_leq(petersen_graph(), 2, tiny);
    CHECK(r.status == DecideStatus::Unknown);

    ExactResult ex = exact_boxicity(petersen_graph(), tiny);
    CHECK(!ex.exact);
    CHECK(ex.value <= 3);  // a lower bound, proven dimensions only
}

TEST_CASE("dimension cap turns into a lower bound") {
    SearchBudget shallow;
    shallow.max_dimension = 1;
    ExactResult r = exact_boxicity(cycle_graph(4), shallow);
    CHECK(!r.exact);
    CHECK(r.value == 2);
}

TEST_CASE("parallel and sequential modes agree on the decision") {
    SearchBudget par;
    par.jobs = 4;
    for (const Graph& g : {cycle_graph(4), petersen_graph(), path_graph(6),
                           complement(line_graph(cycle_graph(6)))}) {
        for (int d = 0; d <= 3; ++d) {
            DecideResult seq = decide_boxicity_leq(g, d);
            DecideResult pll = decide_boxicity_leq(g, d, par);
            CHECK(seq.status == pll.status);
            if (pll.status == DecideStatus::Yes)
                CHECK(verify_certificate(g, *pll.certificate).ok);
        }
    }
}

TEST_CASE("random small graphs: solver agrees with the ratio bound") {
    std::mt19937 rng(99);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(4 + t % 5, 0.2 + 0.15 * (t % 5), rng);
        ExactResult ex = exact_boxicity(g);
        REQUIRE(ex.exact);
        if (ex.value > 0) {
            REQUIRE(ex.certificate.has_value());
            CHECK(verify_certificate(g, *ex.certificate).ok);
            for (const auto& rep : ex.certificate->cover.reps)
                check_interval_order_axioms(rep);
        }
        if (!g.is_complete()) {
            CommonNeighborProfile p = complete_profile(complement(g));
            CHECK(BigInt(ex.value) >= ceil_rational(acs_lower_bound(g, p)));
        }
    }
}

TEST_CASE("engine guardrails") {
    CHECK_THROWS_AS(decide_boxicity_leq(cycle_graph(4), -1), ParamError);
    SearchBudget cap;
    cap.max_vertices = 3;
    CHECK_THROWS_AS(decide_boxicity_leq(cycle_graph(4), 2, cap), ParamError);
}
