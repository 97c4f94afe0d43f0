#ifndef BOXKIT_EXACTBOX_HPP
#define BOXKIT_EXACTBOX_HPP

#include <optional>
#include <string>
#include <string_view>

#include "boxkit/graph.hpp"
#include "boxkit/intervals.hpp"

namespace boxkit {

struct SearchBudget {
    unsigned long long max_nodes = 100'000'000ULL;
    int max_dimension = 6;
    int max_vertices = 64;
    int jobs = 1;  // > 1 explores root subtrees in parallel
};

// A verified witness that box(G) <= dimension. Minimality is established by
// the solver's exhaustive refusal at dimension-1, not by the type.
struct BoxicityCertificate {
    int dimension = 0;
    Cover cover;
    std::string graph_sha;
};

enum class DecideStatus { Yes, No, Unknown };

struct DecideResult {
    DecideStatus status = DecideStatus::Unknown;
    std::optional<BoxicityCertificate> certificate;  // present iff Yes
    unsigned long long nodes = 0;
};

// Complete search for a family of d interval graphs whose intersection is g.
// Yes comes with a certificate already checked against verify_cover; No is
// exhaustive; Unknown only on node-budget exhaustion.
DecideResult decide_boxicity_leq(const Graph& g, int d, const SearchBudget& budget = {});

struct ExactResult {
    bool exact = false;   // false: value is only a proven lower bound
    int value = 0;
    std::optional<BoxicityCertificate> certificate;
    unsigned long long nodes = 0;
};

// Iterates d = 0, 1, ... up to budget.max_dimension and returns the first
// Yes; on budget exhaustion returns the largest refuted d plus one.
ExactResult exact_boxicity(const Graph& g, const SearchBudget& budget = {});

// Delegates to verify_cover and checks dimension and graph-id consistency.
VerificationReport verify_certificate(const Graph& g, const BoxicityCertificate& cert);

// Certificate JSON: cover fields plus {"graph_sha": hex, "dimension": d}.
std::string write_certificate_json(const BoxicityCertificate& cert);
BoxicityCertificate read_certificate_json(std::string_view bytes);

}  // namespace boxkit

#endif
