#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bookturan/graph.hpp"

namespace bookturan {

// Hard cap for the exhaustive solver. Runs stay comfortable through n = 10
// for the booksize problems; beyond the cap the per-level dictionaries blow
// up no matter how the pruning is tuned.
inline constexpr int max_search_order = 14;

// The brute-force oracle enumerates every labeled graph, so it stops at 7
// (2^21 graphs).
inline constexpr int max_oracle_order = 7;

struct SearchProblem {
    int n = 0;
    std::optional<int> max_booksize;           // booksize(G) <= r
    std::optional<int> forbid_clique;          // no K_q subgraph
    std::optional<int> min_odd_girth;          // no odd cycle shorter than g
    bool require_non_bipartite = false;
    std::optional<int> require_non_k_partite;  // not k-colorable

    // Throws std::invalid_argument unless well formed. At least one of the
    // forbidden-structure constraints must be present (otherwise the maximum
    // is trivially the complete graph), and non-bipartiteness needs n >= 3.
    void validate() const;

    // Canonical serialization; also the cache key.
    std::string key() const;
};

struct SearchOptions {
    long long budget = 0;  // expansion-step limit, 0 = unlimited
    int threads = 1;
};

struct SearchOutcome {
    // Maximum edge count, or -1 when no graph satisfies the constraints.
    // After a budget cutoff this is only the best known lower bound.
    long long max_edges = -1;
    std::vector<std::string> extremal;  // canonical graph6, sorted
    long long explored = 0;             // distinct isomorphism classes touched
    double elapsed_seconds = 0.0;
    bool exact = false;                 // false after a budget cutoff
};

// Checks every constraint of the problem against a concrete graph.
bool satisfies(const Graph& g, const SearchProblem& p);

// Exact maximum and the complete list of extremal graphs up to isomorphism.
// Generation adds one vertex per level with isomorph rejection; the
// downward-closed constraints (booksize, clique, odd girth) prune during
// generation while non-bipartiteness and non-k-partiteness are filtered on
// the completed graphs. The enumeration is a second pass at the optimum
// found by the first.
SearchOutcome solve(const SearchProblem& p, const SearchOptions& opts = {});

// Independent check: enumerate all labeled graphs on n <= 7 vertices, filter
// by constraints, deduplicate the winners by certificate. Shares no search
// machinery with solve.
SearchOutcome naive_oracle(const SearchProblem& p);

}  // namespace bookturan
