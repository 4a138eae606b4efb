#pragma once

#include <string>
#include <vector>

#include "bookturan/cache.hpp"
#include "bookturan/search.hpp"

namespace bookturan {

// Closed-form reproduction checks. Tags name the statement being reproduced:
//   mantel           ex(n, K_3) = floor(n^2/4), unique balanced bipartite graph
//   erdos            non-bipartite triangle-free maximum, floor((n-1)^2/4)+1
//   oddcycle         no odd cycle below 2k+3: floor(n^2/4) for n >= 4k-2, param k
//   oddcycle-nonbip  non-bipartite variant, construction identity only, param k
//   turan            ex(n, K_{r+1}) = e(T_{n,r}), param r
//   brouwer          non-r-partite K_{r+1}-free maximum, param r, n >= 2r+1
//   edwards          ex(n, B_{r+1}) = floor(n^2/4) for n >= 6r, param r
//   book-nonbip      non-bipartite B_{r+1}-free maximum, param r
struct TheoremReport {
    std::string tag;
    int n = 0;
    int param = 0;
    long long formula_value = -1;

    bool searched = false;      // false for construction-identity-only tags
    long long search_value = -1;
    std::vector<std::string> extremal;         // search result, canonical graph6
    std::vector<std::string> expected_family;  // constructed family, canonical graph6
    long long explored = 0;
    bool exact = false;

    bool value_match = false;
    bool family_known = false;  // the statement characterizes the extremal graphs
    bool family_match = false;
    bool family_contained = false;  // expected_family is a subset of extremal
    bool witness_ok = false;  // constructions are feasible and attain the formula

    // MATCH, VALUE-MATCH-ONLY, MISMATCH, or INCONCLUSIVE after a budget cutoff.
    std::string status;
    std::string note;
};

// Runs the comparison for one tag. A cache, when given, short-circuits the
// search on known problems and records fresh exact outcomes.
TheoremReport verify_theorem(const std::string& tag, int n, int param = 0,
                             const SearchOptions& opts = {},
                             SearchCache* cache = nullptr);

const std::vector<std::string>& theorem_tags();

}  // namespace bookturan
