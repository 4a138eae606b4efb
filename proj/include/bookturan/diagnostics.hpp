#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bookturan/cuts.hpp"
#include "bookturan/graph.hpp"

namespace bookturan {

// Exact decimal fraction num / den with den a power of ten, so threshold
// comparisons never hinge on floating-point rounding.
struct DecimalRational {
    long long num = 0;
    long long den = 1;
    std::string text;  // original spelling, kept for reports

    // Accepts plain and scientific decimals ("0.0001", "6e-5", "1.25E-3").
    // Throws std::invalid_argument on junk or on values needing more than
    // 18 significant digits or a shift beyond 10^18.
    static DecimalRational parse(const std::string& s);

    double value() const;
};

struct EpsilonParams {
    DecimalRational eps;  // must be positive
    int r = 1;
};

// max{60 r sqrt(eps), 90 sqrt(eps)} < 1, decided exactly by squaring.
bool epsilon_ok(int r, const DecimalRational& eps);
bool epsilon_ok(const EpsilonParams& params);

// L: vertices of degree at most (1/2 - 4 sqrt(eps)) n.
std::vector<int> low_degree_set(const Graph& g, const EpsilonParams& params);

struct InternalDegreeSets {
    std::vector<int> w1;  // from side S
    std::vector<int> w2;  // from side T
    std::vector<int> w;   // union
};

// W1 and W2: vertices with at least (7/2) sqrt(eps) n neighbors on their own
// side of the cut.
InternalDegreeSets internal_degree_sets(const Graph& g, const CutPartition& cut,
                                        const EpsilonParams& params);

struct ContainmentReport {
    int n = 0;
    int r = 1;
    std::string eps_text;

    bool cut_exact = false;  // exact solver, or the best of seeded local search
    CutPartition cut;
    long long internal_edges = 0;
    bool internal_within_cap = false;  // e(S)+e(T) <= eps n^2

    std::vector<int> low_degree;     // L
    InternalDegreeSets internal_sets;
    bool w_subset_l = false;

    // Odd-cycle checks; meaningless when the graph is bipartite.
    bool bipartite = false;
    std::vector<int> cycle;  // shortest odd cycle witness
    bool cycle_is_triangle = false;
    bool l_subset_cycle = false;

    // Leftover side vertices S \ (L u W) and T \ (L u W).
    std::vector<int> s_rest, t_rest;
};

// Evaluates the cut, degree-set and containment checks on a concrete graph.
// A failed check on a small or non-extremal graph is expected output, not an
// error. The seed feeds the local-search restarts used beyond the exact-cut
// cap. Throws std::invalid_argument when the params are not admissible.
ContainmentReport containment_report(const Graph& g, const EpsilonParams& params,
                                     std::uint64_t seed = 1);

// Sum of sizes minus (k-1) times the universe, floored at zero: a lower
// bound for the intersection of k sets inside the universe.
long long intersection_lower_bound(const std::vector<long long>& sizes,
                                   long long universe);

struct StructureReport {
    int n = 0;
    int r = 1;

    std::vector<int> cycle;  // chosen shortest odd cycle
    bool cycle_is_triangle = false;
    bool rest_bipartite = false;   // G* = G minus the cycle
    bool labeling_found = false;   // N_{G*}(w1) in S*, N_{G*}(w2) in T*
    std::array<int, 3> w{-1, -1, -1};

    long long s_size = 0, t_size = 0;  // |S*|, |T*|
    long long s_sum = 0, t_sum = 0;    // d_{S*}(w1)+d_{S*}(w3), d_{T*}(w2)+d_{T*}(w3)
    bool s_equal = false, t_equal = false;      // sum == size + r - 1
    bool s_at_most = false, t_at_most = false;  // sum <= size + r - 1
    bool rest_is_balanced_bipartite = false;    // G* complete bipartite, balanced

    std::string note;
};

// Removes a shortest odd cycle, bipartitions the remainder and checks the
// degree-sum equalities against |S*|+r-1 and |T*|+r-1. The claims hold for a
// particular cycle and labeling of the extremal structure, so all triangles,
// part orientations and labelings are tried and a passing configuration is
// preferred. Throws std::invalid_argument on bipartite input or order above
// the certificate cap.
StructureReport extremal_structure_report(const Graph& g, int r);

}  // namespace bookturan
