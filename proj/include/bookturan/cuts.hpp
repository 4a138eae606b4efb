#pragma once

#include <cstdint>
#include <vector>

#include "bookturan/graph.hpp"

namespace bookturan {

// The exhaustive cut sweep walks all 2^(n-1) side assignments.
inline constexpr int max_exact_cut_order = 28;

struct CutPartition {
    std::vector<std::uint8_t> side;  // 0 = S, 1 = T
    long long internal_s = 0;        // edges inside S
    long long internal_t = 0;        // edges inside T
    long long crossing = 0;          // internal_s + internal_t + crossing == e(G)

    long long internal() const { return internal_s + internal_t; }
};

// Classifies every edge for a given side assignment.
CutPartition make_cut(const Graph& g, std::vector<std::uint8_t> side);

// Best cut by exhaustive sweep (vertex 0 pinned to S, Gray-code order,
// first optimum kept). Requires 1 <= n <= 28.
CutPartition max_cut_exact(const Graph& g);

// Single-vertex-move hill climbing from a seeded random start.
// Deterministic for a fixed seed.
CutPartition cut_local_search(const Graph& g, std::uint64_t seed);

// Single-vertex-move hill climbing from the breadth-first layer-parity
// start; reaches the natural bipartition on bipartite graphs.
CutPartition cut_natural(const Graph& g);

}  // namespace bookturan
