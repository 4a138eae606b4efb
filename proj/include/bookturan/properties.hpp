#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bookturan/graph.hpp"

namespace bookturan {

// Exact k-colorability is exponential in the worst case; keep it to sizes
// where the backtracking always finishes instantly.
inline constexpr int max_colorable_order = 32;

// Largest number of triangles sharing a single edge (0 when there is no
// edge). A graph has no book with r+1 pages iff booksize <= r.
int booksize(const Graph& g);
bool is_book_free(const Graph& g, int r);

struct BipartiteCheck {
    bool bipartite = false;
    // Valid 2-coloring when bipartite.
    std::vector<std::uint8_t> side;
    // Closed walk with an odd number of edges (first == last) otherwise.
    std::vector<int> odd_closed_walk;
};
BipartiteCheck is_bipartite(const Graph& g);

// Length of a shortest odd cycle; nullopt for bipartite graphs.
std::optional<int> odd_girth(const Graph& g);

// Vertex sequence of a shortest odd cycle, lexicographically smallest over
// all starts and directions; nullopt for bipartite graphs.
std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g);

bool contains_clique(const Graph& g, int q);

// Largest q <= cap with a q-clique present.
int max_clique_size_upto(const Graph& g, int cap);

struct ColoringCheck {
    bool colorable = false;
    std::vector<int> colors;
};
ColoringCheck is_k_colorable(const Graph& g, int k);

// Witness validators, used by tests and reports.
bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int k);
bool is_odd_closed_walk(const Graph& g, const std::vector<int>& walk);
bool is_cycle(const Graph& g, const std::vector<int>& cycle);

}  // namespace bookturan
