#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bookturan/graph.hpp"

namespace bookturan {

// floor(x^2/4), the balanced-bipartition edge count that the extremal
// formulas below are built from.
constexpr long long floor_quarter_square(long long x) { return x * x / 4; }

// Complete k-partite graph on n vertices with part sizes as equal as
// possible; the first n mod k parts get the extra vertex, parts are laid out
// contiguously starting at vertex 0.
Graph turan_graph(int n, int k);
long long turan_edge_count(long long n, int k);

// Balanced complete bipartite graph on n-3 vertices plus a path x-y-z glued
// on: x is joined to a nonempty proper piece of the larger side, y to the
// rest of that side, z to all of the smaller side. Triangle-free,
// non-bipartite, floor((n-1)^2/4)+1 edges. Layout: smaller side first, then
// the larger side, then x, y, z.
Graph g0_c3(int n, int t1_size);

// Balanced complete bipartite graph on n-3 vertices plus a triangle x-y-z:
// z is joined to a piece of each side (the pieces' sizes multiply to at most
// 1), x to the rest of the smaller side, y to the rest of the larger side.
// Booksize 1, non-bipartite, floor((n-1)^2/4)+2 edges. Layout as in g0_c3.
Graph g1_b2(int n, int s1_size, int t1_size);

// Complete bipartite graph with sides floor((n-1)/2) and ceil((n-1)/2) plus
// a hub vertex adjacent to r vertices on each side. Booksize exactly r,
// non-bipartite, floor((n-1)^2/4)+2r edges. Hub is the last vertex.
Graph krr_graph(int n, int r);

// Balanced complete bipartite graph on n-2 vertices with a triangle hung on
// vertex 0 (a vertex of the larger side): floor((n-2)^2/4)+3 edges.
Graph turan_dot_c3(int n);

// Every member of the family at order n up to isomorphism (both ways of
// assigning the two sides, all valid piece sizes), deduplicated by
// certificate and sorted by it. Requires n <= 64.
std::vector<Graph> enumerate_g0_c3(int n);
std::vector<Graph> enumerate_g1_b2(int n);

// One-line description of a constructible graph, e.g. "krr n=9 r=2".
struct FamilySpec {
    enum class Kind { turan, g0c3, g1b2, krr, turan_dot_c3 };

    Kind kind = Kind::turan;
    int n = 0;
    int k = 2;
    int r = 1;
    int s1 = 0;
    int t1 = 0;

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
    Graph build() const;
};

}  // namespace bookturan
