#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace bookturan {

// Largest order a Graph may have. This only guards against accidental huge
// allocations; algorithms with tighter limits (canonical forms, exact cuts,
// exhaustive search) enforce their own caps.
inline constexpr int max_graph_order = 16384;

// Undirected graph on vertices 0..n-1, no loops, no parallel edges.
// Adjacency is stored as bit-packed rows (64 vertices per word) so that
// common-neighbor counts and subset tests are word operations. A Graph is
// built with add_edge and treated as immutable afterwards.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    long long edge_count() const { return edges_; }
    int words_per_row() const { return words_; }

    // Adding an existing edge is a no-op; loops and bad indices throw.
    void add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    int count_common_neighbors(int u, int v) const;
    std::vector<int> common_neighbors(int u, int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    const std::uint64_t* row(int v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    long long edges_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace bookturan
