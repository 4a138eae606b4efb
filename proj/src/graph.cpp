#include "bookturan/graph.hpp"

#include <bit>
#include <stdexcept>

namespace bookturan {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    if (n > max_graph_order) throw std::invalid_argument("graph order exceeds supported maximum");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    std::uint64_t* ru = bits_.data() + static_cast<std::size_t>(u) * words_;
    if ((ru[v >> 6] >> (v & 63)) & 1) return;
    ru[v >> 6] |= std::uint64_t(1) << (v & 63);
    std::uint64_t* rv = bits_.data() + static_cast<std::size_t>(v) * words_;
    rv[u >> 6] |= std::uint64_t(1) << (u & 63);
    ++edges_;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[v >> 6] >> (v & 63)) & 1;
}

int Graph::degree(int v) const {
    check_vertex(v);
    const std::uint64_t* r = row(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::count_common_neighbors(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const std::uint64_t* ru = row(u);
    const std::uint64_t* rv = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(ru[w] & rv[w]);
    return c;
}

std::vector<int> Graph::common_neighbors(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const std::uint64_t* ru = row(u);
    const std::uint64_t* rv = row(v);
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = ru[w] & rv[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    const std::uint64_t* r = row(v);
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edges_));
    for (int u = 0; u < n_; ++u) {
        const std::uint64_t* r = row(u);
        for (int w = (u + 1) >> 6; w < words_; ++w) {
            std::uint64_t bits = r[w];
            if (w == (u + 1) >> 6 && ((u + 1) & 63) != 0)
                bits &= ~std::uint64_t(0) << ((u + 1) & 63);
            while (bits) {
                out.emplace_back(u, w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }
    return out;
}

}  // namespace bookturan
