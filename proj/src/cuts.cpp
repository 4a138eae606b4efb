#include "bookturan/cuts.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace bookturan {

CutPartition make_cut(const Graph& g, std::vector<std::uint8_t> side) {
    if (static_cast<int>(side.size()) != g.order())
        throw std::invalid_argument("make_cut: side assignment has wrong length");
    CutPartition cut;
    cut.side = std::move(side);
    for (auto [u, v] : g.edges()) {
        if (cut.side[u] != cut.side[v])
            ++cut.crossing;
        else if (cut.side[u] == 0)
            ++cut.internal_s;
        else
            ++cut.internal_t;
    }
    return cut;
}

CutPartition max_cut_exact(const Graph& g) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("max_cut_exact: need at least one vertex");
    if (n > max_exact_cut_order) throw std::invalid_argument("max_cut_exact limited to 28 vertices");

    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[v] = g.row(v)[0];

    const std::uint64_t full = (n == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    std::uint64_t mask_t = 0;  // vertex set on side T; vertex 0 stays in S
    long long internal = g.edge_count();
    long long best_internal = internal;
    std::uint64_t best_mask = 0;

    const std::uint64_t steps = std::uint64_t(1) << (n - 1);
    for (std::uint64_t i = 1; i < steps; ++i) {
        const int v = std::countr_zero(i) + 1;
        const std::uint64_t bit = std::uint64_t(1) << v;
        const std::uint64_t mask_s = full & ~mask_t;
        const long long to_t = std::popcount(adj[v] & mask_t);
        const long long to_s = std::popcount(adj[v] & mask_s);
        // Moving v to the other side turns its same-side edges into crossing
        // ones and vice versa.
        internal += (mask_t & bit) ? (to_s - to_t) : (to_t - to_s);
        mask_t ^= bit;
        if (internal < best_internal) {
            best_internal = internal;
            best_mask = mask_t;
        }
    }

    std::vector<std::uint8_t> side(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) side[v] = (best_mask >> v) & 1;
    return make_cut(g, std::move(side));
}

namespace {

void hill_climb(const Graph& g, std::vector<std::uint8_t>& side) {
    const int n = g.order();
    std::vector<long long> same(static_cast<std::size_t>(n), 0);
    std::vector<long long> cross(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : g.edges()) {
        if (side[u] == side[v]) {
            ++same[u];
            ++same[v];
        } else {
            ++cross[u];
            ++cross[v];
        }
    }
    bool improved = true;
    while (improved) {
        improved = false;
        for (int v = 0; v < n; ++v) {
            if (same[v] <= cross[v]) continue;
            for (int u : g.neighbors(v)) {
                if (side[u] == side[v]) {
                    --same[u];
                    ++cross[u];
                } else {
                    ++same[u];
                    --cross[u];
                }
            }
            std::swap(same[v], cross[v]);
            side[v] ^= 1;
            improved = true;
        }
    }
}

}  // namespace

CutPartition cut_local_search(const Graph& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint8_t> side(static_cast<std::size_t>(g.order()));
    for (auto& s : side) s = static_cast<std::uint8_t>(rng() & 1);
    hill_climb(g, side);
    return make_cut(g, std::move(side));
}

CutPartition cut_natural(const Graph& g) {
    const int n = g.order();
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (depth[s] >= 0) continue;
        depth[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u))
                if (depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                }
        }
    }
    std::vector<std::uint8_t> side(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) side[v] = static_cast<std::uint8_t>(depth[v] & 1);
    hill_climb(g, side);
    return make_cut(g, std::move(side));
}

}  // namespace bookturan
