#include "bookturan/properties.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace bookturan {

int booksize(const Graph& g) {
    int best = 0;
    for (auto [u, v] : g.edges()) best = std::max(best, g.count_common_neighbors(u, v));
    return best;
}

bool is_book_free(const Graph& g, int r) {
    if (r < 0) throw std::invalid_argument("is_book_free: negative booksize bound");
    for (auto [u, v] : g.edges())
        if (g.count_common_neighbors(u, v) > r) return false;
    return true;
}

BipartiteCheck is_bipartite(const Graph& g) {
    const int n = g.order();
    BipartiteCheck res;
    res.side.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (depth[s] >= 0) continue;
        depth[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    res.side[v] = static_cast<std::uint8_t>(depth[v] & 1);
                    queue.push_back(v);
                } else if (((depth[u] ^ depth[v]) & 1) == 0) {
                    // Same parity: the two tree paths plus edge uv close an
                    // odd walk.
                    std::vector<int> up;
                    for (int w = u; w != -1; w = parent[w]) up.push_back(w);
                    std::vector<int> down;
                    for (int w = v; w != -1; w = parent[w]) down.push_back(w);
                    std::reverse(up.begin(), up.end());
                    // Ends where it starts: root..u, then v..root across uv.
                    res.odd_closed_walk = std::move(up);
                    res.odd_closed_walk.insert(res.odd_closed_walk.end(), down.begin(), down.end());
                    res.bipartite = false;
                    res.side.clear();
                    return res;
                }
            }
        }
    }
    res.bipartite = true;
    return res;
}

namespace {

// Shortest odd closed walk through breadth-first layers; equals the odd
// girth because any same-layer edge closes a walk of length 2d+1 and a
// shortest odd cycle realizes the minimum exactly.
std::optional<int> odd_girth_bfs(const Graph& g) {
    const int n = g.order();
    const auto edge_list = g.edges();

    // A common neighbor on any edge means a triangle, the smallest case.
    for (auto [u, v] : edge_list)
        if (g.count_common_neighbors(u, v) > 0) return 3;

    int best = -1;
    std::vector<int> depth(static_cast<std::size_t>(n));
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(depth.begin(), depth.end(), -1);
        depth[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            if (best > 0 && 2 * depth[u] + 1 >= best) break;
            for (int v : g.neighbors(u)) {
                if (depth[v] < 0) {
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (auto [u, v] : edge_list) {
            if (depth[u] >= 0 && depth[u] == depth[v]) {
                int len = 2 * depth[u] + 1;
                if (best < 0 || len < best) best = len;
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

}  // namespace

std::optional<int> odd_girth(const Graph& g) { return odd_girth_bfs(g); }

namespace {

struct cycle_dfs {
    const Graph& g;
    int length;
    std::vector<int> dist_to_start;
    std::vector<std::uint8_t> used;
    std::vector<int> path;

    bool extend() {
        int j = static_cast<int>(path.size());
        int last = path.back();
        if (j == length) return g.has_edge(last, path[0]);
        for (int w : g.neighbors(last)) {
            if (used[w]) continue;
            if (dist_to_start[w] < 0 || dist_to_start[w] > length - j) continue;
            used[w] = 1;
            path.push_back(w);
            if (extend()) return true;
            path.pop_back();
            used[w] = 0;
        }
        return false;
    }
};

std::vector<int> bfs_dist(const Graph& g, int s) {
    std::vector<int> depth(static_cast<std::size_t>(g.order()), -1);
    std::vector<int> queue{s};
    depth[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : g.neighbors(u))
            if (depth[v] < 0) {
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            }
    }
    return depth;
}

}  // namespace

std::optional<std::vector<int>> shortest_odd_cycle(const Graph& g) {
    auto og = odd_girth(g);
    if (!og) return std::nullopt;
    const int L = *og;

    if (L == 3) {
        // First vertex in any triangle, then smallest completing pair.
        for (int u = 0; u < g.order(); ++u) {
            for (int v : g.neighbors(u)) {
                auto common = g.common_neighbors(u, v);
                if (!common.empty()) return std::vector<int>{u, v, common.front()};
            }
        }
        throw std::logic_error("odd girth 3 without a triangle");
    }

    for (int start = 0; start < g.order(); ++start) {
        cycle_dfs dfs{g, L, bfs_dist(g, start),
                      std::vector<std::uint8_t>(static_cast<std::size_t>(g.order()), 0),
                      {start}};
        dfs.used[start] = 1;
        if (dfs.extend()) return dfs.path;
    }
    throw std::logic_error("odd girth reported but no cycle found");
}

namespace {

struct clique_finder {
    const Graph& g;
    int words;

    bool extend(std::vector<std::uint64_t>& cand, int need) {
        if (need == 0) return true;
        int count = 0;
        for (int w = 0; w < words; ++w) count += std::popcount(cand[w]);
        if (count < need) return false;
        std::vector<std::uint64_t> next(static_cast<std::size_t>(words));
        for (int w = 0; w < words; ++w) {
            while (cand[w]) {
                int v = w * 64 + std::countr_zero(cand[w]);
                cand[w] &= cand[w] - 1;
                const std::uint64_t* row = g.row(v);
                for (int x = 0; x < words; ++x) next[x] = cand[x] & row[x];
                // v stays selected; candidates shrink to its neighbors that
                // come later in the current set.
                if (extend(next, need - 1)) return true;
            }
        }
        return false;
    }
};

}  // namespace

bool contains_clique(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("contains_clique: clique size must be positive");
    if (q == 1) return g.order() >= 1;
    if (q == 2) return g.edge_count() >= 1;
    const int words = g.words_per_row();
    std::vector<std::uint64_t> all(static_cast<std::size_t>(words), 0);
    for (int v = 0; v < g.order(); ++v) all[v >> 6] |= std::uint64_t(1) << (v & 63);
    clique_finder finder{g, words};
    return finder.extend(all, q);
}

int max_clique_size_upto(const Graph& g, int cap) {
    if (cap < 0) throw std::invalid_argument("max_clique_size_upto: negative cap");
    int best = 0;
    for (int q = 1; q <= cap; ++q) {
        if (!contains_clique(g, q)) break;
        best = q;
    }
    return best;
}

ColoringCheck is_k_colorable(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("is_k_colorable: negative color count");
    if (g.order() > max_colorable_order)
        throw std::invalid_argument("is_k_colorable limited to 32 vertices");
    const int n = g.order();
    ColoringCheck res;
    if (n == 0) {
        res.colorable = true;
        return res;
    }
    if (k == 0) return res;
    if (k >= n) {
        res.colorable = true;
        res.colors.resize(static_cast<std::size_t>(n));
        std::iota(res.colors.begin(), res.colors.end(), 0);
        return res;
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> color(static_cast<std::size_t>(n), -1);
    // New colors are introduced in order, which prunes permutations of the
    // palette.
    auto dfs = [&](auto&& self, int i, int used) -> bool {
        if (i == n) return true;
        int v = order[i];
        std::uint32_t blocked = 0;
        for (int u : g.neighbors(v))
            if (color[u] >= 0) blocked |= std::uint32_t(1) << color[u];
        int limit = std::min(k - 1, used);
        for (int c = 0; c <= limit; ++c) {
            if ((blocked >> c) & 1) continue;
            color[v] = c;
            if (self(self, i + 1, std::max(used, c + 1))) return true;
        }
        color[v] = -1;
        return false;
    };
    res.colorable = dfs(dfs, 0, 0);
    if (res.colorable) res.colors = color;
    return res;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colors, int k) {
    if (static_cast<int>(colors.size()) != g.order()) return false;
    for (int c : colors)
        if (c < 0 || c >= k) return false;
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

bool is_odd_closed_walk(const Graph& g, const std::vector<int>& walk) {
    if (walk.size() < 2 || walk.front() != walk.back()) return false;
    if ((walk.size() - 1) % 2 == 0) return false;
    for (std::size_t i = 0; i + 1 < walk.size(); ++i)
        if (!g.has_edge(walk[i], walk[i + 1])) return false;
    return true;
}

bool is_cycle(const Graph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) return false;
    std::vector<int> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    return true;
}

}  // namespace bookturan
