#include "bookturan/canonical.hpp"

#include <array>
#include <bit>
#include <map>
#include <stdexcept>
#include <vector>

#include "bookturan/graph_io.hpp"

namespace bookturan {

namespace {

// Ordered partition of the vertex set. Cells are kept in a deterministic,
// relabeling-invariant order: refinement splits a cell into subcells sorted
// by their count signature, and an individualized vertex precedes the rest
// of its cell. Vertex order inside a cell never affects the result.
using partition = std::vector<std::vector<int>>;

struct canonizer {
    int n = 0;
    const std::uint64_t* adj = nullptr;
    std::array<std::uint64_t, 64> best{};
    bool have_best = false;
    std::array<int, 64> pos{};

    // candidate rows pack column j into bit (63-j), so comparing words
    // numerically is comparing matrix rows left to right.
    void consider(const partition& cells) {
        std::array<std::uint64_t, 64> cand{};
        int k = 0;
        for (const auto& cell : cells)
            for (int v : cell) pos[v] = k++;
        for (const auto& cell : cells) {
            for (int v : cell) {
                std::uint64_t bits = adj[v];
                std::uint64_t packed = 0;
                while (bits) {
                    packed |= std::uint64_t(1) << (63 - pos[std::countr_zero(bits)]);
                    bits &= bits - 1;
                }
                cand[pos[v]] = packed;
            }
        }
        if (!have_best) {
            best = cand;
            have_best = true;
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (cand[i] < best[i]) {
                best = cand;
                return;
            }
            if (cand[i] > best[i]) return;
        }
    }

    void refine(partition& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::uint64_t> mask(cells.size(), 0);
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) mask[c] |= std::uint64_t(1) << v;
            partition next;
            next.reserve(cells.size());
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<std::vector<int>, std::vector<int>> groups;
                std::vector<int> sig(cells.size());
                for (int v : cell) {
                    for (std::size_t c = 0; c < cells.size(); ++c)
                        sig[c] = std::popcount(adj[v] & mask[c]);
                    groups[sig].push_back(v);
                }
                if (groups.size() > 1) changed = true;
                for (auto& [key, members] : groups) next.push_back(std::move(members));
            }
            cells = std::move(next);
        }
    }

    // A cell whose adjacency to every cell is all-or-nothing is a class of
    // twins: refinement can never split it (full stays full and empty stays
    // empty on subcells) and its within-cell order never changes the
    // candidate matrix. The partition is equitable here, so a single
    // representative decides exactly.
    bool twin_class(const partition& cells, const std::vector<std::uint64_t>& mask,
                    std::size_t c) const {
        int rep = cells[c][0];
        for (std::size_t d = 0; d < cells.size(); ++d) {
            int cnt = std::popcount(adj[rep] & mask[d]);
            int full = static_cast<int>(cells[d].size()) - (c == d ? 1 : 0);
            if (cnt != 0 && cnt != full) return false;
        }
        return true;
    }

    void dfs(partition cells) {
        refine(cells);
        std::vector<std::uint64_t> mask(cells.size(), 0);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) mask[c] |= std::uint64_t(1) << v;
        // Branch on the first splittable cell. Twin classes are skipped: an
        // individualization there only permutes equal rows and multiplies the
        // leaf count by the cell's factorial. With none left the matrix is
        // fully determined, so this is also the stop condition.
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (cells[c].size() > 1 && !twin_class(cells, mask, c)) {
                target = c;
                break;
            }
        }
        if (target == cells.size()) {
            consider(cells);
            return;
        }
        for (std::size_t i = 0; i < cells[target].size(); ++i) {
            partition child = cells;
            int v = cells[target][i];
            std::vector<int> rest = cells[target];
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            child[target] = {v};
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, std::move(rest));
            dfs(std::move(child));
        }
    }
};

std::array<std::uint64_t, 64> canonical_rows(int n, const std::uint64_t* rows) {
    canonizer cz;
    cz.n = n;
    cz.adj = rows;
    partition start;
    if (n > 0) {
        start.emplace_back();
        for (int v = 0; v < n; ++v) start[0].push_back(v);
    }
    cz.dfs(std::move(start));
    if (n > 0 && !cz.have_best) throw std::logic_error("canonical search produced no candidate");
    return cz.best;
}

Graph rows_to_graph(int n, const std::array<std::uint64_t, 64>& rows) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((rows[i] >> (63 - j)) & 1) g.add_edge(i, j);
    return g;
}

void check_order(int n) {
    if (n > max_certificate_order)
        throw std::invalid_argument("canonical form limited to 64 vertices");
}

std::vector<std::uint64_t> single_word_rows(const Graph& g) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v) rows[static_cast<std::size_t>(v)] = g.row(v)[0];
    return rows;
}

}  // namespace

namespace detail {

std::string canonical_graph6_rows(int n, const std::uint64_t* rows) {
    check_order(n);
    return emit_graph6(rows_to_graph(n, canonical_rows(n, rows)));
}

}  // namespace detail

Certificate canonical_certificate(const Graph& g) {
    check_order(g.order());
    auto rows = single_word_rows(g);
    return Certificate{detail::canonical_graph6_rows(g.order(), rows.data())};
}

Graph canonical_form(const Graph& g) {
    check_order(g.order());
    auto rows = single_word_rows(g);
    return rows_to_graph(g.order(), canonical_rows(g.order(), rows.data()));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_certificate(a) == canonical_certificate(b);
}

}  // namespace bookturan
