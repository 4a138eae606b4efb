#include "bookturan/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bookturan/canonical.hpp"
#include "bookturan/constructions.hpp"
#include "bookturan/graph_io.hpp"
#include "bookturan/properties.hpp"

namespace bookturan {

void SearchProblem::validate() const {
    if (n < 1) throw std::invalid_argument("search: order must be positive");
    if (!max_booksize && !forbid_clique && !min_odd_girth)
        throw std::invalid_argument("search: no forbidden-structure constraint given");
    if (max_booksize && *max_booksize < 0)
        throw std::invalid_argument("search: negative booksize bound");
    if (forbid_clique && *forbid_clique < 2)
        throw std::invalid_argument("search: clique bound below 2");
    if (min_odd_girth && (*min_odd_girth < 3 || *min_odd_girth % 2 == 0))
        throw std::invalid_argument("search: odd-girth bound must be odd and at least 3");
    if (require_non_bipartite && n < 3)
        throw std::invalid_argument("search: non-bipartite graphs need at least 3 vertices");
    if (require_non_k_partite && *require_non_k_partite < 1)
        throw std::invalid_argument("search: partiteness bound below 1");
}

std::string SearchProblem::key() const {
    std::ostringstream out;
    out << "n=" << n;
    if (max_booksize) out << ";book<=" << *max_booksize;
    if (forbid_clique) out << ";noK" << *forbid_clique;
    if (min_odd_girth) out << ";oddgirth>=" << *min_odd_girth;
    if (require_non_bipartite) out << ";nonbip";
    if (require_non_k_partite) out << ";chi>" << *require_non_k_partite;
    return out.str();
}

bool satisfies(const Graph& g, const SearchProblem& p) {
    if (p.max_booksize && booksize(g) > *p.max_booksize) return false;
    if (p.forbid_clique && contains_clique(g, *p.forbid_clique)) return false;
    if (p.min_odd_girth) {
        auto og = odd_girth(g);
        if (og && *og < *p.min_odd_girth) return false;
    }
    if (p.require_non_bipartite && is_bipartite(g).bipartite) return false;
    if (p.require_non_k_partite && is_k_colorable(g, *p.require_non_k_partite).colorable)
        return false;
    return true;
}

namespace {

using clock_type = std::chrono::steady_clock;

struct budget_exhausted {};

long long pair_count(long long n) { return n * (n - 1) / 2; }

// Partial graph during generation: single-word adjacency rows.
struct node {
    std::vector<std::uint64_t> rows;
    int edges = 0;
};

using level_dict = std::map<std::string, node>;

Graph node_to_graph(const node& nd) {
    int n = static_cast<int>(nd.rows.size());
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (std::uint64_t bits = nd.rows[u] >> (u + 1) << (u + 1); bits;) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            g.add_edge(u, v);
        }
    return g;
}

// Does the mask span a clique of the given size? Candidates shrink to later
// vertices so every clique is visited once, in increasing vertex order.
bool mask_has_clique(const std::vector<std::uint64_t>& rows, std::uint64_t cand, int size) {
    if (size <= 0) return true;
    while (cand) {
        if (std::popcount(cand) < size) return false;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (size == 1 || mask_has_clique(rows, cand & rows[v], size - 1)) return true;
    }
    return false;
}

// Shortest odd closed walk through `start`, via layered search on the parity
// double cover. Any odd cycle shorter than `limit` created by adding `start`
// yields such a walk, and such a walk always contains an odd cycle no longer
// than itself.
bool odd_walk_shorter_than(const std::vector<std::uint64_t>& rows, int n, int start, int limit) {
    std::vector<int> dist(2 * static_cast<size_t>(n), -1);
    std::vector<int> queue;
    queue.push_back(2 * start);
    dist[2 * start] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int state = queue[head];
        int v = state >> 1, parity = state & 1, d = dist[state];
        if (d + 1 >= limit) return false;  // deeper layers cannot beat the limit
        for (std::uint64_t bits = rows[v]; bits;) {
            int w = std::countr_zero(bits);
            bits &= bits - 1;
            int next = 2 * w + (parity ^ 1);
            if (dist[next] >= 0) continue;
            if (next == 2 * start + 1) return true;  // odd walk of length d+1
            dist[next] = d + 1;
            queue.push_back(next);
        }
    }
    return false;
}

// The parent satisfies all downward-closed constraints; only structures that
// involve the new vertex need checking. Its neighborhood is `s`.
bool child_ok(const node& parent, std::uint64_t s, const SearchProblem& p) {
    int m = static_cast<int>(parent.rows.size());
    if (p.forbid_clique && mask_has_clique(parent.rows, s, *p.forbid_clique - 1)) return false;
    if (p.max_booksize) {
        int r = *p.max_booksize;
        for (std::uint64_t bits = s; bits;) {
            int u = std::countr_zero(bits);
            bits &= bits - 1;
            std::uint64_t nu = parent.rows[u];
            if (std::popcount(nu & s) > r) return false;  // new edge (new, u)
            // edges inside the neighborhood gain one common neighbor
            for (std::uint64_t rest = bits & nu; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (std::popcount(nu & parent.rows[v]) + 1 > r) return false;
            }
        }
    }
    if (p.min_odd_girth && s) {
        std::vector<std::uint64_t> rows(parent.rows);
        rows.push_back(s);
        for (std::uint64_t bits = s; bits;) {
            int u = std::countr_zero(bits);
            bits &= bits - 1;
            rows[u] |= std::uint64_t(1) << m;
        }
        if (odd_walk_shorter_than(rows, m + 1, m, *p.min_odd_girth)) return false;
    }
    return true;
}

node make_child(const node& parent, std::uint64_t s) {
    node child;
    child.rows = parent.rows;
    int m = static_cast<int>(parent.rows.size());
    child.rows.push_back(s);
    for (std::uint64_t bits = s; bits;) {
        int u = std::countr_zero(bits);
        bits &= bits - 1;
        child.rows[u] |= std::uint64_t(1) << m;
    }
    child.edges = parent.edges + std::popcount(s);
    return child;
}

struct engine {
    const SearchProblem& p;
    long long budget;
    int threads;
    std::atomic<long long> steps{0};
    long long nodes = 0;

    engine(const SearchProblem& p_, const SearchOptions& opts)
        : p(p_), budget(opts.budget), threads(std::max(1, opts.threads)) {}

    void charge(long long k) {
        long long seen = steps.fetch_add(k, std::memory_order_relaxed) + k;
        if (budget > 0 && seen > budget) throw budget_exhausted{};
    }

    long long upper_bound(int order, int edges) const {
        long long ub = edges + pair_count(p.n) - pair_count(order);
        if (p.max_booksize && p.n >= 6 * *p.max_booksize)
            ub = std::min(ub, floor_quarter_square(p.n));
        return ub;
    }

    // keep_ties=false: value pass, children must be able to beat `bound`.
    // keep_ties=true: enumeration pass, children must be able to reach it.
    level_dict expand(const level_dict& parents, bool keep_ties, long long bound) {
        std::vector<const node*> order;
        order.reserve(parents.size());
        for (const auto& [cert, nd] : parents) order.push_back(&nd);

        int chunk_count = threads;
        std::vector<level_dict> partial(static_cast<size_t>(chunk_count));
        std::vector<std::exception_ptr> errors(static_cast<size_t>(chunk_count));

        auto work = [&](int chunk) {
            try {
                for (size_t i = chunk; i < order.size(); i += static_cast<size_t>(chunk_count)) {
                    const node& parent = *order[i];
                    int m = static_cast<int>(parent.rows.size());
                    charge(std::int64_t(1) << m);
                    for (std::uint64_t s = 0; s < (std::uint64_t(1) << m); ++s) {
                        int e = parent.edges + std::popcount(s);
                        long long ub = upper_bound(m + 1, e);
                        if (keep_ties ? ub < bound : ub <= bound) continue;
                        if (!child_ok(parent, s, p)) continue;
                        node child = make_child(parent, s);
                        std::string cert =
                            detail::canonical_graph6_rows(m + 1, child.rows.data());
                        partial[static_cast<size_t>(chunk)].emplace(std::move(cert),
                                                                    std::move(child));
                    }
                }
            } catch (...) {
                errors[static_cast<size_t>(chunk)] = std::current_exception();
            }
        };

        if (chunk_count == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int c = 0; c < chunk_count; ++c) pool.emplace_back(work, c);
            for (auto& t : pool) t.join();
        }
        for (auto& err : errors)
            if (err) std::rethrow_exception(err);

        level_dict next;
        for (auto& part : partial)
            for (auto& [cert, nd] : part) next.emplace(std::move(cert), std::move(nd));
        nodes += static_cast<long long>(next.size());
        return next;
    }

    // Runs one full generation sweep. Returns the accepted graphs on n
    // vertices keyed by certificate (value pass callers only need the max).
    std::map<std::string, int> sweep(bool keep_ties, long long bound) {
        level_dict current;
        node start;
        start.rows = {0};
        current.emplace(detail::canonical_graph6_rows(1, start.rows.data()), start);
        nodes += 1;
        for (int m = 1; m < p.n; ++m) current = expand(current, keep_ties, bound);

        std::map<std::string, int> accepted;
        for (const auto& [cert, nd] : current) {
            long long e = nd.edges;
            if (keep_ties ? e < bound : e <= bound) continue;
            if (!satisfies(node_to_graph(nd), p)) continue;
            accepted.emplace(cert, nd.edges);
        }
        return accepted;
    }
};

// Constructions that happen to satisfy the problem give the value pass a
// head start and provide honest best-found output after a budget cutoff.
std::pair<long long, std::optional<Graph>> seed_bound(const SearchProblem& p) {
    std::vector<Graph> pool;
    int n = p.n;
    auto consider = [&](auto&& make) {
        try {
            pool.push_back(make());
        } catch (const std::invalid_argument&) {
        }
    };
    for (int k = 1; k <= n; ++k) consider([&] { return turan_graph(n, k); });
    consider([&] { return turan_dot_c3(n); });
    for (int r = 1; 2 * r <= n - 1; ++r) consider([&] { return krr_graph(n, r); });
    consider([&] {
        if (n < 3 || n % 2 == 0) throw std::invalid_argument("no odd cycle");
        Graph c(n);
        for (int v = 0; v < n; ++v) c.add_edge(v, (v + 1) % n);
        return c;
    });
    if (n >= 5 && n <= max_certificate_order) {
        try {
            for (const auto& g : enumerate_g0_c3(n)) pool.push_back(g);
            for (const auto& g : enumerate_g1_b2(n)) pool.push_back(g);
        } catch (const std::invalid_argument&) {
        }
    }

    long long best = -1;
    std::optional<Graph> witness;
    for (const auto& g : pool) {
        if (g.edge_count() <= best) continue;
        if (!satisfies(g, p)) continue;
        best = g.edge_count();
        witness = g;
    }
    return {best, witness};
}

}  // namespace

SearchOutcome solve(const SearchProblem& p, const SearchOptions& opts) {
    p.validate();
    if (p.n > max_search_order)
        throw std::invalid_argument("search: order above the solver cap");

    auto t0 = clock_type::now();
    SearchOutcome out;
    auto [bound, witness] = seed_bound(p);

    engine eng(p, opts);
    try {
        auto improvements = eng.sweep(false, bound);
        long long best = bound;
        for (const auto& [cert, e] : improvements) best = std::max<long long>(best, e);
        out.max_edges = best;
        if (best >= 0) {
            auto winners = eng.sweep(true, best);
            for (const auto& [cert, e] : winners) out.extremal.push_back(cert);
        }
        out.exact = true;
    } catch (const budget_exhausted&) {
        out.exact = false;
        out.max_edges = bound;
        out.extremal.clear();
        if (witness) out.extremal.push_back(canonical_certificate(*witness).value);
    }
    out.explored = eng.nodes;
    out.elapsed_seconds =
        std::chrono::duration<double>(clock_type::now() - t0).count();
    return out;
}

SearchOutcome naive_oracle(const SearchProblem& p) {
    p.validate();
    if (p.n > max_oracle_order)
        throw std::invalid_argument("oracle: order above 7");

    auto t0 = clock_type::now();
    int n = p.n;
    int pairs = static_cast<int>(pair_count(n));
    long long best = -1;
    std::vector<std::uint32_t> winners;

    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << pairs); ++mask) {
        int e = std::popcount(mask);
        if (e < best) continue;
        Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        if (!satisfies(g, p)) continue;
        if (e > best) {
            best = e;
            winners.clear();
        }
        winners.push_back(mask);
    }

    SearchOutcome out;
    out.max_edges = best;
    std::set<std::string> certs;
    for (std::uint32_t mask : winners) {
        Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        certs.insert(canonical_certificate(g).value);
    }
    out.extremal.assign(certs.begin(), certs.end());
    out.explored = std::int64_t(1) << pairs;
    out.exact = true;
    out.elapsed_seconds =
        std::chrono::duration<double>(clock_type::now() - t0).count();
    return out;
}

}  // namespace bookturan
