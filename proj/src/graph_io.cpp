#include "bookturan/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace bookturan {

namespace {

void append_order(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
        return;
    }
    if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
        return;
    }
    throw std::invalid_argument("graph too large for graph6");
}

[[noreturn]] void bad(const char* why) {
    throw std::invalid_argument(std::string("malformed graph6: ") + why);
}

}  // namespace

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    append_order(out, n);
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph parse_graph6(std::string_view text) {
    // Tolerate the optional ">>graph6<<" prefix and a trailing newline.
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) bad("empty input");

    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= text.size()) bad("truncated");
        unsigned char c = static_cast<unsigned char>(text[pos++]);
        if (c < 63 || c > 126) bad("byte out of range");
        return c - 63;
    };

    long long n;
    if (text[0] != '~') {
        n = next();
    } else {
        ++pos;
        if (pos < text.size() && text[pos] == '~') bad("order beyond supported range");
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
        if (n <= 62) bad("non-canonical order encoding");
    }
    if (n > max_graph_order) bad("order exceeds supported maximum");

    const long long pairs = n * (n - 1) / 2;
    const std::size_t want = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() - pos != want) bad("wrong length");

    Graph g(static_cast<int>(n));
    long long seen = 0;
    int u = 0, v = 1;
    for (std::size_t i = 0; i < want; ++i) {
        int group = next();
        for (int b = 5; b >= 0; --b) {
            if (seen < pairs) {
                if ((group >> b) & 1) g.add_edge(u, v);
                ++seen;
                if (++u == v) {
                    u = 0;
                    ++v;
                }
            } else if ((group >> b) & 1) {
                bad("nonzero padding");
            }
        }
    }
    return g;
}

std::string emit_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long long n = -1;
    bool seen_any = false;
    std::vector<std::pair<long long, long long>> pairs;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        long long a;
        if (!(ls >> a)) {
            ls.clear();
            std::string tok;
            if (ls >> tok) throw std::invalid_argument("edge list: expected numbers");
            continue;  // blank line
        }
        long long b;
        if (!(ls >> b)) {
            ls.clear();
            std::string tok;
            if (ls >> tok) throw std::invalid_argument("edge list: bad token");
            // A lone number is only meaningful as the leading order line.
            if (seen_any) throw std::invalid_argument("edge list: stray single number");
            if (a < 0) throw std::invalid_argument("edge list: negative order");
            n = a;
            seen_any = true;
            continue;
        }
        std::string rest;
        if (ls >> rest) throw std::invalid_argument("edge list: trailing tokens");
        pairs.emplace_back(a, b);
        seen_any = true;
    }
    if (n < 0) {
        // No explicit order line: infer from the largest endpoint.
        n = 0;
        for (auto [a, b] : pairs) n = std::max({n, a + 1, b + 1});
    }
    if (n > max_graph_order) throw std::invalid_argument("edge list: order exceeds supported maximum");
    Graph g(static_cast<int>(n));
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("edge list: endpoint out of range");
        g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
    return g;
}

}  // namespace bookturan
