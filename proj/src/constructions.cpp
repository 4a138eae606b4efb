#include "bookturan/constructions.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bookturan/canonical.hpp"

namespace bookturan {

namespace {

void join_parts(Graph& g, int a_begin, int a_end, int b_begin, int b_end) {
    for (int u = a_begin; u < a_end; ++u)
        for (int v = b_begin; v < b_end; ++v) g.add_edge(u, v);
}

// Complete bipartite core plus the three glued vertices shared by g0_c3 and
// g1_b2. Side one occupies [0, s), side two [s, s+t); x, y, z are the last
// three vertices in that order.
struct glued_base {
    Graph g;
    int s, t, x, y, z;
};

glued_base make_base(int n, int s, int t) {
    glued_base b{Graph(n), s, t, n - 3, n - 2, n - 1};
    join_parts(b.g, 0, s, s, s + t);
    return b;
}

std::vector<Graph> dedup_sorted(std::vector<Graph> graphs) {
    std::map<Certificate, Graph> by_cert;
    for (auto& g : graphs) by_cert.emplace(canonical_certificate(g), std::move(g));
    std::vector<Graph> out;
    out.reserve(by_cert.size());
    for (auto& [cert, g] : by_cert) out.push_back(std::move(g));
    return out;
}

// g0_c3 with explicit side sizes (s gets z's join, t gets the split join).
Graph build_g0(int n, int s, int t, int t1) {
    if (t1 < 1 || t1 > t - 1)
        throw std::invalid_argument("g0_c3: joined piece must be a nonempty proper part of its side");
    glued_base b = make_base(n, s, t);
    b.g.add_edge(b.x, b.y);
    b.g.add_edge(b.y, b.z);
    join_parts(b.g, b.x, b.x + 1, s, s + t1);
    join_parts(b.g, b.y, b.y + 1, s + t1, s + t);
    join_parts(b.g, b.z, b.z + 1, 0, s);
    return std::move(b.g);
}

Graph build_g1(int n, int s, int t, int s1, int t1) {
    if (s1 < 0 || s1 > s || t1 < 0 || t1 > t)
        throw std::invalid_argument("g1_b2: joined piece exceeds its side");
    if (static_cast<long long>(s1) * t1 > 1)
        throw std::invalid_argument("g1_b2: piece sizes must multiply to at most 1");
    glued_base b = make_base(n, s, t);
    b.g.add_edge(b.x, b.y);
    b.g.add_edge(b.y, b.z);
    b.g.add_edge(b.x, b.z);
    join_parts(b.g, b.z, b.z + 1, 0, s1);
    join_parts(b.g, b.z, b.z + 1, s, s + t1);
    join_parts(b.g, b.x, b.x + 1, s1, s);
    join_parts(b.g, b.y, b.y + 1, s + t1, s + t);
    return std::move(b.g);
}

}  // namespace

Graph turan_graph(int n, int k) {
    if (n < 0) throw std::invalid_argument("turan_graph: negative order");
    if (k < 1) throw std::invalid_argument("turan_graph: need at least one part");
    Graph g(n);
    std::vector<int> start;
    int at = 0;
    for (int i = 0; i < k; ++i) {
        start.push_back(at);
        at += n / k + (i < n % k ? 1 : 0);
    }
    start.push_back(n);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            join_parts(g, start[i], start[i + 1], start[j], start[j + 1]);
    return g;
}

long long turan_edge_count(long long n, int k) {
    if (n < 0) throw std::invalid_argument("turan_edge_count: negative order");
    if (k < 1) throw std::invalid_argument("turan_edge_count: need at least one part");
    long long total = n * (n - 1) / 2;
    long long q = n / k, rem = n % k;
    total -= rem * (q + 1) * q / 2;
    total -= (k - rem) * q * (q - 1) / 2;
    return total;
}

Graph g0_c3(int n, int t1_size) {
    if (n < 5) throw std::invalid_argument("g0_c3: order must be at least 5");
    int s = (n - 3) / 2, t = n - 3 - s;
    return build_g0(n, s, t, t1_size);
}

Graph g1_b2(int n, int s1_size, int t1_size) {
    if (n < 5) throw std::invalid_argument("g1_b2: order must be at least 5");
    int s = (n - 3) / 2, t = n - 3 - s;
    return build_g1(n, s, t, s1_size, t1_size);
}

Graph krr_graph(int n, int r) {
    if (r < 1) throw std::invalid_argument("krr_graph: hub needs at least one neighbor per side");
    int a = (n - 1) / 2, b = n - 1 - a;
    if (a < r) throw std::invalid_argument("krr_graph: side smaller than r");
    Graph g(n);
    join_parts(g, 0, a, a, a + b);
    int hub = n - 1;
    for (int i = 0; i < r; ++i) {
        g.add_edge(hub, i);
        g.add_edge(hub, a + i);
    }
    return g;
}

Graph turan_dot_c3(int n) {
    if (n < 5) throw std::invalid_argument("turan_dot_c3: order must be at least 5");
    Graph g(n);
    int m = n - 2;
    int first = (m + 1) / 2;
    join_parts(g, 0, first, first, m);
    g.add_edge(m, m + 1);
    g.add_edge(0, m);
    g.add_edge(0, m + 1);
    return g;
}

std::vector<Graph> enumerate_g0_c3(int n) {
    if (n < 5) throw std::invalid_argument("enumerate_g0_c3: order must be at least 5");
    if (n > max_certificate_order)
        throw std::invalid_argument("enumerate_g0_c3: order above certificate cap");
    int s = (n - 3) / 2, t = n - 3 - s;
    std::vector<Graph> members;
    for (int t1 = 1; t1 < t; ++t1) members.push_back(build_g0(n, s, t, t1));
    for (int t1 = 1; t1 < s; ++t1) members.push_back(build_g0(n, t, s, t1));
    return dedup_sorted(std::move(members));
}

std::vector<Graph> enumerate_g1_b2(int n) {
    if (n < 5) throw std::invalid_argument("enumerate_g1_b2: order must be at least 5");
    if (n > max_certificate_order)
        throw std::invalid_argument("enumerate_g1_b2: order above certificate cap");
    int s = (n - 3) / 2, t = n - 3 - s;
    std::vector<Graph> members;
    for (int s1 = 0; s1 <= s; ++s1) members.push_back(build_g1(n, s, t, s1, 0));
    for (int t1 = 0; t1 <= t; ++t1) members.push_back(build_g1(n, s, t, 0, t1));
    members.push_back(build_g1(n, s, t, 1, 1));
    return dedup_sorted(std::move(members));
}

namespace {

const std::map<std::string, FamilySpec::Kind>& kind_names() {
    static const std::map<std::string, FamilySpec::Kind> names{
        {"turan", FamilySpec::Kind::turan},       {"g0c3", FamilySpec::Kind::g0c3},
        {"g1b2", FamilySpec::Kind::g1b2},         {"krr", FamilySpec::Kind::krr},
        {"turandotc3", FamilySpec::Kind::turan_dot_c3},
    };
    return names;
}

std::string kind_to_string(FamilySpec::Kind k) {
    for (const auto& [name, kind] : kind_names())
        if (kind == k) return name;
    throw std::logic_error("unknown family kind");
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string head;
    if (!(in >> head)) throw std::invalid_argument("family spec: empty");
    auto it = kind_names().find(head);
    if (it == kind_names().end()) throw std::invalid_argument("family spec: unknown family '" + head + "'");
    FamilySpec spec;
    spec.kind = it->second;
    bool have_n = false;
    std::map<std::string, bool> seen;
    std::string token;
    while (in >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
            throw std::invalid_argument("family spec: expected key=value, got '" + token + "'");
        std::string key = token.substr(0, eq);
        int value;
        try {
            std::size_t used = 0;
            value = std::stoi(token.substr(eq + 1), &used);
            if (used != token.size() - eq - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("family spec: bad value in '" + token + "'");
        }
        if (seen[key]) throw std::invalid_argument("family spec: duplicate key '" + key + "'");
        seen[key] = true;
        if (key == "n") {
            spec.n = value;
            have_n = true;
        } else if (key == "k" && spec.kind == Kind::turan) {
            spec.k = value;
        } else if (key == "r" && spec.kind == Kind::krr) {
            spec.r = value;
        } else if (key == "s1" && spec.kind == Kind::g1b2) {
            spec.s1 = value;
        } else if (key == "t1" && (spec.kind == Kind::g0c3 || spec.kind == Kind::g1b2)) {
            spec.t1 = value;
        } else {
            throw std::invalid_argument("family spec: key '" + key + "' not valid for " + head);
        }
    }
    if (!have_n) throw std::invalid_argument("family spec: missing n");
    if (spec.kind == Kind::g0c3 && !seen["t1"]) throw std::invalid_argument("family spec: g0c3 needs t1");
    return spec;
}

std::string FamilySpec::to_string() const {
    std::ostringstream out;
    out << kind_to_string(kind) << " n=" << n;
    switch (kind) {
        case Kind::turan: out << " k=" << k; break;
        case Kind::g0c3: out << " t1=" << t1; break;
        case Kind::g1b2: out << " s1=" << s1 << " t1=" << t1; break;
        case Kind::krr: out << " r=" << r; break;
        case Kind::turan_dot_c3: break;
    }
    return out.str();
}

Graph FamilySpec::build() const {
    switch (kind) {
        case Kind::turan: return turan_graph(n, k);
        case Kind::g0c3: return g0_c3(n, t1);
        case Kind::g1b2: return g1_b2(n, s1, t1);
        case Kind::krr: return krr_graph(n, r);
        case Kind::turan_dot_c3: return turan_dot_c3(n);
    }
    throw std::logic_error("unknown family kind");
}

}  // namespace bookturan
