#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bookturan/cache.hpp"
#include "bookturan/canonical.hpp"
#include "bookturan/constructions.hpp"
#include "bookturan/graph.hpp"
#include "bookturan/graph_io.hpp"
#include "bookturan/properties.hpp"
#include "bookturan/search.hpp"
#include "bookturan/verify.hpp"

using namespace bookturan;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

std::string cert_of(const Graph& g) { return canonical_certificate(g).value; }

// Disjoint triangles joined by a perfect matching. Its triangles share no
// edge, so booksize is exactly 1; with 9 edges it ties the balanced
// bipartite graph on 6 vertices.
Graph prism6() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    return g;
}

SearchProblem booksize_problem(int n, int r, bool nonbip) {
    SearchProblem p;
    p.n = n;
    p.max_booksize = r;
    p.require_non_bipartite = nonbip;
    return p;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("bookturan-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static inline int counter = 0;
};

}  // namespace

TEST_CASE("problem validation") {
    SearchProblem p;
    p.n = 5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);  // no constraint
    p.max_booksize = 1;
    CHECK_NOTHROW(p.validate());
    p.n = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.n = 5;
    p.max_booksize = -1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.max_booksize.reset();
    p.forbid_clique = 1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.forbid_clique = 3;
    CHECK_NOTHROW(p.validate());
    p.min_odd_girth = 4;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.min_odd_girth = 5;
    CHECK_NOTHROW(p.validate());
    p.require_non_bipartite = true;
    p.n = 2;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.n = 5;
    p.require_non_k_partite = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.require_non_k_partite = 2;
    CHECK_NOTHROW(p.validate());
}

TEST_CASE("problem keys") {
    SearchProblem p;
    p.n = 8;
    p.max_booksize = 1;
    p.forbid_clique = 3;
    p.min_odd_girth = 5;
    p.require_non_bipartite = true;
    p.require_non_k_partite = 2;
    CHECK(p.key() == "n=8;book<=1;noK3;oddgirth>=5;nonbip;chi>2");
    CHECK(booksize_problem(6, 1, false).key() == "n=6;book<=1");
    CHECK(booksize_problem(5, 0, true).key() == "n=5;book<=0;nonbip");
}

TEST_CASE("constraint checking") {
    SearchProblem p = booksize_problem(5, 0, true);
    CHECK(satisfies(cycle(5), p));
    CHECK_FALSE(satisfies(turan_graph(5, 2), p));  // bipartite
    CHECK_FALSE(satisfies(complete(3) , booksize_problem(3, 0, true)));
    CHECK(satisfies(complete(3), booksize_problem(3, 1, true)));

    SearchProblem q;
    q.n = 7;
    q.min_odd_girth = 5;
    CHECK(satisfies(cycle(7), q));
    CHECK(satisfies(turan_graph(7, 2), q));  // no odd cycle at all
    CHECK_FALSE(satisfies(turan_dot_c3(7), q));

    SearchProblem c;
    c.n = 5;
    c.forbid_clique = 3;
    c.require_non_k_partite = 2;
    CHECK(satisfies(cycle(5), c));  // triangle-free but not 2-colorable
    CHECK_FALSE(satisfies(turan_graph(5, 2), c));

    SearchProblem d;
    d.n = 6;
    d.forbid_clique = 4;
    d.require_non_k_partite = 3;
    CHECK_FALSE(satisfies(turan_graph(6, 3), d));  // 3-colorable
    Graph wheel = cycle(5);
    Graph w6(6);
    for (auto [u, v] : wheel.edges()) w6.add_edge(u, v);
    for (int v = 0; v < 5; ++v) w6.add_edge(5, v);
    CHECK(satisfies(w6, d));  // odd wheel: no 4-clique, chromatic number 4
}

TEST_CASE("oracle results on frozen cases") {
    SearchOutcome out = naive_oracle(booksize_problem(4, 0, false));
    CHECK(out.exact);
    CHECK(out.max_edges == 4);
    REQUIRE(out.extremal.size() == 1);
    CHECK(out.extremal[0] == cert_of(cycle(4)));

    out = naive_oracle(booksize_problem(5, 0, true));
    CHECK(out.max_edges == 5);
    REQUIRE(out.extremal.size() == 1);
    CHECK(out.extremal[0] == cert_of(cycle(5)));

    out = naive_oracle(booksize_problem(3, 1, true));
    CHECK(out.max_edges == 3);
    REQUIRE(out.extremal.size() == 1);
    CHECK(out.extremal[0] == cert_of(complete(3)));

    SearchProblem no_triangle;
    no_triangle.n = 5;
    no_triangle.forbid_clique = 3;
    out = naive_oracle(no_triangle);
    CHECK(out.max_edges == 6);
    REQUIRE(out.extremal.size() == 1);
    CHECK(out.extremal[0] == cert_of(turan_graph(5, 2)));

    SearchProblem too_big;
    too_big.n = 8;
    too_big.forbid_clique = 3;
    CHECK_THROWS_AS(naive_oracle(too_big), std::invalid_argument);
}

TEST_CASE("solver results on frozen cases") {
    // Two graphs reach 9 edges with booksize 1 on 6 vertices.
    CHECK(booksize(prism6()) == 1);

    SearchOutcome out = solve(booksize_problem(6, 1, false));
    CHECK(out.exact);
    CHECK(out.max_edges == 9);
    std::vector<std::string> expected = {cert_of(turan_graph(6, 2)),
                                         cert_of(prism6())};
    std::sort(expected.begin(), expected.end());
    CHECK(out.extremal == expected);

    out = solve(booksize_problem(7, 1, true));
    CHECK(out.exact);
    CHECK(out.max_edges == 11);
    for (const auto& cert : out.extremal) {
        Graph g = parse_graph6(cert);
        CHECK(booksize(g) <= 1);
        CHECK_FALSE(is_bipartite(g).bipartite);
        CHECK(g.edge_count() == 11);
    }

    out = solve(booksize_problem(5, 0, true));
    CHECK(out.max_edges == 5);
    REQUIRE(out.extremal.size() == 1);
    CHECK(out.extremal[0] == cert_of(cycle(5)));

    // Unsatisfiable: triangle-free non-bipartite needs 5 vertices.
    out = solve(booksize_problem(4, 0, true));
    CHECK(out.exact);
    CHECK(out.max_edges == -1);
    CHECK(out.extremal.empty());
}

TEST_CASE("solver agrees with the oracle across a constraint grid") {
    std::vector<SearchProblem> grid;
    for (int n = 1; n <= 6; ++n) {
        for (int r = 0; r <= 2; ++r) {
            grid.push_back(booksize_problem(n, r, false));
            if (n >= 3) grid.push_back(booksize_problem(n, r, true));
        }
        for (int q = 3; q <= 4; ++q) {
            SearchProblem p;
            p.n = n;
            p.forbid_clique = q;
            grid.push_back(p);
            SearchProblem hard = p;
            hard.require_non_k_partite = q - 1;
            grid.push_back(hard);
        }
        SearchProblem og;
        og.n = n;
        og.min_odd_girth = 5;
        grid.push_back(og);
    }
    for (const auto& p : grid) {
        CAPTURE(p.key());
        SearchOutcome fast = solve(p);
        SearchOutcome slow = naive_oracle(p);
        CHECK(fast.exact);
        CHECK(fast.max_edges == slow.max_edges);
        CHECK(fast.extremal == slow.extremal);
    }
}

TEST_CASE("one seven-vertex dual-route spot check") {
    SearchProblem p;
    p.n = 7;
    p.forbid_clique = 3;
    p.require_non_bipartite = true;
    SearchOutcome fast = solve(p);
    SearchOutcome slow = naive_oracle(p);
    CHECK(fast.max_edges == slow.max_edges);
    CHECK(fast.extremal == slow.extremal);
    CHECK(fast.max_edges == floor_quarter_square(6) + 1);
}

TEST_CASE("solver is deterministic and thread-count independent") {
    SearchProblem p = booksize_problem(7, 1, true);
    SearchOutcome a = solve(p);
    SearchOutcome b = solve(p);
    CHECK(a.max_edges == b.max_edges);
    CHECK(a.extremal == b.extremal);
    CHECK(a.explored == b.explored);

    SearchOptions two;
    two.threads = 2;
    SearchOutcome c = solve(p, two);
    CHECK(c.max_edges == a.max_edges);
    CHECK(c.extremal == a.extremal);
    CHECK(c.explored == a.explored);
}

TEST_CASE("budget cutoff yields an honest lower bound") {
    SearchProblem p = booksize_problem(9, 1, true);
    SearchOptions opts;
    opts.budget = 50;
    SearchOutcome out = solve(p, opts);
    CHECK_FALSE(out.exact);
    CHECK(out.max_edges == floor_quarter_square(8) + 2);  // seeded witness
    REQUIRE(out.extremal.size() == 1);
    Graph witness = parse_graph6(out.extremal[0]);
    CHECK(witness.edge_count() == out.max_edges);
    CHECK(satisfies(witness, p));
}

TEST_CASE("solver rejects oversized problems") {
    SearchProblem p = booksize_problem(max_search_order + 1, 1, false);
    CHECK_THROWS_AS(solve(p), std::invalid_argument);
}

TEST_CASE("cache stores and recalls exact outcomes") {
    TempDir tmp;
    SearchCache cache(tmp.path);
    SearchProblem p = booksize_problem(6, 1, false);
    CHECK_FALSE(cache.lookup(p).has_value());

    SearchOutcome out = solve(p);
    cache.store(p, out);
    auto hit = cache.lookup(p);
    REQUIRE(hit.has_value());
    CHECK(hit->max_edges == out.max_edges);
    CHECK(hit->extremal == out.extremal);
    CHECK(hit->exact);

    // Same key again: still one line.
    cache.store(p, out);
    std::ifstream in(cache.file());
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 1);

    SearchOutcome partial = out;
    partial.exact = false;
    SearchProblem q = booksize_problem(7, 1, false);
    cache.store(q, partial);  // inexact: must not be written
    CHECK_FALSE(cache.lookup(q).has_value());
}

TEST_CASE("cache skips corrupt lines") {
    TempDir tmp;
    SearchCache cache(tmp.path);
    SearchProblem p = booksize_problem(6, 1, false);
    SearchOutcome out = solve(p);

    std::filesystem::create_directories(tmp.path);
    {
        std::ofstream f(cache.file());
        f << "this is not json\n";
        f << "{\"schema\":1,\"key\":\"n=6;book<=1\",\"max_edges\":\"nine\"}\n";
    }
    cache.store(p, out);

    std::ostringstream warnings;
    auto hit = cache.lookup(p, &warnings);
    REQUIRE(hit.has_value());
    CHECK(hit->max_edges == 9);
    CHECK(warnings.str().find("corrupt") != std::string::npos);
}

TEST_CASE("theorem reports: value and family both reproduce") {
    TheoremReport rep = verify_theorem("mantel", 7);
    CHECK(rep.formula_value == 12);
    CHECK(rep.search_value == 12);
    CHECK(rep.status == "MATCH");
    CHECK(rep.family_known);
    CHECK(rep.family_match);
    CHECK(rep.witness_ok);
    REQUIRE(rep.extremal.size() == 1);
    CHECK(rep.extremal[0] == cert_of(turan_graph(7, 2)));

    rep = verify_theorem("turan", 7, 3);
    CHECK(rep.formula_value == 16);
    CHECK(rep.status == "MATCH");
    CHECK(rep.extremal == rep.expected_family);

    rep = verify_theorem("erdos", 8);
    CHECK(rep.formula_value == 13);
    CHECK(rep.status == "MATCH");
    CHECK(rep.extremal.size() == 2);
    CHECK(rep.family_match);

    rep = verify_theorem("oddcycle", 6, 2);
    CHECK(rep.formula_value == 9);
    CHECK(rep.status == "MATCH");
    REQUIRE(rep.extremal.size() == 1);
    CHECK(rep.extremal[0] == cert_of(turan_graph(6, 2)));
}

TEST_CASE("theorem reports: value-only statements") {
    // No family is claimed, so a value match is a full match.
    TheoremReport rep = verify_theorem("brouwer", 8, 2);
    CHECK(rep.formula_value == 13);
    CHECK(rep.status == "MATCH");
    CHECK_FALSE(rep.family_known);
    CHECK(rep.extremal.size() == 2);

    // The unique-extremal claim is asymptotic: at n = 6r the prism ties the
    // balanced bipartite graph, so only containment is checked.
    rep = verify_theorem("edwards", 6, 1);
    CHECK(rep.formula_value == 9);
    CHECK(rep.status == "MATCH");
    CHECK_FALSE(rep.family_known);
    CHECK(rep.family_contained);
    std::vector<std::string> expected = {cert_of(turan_graph(6, 2)),
                                         cert_of(prism6())};
    std::sort(expected.begin(), expected.end());
    CHECK(rep.extremal == expected);
    CHECK(rep.note.find("asymptotic") != std::string::npos);

    rep = verify_theorem("edwards", 7, 1);
    CHECK(rep.formula_value == 12);
    CHECK(rep.status == "MATCH");
    REQUIRE(rep.extremal.size() == 1);
    CHECK(rep.extremal == rep.expected_family);
}

TEST_CASE("theorem reports: empty family at the smallest order") {
    TheoremReport rep = verify_theorem("erdos", 5);
    CHECK(rep.formula_value == 5);
    CHECK(rep.search_value == 5);
    CHECK(rep.status == "VALUE-MATCH-ONLY");
    CHECK(rep.expected_family.empty());
    CHECK_FALSE(rep.witness_ok);
    REQUIRE(rep.extremal.size() == 1);
    CHECK(rep.extremal[0] == cert_of(cycle(5)));
    CHECK(rep.note.find("no members") != std::string::npos);
}

TEST_CASE("theorem reports: asymptotic family claims at small orders") {
    // At 8 vertices the non-bipartite booksize-1 maximum already equals the
    // closed form, but graphs outside the glued family tie it.
    TheoremReport rep = verify_theorem("book-nonbip", 8, 1);
    CHECK(rep.formula_value == 14);
    CHECK(rep.search_value == 14);
    CHECK(rep.status == "VALUE-MATCH-ONLY");
    CHECK(rep.family_known);
    CHECK_FALSE(rep.family_match);
    CHECK(rep.family_contained);
    CHECK(rep.witness_ok);
    CHECK(rep.extremal.size() == 9);
    CHECK(rep.note.find("large orders") != std::string::npos);

    // For booksize 2 the closed form undershoots the true maximum at this
    // order; the report must say so rather than smooth it over.
    rep = verify_theorem("book-nonbip", 9, 2);
    CHECK(rep.formula_value == 20);
    CHECK(rep.search_value == 21);
    CHECK(rep.status == "MISMATCH");
    CHECK(rep.witness_ok);  // the construction still attains the formula
    CHECK(rep.note.find("large orders") != std::string::npos);
}

TEST_CASE("theorem reports: construction identity route") {
    TheoremReport rep = verify_theorem("oddcycle-nonbip", 10, 2);
    CHECK(rep.formula_value == 19);
    CHECK_FALSE(rep.searched);
    CHECK(rep.status == "VALUE-MATCH-ONLY");
    CHECK(rep.witness_ok);
    CHECK(rep.note.find("construction identity") != std::string::npos);
    REQUIRE(rep.expected_family.size() == 1);
    CHECK(rep.expected_family[0] == cert_of(turan_dot_c3(10)));
}

TEST_CASE("theorem reports: budget cutoffs are inconclusive") {
    SearchOptions opts;
    opts.budget = 50;
    TheoremReport rep = verify_theorem("book-nonbip", 9, 1, opts);
    CHECK_FALSE(rep.exact);
    CHECK(rep.status == "INCONCLUSIVE");
    CHECK(rep.note.find("budget") != std::string::npos);
}

TEST_CASE("theorem report validation") {
    CHECK_THROWS_AS(verify_theorem("nonsense", 7), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("mantel", 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("oddcycle", 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("oddcycle-nonbip", 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("turan", 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("brouwer", 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("edwards", 11, 2), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("book-nonbip", 6, 3), std::invalid_argument);
    CHECK(theorem_tags().size() == 8);
}
