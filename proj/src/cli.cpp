#include "bookturan/cli.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bookturan/cache.hpp"
#include "bookturan/canonical.hpp"
#include "bookturan/constructions.hpp"
#include "bookturan/diagnostics.hpp"
#include "bookturan/graph_io.hpp"
#include "bookturan/properties.hpp"
#include "bookturan/search.hpp"
#include "bookturan/verify.hpp"

namespace bookturan {

namespace {

using nlohmann::json;

// Machine-readable lines carry a schema version so stale output from older
// builds is detectable.
constexpr int records_schema = 1;

std::string read_all(const std::string& path, std::istream& fallback) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << fallback.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw std::invalid_argument("cannot open " + path);
        buf << file.rdbuf();
    }
    return buf.str();
}

// One graph6 graph per nonempty line, from a file or the fallback stream.
std::vector<Graph> read_graph6_lines(const std::string& path, std::istream& fallback) {
    std::istringstream in(read_all(path, fallback));
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        graphs.push_back(parse_graph6(line));
    }
    return graphs;
}

void emit_graph(const Graph& g, const std::string& format, const std::string& spec,
                std::ostream& out) {
    if (format == "graph6") {
        out << emit_graph6(g) << "\n";
    } else if (format == "dot") {
        out << emit_dot(g);
    } else if (format == "edges") {
        out << emit_edge_list(g);
    } else if (format == "records") {
        json j;
        j["schema"] = records_schema;
        j["type"] = "graph";
        j["n"] = g.order();
        j["edges"] = g.edge_count();
        j["graph6"] = emit_graph6(g);
        if (!spec.empty()) j["spec"] = spec;
        out << j.dump() << "\n";
    } else {  // table
        if (!spec.empty()) out << "spec    " << spec << "\n";
        out << "order   " << g.order() << "\n"
            << "edges   " << g.edge_count() << "\n"
            << "graph6  " << emit_graph6(g) << "\n";
    }
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

// ---- construct ----

struct ConstructArgs {
    std::string family;
    int n = 0, k = 0, r = 0, s1 = 0, t1 = 0;
    std::string format = "graph6";
};

// The flag set is reassembled into spec text so the parser stays the single
// authority on which keys each family accepts.
int run_construct(const ConstructArgs& a, const CLI::App& sub, std::ostream& out) {
    std::ostringstream text;
    text << a.family << " n=" << a.n;
    if (sub.count("--k")) text << " k=" << a.k;
    if (sub.count("--r")) text << " r=" << a.r;
    if (sub.count("--s1")) text << " s1=" << a.s1;
    if (sub.count("--t1")) text << " t1=" << a.t1;
    FamilySpec spec = FamilySpec::parse(text.str());
    emit_graph(spec.build(), a.format, spec.to_string(), out);
    return 0;
}

// ---- check / booksize ----

struct CheckArgs {
    std::string input;
    int clique_cap = 4;
    std::string format = "table";
};

int run_check(const CheckArgs& a, std::istream& in, std::ostream& out) {
    std::vector<Graph> graphs = read_graph6_lines(a.input, in);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        int book = booksize(g);
        BipartiteCheck bip = is_bipartite(g);
        std::optional<int> og = odd_girth(g);
        int clique = max_clique_size_upto(g, a.clique_cap);
        if (a.format == "records") {
            json j;
            j["schema"] = records_schema;
            j["type"] = "check";
            j["graph"] = i + 1;
            j["n"] = g.order();
            j["edges"] = g.edge_count();
            j["booksize"] = book;
            j["bipartite"] = bip.bipartite;
            j["odd_girth"] = og ? json(*og) : json(nullptr);
            j["clique_cap"] = a.clique_cap;
            j["max_clique"] = clique;
            out << j.dump() << "\n";
        } else {
            out << "graph " << i + 1 << ": n=" << g.order() << " edges=" << g.edge_count()
                << " booksize=" << book << " bipartite=" << yesno(bip.bipartite)
                << " odd_girth=";
            if (og)
                out << *og;
            else
                out << "none";
            out << " clique_up_to_" << a.clique_cap << "=" << clique << "\n";
        }
    }
    return 0;
}

int run_booksize(const CheckArgs& a, std::istream& in, std::ostream& out) {
    std::vector<Graph> graphs = read_graph6_lines(a.input, in);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        int book = booksize(graphs[i]);
        if (a.format == "records") {
            json j;
            j["schema"] = records_schema;
            j["type"] = "booksize";
            j["graph"] = i + 1;
            j["booksize"] = book;
            out << j.dump() << "\n";
        } else {
            out << book << "\n";
        }
    }
    return 0;
}

// ---- search ----

struct SearchArgs {
    int n = 0, r = 0, k = 0, min_odd_girth = 0, non_k_partite = 0;
    bool non_bipartite = false;
    long long budget = 0;
    int threads = 1;
    std::string cache_dir;
    std::string format = "table";
};

SearchCache resolve_cache(const std::string& flag_dir) {
    if (!flag_dir.empty()) return SearchCache(flag_dir);
    return SearchCache(SearchCache::default_dir());
}

SearchOutcome cached_solve(const SearchProblem& p, const SearchOptions& opts,
                           SearchCache& cache, std::ostream& err) {
    std::ostringstream warnings;
    if (auto hit = cache.lookup(p, &warnings)) {
        err << warnings.str();
        return *hit;
    }
    err << warnings.str();
    SearchOutcome outcome = solve(p, opts);
    cache.store(p, outcome);
    return outcome;
}

int run_search(const SearchArgs& a, const CLI::App& sub, std::ostream& out,
               std::ostream& err) {
    SearchProblem p;
    p.n = a.n;
    if (sub.count("--r")) p.max_booksize = a.r;
    if (sub.count("--k")) p.forbid_clique = a.k;
    if (sub.count("--min-odd-girth")) p.min_odd_girth = a.min_odd_girth;
    if (sub.count("--non-k-partite")) p.require_non_k_partite = a.non_k_partite;
    p.require_non_bipartite = a.non_bipartite;
    p.validate();

    SearchOptions opts;
    opts.budget = a.budget;
    opts.threads = a.threads;
    SearchCache cache = resolve_cache(a.cache_dir);
    SearchOutcome outcome = cached_solve(p, opts, cache, err);

    if (a.format == "records") {
        json j;
        j["schema"] = records_schema;
        j["type"] = "search";
        j["key"] = p.key();
        j["max_edges"] = outcome.max_edges;
        j["exact"] = outcome.exact;
        j["explored"] = outcome.explored;
        j["extremal"] = outcome.extremal;
        out << j.dump() << "\n";
    } else {
        out << "problem    " << p.key() << "\n"
            << "max edges  " << outcome.max_edges << "\n"
            << "exact      " << yesno(outcome.exact);
        if (!outcome.exact) out << "  (budget exhausted; bound is best found)";
        out << "\n"
            << "explored   " << outcome.explored << "\n"
            << "extremal   " << outcome.extremal.size() << "\n";
        for (const auto& cert : outcome.extremal) out << cert << "\n";
    }
    return 0;
}

// ---- verify ----

struct VerifyArgs {
    std::string tag;
    int n = 0, r = 0, k = 0;
    long long budget = 0;
    int threads = 1;
    std::string cache_dir;
    std::string format = "table";
};

int run_verify(const VerifyArgs& a, const CLI::App& sub, std::ostream& out) {
    int param = sub.count("--r") ? a.r : (sub.count("--k") ? a.k : 0);
    SearchOptions opts;
    opts.budget = a.budget;
    opts.threads = a.threads;
    SearchCache cache = resolve_cache(a.cache_dir);
    TheoremReport rep = verify_theorem(a.tag, a.n, param, opts, &cache);

    if (a.format == "records") {
        json j;
        j["schema"] = records_schema;
        j["type"] = "verify";
        j["tag"] = rep.tag;
        j["n"] = rep.n;
        j["param"] = rep.param;
        j["formula_value"] = rep.formula_value;
        j["searched"] = rep.searched;
        j["search_value"] = rep.search_value;
        j["exact"] = rep.exact;
        j["explored"] = rep.explored;
        j["value_match"] = rep.value_match;
        j["family_known"] = rep.family_known;
        j["family_match"] = rep.family_match;
        j["family_contained"] = rep.family_contained;
        j["witness_ok"] = rep.witness_ok;
        j["status"] = rep.status;
        j["note"] = rep.note;
        j["extremal"] = rep.extremal;
        j["expected_family"] = rep.expected_family;
        out << j.dump() << "\n";
    } else {
        out << "tag        " << rep.tag << "\n"
            << "n          " << rep.n << "\n";
        if (rep.param) out << "param      " << rep.param << "\n";
        out << "formula    " << rep.formula_value << "\n";
        if (rep.searched)
            out << "search     " << rep.search_value << "\n"
                << "exact      " << yesno(rep.exact) << "\n"
                << "extremal   " << rep.extremal.size() << "\n";
        out << "expected   " << rep.expected_family.size() << "\n"
            << "value      " << yesno(rep.value_match) << "\n";
        if (rep.family_known) out << "family     " << yesno(rep.family_match) << "\n";
        out << "contained  " << yesno(rep.family_contained) << "\n"
            << "witness    " << yesno(rep.witness_ok) << "\n"
            << "status     " << rep.status << "\n";
        if (!rep.note.empty()) out << "note       " << rep.note << "\n";
    }
    return rep.status == "MISMATCH" || rep.status == "INCONCLUSIVE" ? 1 : 0;
}

// ---- diagnose ----

struct DiagnoseArgs {
    std::string input;
    std::string family;
    std::string epsilon = "1e-4";
    int r = 1;
    std::uint64_t seed = 1;
    std::string format = "table";
};

json containment_json(const ContainmentReport& rep) {
    json j;
    j["eps"] = rep.eps_text;
    j["r"] = rep.r;
    j["cut_exact"] = rep.cut_exact;
    j["internal_edges"] = rep.internal_edges;
    j["internal_within_cap"] = rep.internal_within_cap;
    j["low_degree"] = rep.low_degree;
    j["w1"] = rep.internal_sets.w1;
    j["w2"] = rep.internal_sets.w2;
    j["w"] = rep.internal_sets.w;
    j["w_subset_l"] = rep.w_subset_l;
    j["bipartite"] = rep.bipartite;
    j["cycle"] = rep.cycle;
    j["cycle_is_triangle"] = rep.cycle_is_triangle;
    j["l_subset_cycle"] = rep.l_subset_cycle;
    j["s_rest"] = rep.s_rest;
    j["t_rest"] = rep.t_rest;
    return j;
}

json structure_json(const StructureReport& rep) {
    json j;
    j["cycle"] = rep.cycle;
    j["cycle_is_triangle"] = rep.cycle_is_triangle;
    j["rest_bipartite"] = rep.rest_bipartite;
    j["labeling_found"] = rep.labeling_found;
    j["w"] = rep.w;
    j["s_size"] = rep.s_size;
    j["t_size"] = rep.t_size;
    j["s_sum"] = rep.s_sum;
    j["t_sum"] = rep.t_sum;
    j["s_equal"] = rep.s_equal;
    j["t_equal"] = rep.t_equal;
    j["s_at_most"] = rep.s_at_most;
    j["t_at_most"] = rep.t_at_most;
    j["rest_is_balanced_bipartite"] = rep.rest_is_balanced_bipartite;
    j["note"] = rep.note;
    return j;
}

void print_vertices(std::ostream& out, const std::vector<int>& verts) {
    if (verts.empty()) {
        out << "(empty)";
        return;
    }
    if (verts.size() > 16) {
        out << verts.size() << " vertices";
        return;
    }
    for (std::size_t i = 0; i < verts.size(); ++i) out << (i ? " " : "") << verts[i];
}

void print_containment(const ContainmentReport& rep, std::ostream& out) {
    out << "containment  eps=" << rep.eps_text << " r=" << rep.r << "\n"
        << "  cut            " << (rep.cut_exact ? "exact" : "heuristic")
        << ", internal edges " << rep.internal_edges << "\n"
        << "  internal cap   " << (rep.internal_within_cap ? "PASS" : "FAIL")
        << " (e(S)+e(T) <= eps n^2)\n"
        << "  low degree L   ";
    print_vertices(out, rep.low_degree);
    out << "\n  internal W     ";
    print_vertices(out, rep.internal_sets.w);
    out << "\n  W inside L     " << (rep.w_subset_l ? "PASS" : "FAIL") << "\n";
    if (rep.bipartite) {
        out << "  odd cycle      none (bipartite); cycle checks not applicable\n";
    } else {
        out << "  odd girth 3    " << (rep.cycle_is_triangle ? "PASS" : "FAIL")
            << " (cycle ";
        print_vertices(out, rep.cycle);
        out << ")\n"
            << "  L inside C     " << (rep.l_subset_cycle ? "PASS" : "FAIL") << "\n";
    }
    out << "  leftovers      |S~|=" << rep.s_rest.size() << " |T~|=" << rep.t_rest.size()
        << "\n";
}

void print_structure(const StructureReport& rep, std::ostream& out) {
    out << "structure    r=" << rep.r << "\n"
        << "  cycle          ";
    print_vertices(out, rep.cycle);
    out << (rep.cycle_is_triangle ? " (triangle)" : " (longer than a triangle)") << "\n"
        << "  rest           " << (rep.rest_bipartite ? "bipartite" : "not bipartite")
        << ", |S*|=" << rep.s_size << " |T*|=" << rep.t_size
        << (rep.rest_is_balanced_bipartite ? ", balanced complete bipartite" : "")
        << "\n";
    if (rep.labeling_found) {
        out << "  labeling       w1=" << rep.w[0] << " w2=" << rep.w[1]
            << " w3=" << rep.w[2] << "\n"
            << "  s side         sum " << rep.s_sum << " vs |S*|+r-1 = "
            << rep.s_size + rep.r - 1 << "  " << (rep.s_equal ? "EQUAL" : "NOT EQUAL")
            << (rep.s_at_most ? "" : ", EXCEEDS") << "\n"
            << "  t side         sum " << rep.t_sum << " vs |T*|+r-1 = "
            << rep.t_size + rep.r - 1 << "  " << (rep.t_equal ? "EQUAL" : "NOT EQUAL")
            << (rep.t_at_most ? "" : ", EXCEEDS") << "\n";
    } else {
        out << "  labeling       none found\n";
    }
    if (!rep.note.empty()) out << "  note           " << rep.note << "\n";
}

int run_diagnose(const DiagnoseArgs& a, std::istream& in, std::ostream& out) {
    std::vector<Graph> graphs;
    std::string spec_text;
    if (!a.family.empty()) {
        FamilySpec spec = FamilySpec::parse(a.family);
        spec_text = spec.to_string();
        graphs.push_back(spec.build());
    } else {
        graphs = read_graph6_lines(a.input, in);
    }

    EpsilonParams params;
    params.eps = DecimalRational::parse(a.epsilon);
    params.r = a.r;

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const Graph& g = graphs[i];
        ContainmentReport crep = containment_report(g, params, a.seed);

        std::optional<StructureReport> srep;
        std::string skip_reason;
        if (crep.bipartite)
            skip_reason = "bipartite graph: no odd cycle to remove";
        else if (g.order() > max_certificate_order)
            skip_reason = "order above the certificate cap";
        else
            srep = extremal_structure_report(g, a.r);

        if (a.format == "records") {
            json j;
            j["schema"] = records_schema;
            j["type"] = "diagnose";
            j["graph"] = i + 1;
            if (!spec_text.empty()) j["spec"] = spec_text;
            j["n"] = g.order();
            j["edges"] = g.edge_count();
            j["containment"] = containment_json(crep);
            j["structure"] = srep ? structure_json(*srep) : json(nullptr);
            if (!skip_reason.empty()) j["structure_skipped"] = skip_reason;
            out << j.dump() << "\n";
        } else {
            out << "graph " << i + 1 << ": n=" << g.order() << " edges=" << g.edge_count();
            if (!spec_text.empty()) out << " (" << spec_text << ")";
            out << "\n";
            print_containment(crep, out);
            if (srep)
                print_structure(*srep, out);
            else
                out << "structure    skipped: " << skip_reason << "\n";
        }
    }
    return 0;
}

// ---- convert ----

struct ConvertArgs {
    std::string from = "graph6";
    std::string to;
    std::string input;
};

int run_convert(const ConvertArgs& a, std::istream& in, std::ostream& out) {
    std::vector<Graph> graphs;
    if (a.from == "edges")
        graphs.push_back(parse_edge_list(read_all(a.input, in)));
    else
        graphs = read_graph6_lines(a.input, in);
    for (const Graph& g : graphs) emit_graph(g, a.to, "", out);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"extremal graph families: construct, check, search, verify, diagnose",
                 "bookturan"};
    app.require_subcommand(1);

    int status = 0;
    const std::vector<std::string> formats{"table", "records"};
    const std::vector<std::string> graph_formats{"table", "records", "graph6", "dot",
                                                 "edges"};

    ConstructArgs cons;
    CLI::App* construct = app.add_subcommand(
        "construct", "build one graph from a family name and parameters");
    construct->add_option("family", cons.family, "family name")
        ->required()
        ->check(CLI::IsMember({"turan", "g0c3", "g1b2", "krr", "turandotc3"}));
    construct->add_option("--n", cons.n, "vertex count")->required();
    construct->add_option("--k", cons.k, "part count (turan)");
    construct->add_option("--r", cons.r, "hub degree per side (krr)");
    construct->add_option("--s1", cons.s1, "piece of the smaller side (g1b2)");
    construct->add_option("--t1", cons.t1, "piece of the larger side (g0c3, g1b2)");
    construct->add_option("--format", cons.format, "output format")
        ->check(CLI::IsMember(graph_formats));
    construct->callback([&] { status = run_construct(cons, *construct, out); });

    CheckArgs chk;
    CLI::App* check = app.add_subcommand(
        "check", "report properties of graphs (graph6, one per line)");
    check->add_option("input", chk.input, "input file, - or absent for stdin");
    check->add_option("--k", chk.clique_cap, "clique search cap");
    check->add_option("--format", chk.format, "output format")
        ->check(CLI::IsMember(formats));
    check->callback([&] { status = run_check(chk, in, out); });

    CheckArgs bsz;
    CLI::App* book = app.add_subcommand("booksize", "booksize of each input graph");
    book->add_option("input", bsz.input, "input file, - or absent for stdin");
    book->add_option("--format", bsz.format, "output format")
        ->check(CLI::IsMember(formats));
    book->callback([&] { status = run_booksize(bsz, in, out); });

    SearchArgs srch;
    CLI::App* search = app.add_subcommand(
        "search", "exact edge maximum and all extremal graphs for a constraint set");
    search->add_option("--n", srch.n, "vertex count")->required();
    search->add_option("--r", srch.r, "booksize bound");
    search->add_option("--k", srch.k, "forbid the complete graph on k vertices");
    search->add_option("--min-odd-girth", srch.min_odd_girth,
                       "forbid odd cycles shorter than this");
    search->add_flag("--non-bipartite", srch.non_bipartite, "require an odd cycle");
    search->add_option("--non-k-partite", srch.non_k_partite,
                       "require chromatic number above k");
    search->add_option("--budget", srch.budget, "expansion-step limit, 0 = unlimited");
    search->add_option("--threads", srch.threads, "worker threads");
    search->add_option("--cache-dir", srch.cache_dir,
                       "outcome cache (default: BOOKTURAN_CACHE_DIR or ~/.cache)");
    search->add_option("--format", srch.format, "output format")
        ->check(CLI::IsMember(formats));
    search->callback([&] { status = run_search(srch, *search, out, err); });

    VerifyArgs ver;
    CLI::App* verify = app.add_subcommand(
        "verify", "compare a closed-form statement against the search");
    verify->add_option("tag", ver.tag, "statement tag")
        ->required()
        ->check(CLI::IsMember(theorem_tags()));
    verify->add_option("--n", ver.n, "vertex count")->required();
    verify->add_option("--r", ver.r, "book or part parameter");
    verify->add_option("--k", ver.k, "odd-cycle parameter");
    verify->add_option("--budget", ver.budget, "expansion-step limit, 0 = unlimited");
    verify->add_option("--threads", ver.threads, "worker threads");
    verify->add_option("--cache-dir", ver.cache_dir,
                       "outcome cache (default: BOOKTURAN_CACHE_DIR or ~/.cache)");
    verify->add_option("--format", ver.format, "output format")
        ->check(CLI::IsMember(formats));
    verify->callback([&] { status = run_verify(ver, *verify, out); });

    DiagnoseArgs diag;
    CLI::App* diagnose = app.add_subcommand(
        "diagnose", "cut, degree-set and structure reports for concrete graphs");
    diagnose->add_option("input", diag.input, "input file, - or absent for stdin");
    diagnose->add_option("--family", diag.family,
                         "build the graph from a family spec instead, e.g. 'krr n=601 r=2'");
    diagnose->add_option("--epsilon", diag.epsilon, "threshold parameter, decimal");
    diagnose->add_option("--r", diag.r, "book parameter");
    diagnose->add_option("--seed", diag.seed, "base seed for heuristic-cut restarts");
    diagnose->add_option("--format", diag.format, "output format")
        ->check(CLI::IsMember(formats));
    diagnose->callback([&] { status = run_diagnose(diag, in, out); });

    ConvertArgs conv;
    CLI::App* convert = app.add_subcommand("convert", "translate between graph formats");
    convert->add_option("--from", conv.from, "input format")
        ->check(CLI::IsMember({"graph6", "edges"}));
    convert->add_option("--to", conv.to, "output format")
        ->required()
        ->check(CLI::IsMember(graph_formats));
    convert->add_option("input", conv.input, "input file, - or absent for stdin");
    convert->callback([&] { status = run_convert(conv, in, out); });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}

}  // namespace bookturan
