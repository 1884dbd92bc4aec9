#include "perspectra/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"

#include "perspectra/census.hpp"
#include "perspectra/construct.hpp"
#include "perspectra/errors.hpp"
#include "perspectra/numroots.hpp"
#include "perspectra/permanent.hpp"
#include "perspectra/perpoly.hpp"
#include "perspectra/spectra.hpp"

namespace perspectra::cli {

namespace {

void apply_thread_env(std::ostream& err) {
    const char* env = std::getenv("PERSPECTRA_THREADS");
    if (!env || !*env) return;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) {
        err << "warning: ignoring invalid PERSPECTRA_THREADS value\n";
        return;
    }
#ifdef _OPENMP
    if (v > 0) omp_set_num_threads(static_cast<int>(v));
#endif
}

std::string format_root(std::complex<double> z, bool full) {
    char buf[80];
    if (full)
        std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    else
        std::snprintf(buf, sizeof buf, "%.2f%+.2fi", z.real() + 0.0, z.imag() + 0.0);
    return buf;
}

std::string format_roots(const std::vector<std::complex<double>>& roots, bool full) {
    std::string out;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (i) out += ' ';
        out += format_root(roots[i], full);
    }
    return out;
}

// --- graph sources ----------------------------------------------------------

int family_param(const std::string& digits) {
    try {
        return std::stoi(digits);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("family parameter out of range: " + digits);
    }
}

Graph parse_family_impl(const std::string& name) {
    std::smatch m;
    static const std::regex re_kmn(R"(K_?\{(\d+),(\d+)\}|K_?(\d+),(\d+))");
    static const std::regex re_one(R"(([KPCES])_?(\d+))");
    static const std::regex re_theta(R"([Tt]heta_?[(\{]?(\d+),(\d+),(\d+)[)\}]?)");
    static const std::regex re_g8(R"(G_?8)");
    static const std::regex re_g11(R"(G_?11)");

    if (std::regex_match(name, m, re_kmn)) {
        int a = family_param(m[1].matched ? m[1] : m[3]);
        int b = family_param(m[2].matched ? m[2] : m[4]);
        return complete_bipartite(a, b);
    }
    if (std::regex_match(name, m, re_theta))
        return theta_graph(family_param(m[1]), family_param(m[2]), family_param(m[3]));
    if (std::regex_match(name, m, re_g8)) return graph_g8();
    if (std::regex_match(name, m, re_g11)) return graph_g11();
    if (std::regex_match(name, m, re_one)) {
        const char kind = m[1].str()[0];
        const int n = family_param(m[2]);
        switch (kind) {
            case 'K': return complete_graph(n);
            case 'P': return path_graph(n);
            case 'C': return cycle_graph(n);
            case 'E': return empty_graph(n);
            case 'S': return star_graph(n);
        }
    }
    throw std::invalid_argument("unknown graph family: " + name);
}

struct GraphSource {
    std::string family;
    std::string graph6;
    std::string adjlist_path;

    Graph load() const {
        int given = !family.empty() + !graph6.empty() + !adjlist_path.empty();
        if (given != 1)
            throw std::invalid_argument("need exactly one of --family, --graph6, --adjlist");
        if (!family.empty()) return parse_family_impl(family);
        if (!graph6.empty()) return graph6_decode(graph6);
        std::ifstream in(adjlist_path);
        if (!in) throw std::invalid_argument("cannot open " + adjlist_path);
        return parse_adjacency_list(in);
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "graph family name, e.g. K_{2,3}, P_5, theta(1,2,3), G_8");
        cmd->add_option("--graph6", graph6, "graph6 string");
        cmd->add_option("--adjlist", adjlist_path, "adjacency list file: 'n m' then 'u v' lines");
    }
};

// --- subcommands -------------------------------------------------------------

int cmd_poly(const GraphSource& src, const std::string& engine_name, bool verify,
             std::ostream& out, std::ostream& err) {
    Graph g = src.load();
    EngineKind engine = EngineKind::Sachs;
    if (engine_name == "expansion") engine = EngineKind::Expansion;
    else if (engine_name == "recursive") engine = EngineKind::Recursive;
    else if (engine_name != "sachs")
        throw std::invalid_argument("unknown engine: " + engine_name);

    IntPoly p = per_poly(g, engine);
    out << p.to_string() << '\n';

    if (verify) {
        const EngineLimits limits;
        std::vector<std::string> ran;
        bool agree = true;
        for (auto [kind, name, cap] :
             {std::tuple{EngineKind::Sachs, "sachs", limits.sachs_max},
              std::tuple{EngineKind::Expansion, "expansion", limits.expansion_max},
              std::tuple{EngineKind::Recursive, "recursive", limits.recursive_max}}) {
            if (g.vertex_count() > cap) continue;
            ran.push_back(name);
            if (!(per_poly(g, kind) == p)) agree = false;
        }
        if (!agree) {
            err << "verify: engines disagree\n";
            return kUsage;
        }
        out << "verify: engines agree (";
        for (size_t i = 0; i < ran.size(); ++i) out << (i ? " " : "") << ran[i];
        out << ")\n";
    }
    return kOk;
}

int cmd_classify(const GraphSource& src, bool full_precision, bool as_json, std::ostream& out) {
    Graph g = src.load();
    PerSpecReport rep = is_in_G(g, true);
    if (as_json) {
        nlohmann::json j;
        j["in_G"] = rep.is_purely_imaginary;
        j["zero_multiplicity"] = rep.zero_multiplicity;
        j["bipartite_by_coeffs"] = rep.is_bipartite_by_coeffs;
        j["perpoly"] = rep.poly.to_string();
        j["roots"] = nlohmann::json::array();
        for (const auto& z : *rep.numeric_roots)
            j["roots"].push_back({z.real(), z.imag()});
        j["y_certificate"] = {
            {"total_degree", rep.y_certificate.total_degree},
            {"real_root_count_with_multiplicity",
             rep.y_certificate.real_root_count_with_multiplicity},
            {"nonneg_real_root_count_with_multiplicity",
             rep.y_certificate.nonneg_real_root_count_with_multiplicity},
        };
        out << j.dump() << '\n';
        return kOk;
    }
    out << "in_G,zero_multiplicity,bipartite_by_coeffs,perpoly,roots\n";
    out << (rep.is_purely_imaginary ? "true" : "false") << ',' << rep.zero_multiplicity << ','
        << (rep.is_bipartite_by_coeffs ? "true" : "false") << ',' << rep.poly.to_string() << ','
        << format_roots(*rep.numeric_roots, full_precision) << '\n';
    return kOk;
}

int cmd_scan(const std::string& family_name, int l_max, int k_max, const std::string& out_path,
             const std::string& svg_path, std::ostream& out) {
    ScanFamily family = parse_scan_family(family_name);
    ScanGrid grid = scan(family, l_max, k_max);
    if (out_path.empty()) {
        write_scan_csv(grid, out);
    } else {
        std::ofstream f(out_path);
        if (!f) {
            throw std::ios_base::failure("cannot write " + out_path);
        }
        write_scan_csv(grid, f);
        if (!f.good()) throw std::ios_base::failure("write failed: " + out_path);
    }
    if (!svg_path.empty()) {
        std::ofstream f(svg_path);
        if (!f) throw std::ios_base::failure("cannot write " + svg_path);
        write_scan_svg(grid, f);
        if (!f.good()) throw std::ios_base::failure("write failed: " + svg_path);
    }
    return kOk;
}

struct CensusRecord {
    std::string graph6;
    int n = 0;
    bool in_G = false;
    bool bipartite = false;
    bool has_even_subdiv_k23 = false;
    std::string perpoly;
};

CensusRecord make_record(const Graph& g) {
    CensusRecord r;
    r.n = g.vertex_count();
    r.graph6 = r.n <= 10 ? canonical_form(g) : graph6_encode(g);
    r.bipartite = is_bipartite(g);
    PerSpecReport rep = is_in_G(g);
    r.in_G = rep.is_purely_imaginary;
    r.has_even_subdiv_k23 = contains_even_subdivision_k23(g).has_value();
    r.perpoly = rep.poly.to_string();
    return r;
}

int cmd_census(int n, const std::string& stream_path, const std::string& out_path,
               std::ostream& out) {
    std::vector<Graph> graphs;
    long long skipped = 0;
    if (stream_path.empty()) {
        graphs = connected_bipartite_classes(n);  // throws CapError past n = 9
    } else {
        std::ifstream in(stream_path);
        if (!in) throw std::invalid_argument("cannot open " + stream_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            Graph g = graph6_decode(line);
            if (!is_connected(g) || !is_bipartite(g)) {
                ++skipped;
                continue;
            }
            graphs.push_back(std::move(g));
        }
    }

    std::vector<CensusRecord> records(graphs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(graphs.size()); ++i)
        records[static_cast<size_t>(i)] = make_record(graphs[static_cast<size_t>(i)]);

    long long total = static_cast<long long>(records.size());
    long long in_g = 0, in_g_with_subdiv = 0;
    std::ostringstream rows;
    rows << "graph6,n,in_G,bipartite,has_even_subdiv_k23,perpoly\n";
    for (const auto& r : records) {
        rows << r.graph6 << ',' << r.n << ',' << (r.in_G ? "true" : "false") << ','
             << (r.bipartite ? "true" : "false") << ','
             << (r.has_even_subdiv_k23 ? "true" : "false") << ',' << r.perpoly << '\n';
        in_g += r.in_G;
        in_g_with_subdiv += r.in_G && r.has_even_subdiv_k23;
    }

    if (out_path.empty()) {
        out << rows.str();
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::ios_base::failure("cannot write " + out_path);
        f << rows.str();
        if (!f.good()) throw std::ios_base::failure("write failed: " + out_path);
    }
    out << "# total=" << total << " in_G=" << in_g
        << " in_G_with_even_subdiv_k23=" << in_g_with_subdiv;
    if (!stream_path.empty()) out << " skipped_not_connected_bipartite=" << skipped;
    out << '\n';
    return kOk;
}

RootedGraph parse_host(const std::string& token, int root, bool root_given) {
    RootedGraph host;
    if (token == "K23deg3") {
        host = {complete_bipartite(2, 3), 0};
    } else if (token == "K23deg2") {
        host = {complete_bipartite(2, 3), 2};
    } else if (token == "K33") {
        host = {complete_bipartite(3, 3), 0};
    } else if (token.rfind("g6:", 0) == 0) {
        host = {graph6_decode(token.substr(3)), 0};
    } else {
        host = {parse_family_impl(token), 0};
    }
    if (root_given) host.root = root;
    if (host.root < 0 || host.root >= host.graph.vertex_count())
        throw std::invalid_argument("host root out of range");
    return host;
}

int cmd_construct(const std::string& host_token, int root, bool root_given,
                  const std::string& shape_name, int l, int k, const std::string& attach_g6,
                  int attach_root, std::ostream& out) {
    RootedGraph host = parse_host(host_token, root, root_given);
    out << "host: " << host_token << " n=" << host.graph.vertex_count() << " root=" << host.root
        << '\n';

    if (!attach_g6.empty()) {
        RootedGraph other{graph6_decode(attach_g6), attach_root};
        if (other.root < 0 || other.root >= other.graph.vertex_count())
            throw std::invalid_argument("attach root out of range");
        out << "attach: graph6=" << attach_g6 << " n=" << other.graph.vertex_count()
            << " root=" << other.root << '\n';
        RootedGraph merged = coalesce(host, other);
        out << "coalescence: n=" << merged.graph.vertex_count()
            << " graph6=" << graph6_encode(merged.graph) << '\n';
        IntPoly pi = schwenk_coalescence_poly(host, other);
        out << "pi: " << pi.to_string() << '\n';
        PerSpecReport rep = classify_perspec(pi);
        out << "in_G: " << (rep.is_purely_imaginary ? "true" : "false") << '\n';
        return kOk;
    }

    RootedTreeSpec spec;
    spec.shape = shape_name == "pathlike" ? TreeShape::Pathlike : TreeShape::Starlike;
    if (shape_name != "starlike" && shape_name != "pathlike")
        throw std::invalid_argument("shape must be starlike or pathlike");
    if (l < 0 || k < 0) throw std::invalid_argument("l and k must be nonnegative");
    spec.l = l;
    spec.k = k;
    out << "tree: " << shape_name << " l=" << l << " k=" << k
        << " n=" << (1ll + static_cast<long long>(k) * (l + 1)) << '\n';

    IntPoly h = h_poly(host, spec);
    out << "H: " << h.to_string() << '\n';

    // pi of the coalescence in closed form: pi(T')^{k-1} H for k >= 1
    IntPoly tp = spec.shape == TreeShape::Starlike ? star_poly(l) : path_poly(l + 1);
    IntPoly pi = k == 0 ? per_poly(host.graph, EngineKind::Sachs)
                        : tp.pow(static_cast<unsigned>(k - 1)) * h;
    out << "pi: " << pi.to_string() << '\n';

    const long long merged_n =
        host.graph.vertex_count() + static_cast<long long>(k) * (l + 1);
    const EngineLimits limits;
    if (k >= 1 && merged_n <= limits.sachs_max) {
        bool ok = verify_factorization(host, spec, limits);
        out << "factorization: " << (ok ? "ok" : "MISMATCH") << '\n';
    } else {
        out << "factorization: skipped (size)\n";
    }

    PerSpecReport rep = classify_perspec(h);
    out << "in_G: " << (rep.is_purely_imaginary ? "true" : "false") << '\n';
    return kOk;
}

}  // namespace

Graph parse_family(const std::string& name) { return parse_family_impl(name); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    apply_thread_env(err);

    CLI::App app{"permanental polynomials, purely imaginary per-spectra, and coalescence scans"};
    app.require_subcommand(1);

    // poly
    auto* poly = app.add_subcommand("poly", "print pi(G, x)");
    GraphSource poly_src;
    poly_src.attach(poly);
    std::string engine = "sachs";
    bool verify = false;
    poly->add_option("--engine", engine, "sachs|expansion|recursive")->capture_default_str();
    poly->add_flag("--verify", verify, "cross-check all engines within their caps");

    // classify
    auto* classify = app.add_subcommand("classify", "per-spectrum classification report");
    GraphSource cls_src;
    cls_src.attach(classify);
    bool full_precision = false, as_json = false;
    classify->add_flag("--full-precision", full_precision, "print roots at full precision");
    classify->add_flag("--json", as_json, "emit the report as a JSON object");

    // scan
    auto* scn = app.add_subcommand("scan", "exact (l,k) membership grid for a family");
    std::string scan_family;
    int l_max = 10, k_max = 30;
    std::string scan_out, scan_svg;
    scn->add_option("--family", scan_family,
                    "K23deg3xStarlike|K23deg3xPathlike|K23deg2xStarlike|"
                    "K23deg2xPathlike|K33xStarlike|K33xPathlike")
        ->required();
    scn->add_option("--l-max", l_max)->capture_default_str();
    scn->add_option("--k-max", k_max)->capture_default_str();
    scn->add_option("--out", scan_out, "CSV output path (default stdout)");
    scn->add_option("--svg", scan_svg, "optional SVG scatter path");

    // census
    auto* census = app.add_subcommand("census", "connected bipartite classes on n vertices");
    int census_n = 0;
    std::string stream_path, census_out;
    census->add_option("n", census_n, "vertex count (built-in enumeration up to 9)")->required();
    census->add_option("--graph6-stream", stream_path, "read graphs from a graph6 file instead");
    census->add_option("--out", census_out, "CSV output path (default stdout)");

    // construct
    auto* ctor = app.add_subcommand("construct", "coalescence of a rooted host with a rooted tree");
    std::string host_token, shape = "starlike", attach_g6;
    int root = 0, ctor_l = 0, ctor_k = 0, attach_root = 0;
    auto* host_opt = ctor->add_option("--host", host_token,
                                      "K23deg3|K23deg2|K33|theta(a,b,c)|family|g6:<string>");
    host_opt->required();
    auto* root_opt = ctor->add_option("--root", root, "host root vertex");
    ctor->add_option("--shape", shape, "starlike|pathlike")->capture_default_str();
    ctor->add_option("--l", ctor_l, "branch parameter l");
    ctor->add_option("--k", ctor_k, "branch count k");
    ctor->add_option("--attach-graph6", attach_g6,
                     "coalesce with this rooted graph instead of a tree");
    ctor->add_option("--attach-root", attach_root, "root vertex of the attached graph");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // drop program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (poly->parsed()) return cmd_poly(poly_src, engine, verify, out, err);
        if (classify->parsed()) return cmd_classify(cls_src, full_precision, as_json, out);
        if (scn->parsed()) return cmd_scan(scan_family, l_max, k_max, scan_out, scan_svg, out);
        if (census->parsed()) return cmd_census(census_n, stream_path, census_out, out);
        if (ctor->parsed())
            return cmd_construct(host_token, root, root_opt->count() > 0, shape, ctor_l, ctor_k,
                                 attach_g6, attach_root, out);
        err << "no subcommand given\n";
        return kUsage;
    } catch (const CapError& e) {
        err << "error: " << e.what() << '\n';
        return kCap;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return kOutput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInput;
    }
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace perspectra::cli
