#include "perspectra/construct.hpp"

#include <bit>
#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "perspectra/spectra.hpp"

namespace perspectra {

namespace {

bool looks_like_tree(const Graph& g) {
    return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

// Product over connected components; tree components go through the
// rooted-tree recursion so a large tree side never hits the engine caps.
IntPoly poly_of(const Graph& g, const EngineLimits& limits) {
    if (g.vertex_count() == 0) return IntPoly::one();
    IntPoly out = IntPoly::one();
    uint64_t remaining = g.full_mask();
    while (remaining) {
        int start = std::countr_zero(remaining);
        uint64_t comp = 1ull << start, frontier = comp;
        while (frontier) {
            uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g.neighbors(v) & remaining & ~comp;
            }
            comp |= next;
            frontier = next;
        }
        remaining &= ~comp;
        Graph part = induced_subgraph(g, comp);
        out = out * (looks_like_tree(part) ? per_poly_rooted_tree({part, 0})
                                           : per_poly(part, EngineKind::Sachs, limits));
    }
    return out;
}

IntPoly poly_without_vertex(const Graph& g, int v, const EngineLimits& limits) {
    return poly_of(delete_vertices(g, {v}), limits);
}

// pi(T') and pi(T' - u') for the uniform branch of a starlike/pathlike tree
std::pair<IntPoly, IntPoly> branch_polys(const RootedTreeSpec& spec) {
    if (spec.shape == TreeShape::Starlike)
        return {star_poly(spec.l), IntPoly::monomial(1, spec.l)};
    return {path_poly(spec.l + 1), path_poly(spec.l)};
}

}  // namespace

IntPoly schwenk_coalescence_poly(const RootedGraph& g1, const RootedGraph& g2,
                                 const EngineLimits& limits) {
    const IntPoly p1 = poly_of(g1.graph, limits);
    const IntPoly p1r = poly_without_vertex(g1.graph, g1.root, limits);
    const IntPoly p2 = poly_of(g2.graph, limits);
    const IntPoly p2r = poly_without_vertex(g2.graph, g2.root, limits);
    return p1 * p2r + p1r * p2 - IntPoly::x() * p1r * p2r;
}

IntPoly h_poly(const RootedGraph& g1, const RootedTreeSpec& spec, const EngineLimits& limits) {
    if (spec.l < 0 || spec.k < 0) throw std::invalid_argument("h_poly: l, k must be nonnegative");
    auto [tp, tpu] = branch_polys(spec);
    const IntPoly p1 = poly_of(g1.graph, limits);
    const IntPoly p1r = poly_without_vertex(g1.graph, g1.root, limits);
    return p1 * tp + Int(spec.k) * (p1r * tpu);
}

bool membership_predicate(HostRoot host, int l, int k) {
    if (l < 0 || k < 0) throw std::invalid_argument("membership_predicate: l, k must be nonnegative");
    if (host == HostRoot::K23deg3) return (l <= 3 && l + k >= 4) || (l >= 4 && k >= 2 * l - 4);
    return l + k >= 4 && l <= 2;
}

const char* to_string(ScanFamily f) {
    switch (f) {
        case ScanFamily::K23deg3xStarlike: return "K23deg3xStarlike";
        case ScanFamily::K23deg3xPathlike: return "K23deg3xPathlike";
        case ScanFamily::K23deg2xStarlike: return "K23deg2xStarlike";
        case ScanFamily::K23deg2xPathlike: return "K23deg2xPathlike";
        case ScanFamily::K33xStarlike: return "K33xStarlike";
        case ScanFamily::K33xPathlike: return "K33xPathlike";
    }
    return "?";
}

ScanFamily parse_scan_family(const std::string& name) {
    for (ScanFamily f :
         {ScanFamily::K23deg3xStarlike, ScanFamily::K23deg3xPathlike,
          ScanFamily::K23deg2xStarlike, ScanFamily::K23deg2xPathlike, ScanFamily::K33xStarlike,
          ScanFamily::K33xPathlike})
        if (name == to_string(f)) return f;
    throw std::invalid_argument("unknown scan family: " + name);
}

RootedGraph scan_host(ScanFamily f) {
    switch (f) {
        case ScanFamily::K23deg3xStarlike:
        case ScanFamily::K23deg3xPathlike:
            return {complete_bipartite(2, 3), 0};  // vertex 0 has degree 3
        case ScanFamily::K23deg2xStarlike:
        case ScanFamily::K23deg2xPathlike:
            return {complete_bipartite(2, 3), 2};  // vertex 2 has degree 2
        case ScanFamily::K33xStarlike:
        case ScanFamily::K33xPathlike:
            return {complete_bipartite(3, 3), 0};
    }
    throw std::logic_error("scan_host: unknown family");
}

TreeShape scan_shape(ScanFamily f) {
    switch (f) {
        case ScanFamily::K23deg3xStarlike:
        case ScanFamily::K23deg2xStarlike:
        case ScanFamily::K33xStarlike:
            return TreeShape::Starlike;
        default:
            return TreeShape::Pathlike;
    }
}

namespace {

ScanGrid scan_impl(ScanFamily family, int l_max, int k_max, bool parallel) {
    if (l_max < 0 || k_max < 0) throw std::invalid_argument("scan: bounds must be nonnegative");
    ScanGrid grid;
    grid.family = family;
    grid.l_max = l_max;
    grid.k_max = k_max;
    grid.cells.assign(static_cast<size_t>(l_max + 1) * (k_max + 1), 0);

    const RootedGraph host = scan_host(family);
    const TreeShape shape = scan_shape(family);
    const EngineLimits limits;
    // host polynomials are shared by every cell
    const IntPoly p1 = per_poly(host.graph, EngineKind::Sachs, limits);
    const IntPoly p1r =
        per_poly(delete_vertices(host.graph, {host.root}), EngineKind::Sachs, limits);

    const long long ncells = static_cast<long long>(l_max + 1) * (k_max + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (long long idx = 0; idx < ncells; ++idx) {
        const int l = static_cast<int>(idx / (k_max + 1));
        const int k = static_cast<int>(idx % (k_max + 1));
        RootedTreeSpec spec{shape, l, k};
        auto [tp, tpu] = branch_polys(spec);
        IntPoly h = p1 * tp + Int(k) * (p1r * tpu);
        grid.cells[static_cast<size_t>(idx)] =
            classify_perspec(h).is_purely_imaginary ? 1 : 0;
    }
    (void)parallel;
    return grid;
}

}  // namespace

ScanGrid scan(ScanFamily family, int l_max, int k_max) {
    return scan_impl(family, l_max, k_max, true);
}

ScanGrid scan_serial(ScanFamily family, int l_max, int k_max) {
    return scan_impl(family, l_max, k_max, false);
}

bool verify_factorization(const RootedGraph& g1, const RootedTreeSpec& spec,
                          const EngineLimits& limits) {
    if (spec.k < 1) throw std::invalid_argument("verify_factorization: requires k >= 1");
    RootedGraph tree = build_rooted_tree(spec);
    RootedGraph merged = coalesce(g1, tree);
    IntPoly direct = per_poly(merged.graph, EngineKind::Sachs, limits);
    auto [tp, tpu] = branch_polys(spec);
    IntPoly rhs = tp.pow(static_cast<unsigned>(spec.k - 1)) * h_poly(g1, spec, limits);
    return direct == rhs;
}

void write_scan_csv(const ScanGrid& grid, std::ostream& out) {
    out << "family,l,k,in_G\n";
    for (int l = 0; l <= grid.l_max; ++l)
        for (int k = 0; k <= grid.k_max; ++k)
            out << to_string(grid.family) << ',' << l << ',' << k << ','
                << (grid.cell(l, k) ? "true" : "false") << '\n';
}

void write_scan_svg(const ScanGrid& grid, std::ostream& out) {
    const int pitch = 20, margin = 40;
    const int w = margin + (grid.l_max + 1) * pitch + 10;
    const int h = margin + (grid.k_max + 1) * pitch + 10;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n";
    out << "<text x=\"" << (w / 2) << "\" y=\"" << (h - 4) << "\" font-size=\"12\">l</text>\n";
    out << "<text x=\"8\" y=\"" << (h / 2) << "\" font-size=\"12\">k</text>\n";
    for (int l = 0; l <= grid.l_max; ++l) {
        for (int k = 0; k <= grid.k_max; ++k) {
            const int cx = margin + l * pitch;
            const int cy = h - margin - k * pitch;
            out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"5\" "
                << (grid.cell(l, k) ? "fill=\"black\""
                                    : "fill=\"none\" stroke=\"black\" stroke-width=\"1\"")
                << "/>\n";
        }
    }
    out << "</svg>\n";
}

}  // namespace perspectra
