#include "perspectra/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "perspectra/errors.hpp"

namespace perspectra {

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph: vertex count must be in [0, 64]");
    adj_.assign(static_cast<size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex out of range");
}

int Graph::edge_count() const {
    int total = 0;
    for (uint64_t row : adj_) total += std::popcount(row);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("graph: no loops");
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~(1ull << v);
    adj_[v] &= ~(1ull << u);
}

uint64_t Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        uint64_t higher = adj_[u] >> (u + 1);
        while (higher) {
            int v = u + 1 + std::countr_zero(higher);
            out.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return out;
}

// --- named families ------------------------------------------------------

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("invalid family parameter");
    Graph g(m + n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("invalid family parameter");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("invalid family parameter");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("invalid family parameter");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star_graph(int n) {
    if (n < 0) throw std::invalid_argument("invalid family parameter");
    Graph g(n + 1);
    for (int i = 1; i <= n; ++i) g.add_edge(0, i);
    return g;
}

Graph empty_graph(int n) {
    if (n < 0) throw std::invalid_argument("invalid family parameter");
    return Graph(n);
}

Graph theta_graph(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("invalid family parameter");
    Graph g(a + b + c + 2);
    const int u = 0, v = 1;
    int next = 2;
    for (int len : {a, b, c}) {
        int prev = u;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, v);
    }
    return g;
}

Graph graph_g8() {
    // subdivide one edge of K_{2,4} twice
    Graph k24 = complete_bipartite(2, 4);
    return subdivide_edge(k24, 0, 2, 2);
}

Graph graph_g11() {
    // K_{3,3}: subdivide two edges at vertex 0 twice each, then hang a
    // pendant vertex off 0
    Graph g = complete_bipartite(3, 3);
    g = subdivide_edge(g, 0, 3, 2);
    g = subdivide_edge(g, 0, 4, 2);
    Graph h(g.vertex_count() + 1);
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    h.add_edge(0, g.vertex_count());
    return h;
}

RootedGraph build_rooted_tree(const RootedTreeSpec& spec) {
    if (spec.l < 0 || spec.k < 0)
        throw std::invalid_argument("rooted tree spec: l and k must be nonnegative");
    const long long total = 1ll + static_cast<long long>(spec.k) * (spec.l + 1);
    if (total > Graph::kMaxVertices)
        throw CapError("rooted tree exceeds the 64-vertex graph limit");
    Graph g(static_cast<int>(total));
    int next = 1;
    for (int b = 0; b < spec.k; ++b) {
        int head = next++;
        g.add_edge(0, head);
        if (spec.shape == TreeShape::Starlike) {
            for (int i = 0; i < spec.l; ++i) g.add_edge(head, next++);
        } else {
            int prev = head;
            for (int i = 0; i < spec.l; ++i) {
                g.add_edge(prev, next);
                prev = next++;
            }
        }
    }
    return {std::move(g), 0};
}

// --- structural operations -----------------------------------------------

Graph subdivide_edge(const Graph& g, int u, int v, int times) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
    if (times < 0) throw std::invalid_argument("subdivide_edge: negative count");
    if (times == 0) return g;
    if (g.vertex_count() + times > Graph::kMaxVertices)
        throw CapError("subdivision exceeds the 64-vertex graph limit");
    Graph h(g.vertex_count() + times);
    for (auto [a, b] : g.edges())
        if (!(a == std::min(u, v) && b == std::max(u, v))) h.add_edge(a, b);
    int prev = u;
    for (int i = 0; i < times; ++i) {
        int w = g.vertex_count() + i;
        h.add_edge(prev, w);
        prev = w;
    }
    h.add_edge(prev, v);
    return h;
}

RootedGraph coalesce(const RootedGraph& g1, const RootedGraph& g2) {
    const Graph& a = g1.graph;
    const Graph& b = g2.graph;
    if (g1.root < 0 || g1.root >= a.vertex_count() || g2.root < 0 ||
        g2.root >= b.vertex_count())
        throw std::invalid_argument("coalesce: root out of range");
    const int n = a.vertex_count() + b.vertex_count() - 1;
    if (n > Graph::kMaxVertices)
        throw CapError("coalescence exceeds the 64-vertex graph limit");
    Graph h(n);
    for (auto [u, v] : a.edges()) h.add_edge(u, v);
    // vertices of b keep their relative order, skipping its root
    std::vector<int> map(b.vertex_count());
    int next = a.vertex_count();
    for (int v = 0; v < b.vertex_count(); ++v)
        map[v] = (v == g2.root) ? g1.root : next++;
    for (auto [u, v] : b.edges()) h.add_edge(map[u], map[v]);
    return {std::move(h), g1.root};
}

Graph induced_subgraph(const Graph& g, uint64_t keep_mask) {
    std::vector<int> map(g.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((keep_mask >> v) & 1u) map[v] = next++;
    Graph h(next);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (map[v] < 0) continue;
        uint64_t nb = g.neighbors(v) & keep_mask;
        while (nb) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (u > v) h.add_edge(map[v], map[u]);
        }
    }
    return h;
}

Graph delete_vertices(const Graph& g, const std::vector<int>& s) {
    uint64_t drop = 0;
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("delete_vertices: vertex out of range");
        drop |= 1ull << v;
    }
    return induced_subgraph(g, g.full_mask() & ~drop);
}

std::optional<std::array<uint64_t, 2>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::array<uint64_t, 2> parts{0, 0};
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        parts[0] |= 1ull << s;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            uint64_t nb = g.neighbors(v);
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[u] < 0) {
                    color[u] = 1 - color[v];
                    parts[color[u]] |= 1ull << u;
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return parts;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    uint64_t seen = 1, frontier = 1;
    while (frontier) {
        uint64_t next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= g.neighbors(v) & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == g.full_mask();
}

void for_each_cycle_through(const Graph& g, int u, uint64_t allowed,
                            const std::function<void(const std::vector<int>&)>& fn) {
    if (u < 0 || u >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (!((allowed >> u) & 1u)) return;
    std::vector<int> path{u};
    uint64_t onpath = 1ull << u;

    // Each cycle through u is found once: it closes only when the second
    // path vertex is smaller than the last one, killing the reversed
    // traversal.
    auto dfs = [&](auto&& self, int cur) -> void {
        uint64_t nb = g.neighbors(cur) & allowed;
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (w == u) {
                if (path.size() >= 3 && path[1] < path.back()) fn(path);
                continue;
            }
            if ((onpath >> w) & 1u) continue;
            path.push_back(w);
            onpath |= 1ull << w;
            self(self, w);
            onpath &= ~(1ull << w);
            path.pop_back();
        }
    };
    dfs(dfs, u);
}

std::vector<std::vector<int>> cycles_through(const Graph& g, int u) {
    std::vector<std::vector<int>> out;
    for_each_cycle_through(g, u, g.full_mask(), [&](const std::vector<int>& cyc) {
        // canonical form: start at the smallest vertex, run toward the
        // smaller of its two neighbors on the cycle
        const size_t len = cyc.size();
        size_t mi = 0;
        for (size_t i = 1; i < len; ++i)
            if (cyc[i] < cyc[mi]) mi = i;
        int before = cyc[(mi + len - 1) % len];
        int after = cyc[(mi + 1) % len];
        std::vector<int> canon(len);
        if (after <= before) {
            for (size_t i = 0; i < len; ++i) canon[i] = cyc[(mi + i) % len];
        } else {
            for (size_t i = 0; i < len; ++i) canon[i] = cyc[(mi + len - i) % len];
        }
        out.push_back(std::move(canon));
    });
    std::sort(out.begin(), out.end());
    return out;
}

// --- even subdivision of K_{2,3} ------------------------------------------

namespace {

struct EvenPath {
    uint64_t internal = 0;      // internal vertices only
    std::vector<int> vertices;  // u .. v inclusive
};

// All simple u-v paths of even edge length >= 2, one representative per
// internal-vertex set.
std::vector<EvenPath> even_paths(const Graph& g, int u, int v) {
    std::vector<EvenPath> out;
    std::vector<uint64_t> seen;
    std::vector<int> path{u};
    uint64_t onpath = 1ull << u;
    auto dfs = [&](auto&& self, int cur) -> void {
        uint64_t nb = g.neighbors(cur);
        while (nb) {
            int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (w == v) {
                // closing here gives path.size() edges; keep even lengths >= 2
                if (path.size() % 2 == 0) {
                    uint64_t internal = onpath & ~(1ull << u);
                    if (std::find(seen.begin(), seen.end(), internal) == seen.end()) {
                        seen.push_back(internal);
                        EvenPath p;
                        p.internal = internal;
                        p.vertices = path;
                        p.vertices.push_back(v);
                        out.push_back(std::move(p));
                    }
                }
                continue;
            }
            if (((onpath >> w) & 1u) || w == u) continue;
            path.push_back(w);
            onpath |= 1ull << w;
            self(self, w);
            onpath &= ~(1ull << w);
            path.pop_back();
        }
    };
    dfs(dfs, u);
    std::sort(out.begin(), out.end(),
              [](const EvenPath& a, const EvenPath& b) { return a.internal < b.internal; });
    return out;
}

}  // namespace

std::optional<ThetaWitness> contains_even_subdivision_k23(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 16) throw CapError("instance too large for brute force (n <= 16)");
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            auto paths = even_paths(g, u, v);
            const size_t m = paths.size();
            if (m < 3) continue;
            for (size_t i = 0; i < m; ++i) {
                for (size_t j = i + 1; j < m; ++j) {
                    if (paths[i].internal & paths[j].internal) continue;
                    uint64_t ij = paths[i].internal | paths[j].internal;
                    for (size_t k = j + 1; k < m; ++k) {
                        if (ij & paths[k].internal) continue;
                        ThetaWitness w;
                        w.u = u;
                        w.v = v;
                        w.paths = {paths[i].vertices, paths[j].vertices, paths[k].vertices};
                        return w;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

// --- graph6 -----------------------------------------------------------------

namespace {

void g6_fail(size_t offset, const char* what) {
    std::ostringstream os;
    os << "graph6: " << what << " at byte offset " << offset;
    throw std::invalid_argument(os.str());
}

}  // namespace

Graph graph6_decode(std::string_view text) {
    if (text.empty()) g6_fail(0, "empty input");
    const unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126) g6_fail(0, "n >= 63 unsupported");
    if (first < 63 || first > 125) g6_fail(0, "invalid byte");
    const int n = first - 63;
    const size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
    const size_t nbytes = (nbits + 5) / 6;
    if (text.size() != 1 + nbytes) g6_fail(text.size(), "wrong length");

    Graph g(n);
    size_t bit = 0;
    for (size_t b = 0; b < nbytes; ++b) {
        const unsigned char byte = static_cast<unsigned char>(text[1 + b]);
        if (byte < 63 || byte > 125) g6_fail(1 + b, "invalid byte");
        const unsigned value = byte - 63;
        for (int s = 5; s >= 0; --s, ++bit) {
            const bool set = (value >> s) & 1u;
            if (bit >= nbits) {
                if (set) g6_fail(1 + b, "nonzero padding");
                continue;
            }
            if (set) {
                // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
                size_t r = bit;
                int j = 1;
                while (r >= static_cast<size_t>(j)) r -= j++;
                g.add_edge(static_cast<int>(r), j);
            }
        }
    }
    return g;
}

std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    if (n >= 63) throw CapError("graph6: n >= 63 unsupported");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    unsigned acc = 0;
    int nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++nb == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return out;
}

Graph parse_adjacency_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("adjacency list: missing header");
    if (n < 0 || n > Graph::kMaxVertices)
        throw std::invalid_argument("adjacency list: bad vertex count");
    Graph g(n);
    for (int e = 0; e < m; ++e) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("adjacency list: missing edge");
        g.add_edge(u, v);
    }
    return g;
}

std::string format_adjacency_list(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

// --- canonical form ---------------------------------------------------------

namespace {

// Iterated degree refinement. Returns vertices grouped by final color,
// groups ordered by a label-independent signature.
std::vector<std::vector<int>> refine_partition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n);
    for (int v = 0; v < n; ++v) color[v] = g.degree(v);
    // normalize initial colors to dense ids by value
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sigs(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig{color[v]};
            uint64_t nb = g.neighbors(v);
            std::vector<int> ncols;
            while (nb) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                ncols.push_back(color[u]);
            }
            std::sort(ncols.begin(), ncols.end());
            sig.insert(sig.end(), ncols.begin(), ncols.end());
            sigs[v] = {std::move(sig), v};
        }
        std::vector<std::pair<std::vector<int>, int>> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int id = -1;
        const std::vector<int>* prev = nullptr;
        for (const auto& [sig, v] : sorted) {
            if (!prev || sig != *prev) {
                ++id;
                prev = &sig;
            }
            next[v] = id;
        }
        if (next == color) break;
        color = std::move(next);
    }
    int nclasses = 0;
    for (int v = 0; v < n; ++v) nclasses = std::max(nclasses, color[v] + 1);
    std::vector<std::vector<int>> classes(nclasses);
    for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);
    return classes;
}

}  // namespace

std::string canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 10) throw CapError("canonical_form: guarded to n <= 10");
    if (n == 0) return graph6_encode(g);

    auto classes = refine_partition(g);
    std::vector<int> pos_class;  // class index required at each position
    for (size_t c = 0; c < classes.size(); ++c)
        for (size_t i = 0; i < classes[c].size(); ++i) pos_class.push_back(static_cast<int>(c));

    const int nbits = n * (n - 1) / 2;
    std::vector<uint8_t> best, cur(static_cast<size_t>(nbits), 0);
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);

    // Lexicographic minimization over the graph6 bit order (column-major
    // upper triangle); placing position j appends exactly the bits
    // (i, j) for i < j. Pruning fires only while the prefix still equals
    // the incumbent; leaves always do the full comparison, since the
    // incumbent can shrink during the search.
    auto rec = [&](auto&& self, int j, int bitpos, bool eq) -> void {
        if (j == n) {
            if (best.empty() || cur < best) best = cur;
            return;
        }
        for (int v : classes[pos_class[j]]) {
            if (used[v]) continue;
            bool branch_eq = eq;
            bool prune = false;
            int bp = bitpos;
            for (int i = 0; i < j; ++i, ++bp) {
                uint8_t bit = g.has_edge(v, perm[i]) ? 1 : 0;
                cur[bp] = bit;
                if (branch_eq && !best.empty()) {
                    if (bit > best[bp]) {
                        prune = true;
                        break;
                    }
                    if (bit < best[bp]) branch_eq = false;
                }
            }
            if (prune) continue;
            used[v] = true;
            perm[j] = v;
            self(self, j + 1, bitpos + j, branch_eq);
            used[v] = false;
        }
    };
    rec(rec, 0, 0, true);

    // pack the winning bit string as graph6
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    unsigned acc = 0;
    int nb = 0;
    for (int b = 0; b < nbits; ++b) {
        acc = (acc << 1) | best[b];
        if (++nb == 6) {
            out.push_back(static_cast<char>(63 + acc));
            acc = 0;
            nb = 0;
        }
    }
    if (nb > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return out;
}

}  // namespace perspectra
