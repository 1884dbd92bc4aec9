#ifndef PERSPECTRA_GRAPH_HPP
#define PERSPECTRA_GRAPH_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace perspectra {

/// Simple undirected graph on at most 64 vertices, one adjacency bitset
/// row per vertex. Values are treated as immutable once built, so they
/// are safe to share across threads.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    uint64_t neighbors(int v) const;
    int degree(int v) const;
    uint64_t full_mask() const { return n_ == 64 ? ~0ull : (1ull << n_) - 1; }

    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void check_vertex(int v) const;
    int n_ = 0;
    std::vector<uint64_t> adj_;
};

struct RootedGraph {
    Graph graph;
    int root = 0;
};

enum class TreeShape { Starlike, Pathlike };

/// Parameters (l, k) of the uniform rooted trees: a root joined to k
/// star centers K_{1,l} (starlike) or to k path ends P_{l+1} (pathlike).
struct RootedTreeSpec {
    TreeShape shape = TreeShape::Starlike;
    int l = 0;
    int k = 0;
};

// --- named families ------------------------------------------------------

Graph complete_bipartite(int m, int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);  // K_{1,n}, n+1 vertices
Graph empty_graph(int n);
Graph theta_graph(int a, int b, int c);  // a+b+c+2 vertices, three u-v paths

// the two extremal examples: K_{2,4} with one edge subdivided twice, and
// K_{3,3} with two edges at a common vertex subdivided twice plus a pendant
Graph graph_g8();
Graph graph_g11();

RootedGraph build_rooted_tree(const RootedTreeSpec& spec);

// --- structural operations -----------------------------------------------

Graph subdivide_edge(const Graph& g, int u, int v, int times);
RootedGraph coalesce(const RootedGraph& g1, const RootedGraph& g2);
Graph delete_vertices(const Graph& g, const std::vector<int>& s);
Graph induced_subgraph(const Graph& g, uint64_t keep_mask);

/// Two-coloring per component; std::nullopt when an odd cycle exists.
/// Bit v of result[c] is set when vertex v got color c.
std::optional<std::array<uint64_t, 2>> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_connected(const Graph& g);

/// Every simple cycle of length >= 3 through u, reported exactly once.
/// Each cycle starts at its smallest vertex and runs toward the smaller
/// of that vertex's two cycle neighbors; the list is sorted.
std::vector<std::vector<int>> cycles_through(const Graph& g, int u);

/// Enumeration form used by the polynomial engines: cycles through u
/// confined to `allowed` (which must contain u), delivered as the DFS
/// finds them, path[0] == u.
void for_each_cycle_through(const Graph& g, int u, uint64_t allowed,
                            const std::function<void(const std::vector<int>&)>& fn);

struct ThetaWitness {
    int u = 0, v = 0;
    std::array<std::vector<int>, 3> paths;  // each path runs u..v inclusive
};

/// Searches for a theta subgraph whose three u-v paths all have even edge
/// length >= 2 (all parameters odd). Brute force, guarded to n <= 16.
std::optional<ThetaWitness> contains_even_subdivision_k23(const Graph& g);

// --- codecs ---------------------------------------------------------------

Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

/// "n m" on the first line, one "u v" edge per following line.
Graph parse_adjacency_list(std::istream& in);
std::string format_adjacency_list(const Graph& g);

/// Isomorphism-invariant canonical representation (guarded to n <= 10):
/// degree-refinement partition, then the lexicographically smallest
/// graph6 string over vertex orders consistent with the partition.
std::string canonical_form(const Graph& g);

}  // namespace perspectra

#endif
