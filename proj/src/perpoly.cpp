#include "perspectra/perpoly.hpp"

#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "perspectra/errors.hpp"
#include "perspectra/permanent.hpp"

namespace perspectra {

namespace {

void check_cap(const Graph& g, const char* engine, int cap) {
    if (g.vertex_count() > cap) {
        std::ostringstream os;
        os << engine << " engine guarded to n <= " << cap;
        throw CapError(os.str());
    }
}

// ---- Sachs engine ----------------------------------------------------------
//
// Walks all Sachs subgraphs (vertex-disjoint unions of edges and cycles of
// length >= 3) by deciding the smallest undecided vertex: leave it out,
// match it, or put it on a cycle. Each subgraph on k vertices with c cycle
// components contributes 2^c to the k-th bucket.

struct SachsAccum {
    std::vector<Int> by_vertices;  // index k: sum of 2^c over Sachs subgraphs on k vertices
};

void sachs_walk(const Graph& g, uint64_t undecided, int used, int cycles, SachsAccum& acc) {
    if (undecided == 0) {
        acc.by_vertices[used] += Int(1) << cycles;
        return;
    }
    const int v = std::countr_zero(undecided);
    const uint64_t without_v = undecided & ~(1ull << v);

    // v not in the subgraph
    sachs_walk(g, without_v, used, cycles, acc);

    // v matched by an edge
    uint64_t candidates = g.neighbors(v) & without_v;
    while (candidates) {
        int u = std::countr_zero(candidates);
        candidates &= candidates - 1;
        sachs_walk(g, without_v & ~(1ull << u), used + 2, cycles, acc);
    }

    // v on a cycle inside the undecided set
    for_each_cycle_through(g, v, undecided, [&](const std::vector<int>& cyc) {
        uint64_t cmask = 0;
        for (int w : cyc) cmask |= 1ull << w;
        sachs_walk(g, undecided & ~cmask, used + static_cast<int>(cyc.size()), cycles + 1, acc);
    });
}

IntPoly per_poly_sachs(const Graph& g) {
    const int n = g.vertex_count();
    SachsAccum acc;
    acc.by_vertices.assign(static_cast<size_t>(n) + 1, Int(0));
    sachs_walk(g, g.full_mask(), 0, 0, acc);
    std::vector<Int> coeffs(static_cast<size_t>(n) + 1, Int(0));
    for (int k = 0; k <= n; ++k) {
        Int b = acc.by_vertices[k];
        if (k & 1) b = -b;
        coeffs[static_cast<size_t>(n - k)] = std::move(b);  // b_k x^{n-k}
    }
    return IntPoly(std::move(coeffs));
}

// ---- Expansion engine ------------------------------------------------------
//
// b_k = (-1)^k sum over k-subsets S of per(A[S]); the subsets at a given k
// are independent, so the permanents can run in parallel. Integer sums are
// order-insensitive, so the result is identical however the loop is split.

IntPoly per_poly_expansion(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Int> coeffs(static_cast<size_t>(n) + 1, Int(0));
    coeffs[static_cast<size_t>(n)] = 1;  // k = 0

    for (int k = 1; k <= n; ++k) {
        std::vector<uint64_t> subsets;
        uint64_t s = (1ull << k) - 1;
        const uint64_t limit = 1ull << n;
        while (s < limit) {
            subsets.push_back(s);
            uint64_t c = s & -s, r = s + c;  // Gosper's hack
            s = (((r ^ s) >> 2) / c) | r;
        }
        Int sum = 0;
#ifdef _OPENMP
#pragma omp parallel
        {
            Int local = 0;
#pragma omp for schedule(dynamic, 16) nowait
            for (long long i = 0; i < static_cast<long long>(subsets.size()); ++i)
                local += permanent_serial(BitMatrix::from_graph_subset(g, subsets[i]));
#pragma omp critical
            sum += local;
        }
#else
        for (uint64_t mask : subsets)
            sum += permanent_serial(BitMatrix::from_graph_subset(g, mask));
#endif
        if (k & 1) sum = -sum;
        coeffs[static_cast<size_t>(n - k)] = std::move(sum);
    }
    return IntPoly(std::move(coeffs));
}

// ---- Recursive engine ------------------------------------------------------
//
// Vertex-deletion recursion: pi(G) = x pi(G-u) + sum_{v~u} pi(G-u-v)
// + 2 sum_{cycles C through u} (-1)^{|V(C)|} pi(G - V(C)),
// with disjoint components multiplied and every induced subgraph memoized
// by its vertex mask.

class RecursiveEngine {
public:
    explicit RecursiveEngine(const Graph& g) : g_(g) {}

    IntPoly run() { return eval(g_.full_mask()); }

private:
    IntPoly eval(uint64_t mask) {
        if (mask == 0) return IntPoly::one();
        uint64_t comp = component_of(std::countr_zero(mask), mask);
        if (comp != mask) return eval(comp) * eval(mask & ~comp);
        if (std::popcount(mask) == 1) return IntPoly::x();

        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;

        const int u = std::countr_zero(mask);
        const uint64_t rest = mask & ~(1ull << u);
        IntPoly result = IntPoly::x() * eval(rest);
        uint64_t nb = g_.neighbors(u) & rest;
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            result += eval(rest & ~(1ull << v));
        }
        for_each_cycle_through(g_, u, mask, [&](const std::vector<int>& cyc) {
            uint64_t cmask = 0;
            for (int w : cyc) cmask |= 1ull << w;
            IntPoly term = eval(mask & ~cmask);
            term = term.scaled(2);
            if (cyc.size() & 1) term = -term;
            result += term;
        });
        memo_.emplace(mask, result);
        return result;
    }

    uint64_t component_of(int start, uint64_t mask) const {
        uint64_t seen = 1ull << start, frontier = seen;
        while (frontier) {
            uint64_t next = 0;
            while (frontier) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= g_.neighbors(v) & mask & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    const Graph& g_;
    std::unordered_map<uint64_t, IntPoly> memo_;
};

// ---- rooted trees ----------------------------------------------------------

struct TreePolys {
    IntPoly whole;         // pi(T)
    IntPoly without_root;  // pi(T - r)
};

class RootedTreeEngine {
public:
    explicit RootedTreeEngine(const Graph& g) : g_(g) {}

    TreePolys eval(int root, int parent) {
        std::vector<int> children;
        uint64_t nb = g_.neighbors(root);
        while (nb) {
            int c = std::countr_zero(nb);
            nb &= nb - 1;
            if (c == parent) continue;
            children.push_back(c);
        }
        std::string code = "(";
        std::vector<std::string> codes;
        std::vector<TreePolys> sub(children.size());
        for (size_t i = 0; i < children.size(); ++i) {
            sub[i] = eval(children[i], root);
            codes.push_back(code_of_[children[i]]);
        }
        std::sort(codes.begin(), codes.end());
        for (const auto& c : codes) code += c;
        code += ")";
        code_of_[root] = code;

        auto it = memo_.find(code);
        if (it != memo_.end()) return it->second;

        TreePolys out;
        // pi(T - r) is the product of the child subtrees
        out.without_root = IntPoly::one();
        for (const auto& s : sub) out.without_root = out.without_root * s.whole;
        // pi(T) = x pi(T-r) + sum_i pi(T_i - u_i) prod_{j != i} pi(T_j)
        out.whole = IntPoly::x() * out.without_root;
        const size_t k = sub.size();
        std::vector<IntPoly> prefix(k + 1, IntPoly::one()), suffix(k + 1, IntPoly::one());
        for (size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * sub[i].whole;
        for (size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * sub[i].whole;
        for (size_t i = 0; i < k; ++i)
            out.whole += sub[i].without_root * prefix[i] * suffix[i + 1];

        memo_.emplace(code, out);
        return out;
    }

private:
    const Graph& g_;
    std::unordered_map<int, std::string> code_of_;
    std::unordered_map<std::string, TreePolys> memo_;
};

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// pi of the "spider": a center vertex with three pendant paths of a, b, c
// vertices (parameters may be zero).
IntPoly spider_poly(int a, int b, int c) {
    std::vector<int> legs;
    for (int t : {a, b, c})
        if (t > 0) legs.push_back(t);
    IntPoly prod_all = IntPoly::one();
    for (int t : legs) prod_all = prod_all * path_poly(t);
    IntPoly out = IntPoly::x() * prod_all;
    for (size_t i = 0; i < legs.size(); ++i) {
        IntPoly term = path_poly(legs[i] - 1);
        for (size_t j = 0; j < legs.size(); ++j)
            if (j != i) term = term * path_poly(legs[j]);
        out += term;
    }
    return out;
}

}  // namespace

IntPoly per_poly(const Graph& g, EngineKind engine, const EngineLimits& limits) {
    switch (engine) {
        case EngineKind::Sachs:
            check_cap(g, "sachs", limits.sachs_max);
            return per_poly_sachs(g);
        case EngineKind::Expansion:
            check_cap(g, "expansion", limits.expansion_max);
            return per_poly_expansion(g);
        case EngineKind::Recursive:
            check_cap(g, "recursive", limits.recursive_max);
            return RecursiveEngine(g).run();
    }
    throw std::logic_error("per_poly: unknown engine");
}

IntPoly per_poly_rooted_tree(const RootedGraph& t) {
    const Graph& g = t.graph;
    const int n = g.vertex_count();
    if (t.root < 0 || t.root >= n) throw std::invalid_argument("root out of range");
    if (g.edge_count() != n - 1 || !is_connected(g))
        throw std::invalid_argument("not a tree");
    return RootedTreeEngine(g).eval(t.root, -1).whole;
}

IntPoly star_poly(int n) {
    if (n < 0) throw std::invalid_argument("star_poly: negative n");
    if (n == 0) return IntPoly::x();  // K_{1,0} is a single vertex
    IntPoly quad{n, 0, 1};            // x^2 + n
    return quad.shifted_up(n - 1);
}

IntPoly path_poly(int n) {
    if (n < 0) throw std::invalid_argument("path_poly: negative n");
    std::vector<Int> coeffs(static_cast<size_t>(n) + 1, Int(0));
    for (int m = 0; m <= n / 2; ++m)
        coeffs[static_cast<size_t>(n - 2 * m)] = binomial(n - m, n - 2 * m);
    return IntPoly(std::move(coeffs));
}

IntPoly theta_poly(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("theta_poly: parameters must be >= 1");
    // Expand the deletion recursion at a degree-3 end vertex u: removing u
    // leaves the spider, removing u and a neighbor shortens one leg, and
    // the three cycles through u leave the opposite path.
    IntPoly out = IntPoly::x() * spider_poly(a, b, c);
    out += spider_poly(a - 1, b, c);
    out += spider_poly(a, b - 1, c);
    out += spider_poly(a, b, c - 1);
    const int par[3] = {a, b, c};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int k = 3 - i - j;
            IntPoly term = path_poly(par[k]).scaled(2);
            if ((par[i] + par[j] + 2) & 1) term = -term;
            out += term;
        }
    return out;
}

}  // namespace perspectra
