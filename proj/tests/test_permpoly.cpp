#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "perspectra/census.hpp"
#include "perspectra/errors.hpp"
#include "perspectra/permanent.hpp"
#include "perspectra/perpoly.hpp"

using namespace perspectra;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_tree(int n, std::mt19937& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    return g;
}

// oracle: permanent as the plain permutation sum
Int permanent_naive(const std::vector<std::vector<int>>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Int sum = 0;
    do {
        Int prod = 1;
        for (int i = 0; i < n; ++i) prod *= m[i][perm[i]];
        sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

std::vector<std::vector<int>> dense_adjacency(const Graph& g) {
    std::vector<std::vector<int>> m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
    for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
    return m;
}

// oracle: count matchings with exactly k edges by subset enumeration
std::vector<Int> matching_counts(const Graph& g) {
    auto edges = g.edges();
    std::vector<Int> counts(g.vertex_count() / 2 + 1, 0);
    const uint64_t total = 1ull << edges.size();
    for (uint64_t s = 0; s < total; ++s) {
        uint64_t covered = 0;
        bool ok = true;
        int k = 0;
        for (size_t e = 0; e < edges.size() && ok; ++e) {
            if (!((s >> e) & 1u)) continue;
            uint64_t both = (1ull << edges[e].first) | (1ull << edges[e].second);
            if (covered & both) ok = false;
            covered |= both;
            ++k;
        }
        if (ok) counts[static_cast<size_t>(k)] += 1;
    }
    return counts;
}

const IntPoly kPiK23{0, 12, 0, 6, 0, 1};
const IntPoly kPiK33{36, 0, 36, 0, 9, 0, 1};

}  // namespace

TEST_CASE("permanent: fixed values") {
    CHECK(permanent(std::vector<std::vector<int>>(3, std::vector<int>(3, 1))) == 6);
    std::vector<std::vector<int>> eye(5, std::vector<int>(5, 0));
    for (int i = 0; i < 5; ++i) eye[i][i] = 1;
    CHECK(permanent(eye) == 1);
    CHECK(permanent(BitMatrix::from_graph(cycle_graph(4))) == 4);
    CHECK(permanent(BitMatrix::from_graph(Graph(0))) == 1);

    CHECK_THROWS_AS(permanent(std::vector<std::vector<int>>{{1, 0}, {1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(permanent(std::vector<std::vector<int>>{{2}}), std::invalid_argument);
}

TEST_CASE("permanent: parallel, serial and naive agree") {
    std::mt19937 rng(17);
    for (int t = 0; t < 25; ++t) {
        Graph g = random_graph(2 + t % 6, 0.5, rng);
        BitMatrix m = BitMatrix::from_graph(g);
        Int fast = permanent(m);
        CHECK(fast == permanent_serial(m));
        CHECK(fast == permanent_naive(dense_adjacency(g)));
    }
    // all-ones of order n has permanent n!
    Graph k12 = complete_graph(12);
    BitMatrix m = BitMatrix::from_graph(k12);
    // adjacency of K_n is J - I; check against naive for small, serial for larger
    CHECK(permanent(m) == permanent_serial(m));
}

TEST_CASE("per_poly: fixed polynomials") {
    for (EngineKind e : {EngineKind::Sachs, EngineKind::Expansion, EngineKind::Recursive}) {
        CHECK(per_poly(complete_bipartite(2, 3), e) == kPiK23);
        CHECK(per_poly(complete_bipartite(3, 3), e) == kPiK33);
        CHECK(per_poly(empty_graph(4), e) == IntPoly::monomial(1, 4));
        CHECK(per_poly(graph_g8(), e) == IntPoly{36, 0, 33, 0, 10, 0, 1}.shifted_up(2));
    }
    CHECK(per_poly(graph_g11(), EngineKind::Sachs) ==
          IntPoly{56, 0, 172, 0, 168, 0, 72, 0, 14, 0, 1}.shifted_up(1));
}

TEST_CASE("per_poly: engine caps") {
    Graph big(15);
    CHECK_THROWS_WITH_AS(per_poly(big, EngineKind::Expansion),
                         "expansion engine guarded to n <= 14", CapError);
    Graph bigger(21);
    CHECK_THROWS_AS(per_poly(bigger, EngineKind::Sachs), CapError);
    CHECK_THROWS_AS(per_poly(bigger, EngineKind::Recursive), CapError);
    // configurable limits
    EngineLimits wide;
    wide.sachs_max = 25;
    CHECK(per_poly(empty_graph(21), EngineKind::Sachs, wide) == IntPoly::monomial(1, 21));
}

TEST_CASE("cross-engine equality over the census") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& g : connected_bipartite_classes(n)) {
            IntPoly s = per_poly(g, EngineKind::Sachs);
            CHECK(s == per_poly(g, EngineKind::Expansion));
            CHECK(s == per_poly(g, EngineKind::Recursive));
        }
    }
}

TEST_CASE("cross-engine equality on random graphs incl. non-bipartite") {
    std::mt19937 rng(23);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(1 + t % 9, 0.5, rng);
        IntPoly s = per_poly(g, EngineKind::Sachs);
        CHECK(s == per_poly(g, EngineKind::Expansion));
        CHECK(s == per_poly(g, EngineKind::Recursive));
    }
}

TEST_CASE("constant term is the signed permanent") {
    std::mt19937 rng(29);
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + t % 10;
        Graph g = random_graph(n, 0.5, rng);
        Int c0 = per_poly(g, EngineKind::Recursive).coeff(0);
        Int per = permanent(BitMatrix::from_graph(g));
        CHECK(c0 == (n % 2 ? -per : per));
    }
}

TEST_CASE("bipartite iff odd coefficients vanish") {
    auto odd_coeffs_zero = [](const IntPoly& p) {
        for (int d = p.degree() - 1; d >= 0; d -= 2)
            if (p.coeff(d) != 0) return false;
        return true;
    };
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : connected_bipartite_classes(n))
            CHECK(odd_coeffs_zero(per_poly(g, EngineKind::Sachs)));
    std::mt19937 rng(31);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(2 + t % 7, 0.5, rng);
        CHECK(odd_coeffs_zero(per_poly(g, EngineKind::Sachs)) == is_bipartite(g));
    }
}

TEST_CASE("bipartite even coefficients are nonnegative") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& g : connected_bipartite_classes(n)) {
            IntPoly p = per_poly(g, EngineKind::Sachs);
            const int deg = p.degree();
            for (int d = deg; d >= 0; d -= 2) CHECK(p.coeff(d) >= 0);
        }
}

TEST_CASE("tree coefficients count matchings") {
    std::mt19937 rng(37);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + t % 9;
        Graph tr = random_tree(n, rng);
        IntPoly p = per_poly(tr, EngineKind::Sachs);
        auto counts = matching_counts(tr);
        for (size_t m = 0; m < counts.size(); ++m) {
            // b_{2m} = (#matchings with m edges); coefficient of x^{n-2m}
            const int d = n - 2 * static_cast<int>(m);
            if (d < 0) continue;
            CHECK(p.coeff(d) == counts[m]);
        }
    }
}

TEST_CASE("rooted tree recursion") {
    for (int n = 1; n <= 8; ++n) {
        RootedGraph star{star_graph(n), 0};
        CHECK(per_poly_rooted_tree(star) == star_poly(n));
    }
    CHECK(per_poly_rooted_tree({Graph(1), 0}) == IntPoly::x());

    RootedGraph fig1b = build_rooted_tree({TreeShape::Pathlike, 4, 3});
    CHECK(per_poly_rooted_tree(fig1b) == per_poly(fig1b.graph, EngineKind::Sachs));
    RootedGraph fig1a = build_rooted_tree({TreeShape::Starlike, 4, 3});
    CHECK(per_poly_rooted_tree(fig1a) == per_poly(fig1a.graph, EngineKind::Sachs));

    // result is root-independent
    std::mt19937 rng(43);
    for (int t = 0; t < 15; ++t) {
        Graph tr = random_tree(3 + t % 8, rng);
        IntPoly base = per_poly_rooted_tree({tr, 0});
        CHECK(base == per_poly_rooted_tree({tr, tr.vertex_count() - 1}));
        CHECK(base == per_poly(tr, EngineKind::Recursive));
    }

    CHECK_THROWS_WITH_AS(per_poly_rooted_tree({cycle_graph(4), 0}), "not a tree",
                         std::invalid_argument);
}

TEST_CASE("closed forms: star and path") {
    CHECK(path_poly(0) == IntPoly::one());
    CHECK(path_poly(1) == IntPoly::x());
    CHECK(path_poly(4) == IntPoly{1, 0, 3, 0, 1});
    CHECK(star_poly(4) == IntPoly{0, 0, 0, 4, 0, 1});  // x^3 (x^2 + 4)
    CHECK(star_poly(0) == IntPoly::x());
    for (int n = 2; n <= 12; ++n)
        CHECK(path_poly(n) == IntPoly::x() * path_poly(n - 1) + path_poly(n - 2));
    for (int n = 1; n <= 10; ++n)
        CHECK(path_poly(n) == per_poly(path_graph(n), EngineKind::Recursive));
    CHECK_THROWS_AS(path_poly(-1), std::invalid_argument);
    CHECK_THROWS_AS(star_poly(-2), std::invalid_argument);
}

TEST_CASE("theta polynomial") {
    CHECK(theta_poly(1, 1, 1) == kPiK23);
    CHECK(theta_poly(3, 1, 1) == per_poly(theta_graph(3, 1, 1), EngineKind::Expansion));
    CHECK(theta_poly(1, 2, 3) == per_poly(theta_graph(1, 2, 3), EngineKind::Sachs));
    // frozen expansion of pi(Theta_{1,2,3})
    CHECK(theta_poly(1, 2, 3) == IntPoly{4, -6, 21, -2, 24, 0, 9, 0, 1});
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b)
            for (int c = b; c <= 3; ++c)
                CHECK(theta_poly(a, b, c) ==
                      per_poly(theta_graph(a, b, c), EngineKind::Recursive));
    CHECK_THROWS_AS(theta_poly(0, 1, 1), std::invalid_argument);
}
