#include "perspectra/census.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "perspectra/errors.hpp"

namespace perspectra {

namespace {

Graph graph_from_mask(int a, int b, uint64_t mask) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if ((mask >> (i * b + j)) & 1u) g.add_edge(i, a + j);
    return g;
}

// Every connected bipartite graph has a unique bipartition up to swapping
// the sides, so each isomorphism class shows up under exactly one part
// size a <= n-a and deduplication can run per split.
template <typename Body>
void for_each_split(int n, Body body) {
    for (int a = 1; a <= n / 2; ++a) body(a, n - a);
}

std::vector<Graph> assemble(int n, const std::map<std::string, uint64_t>* per_split,
                            int nsplits) {
    std::vector<Graph> out;
    int idx = 0;
    for (int a = 1; a <= n / 2; ++a, ++idx) {
        if (idx >= nsplits) break;
        std::vector<uint64_t> masks;
        masks.reserve(per_split[idx].size());
        for (const auto& [canon, mask] : per_split[idx]) masks.push_back(mask);
        std::sort(masks.begin(), masks.end());
        for (uint64_t mask : masks) out.push_back(graph_from_mask(a, n - a, mask));
    }
    return out;
}

std::vector<Graph> enumerate_impl(int n, bool parallel) {
    if (n < 1) throw std::invalid_argument("census: n must be positive");
    if (n > 9) throw CapError("census enumeration guarded to n <= 9");
    if (n == 1) return {Graph(1)};

    const int nsplits = n / 2;
    std::vector<std::map<std::string, uint64_t>> found(nsplits);

    int idx = 0;
    for_each_split(n, [&](int a, int b) {
        const uint64_t total = 1ull << (a * b);
        auto& classes = found[idx++];

#ifdef _OPENMP
        if (parallel) {
            std::vector<std::map<std::string, uint64_t>> local;
#pragma omp parallel
            {
#pragma omp single
                local.resize(static_cast<size_t>(omp_get_num_threads()));
                auto& mine = local[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4096)
                for (long long m = 1; m < static_cast<long long>(total); ++m) {
                    const uint64_t mask = static_cast<uint64_t>(m);
                    Graph g = graph_from_mask(a, b, mask);
                    if (!is_connected(g)) continue;
                    std::string canon = canonical_form(g);
                    auto [it, fresh] = mine.try_emplace(std::move(canon), mask);
                    if (!fresh && mask < it->second) it->second = mask;
                }
            }
            for (const auto& part : local)
                for (const auto& [canon, mask] : part) {
                    auto [it, fresh] = classes.try_emplace(canon, mask);
                    if (!fresh && mask < it->second) it->second = mask;
                }
            return;
        }
#else
        (void)parallel;
#endif
        for (uint64_t mask = 1; mask < total; ++mask) {
            Graph g = graph_from_mask(a, b, mask);
            if (!is_connected(g)) continue;
            std::string canon = canonical_form(g);
            auto [it, fresh] = classes.try_emplace(std::move(canon), mask);
            if (!fresh && mask < it->second) it->second = mask;
        }
    });

    return assemble(n, found.data(), nsplits);
}

}  // namespace

std::vector<Graph> connected_bipartite_classes(int n) { return enumerate_impl(n, true); }

std::vector<Graph> connected_bipartite_classes_serial(int n) { return enumerate_impl(n, false); }

}  // namespace perspectra
