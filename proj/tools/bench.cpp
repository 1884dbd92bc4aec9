// Benchmark comparing the OpenMP kernels against their serial references.
// Results must agree exactly; timings show the speedup on this machine.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "perspectra/census.hpp"
#include "perspectra/construct.hpp"
#include "perspectra/permanent.hpp"
#include "perspectra/perpoly.hpp"

using namespace perspectra;

namespace {

double now_ms() {
    using namespace std::chrono;
    return duration<double, std::milli>(steady_clock::now().time_since_epoch()).count();
}

template <typename F>
double timed(F&& f) {
    double t0 = now_ms();
    f();
    return now_ms() - t0;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n",
                name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                equal ? "results equal" : "RESULTS DIFFER");
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    std::mt19937 rng(12345);

    {
        const int n = quick ? 18 : 22;
        Graph g = random_graph(n, 0.5, rng);
        BitMatrix m = BitMatrix::from_graph(g);
        Int a, b;
        double ts = timed([&] { a = permanent_serial(m); });
        double tp = timed([&] { b = permanent(m); });
        report("ryser permanent n=" + std::to_string(n), ts, tp, a == b);
    }

    {
        const int n = quick ? 10 : 12;
        Graph g = random_graph(n, 0.5, rng);
        // the expansion engine parallelizes over vertex subsets internally;
        // pin it to one thread for the serial reference
        IntPoly a, b;
#ifdef _OPENMP
        int saved = omp_get_max_threads();
        omp_set_num_threads(1);
        double ts = timed([&] { a = per_poly(g, EngineKind::Expansion); });
        omp_set_num_threads(saved);
#else
        double ts = timed([&] { a = per_poly(g, EngineKind::Expansion); });
#endif
        double tp = timed([&] { b = per_poly(g, EngineKind::Expansion); });
        report("expansion engine n=" + std::to_string(n), ts, tp, a == b);
    }

    {
        const int lmax = 10, kmax = quick ? 15 : 30;
        ScanGrid a, b;
        scan_serial(ScanFamily::K23deg3xPathlike, lmax, kmax);  // warmup
        double ts = timed([&] { a = scan_serial(ScanFamily::K23deg3xPathlike, lmax, kmax); });
        double tp = timed([&] { b = scan(ScanFamily::K23deg3xPathlike, lmax, kmax); });
        report("scan 10x" + std::to_string(kmax), ts, tp, a.cells == b.cells);
    }

    {
        const int n = quick ? 7 : 8;
        std::vector<Graph> a, b;
        double ts = timed([&] { a = connected_bipartite_classes_serial(n); });
        double tp = timed([&] { b = connected_bipartite_classes(n); });
        bool equal = a.size() == b.size();
        for (size_t i = 0; equal && i < a.size(); ++i) equal = a[i] == b[i];
        report("census n=" + std::to_string(n), ts, tp, equal);
    }

    return 0;
}
