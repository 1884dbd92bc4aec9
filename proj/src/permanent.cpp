#include "perspectra/permanent.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "perspectra/errors.hpp"

namespace perspectra {

namespace {

using int128 = __int128;

// Largest safe number of terms to accumulate in an int128 block before
// flushing into the arbitrary-precision sum; terms are bounded by n^n.
long long flush_interval(int n) {
    long double bound = std::pow(static_cast<long double>(n), n);
    long double budget = std::ldexp(1.0L, 126);
    long double k = budget / (bound + 1.0L);
    if (k >= 1e18L) return static_cast<long long>(1e18);
    return std::max(1ll, static_cast<long long>(k));
}

Int to_int(int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    Int r = static_cast<uint64_t>(u >> 64);
    r <<= 64;
    r += static_cast<uint64_t>(u);
    return neg ? -r : r;
}

// Ryser sum over Gray-coded column subsets in [from, to); row sums are
// maintained incrementally, rows at zero short-circuit the product.
Int ryser_range(const BitMatrix& m, uint64_t from, uint64_t to) {
    const int n = m.n;
    std::vector<int> rowsum(n, 0);
    int zeros = n;
    uint64_t subset = 0;

    auto toggle = [&](int j) {
        uint64_t rows = m.cols[j];
        const bool adding = !((subset >> j) & 1u);
        subset ^= 1ull << j;
        while (rows) {
            int i = std::countr_zero(rows);
            rows &= rows - 1;
            int& rs = rowsum[i];
            if (rs == 0) --zeros;
            rs += adding ? 1 : -1;
            if (rs == 0) ++zeros;
        }
    };

    // jump directly to the Gray code of the first index
    uint64_t start = from ^ (from >> 1);
    for (int j = 0; j < n; ++j)
        if ((start >> j) & 1u) toggle(j);

    Int total = 0;
    int128 block = 0;
    const long long flush_every = flush_interval(n);
    long long until_flush = flush_every;
    const bool wide = n <= 26;

    for (uint64_t k = from; k < to; ++k) {
        if (k != from) toggle(std::countr_zero(k));
        if (zeros > 0) continue;
        const bool negative = ((n - std::popcount(subset)) & 1) != 0;
        if (wide) {
            int128 prod = 1;
            for (int i = 0; i < n; ++i) prod *= rowsum[i];
            block += negative ? -prod : prod;
            if (--until_flush == 0) {
                total += to_int(block);
                block = 0;
                until_flush = flush_every;
            }
        } else {
            Int prod = 1;
            for (int i = 0; i < n; ++i) prod *= rowsum[i];
            total += negative ? -prod : prod;
        }
    }
    total += to_int(block);
    return total;
}

void check_order(const BitMatrix& m) {
    if (m.n < 0 || static_cast<size_t>(m.n) != m.cols.size())
        throw std::invalid_argument("permanent: malformed matrix");
    if (m.n > 30) throw CapError("permanent kernel guarded to order <= 30");
}

}  // namespace

BitMatrix BitMatrix::from_graph(const Graph& g) {
    return from_graph_subset(g, g.full_mask());
}

BitMatrix BitMatrix::from_graph_subset(const Graph& g, uint64_t mask) {
    std::vector<int> verts;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((mask >> v) & 1u) verts.push_back(v);
    BitMatrix m;
    m.n = static_cast<int>(verts.size());
    m.cols.assign(verts.size(), 0);
    for (int j = 0; j < m.n; ++j) {
        uint64_t nb = g.neighbors(verts[j]) & mask;
        for (int i = 0; i < m.n; ++i)
            if ((nb >> verts[i]) & 1u) m.cols[j] |= 1ull << i;
    }
    return m;
}

Int permanent_serial(const BitMatrix& m) {
    check_order(m);
    if (m.n == 0) return 1;
    return ryser_range(m, 1, 1ull << m.n);
}

Int permanent(const BitMatrix& m) {
    check_order(m);
    if (m.n == 0) return 1;
#ifdef _OPENMP
    if (m.n >= 18 && omp_get_max_threads() > 1) {
        const uint64_t end = 1ull << m.n;
        const int nchunks = omp_get_max_threads();
        std::vector<Int> partial(static_cast<size_t>(nchunks));
#pragma omp parallel for schedule(static, 1)
        for (int c = 0; c < nchunks; ++c) {
            uint64_t lo = 1 + (end - 1) * c / nchunks;
            uint64_t hi = 1 + (end - 1) * (c + 1) / nchunks;
            if (lo < hi) partial[static_cast<size_t>(c)] = ryser_range(m, lo, hi);
        }
        Int total = 0;
        for (const Int& p : partial) total += p;
        return total;
    }
#endif
    return ryser_range(m, 1, 1ull << m.n);
}

Int permanent(const std::vector<std::vector<int>>& rows) {
    const size_t n = rows.size();
    if (n > 30) throw CapError("permanent kernel guarded to order <= 30");
    BitMatrix m;
    m.n = static_cast<int>(n);
    m.cols.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("permanent: matrix not square");
        for (size_t j = 0; j < n; ++j) {
            int v = rows[i][j];
            if (v != 0 && v != 1)
                throw std::invalid_argument("permanent: entries must be 0 or 1");
            if (v) m.cols[j] |= 1ull << i;
        }
    }
    return permanent(m);
}

}  // namespace perspectra
