#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>

#include "perspectra/intpoly.hpp"
#include "perspectra/numroots.hpp"
#include "perspectra/realroot.hpp"

using namespace perspectra;

namespace {

IntPoly rand_poly(std::mt19937& rng, int max_deg, int max_abs = 9) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(-max_abs, max_abs);
    const int d = deg(rng);
    std::vector<Int> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = coef(rng);
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

int near_real_count(const std::vector<std::complex<double>>& roots) {
    int k = 0;
    for (const auto& z : roots)
        if (std::abs(z.imag()) < 1e-8) ++k;
    return k;
}

// radical: product of the distinct squarefree factors
IntPoly radical(const IntPoly& p) {
    IntPoly r = IntPoly::one();
    for (const auto& sf : squarefree_decompose(p)) r = r * sf.factor;
    return r;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    IntPoly a{2, 0, 1};  // x^2 + 2
    CHECK((a * a) == IntPoly{4, 0, 4, 0, 1});
    IntPoly p{3, -1, 0, 7};
    CHECK((p + IntPoly::zero()) == p);
    CHECK(IntPoly{1, 1}.pow(3) == IntPoly{1, 3, 3, 1});
    CHECK(IntPoly{1, 1}.pow(0) == IntPoly::one());
    CHECK(IntPoly{0, 1, 2}.shifted_up(2) == IntPoly{0, 0, 0, 1, 2});
    CHECK((p - p).is_zero());
    CHECK(p.scaled(0).is_zero());
    CHECK(IntPoly{5}.degree() == 0);
    CHECK(IntPoly::zero().degree() == -1);
}

TEST_CASE("normalization keeps top coefficient nonzero") {
    IntPoly a{1, 2, 3};
    IntPoly b{0, 0, -3};
    IntPoly sum = a + b;  // 1 + 2x
    CHECK(sum.degree() == 1);
    CHECK(sum == IntPoly{1, 2});
}

TEST_CASE("evaluation") {
    IntPoly p{0, 12, 0, 6, 0, 1};  // x(x^4 + 6x^2 + 12)
    CHECK(p.evaluate(Int(0)) == 0);
    IntPoly q{2, 0, 1};
    std::complex<double> root(0.0, std::sqrt(2.0));
    CHECK(std::abs(q.evaluate(root)) <= 1e-12);
    IntPoly r{0, 24, -10, 1};  // x(x-4)(x-6)
    CHECK(r.evaluate(Rat(4)) == 0);
    CHECK(r.evaluate(Rat(6)) == 0);
    CHECK(r.evaluate(Rat(1, 2)) == Rat(1, 8) - Rat(10, 4) + Rat(12));
}

TEST_CASE("text form") {
    CHECK(IntPoly{0, 12, 0, 6, 0, 1}.to_string() == "x^5+6*x^3+12*x");
    CHECK(IntPoly{36, 0, 33, 0, 10, 0, 1}.to_string() == "x^6+10*x^4+33*x^2+36");
    CHECK(IntPoly{-12, 24, -10, 1}.to_string() == "x^3-10*x^2+24*x-12");
    CHECK(IntPoly::zero().to_string() == "0");
    CHECK(IntPoly::one().to_string() == "1");
    CHECK(IntPoly{0, 1}.to_string() == "x");
    CHECK(IntPoly{0, -1}.to_string() == "-x");
    CHECK(IntPoly{1, 0, 1}.to_string() == "x^2+1");
}

TEST_CASE("squarefree decomposition") {
    // (x^2+4)(x^2+3)^2 expanded
    IntPoly p{36, 0, 33, 0, 10, 0, 1};
    auto fs = squarefree_decompose(p);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == IntPoly{4, 0, 1});
    CHECK(fs[0].multiplicity == 1);
    CHECK(fs[1].factor == IntPoly{3, 0, 1});
    CHECK(fs[1].multiplicity == 2);

    auto single = squarefree_decompose(IntPoly{3, 0, 1});
    REQUIRE(single.size() == 1);
    CHECK(single[0].factor == IntPoly{3, 0, 1});
    CHECK(single[0].multiplicity == 1);

    auto cube = squarefree_decompose(IntPoly{0, 0, 0, 1});
    REQUIRE(cube.size() == 1);
    CHECK(cube[0].factor == IntPoly::x());
    CHECK(cube[0].multiplicity == 3);

    CHECK_THROWS_AS(squarefree_decompose(IntPoly::zero()), std::invalid_argument);
}

TEST_CASE("squarefree reconstruction on random factor products") {
    std::mt19937 rng(2024);
    const std::vector<IntPoly> pool = {
        IntPoly{0, 1},     IntPoly{1, 1},  IntPoly{-1, 1},    IntPoly{1, 0, 1},
        IntPoly{2, 0, 1},  IntPoly{-2, 1}, IntPoly{-2, 0, 1}, IntPoly{3, 1},
        IntPoly{1, 1, 1},
    };
    std::uniform_int_distribution<int> mult(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<int> idx(pool.size());
        for (size_t i = 0; i < pool.size(); ++i) idx[i] = static_cast<int>(i);
        std::shuffle(idx.begin(), idx.end(), rng);
        const int nf = 1 + trial % 3;
        IntPoly p = IntPoly::one();
        for (int i = 0; i < nf; ++i) p = p * pool[idx[i]].pow(static_cast<unsigned>(mult(rng)));
        IntPoly back = IntPoly::one();
        for (const auto& sf : squarefree_decompose(p))
            back = back * sf.factor.pow(static_cast<unsigned>(sf.multiplicity));
        CHECK(back.primitive_positive() == p.primitive_positive());
    }
}

TEST_CASE("sturm counting") {
    IntPoly p{0, 24, -10, 1};
    CHECK(sturm_count(p, Extended::neg_inf(), Extended::pos_inf()) == 3);
    CHECK(sturm_count(IntPoly{3, 0, 1}, Extended::neg_inf(), Extended::pos_inf()) == 0);
    CHECK(sturm_count(IntPoly{-2, 0, 1}, Extended::at(Rat(0)), Extended::pos_inf()) == 1);
    // half-open (lo, hi]: the root at 0 is excluded from (0, ...]
    CHECK(sturm_count(p, Extended::at(Rat(0)), Extended::pos_inf()) == 2);
    CHECK(sturm_count(p, Extended::neg_inf(), Extended::at(Rat(0))) == 1);
    CHECK_THROWS_AS(sturm_count(IntPoly{0, 0, 1}, Extended::neg_inf(), Extended::pos_inf()),
                    std::invalid_argument);
    CHECK_THROWS_AS(sturm_count(p, Extended::pos_inf(), Extended::neg_inf()),
                    std::invalid_argument);
}

TEST_CASE("all roots real nonnegative") {
    auto [ok1, cert1] = all_roots_real_nonneg(IntPoly{0, 24, -10, 1});
    CHECK(ok1);
    CHECK(cert1.total_degree == 3);
    CHECK(cert1.real_root_count_with_multiplicity == 3);
    CHECK(cert1.nonneg_real_root_count_with_multiplicity == 3);

    auto [ok2, cert2] = all_roots_real_nonneg(IntPoly{1, 0, 1});
    CHECK_FALSE(ok2);
    CHECK(cert2.real_root_count_with_multiplicity == 0);

    auto [ok3, cert3] = all_roots_real_nonneg(IntPoly{-2, -1, 1});  // roots 2, -1
    CHECK_FALSE(ok3);
    CHECK(cert3.real_root_count_with_multiplicity == 2);
    CHECK(cert3.nonneg_real_root_count_with_multiplicity == 1);

    CHECK_THROWS_AS(all_roots_real_nonneg(IntPoly::zero()), std::invalid_argument);
}

TEST_CASE("certificate factor bookkeeping") {
    std::mt19937 rng(99);
    for (int t = 0; t < 40; ++t) {
        IntPoly p = rand_poly(rng, 8);
        if (p.degree() < 1) continue;
        auto [ok, cert] = all_roots_real_nonneg(p);
        (void)ok;
        int total = 0;
        for (const auto& sf : cert.squarefree_factors)
            total += sf.factor.degree() * sf.multiplicity;
        CHECK(total == cert.total_degree);
        CHECK(cert.real_root_count_with_multiplicity >= 0);
        CHECK(cert.real_root_count_with_multiplicity <= cert.total_degree);
        CHECK(cert.nonneg_real_root_count_with_multiplicity <=
              cert.real_root_count_with_multiplicity);
    }
}

TEST_CASE("cubic discriminant") {
    CHECK(cubic_discriminant(1, -10, 24, 0) == 2304);
    CHECK(cubic_discriminant(1, 0, 0, 0) == 0);
    CHECK(cubic_discriminant(1, 0, 1, 0) == -4);
    CHECK_THROWS_AS(cubic_discriminant(0, 1, 2, 3), std::invalid_argument);
}

TEST_CASE("descartes sign changes") {
    CHECK(descartes_sign_changes(IntPoly{-12, 24, -10, 1}) == 3);
    CHECK(descartes_sign_changes(IntPoly{0, 24, 10, 1}) == 0);
    CHECK(descartes_sign_changes(IntPoly{-2, 0, 1}) == 1);
    CHECK_THROWS_AS(descartes_sign_changes(IntPoly::zero()), std::invalid_argument);
}

TEST_CASE("numeric roots of the extremal polynomials") {
    // x^2 (x^6 + 10x^4 + 33x^2 + 36) = x^2 (x^2+4)(x^2+3)^2
    IntPoly p = IntPoly{36, 0, 33, 0, 10, 0, 1}.shifted_up(2);
    auto roots = roots_numeric(p);
    REQUIRE(roots.size() == 8);
    std::vector<double> imags;
    for (const auto& z : roots) {
        CHECK(std::abs(z.real()) < 1e-8);
        imags.push_back(z.imag());
    }
    std::sort(imags.begin(), imags.end());
    const double s3 = std::sqrt(3.0);
    const std::vector<double> expect{-2, -s3, -s3, 0, 0, s3, s3, 2};
    for (size_t i = 0; i < expect.size(); ++i) CHECK(imags[i] == doctest::Approx(expect[i]).epsilon(1e-8));

    auto k23 = roots_numeric(IntPoly{0, 12, 0, 6, 0, 1});
    REQUIRE(k23.size() == 5);
    int zero = 0, offaxis = 0;
    for (const auto& z : k23) {
        if (std::abs(z) < 1e-9) {
            ++zero;
        } else {
            ++offaxis;
            CHECK(std::abs(std::abs(z.real()) - 0.48) < 0.01);
            CHECK(std::abs(std::abs(z.imag()) - 1.80) < 0.01);
        }
    }
    CHECK(zero == 1);
    CHECK(offaxis == 4);

    auto dbl = roots_numeric(IntPoly{0, 0, 1});
    REQUIRE(dbl.size() == 2);
    CHECK(std::abs(dbl[0]) < 1e-10);
    CHECK(std::abs(dbl[1]) < 1e-10);

    CHECK_THROWS_AS(roots_numeric(IntPoly::zero()), std::invalid_argument);
}

TEST_CASE("numeric real roots agree with sturm counts") {
    std::mt19937 rng(7);
    for (int t = 0; t < 80; ++t) {
        IntPoly p = rand_poly(rng, 8);
        if (p.degree() < 1) continue;
        int exact = 0;
        for (const auto& sf : squarefree_decompose(p))
            exact += sf.multiplicity *
                     sturm_count(sf.factor, Extended::neg_inf(), Extended::pos_inf());
        CHECK(near_real_count(roots_numeric(p)) == exact);
    }
}

TEST_CASE("discriminant sign matches numeric root reality for cubics") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-6, 6);
    for (int t = 0; t < 200; ++t) {
        int b = coef(rng), c = coef(rng), d = coef(rng);
        IntPoly p{d, c, b, 1};
        Int disc = cubic_discriminant(1, b, c, d);
        bool all_real = near_real_count(roots_numeric(p)) == 3;
        CHECK((disc >= 0) == all_real);
    }
}

TEST_CASE("descartes bound exceeds the positive root count by an even number") {
    std::mt19937 rng(13);
    for (int t = 0; t < 80; ++t) {
        IntPoly p = radical(rand_poly(rng, 8));
        if (p.degree() < 1) continue;
        int positive = sturm_count(p, Extended::at(Rat(0)), Extended::pos_inf());
        int gap = descartes_sign_changes(p) - positive;
        CHECK(gap >= 0);
        CHECK(gap % 2 == 0);
    }
}
