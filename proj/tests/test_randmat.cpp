#include <doctest.h>

#include <cmath>

#include "noncross/errors.hpp"
#include "noncross/freeprob.hpp"
#include "noncross/randmat.hpp"

using namespace noncross;
using namespace noncross::rmt;

TEST_CASE("Philox4x32-10 known answers")
{
    using C = Philox4x32::Counter;
    using K = Philox4x32::Key;
    CHECK(Philox4x32::block(C{0, 0, 0, 0}, K{0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::block(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::block(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams")
{
    RngStream a(5, 3), b(5, 3), c(5, 4), d(6, 3);
    bool differ_c = false, differ_d = false;
    for (int i = 0; i < 64; ++i) {
        const auto x = a.next_u32();
        CHECK(x == b.next_u32());
        differ_c = differ_c || x != c.next_u32();
        differ_d = differ_d || x != d.next_u32();
    }
    CHECK(differ_c);
    CHECK(differ_d);
    RngStream u(1, 0);
    double sum = 0, sq = 0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) {
        const double x = u.uniform();
        CHECK_UNARY(x > 0.0);
        CHECK_UNARY(x < 1.0);
        sum += x;
    }
    CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
    RngStream g(2, 0);
    sum = 0;
    for (int i = 0; i < n; ++i) {
        const double x = g.normal();
        sum += x;
        sq += x * x;
    }
    CHECK(std::abs(sum / n) < 0.02);
    CHECK(sq / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("Ginibre entries")
{
    RngStream s(9, 1);
    const int n = 200;
    const auto g = sample_ginibre(n, s);
    REQUIRE(g.rows() == n);
    REQUIRE(g.cols() == n);
    double re2 = 0, im2 = 0, re = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            re += g(i, j).real();
            re2 += g(i, j).real() * g(i, j).real();
            im2 += g(i, j).imag() * g(i, j).imag();
        }
    const double cells = double(n) * n;
    CHECK(std::abs(re / cells) < 5.0 / std::sqrt(cells * 2 * n));
    CHECK(re2 / cells * 2 * n == doctest::Approx(1.0).epsilon(0.03));
    CHECK(im2 / cells * 2 * n == doctest::Approx(1.0).epsilon(0.03));
    RngStream s2(9, 1);
    CHECK(sample_ginibre(n, s2) == g);
}

TEST_CASE("moment estimates")
{
    GinibreSpec spec;
    spec.n = 64;
    spec.trials = 20;
    spec.seed = 4;
    const auto first = estimate_product_moment(spec, 1);
    CHECK(first.target == 1);
    CHECK(std::abs(first.z_score) < 4);
    for (int k = 1; k <= 3; ++k) {
        const auto e = estimate_product_moment(spec, k);
        CHECK(e.target == freeprob::free_poisson_moments(k).at(k));
        CHECK(e.trials == spec.trials);
        CHECK(e.std_error > 0);
        CHECK(std::abs(e.mean - to_double(e.target)) < 4 * e.std_error);
    }
    spec.l = 2;
    for (int k = 1; k <= 2; ++k) {
        const auto p = estimate_product_moment(spec, k);
        const auto q = estimate_power_moment(spec, k);
        CHECK(p.target == freeprob::free_bessel_moments(2, k).at(k));
        CHECK(q.target == p.target);
        CHECK(std::abs(p.z_score) < 4);
        CHECK(std::abs(q.z_score) < 4);
    }
}

TEST_CASE("thread count does not change results")
{
    GinibreSpec spec;
    spec.n = 32;
    spec.l = 2;
    spec.trials = 12;
    spec.seed = 77;
    spec.threads = 1;
    const auto one = estimate_product_moment(spec, 2);
    spec.threads = 4;
    const auto four = estimate_product_moment(spec, 2);
    CHECK(one.mean == four.mean);
    CHECK(one.std_error == four.std_error);
    const auto again = estimate_product_moment(spec, 2);
    CHECK(again.mean == four.mean);
    spec.seed = 78;
    CHECK(estimate_product_moment(spec, 2).mean != four.mean);
}

TEST_CASE("input validation and budget")
{
    GinibreSpec spec;
    spec.trials = 1;
    CHECK_THROWS_AS(estimate_product_moment(spec, 1), InputError);
    spec.trials = 10;
    spec.n = 0;
    CHECK_THROWS_AS(estimate_product_moment(spec, 1), InputError);
    spec.n = 16;
    CHECK_THROWS_AS(estimate_product_moment(spec, 0), InputError);
    spec.n = 4096;
    spec.trials = 1000;
    CHECK(estimated_flops(spec, 4) > current_limits().rmt_flop_budget);
    CHECK_THROWS_AS(estimate_product_moment(spec, 4), CapExceeded);
    CHECK_THROWS_AS(estimate_power_moment(spec, 4), CapExceeded);
}
