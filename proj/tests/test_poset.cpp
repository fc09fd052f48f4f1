#include <doctest.h>

#include "noncross/poset.hpp"

using noncross::FinitePoset;

namespace {

// Divisibility on {1..n}, index i stands for i + 1.
FinitePoset divisors(std::size_t n)
{
    return FinitePoset::from_relation(n, [](std::size_t i, std::size_t j) { return (j + 1) % (i + 1) == 0; });
}

// Classical number-theoretic Moebius function.
int number_mobius(int n)
{
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

}  // namespace

TEST_CASE("divisor lattice Moebius values")
{
    const auto p = divisors(60);
    for (std::size_t i = 0; i < 60; ++i)
        for (std::size_t j = 0; j < 60; ++j) {
            if (!p.leq(i, j)) continue;
            CHECK(p.mobius(i, j) == number_mobius(static_cast<int>((j + 1) / (i + 1))));
        }
    const auto row = p.mobius_from(0);
    for (std::size_t j = 0; j < 60; ++j) CHECK(row[j] == number_mobius(static_cast<int>(j + 1)));
}

TEST_CASE("two-element chain and its dual")
{
    const auto p = FinitePoset::from_relation(2, [](std::size_t i, std::size_t j) { return i <= j; });
    CHECK(p.mobius(0, 1) == -1);
    CHECK(p.dual().mobius(1, 0) == -1);
    CHECK(p.covers()[0] == std::vector<std::size_t>{1});
}

TEST_CASE("boolean lattice: meets, joins, covers, intervals")
{
    const std::size_t n = 16;
    const auto p = FinitePoset::from_relation(n, [](std::size_t i, std::size_t j) { return (i & j) == i; });
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(*p.meet(i, j) == (i & j));
            CHECK(*p.join(i, j) == (i | j));
            if (p.leq(i, j)) {
                const int k = __builtin_popcount(static_cast<unsigned>(j & ~i));
                CHECK(p.mobius(i, j) == (k % 2 ? -1 : 1));
                CHECK(p.closed_interval(i, j).count() == (1u << k));
                CHECK(p.open_interval(i, j).count() == (i == j ? 0u : (1u << k) - 2));
            }
        }
    CHECK(p.minimal_elements() == std::vector<std::size_t>{0});
    CHECK(p.maximal_elements() == std::vector<std::size_t>{15});
    const auto& ext = p.linear_extension();
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[ext[k]] = k;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p.less(i, j)) CHECK(pos[i] < pos[j]);
}

TEST_CASE("antichain has no meets")
{
    const auto p = FinitePoset::from_relation(3, [](std::size_t i, std::size_t j) { return i == j; });
    CHECK_FALSE(p.meet(0, 1).has_value());
    CHECK_FALSE(p.join(1, 2).has_value());
}
