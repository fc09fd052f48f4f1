#include <doctest.h>

#include <cmath>
#include <random>

#include "noncross/errors.hpp"
#include "noncross/freeprob.hpp"
#include "oracles.hpp"

using namespace noncross;
using namespace noncross::freeprob;

namespace {

std::vector<Rational> ints(std::initializer_list<int> xs) { return {xs.begin(), xs.end()}; }

Rational rpow(Rational x, int e)
{
    Rational r = 1;
    while (e-- > 0) r *= x;
    return r;
}

std::vector<Rational> random_values(std::mt19937& rng, int n, bool nonzero_first)
{
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    std::vector<Rational> v;
    for (int k = 0; k < n; ++k) v.emplace_back(num(rng), den(rng));
    if (nonzero_first && v[0] == 0) v[0] = 1;
    return v;
}

// m_n by brute force over all set partitions filtered by the 4-point test.
std::vector<Rational> oracle_moments(const std::vector<Rational>& kappa)
{
    std::vector<Rational> m;
    for (int n = 1; n <= static_cast<int>(kappa.size()); ++n) {
        Rational s = 0;
        for (const auto& p : oracle::all_nc(n)) {
            Rational t = 1;
            for (const auto& b : p) t *= kappa[b.size() - 1];
            s += t;
        }
        m.push_back(s);
    }
    return m;
}

}  // namespace

TEST_CASE("cumulants to moments")
{
    CHECK(cumulants_to_moments(CumulantSequence(ints({0, 1, 0, 0, 0, 0, 0, 0}))).values() == ints({0, 1, 0, 2, 0, 5, 0, 14}));
    CHECK(cumulants_to_moments(CumulantSequence(ints({1, 1, 1, 1}))).values() == ints({1, 2, 5, 14}));
    const Rational c(3, 7);
    const auto point = cumulants_to_moments(cumulants({c, 0, 0, 0, 0}));
    for (int k = 1; k <= 5; ++k) CHECK(point.at(k) == rpow(c, k));
    std::mt19937 rng(11);
    for (int t = 0; t < 5; ++t) {
        const auto k = random_values(rng, 8, false);
        CHECK(cumulants_to_moments(CumulantSequence(k)).values() == oracle_moments(k));
    }
}

TEST_CASE("moments to cumulants, both routes")
{
    CHECK(moments_to_cumulants(MomentSequence(ints({0, 1, 0, 2, 0, 5}))).values() == ints({0, 1, 0, 0, 0, 0}));
    CHECK(moments_to_cumulants(MomentSequence(ints({1, 2, 5, 14}))).values() == ints({1, 1, 1, 1}));
    CHECK(moments_to_cumulants(MomentSequence(ints({0, 0, 0, 0}))).values() == ints({0, 0, 0, 0}));
    std::mt19937 rng(3);
    for (int n = 1; n <= 10; ++n) {
        const auto k = random_values(rng, n, false);
        const auto m = cumulants_to_moments(CumulantSequence(k));
        CHECK(moments_to_cumulants(m).values() == k);
        CHECK(moments_to_cumulants_mobius(m) == moments_to_cumulants(m));
    }
}

TEST_CASE("order cap")
{
    const int cap = current_limits().series_max_order;
    std::vector<Rational> big(static_cast<std::size_t>(cap + 1), Rational(1));
    CHECK_THROWS_AS(cumulants_to_moments(CumulantSequence(big)), CapExceeded);
}

TEST_CASE("free additive convolution")
{
    const auto s = semicircle_moments(8);
    const auto sum = free_add_convolve(s, s);
    // (a1 + a2)/sqrt(2): m_k scales by 2^{-k/2}; even moments only
    for (int k = 2; k <= 8; k += 2) CHECK(sum.at(k) / rpow(Rational(2), k / 2) == s.at(k));
    CHECK(free_add_convolve(s, MomentSequence(ints({0, 0, 0, 0, 0, 0, 0, 0}))) == s);
    const auto mp = free_poisson_moments(6);
    CHECK(free_add_convolve(mp, mp).values() == oracle_moments(ints({2, 2, 2, 2, 2, 2})));
    CHECK_THROWS_AS(free_add_convolve(s, mp), InputError);
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        const MomentSequence a(random_values(rng, 6, false)), b(random_values(rng, 6, false)), c(random_values(rng, 6, false));
        CHECK(free_add_convolve(a, b) == free_add_convolve(b, a));
        CHECK(free_add_convolve(free_add_convolve(a, b), c) == free_add_convolve(a, free_add_convolve(b, c)));
        for (int n = 1; n <= 6; ++n) {
            CHECK(free_add_convolve(a.truncated(n), b.truncated(n)) == free_add_convolve(a, b).truncated(n));
        }
    }
}

TEST_CASE("free multiplicative convolution, two routes")
{
    const auto mp = free_poisson_moments(8);
    const auto delta1 = MomentSequence(ints({1, 1, 1, 1, 1, 1, 1, 1}));
    CHECK(free_mult_convolve_kreweras(mp, delta1) == mp);
    CHECK(free_mult_convolve_stransform(mp, delta1) == mp);
    CHECK(free_mult_convolve_kreweras(mp.truncated(4), mp.truncated(4)) == free_bessel_moments(2, 4));
    CHECK(free_mult_convolve_kreweras(mp, mp) == free_mult_convolve_stransform(mp, mp));
    CHECK_THROWS_AS(free_mult_convolve_stransform(semicircle_moments(4), mp.truncated(4)), InputError);
    std::mt19937 rng(17);
    for (int t = 0; t < 10; ++t) {
        const MomentSequence a(random_values(rng, 7, true)), b(random_values(rng, 7, true));
        CHECK(free_mult_convolve_kreweras(a, b) == free_mult_convolve_kreweras(b, a));
        CHECK(free_mult_convolve_kreweras(a, b) == free_mult_convolve_stransform(a, b));
    }
    // Kreweras route also works with vanishing first moments.
    const auto s = semicircle_moments(6);
    CHECK(free_mult_convolve_kreweras(s, delta1.truncated(6)) == s);
}

TEST_CASE("semicircle squared is free Poisson")
{
    const auto s = semicircle_moments(16);
    const auto mp = free_poisson_moments(8);
    for (int k = 1; k <= 8; ++k) CHECK(mp.at(k) == s.at(2 * k));
}

TEST_CASE("R- and S-transforms")
{
    const auto r_semi = r_transform(semicircle_moments(6));
    CHECK(r_semi.tail() == ints({0, 1, 0, 0, 0, 0}));
    CHECK(r_transform(free_poisson_moments(6)).tail() == ints({1, 1, 1, 1, 1, 1}));
    // S of free Poisson is 1/(1+z)
    const auto s_mp = s_transform(free_poisson_moments(7));
    for (int k = 0; k <= s_mp.order(); ++k) CHECK(s_mp[k] == (k % 2 ? -1 : 1));
    CHECK(s_transform(free_poisson_moments(7), SRoute::kMoment) == s_mp);
    CHECK(s_transform(MomentSequence(ints({1, 1, 1, 1}))) == RationalSeries{1, 0, 0, 0});
    CHECK_THROWS_AS(s_transform(semicircle_moments(4)), InputError);
    std::mt19937 rng(23);
    for (int n = 1; n <= 10; ++n) {
        const MomentSequence m(random_values(rng, n, true));
        CHECK(r_transform(m).tail() == moments_to_cumulants_mobius(m).values());
        CHECK(s_transform(m, SRoute::kCumulant) == s_transform(m, SRoute::kMoment));
        CHECK(moments_from_s_transform(s_transform(m), n) == m);
    }
}

TEST_CASE("free Bessel laws")
{
    CHECK(free_bessel_moments(1, 4).values() == ints({1, 2, 5, 14}));
    CHECK(free_bessel_moments(2, 3).values() == ints({1, 3, 12}));
    CHECK(free_bessel_moments(3, 4).values() == ints({1, 4, 22, 140}));
    CHECK(semicircle_moments(6).values() == ints({0, 1, 0, 2, 0, 5}));
    // l-fold Kreweras product of MP
    for (int l = 1; l <= 3; ++l) {
        MomentSequence prod = free_poisson_moments(6);
        for (int j = 1; j < l; ++j) prod = free_mult_convolve_kreweras(prod, free_poisson_moments(6));
        CHECK(prod == free_bessel_moments(l, 6));
    }
    CHECK_THROWS_AS(free_bessel_moments(0, 3), InputError);
}

TEST_CASE("non-crossing pairings")
{
    CHECK(nc_pair_count(2) == 1);
    CHECK(nc_pair_count(4) == 2);
    CHECK(nc_pair_count(8) == 14);
    for (int k = 1; k <= 5; ++k) {
        std::uint64_t brute = 0;
        for (const auto& p : oracle::all_nc(2 * k)) {
            bool pairs = true;
            for (const auto& b : p) pairs = pairs && b.size() == 2;
            brute += pairs;
        }
        CHECK(nc_pair_count(2 * k) == brute);
    }
    CHECK_THROWS_AS(nc_pair_count(5), InputError);
}

TEST_CASE("free central limit theorem, exact")
{
    const auto semi = clt_moments(CumulantSequence(ints({0, 1, 0, 0, 0, 0, 0, 0})), 37);
    for (int k = 1; k <= 8; ++k) CHECK(*semi.exact(k) == semicircle_moments(8).at(k));
    // symmetric base: odd moments vanish
    const auto sym = clt_moments(CumulantSequence(ints({0, 1, 0, 3, 0, -2})), 5);
    for (int k = 1; k <= 5; k += 2) CHECK(*sym.exact(k) == 0);
    // base (0,1,1,1,...), N = 10^4, k = 4
    const auto ones = clt_moments(CumulantSequence(ints({0, 1, 1, 1, 1, 1, 1, 1})), 10000);
    CHECK(*ones.exact(4) == Rational(20001, 10000));
    CHECK(ones.is_rational(3));  // N = 10^4 is a square
    const auto odd = clt_moments(CumulantSequence(ints({0, 1, 1})), 2);
    CHECK_FALSE(odd.is_rational(3));
    CHECK(odd.approx(3) == doctest::Approx(1.0 / std::sqrt(2.0)));
    for (int k = 1; k <= 4; ++k) {
        Rational previous = -1;
        for (std::uint64_t n = 16; n <= 4096; n *= 2) {
            const auto r = clt_moments(CumulantSequence(ints({0, 1, 1, 1, 1, 1, 1, 1})), n);
            const Rational scaled = (*r.exact(2 * k) - Rational(oracle::catalan(k))) * n;
            CHECK(scaled >= 0);
            if (previous >= 0) CHECK(scaled <= previous);
            previous = scaled;
        }
    }
}

TEST_CASE("freeness through vanishing mixed cumulants")
{
    const std::vector<CumulantSequence> laws{cumulants({Rational(1, 2), 2, -1, 3, 0, 1}),
                                             cumulants({-1, Rational(1, 3), 4, 1, 2, -2})};
    const JointMoments phi = [&](std::span<const int> w) { return free_joint_moment(w, laws); };
    // pure words recover the individual cumulants, mixed words vanish
    std::vector<int> word;
    for (int n = 1; n <= 5; ++n) {
        for (int mask = 0; mask < (1 << n); ++mask) {
            word.assign(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i) word[static_cast<std::size_t>(i)] = (mask >> i) & 1;
            const Rational kappa = mixed_cumulant(word, phi);
            if (mask == 0) CHECK(kappa == laws[0].at(n));
            else if (mask == (1 << n) - 1) CHECK(kappa == laws[1].at(n));
            else CHECK(kappa == 0);
        }
    }
    // phi(abab) = m2(a) m1(b)^2 + m1(a)^2 m2(b) - m1(a)^2 m1(b)^2
    const auto ma = cumulants_to_moments(laws[0]), mb = cumulants_to_moments(laws[1]);
    const std::vector<int> abab{0, 1, 0, 1};
    CHECK(phi(abab) == ma.at(2) * mb.at(1) * mb.at(1) + ma.at(1) * ma.at(1) * mb.at(2) -
                           ma.at(1) * ma.at(1) * mb.at(1) * mb.at(1));
    // alternating products of centred powers have zero expectation
    struct Factor {
        int letter;
        int power;
    };
    auto centred_product = [&](const std::vector<Factor>& fs) {
        Rational total = 0;
        for (int mask = 0; mask < (1 << fs.size()); ++mask) {
            std::vector<int> w;
            Rational coeff = 1;
            for (std::size_t i = 0; i < fs.size(); ++i) {
                const auto& m = fs[i].letter == 0 ? ma : mb;
                if (mask >> i & 1) {
                    coeff *= -m.at(fs[i].power);
                } else {
                    for (int r = 0; r < fs[i].power; ++r) w.push_back(fs[i].letter);
                }
            }
            total += coeff * (w.empty() ? Rational(1) : phi(w));
        }
        return total;
    };
    CHECK(centred_product({{0, 1}, {1, 1}}) == 0);
    CHECK(centred_product({{0, 2}, {1, 1}, {0, 1}, {1, 2}}) == 0);
    CHECK(centred_product({{1, 1}, {0, 3}, {1, 2}}) == 0);
    CHECK(centred_product({{0, 1}, {0, 1}}) != 0);  // not alternating
}
