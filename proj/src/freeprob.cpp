#include "noncross/freeprob.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "noncross/errors.hpp"
#include "noncross/partition.hpp"

namespace noncross::freeprob {

namespace {

using Sizes = std::vector<int>;

Sizes block_sizes(const ncp::NCPartition& p)
{
    Sizes s;
    s.reserve(p.block_count());
    for (const auto& b : p.blocks()) s.push_back(static_cast<int>(b.size()));
    std::sort(s.rbegin(), s.rend());
    return s;
}

void check_order(int n, const char* what)
{
    if (n < 1) throw InputError(std::string(what) + ": order must be positive");
    const int cap = current_limits().series_max_order;
    if (n > cap) {
        throw CapExceeded(std::string(what) + ": order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
}

// For each n: how many p in NC(n) have a given multiset of block sizes, and
// how many have a given (sizes(p), sizes(K(p))) pair.
struct Census {
    std::map<Sizes, std::int64_t> sizes;
    std::map<std::pair<Sizes, Sizes>, std::int64_t> kreweras_pairs;
    std::map<Sizes, std::int64_t> mobius_to_top;  // sum of mu(p, 1_n) by sizes(p)
};

const Census& census(int n)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const Census>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        Census c;
        const auto top = ncp::NCPartition::top(n);
        for (const auto& p : ncp::enumerate_nc(n)) {
            auto s = block_sizes(p);
            ++c.sizes[s];
            ++c.kreweras_pairs[{s, block_sizes(ncp::kreweras(p))}];
            c.mobius_to_top[s] += ncp::mobius_closed(p, top);
        }
        slot = std::make_unique<const Census>(std::move(c));
    }
    return *slot;
}

template <class Tag>
Rational product_over(const Sizes& sizes, const Sequence<Tag>& seq)
{
    Rational prod = 1;
    for (int s : sizes) {
        prod *= seq.at(s);
        if (prod == 0) break;
    }
    return prod;
}

bool is_perfect_square(std::uint64_t n, std::uint64_t& root)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    root = r;
    return r * r == n;
}

}  // namespace

MomentSequence moments(std::initializer_list<Rational> values) { return MomentSequence(std::vector<Rational>(values)); }
CumulantSequence cumulants(std::initializer_list<Rational> values)
{
    return CumulantSequence(std::vector<Rational>(values));
}

MomentSequence cumulants_to_moments(const CumulantSequence& kappa)
{
    const int order = kappa.order();
    check_order(order, "cumulants_to_moments");
    std::vector<Rational> m(static_cast<std::size_t>(order));
    for (int n = 1; n <= order; ++n) {
        Rational sum = 0;
        for (const auto& [sizes, count] : census(n).sizes) sum += count * product_over(sizes, kappa);
        m[static_cast<std::size_t>(n - 1)] = sum;
    }
    return MomentSequence(std::move(m));
}

CumulantSequence moments_to_cumulants(const MomentSequence& m)
{
    const int order = m.order();
    check_order(order, "moments_to_cumulants");
    CumulantSequence kappa(std::vector<Rational>(static_cast<std::size_t>(order)));
    for (int n = 1; n <= order; ++n) {
        // Every p other than the one-block partition only involves kappa_j, j < n.
        Rational rest = 0;
        for (const auto& [sizes, count] : census(n).sizes) {
            if (sizes.size() == 1) continue;
            rest += count * product_over(sizes, kappa);
        }
        kappa.at(n) = m.at(n) - rest;
    }
    return kappa;
}

CumulantSequence moments_to_cumulants_mobius(const MomentSequence& m)
{
    const int order = m.order();
    check_order(order, "moments_to_cumulants_mobius");
    std::vector<Rational> kappa(static_cast<std::size_t>(order));
    for (int n = 1; n <= order; ++n) {
        Rational sum = 0;
        for (const auto& [sizes, mu] : census(n).mobius_to_top) sum += mu * product_over(sizes, m);
        kappa[static_cast<std::size_t>(n - 1)] = sum;
    }
    return CumulantSequence(std::move(kappa));
}

MomentSequence free_add_convolve(const MomentSequence& m1, const MomentSequence& m2)
{
    if (m1.order() != m2.order()) throw InputError("free_add_convolve: order mismatch");
    const auto k1 = moments_to_cumulants(m1);
    const auto k2 = moments_to_cumulants(m2);
    std::vector<Rational> sum(static_cast<std::size_t>(m1.order()));
    for (int n = 1; n <= m1.order(); ++n) sum[static_cast<std::size_t>(n - 1)] = k1.at(n) + k2.at(n);
    return cumulants_to_moments(CumulantSequence(std::move(sum)));
}

MomentSequence free_mult_convolve_kreweras(const MomentSequence& m1, const MomentSequence& m2)
{
    if (m1.order() != m2.order()) throw InputError("free_mult_convolve: order mismatch");
    const auto ka = moments_to_cumulants(m1);
    const auto kb = moments_to_cumulants(m2);
    std::vector<Rational> kab(static_cast<std::size_t>(m1.order()));
    for (int n = 1; n <= m1.order(); ++n) {
        Rational sum = 0;
        for (const auto& [pair, count] : census(n).kreweras_pairs) {
            const Rational left = product_over(pair.first, ka);
            if (left == 0) continue;
            sum += count * left * product_over(pair.second, kb);
        }
        kab[static_cast<std::size_t>(n - 1)] = sum;
    }
    return cumulants_to_moments(CumulantSequence(std::move(kab)));
}

RationalSeries moment_series(const MomentSequence& m) { return RationalSeries::from_tail(m.values()); }

RationalSeries r_transform(const MomentSequence& m)
{
    if (m.order() < 1) throw InputError("r_transform: empty moment sequence");
    // R(g(z)) = M(z) with g(z) = z (1 + M(z)), so R = M o g^{<-1>}.
    const RationalSeries M = moment_series(m);
    const RationalSeries g = (RationalSeries::constant(1, m.order()) + M).times_z().truncated(m.order());
    return M.compose(g.compositional_inverse());
}

RationalSeries s_transform(const MomentSequence& m, SRoute route)
{
    if (m.order() < 1) throw InputError("s_transform: empty moment sequence");
    if (m.at(1) == 0) throw InputError("vanishing first moment");
    const int n = m.order();
    if (route == SRoute::kCumulant) return r_transform(m).compositional_inverse().divided_by_z();
    RationalSeries one_plus_z = RationalSeries::constant(1, n - 1);
    if (n - 1 >= 1) one_plus_z[1] = 1;
    return moment_series(m).compositional_inverse().divided_by_z() * one_plus_z;
}

MomentSequence moments_from_s_transform(const RationalSeries& s, int order)
{
    if (order < 1) throw InputError("moments_from_s_transform: order must be positive");
    if (s.order() < order - 1) throw InputError("moments_from_s_transform: S-transform truncated too early");
    if (s[0] == 0) throw InputError("moments_from_s_transform: S-transform has zero constant term");
    // M^{<-1>}(z) = z S(z) / (1 + z).
    RationalSeries one_plus_z = RationalSeries::constant(1, order);
    if (order >= 1) one_plus_z[1] = 1;
    const RationalSeries m_inverse = (s.truncated(order - 1).times_z() * one_plus_z.reciprocal()).truncated(order);
    return MomentSequence(m_inverse.compositional_inverse().tail());
}

MomentSequence free_mult_convolve_stransform(const MomentSequence& m1, const MomentSequence& m2)
{
    if (m1.order() != m2.order()) throw InputError("free_mult_convolve: order mismatch");
    const RationalSeries s = s_transform(m1) * s_transform(m2);
    return moments_from_s_transform(s, m1.order());
}

MomentSequence semicircle_moments(int order)
{
    if (order < 1) throw InputError("semicircle_moments: order must be positive");
    std::vector<Rational> m(static_cast<std::size_t>(order), Rational(0));
    for (int n = 2; n <= order; n += 2) m[static_cast<std::size_t>(n - 1)] = Rational(ncp::catalan(n / 2));
    return MomentSequence(std::move(m));
}

MomentSequence free_poisson_moments(int order) { return free_bessel_moments(1, order); }

MomentSequence free_bessel_moments(int l, int order)
{
    if (l < 1) throw InputError("free_bessel_moments: l must be >= 1");
    if (order < 1) throw InputError("free_bessel_moments: order must be positive");
    RationalSeries one_plus_z = RationalSeries::constant(1, std::max(order - 1, 0));
    if (order - 1 >= 1) one_plus_z[1] = 1;
    return moments_from_s_transform(one_plus_z.pow(l).reciprocal(), order);
}

namespace {

// Walks every non-crossing matching of positions pos..two_k-1: each point
// either opens a pair or closes the most recently opened one.
void walk_nc_matchings(int pos, int open, int two_k, std::uint64_t& count)
{
    if (pos == two_k) {
        ++count;
        return;
    }
    if (open < two_k - pos) walk_nc_matchings(pos + 1, open + 1, two_k, count);
    if (open > 0) walk_nc_matchings(pos + 1, open - 1, two_k, count);
}

}  // namespace

std::uint64_t nc_pair_count(int two_k)
{
    if (two_k < 0 || two_k % 2 != 0) throw InputError("nc_pair_count: input must be a non-negative even integer");
    if (two_k > 32) throw CapExceeded("nc_pair_count: enumeration capped at 32 points");
    std::uint64_t count = 0;
    walk_nc_matchings(0, 0, two_k, count);
    return count;
}

bool CltMoments::is_rational(int k) const
{
    if (k % 2 == 0 || scaled.at(k) == 0) return true;
    std::uint64_t root = 0;
    return is_perfect_square(summands, root);
}

std::optional<Rational> CltMoments::exact(int k) const
{
    if (k % 2 == 0 || scaled.at(k) == 0) return scaled.at(k);
    std::uint64_t root = 0;
    if (!is_perfect_square(summands, root)) return std::nullopt;
    return scaled.at(k) / Rational(root);
}

double CltMoments::approx(int k) const
{
    const double v = to_double(scaled.at(k));
    return k % 2 == 0 ? v : v / std::sqrt(static_cast<double>(summands));
}

CltMoments clt_moments(const CumulantSequence& base, std::uint64_t summands)
{
    if (summands == 0) throw InputError("clt_moments: need at least one summand");
    const int order = base.order();
    check_order(order, "clt_moments");
    const Rational n{Integer(summands)};
    std::vector<Rational> scaled(static_cast<std::size_t>(order));
    for (int k = 1; k <= order; ++k) {
        Rational sum = 0;
        for (const auto& [sizes, count] : census(k).sizes) {
            const Rational prod = product_over(sizes, base);
            if (prod == 0) continue;
            // N^(#blocks - k/2), with the half-integer part split off for odd k.
            const int exponent = static_cast<int>(sizes.size()) - k / 2;
            Rational power = 1;
            for (int e = 0; e < std::abs(exponent); ++e) power *= n;
            if (exponent < 0) power = 1 / power;
            sum += count * prod * power;
        }
        scaled[static_cast<std::size_t>(k - 1)] = sum;
    }
    return CltMoments{summands, MomentSequence(std::move(scaled))};
}

Rational mixed_cumulant(std::span<const int> word, const JointMoments& phi)
{
    const int n = static_cast<int>(word.size());
    check_order(n, "mixed_cumulant");
    const auto top = ncp::NCPartition::top(n);
    Rational sum = 0;
    std::vector<int> sub;
    for (const auto& q : ncp::enumerate_nc(n)) {
        Rational prod = 1;
        for (const auto& b : q.blocks()) {
            sub.clear();
            for (int x : b) sub.push_back(word[static_cast<std::size_t>(x - 1)]);
            prod *= phi(sub);
            if (prod == 0) break;
        }
        if (prod != 0) sum += prod * ncp::mobius_closed(q, top);
    }
    return sum;
}

Rational free_joint_moment(std::span<const int> word, std::span<const CumulantSequence> laws)
{
    const int n = static_cast<int>(word.size());
    if (n == 0) return 1;
    check_order(n, "free_joint_moment");
    for (int letter : word) {
        if (letter < 0 || static_cast<std::size_t>(letter) >= laws.size()) throw InputError("free_joint_moment: unknown letter");
        if (laws[static_cast<std::size_t>(letter)].order() < n) throw InputError("free_joint_moment: cumulants too short");
    }
    Rational sum = 0;
    for (const auto& p : ncp::enumerate_nc(n)) {
        Rational prod = 1;
        for (const auto& b : p.blocks()) {
            const int letter = word[static_cast<std::size_t>(b.front() - 1)];
            for (int x : b) {
                if (word[static_cast<std::size_t>(x - 1)] != letter) {
                    prod = 0;
                    break;
                }
            }
            if (prod == 0) break;
            prod *= laws[static_cast<std::size_t>(letter)].at(static_cast<int>(b.size()));
            if (prod == 0) break;
        }
        sum += prod;
    }
    return sum;
}

}  // namespace noncross::freeprob
