#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "noncross/rational.hpp"
#include "noncross/series.hpp"

namespace noncross::freeprob {

/// A finite sequence x_1..x_N of exact rationals. The tag keeps moments and
/// cumulants from being mixed up.
template <class Tag>
class Sequence {
public:
    Sequence() = default;
    explicit Sequence(std::vector<Rational> values) : values_(std::move(values)) {}

    int order() const noexcept { return static_cast<int>(values_.size()); }
    /// 1-based access: at(1) is the first entry.
    const Rational& at(int k) const { return values_.at(static_cast<std::size_t>(k - 1)); }
    Rational& at(int k) { return values_.at(static_cast<std::size_t>(k - 1)); }
    const std::vector<Rational>& values() const noexcept { return values_; }
    Sequence truncated(int order) const
    {
        return Sequence(std::vector<Rational>(values_.begin(), values_.begin() + order));
    }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<Rational> values_;
};

struct MomentTag {};
struct CumulantTag {};
/// m_k = phi(a^k), k = 1..N.
using MomentSequence = Sequence<MomentTag>;
/// kappa_k, k = 1..N.
using CumulantSequence = Sequence<CumulantTag>;

MomentSequence moments(std::initializer_list<Rational> values);
CumulantSequence cumulants(std::initializer_list<Rational> values);

// ---------------------------------------------------------------------------
// Moment-cumulant transforms over NC(n). Orders above Limits::series_max_order
// throw CapExceeded.

/// m_n = sum over p in NC(n) of the product over blocks B of kappa_|B|.
MomentSequence cumulants_to_moments(const CumulantSequence& kappa);

/// Inverse of cumulants_to_moments by triangular solve.
CumulantSequence moments_to_cumulants(const MomentSequence& m);

/// kappa_n = sum over q in NC(n) of phi_q * mu(q, 1_n), with mu taken from
/// the NC lattice. Agrees with moments_to_cumulants exactly.
CumulantSequence moments_to_cumulants_mobius(const MomentSequence& m);

// ---------------------------------------------------------------------------
// Free convolutions.

/// Moments of mu1 boxplus mu2 (cumulants add). Orders must match.
MomentSequence free_add_convolve(const MomentSequence& m1, const MomentSequence& m2);

/// Moments of mu1 boxtimes mu2 via kappa_n(ab) = sum over p in NC(n) of
/// kappa_p(a) kappa_{K(p)}(b).
MomentSequence free_mult_convolve_kreweras(const MomentSequence& m1, const MomentSequence& m2);

/// Moments of mu1 boxtimes mu2 via S_ab = S_a S_b. Throws InputError
/// ("vanishing first moment") when either m_1 is zero.
MomentSequence free_mult_convolve_stransform(const MomentSequence& m1, const MomentSequence& m2);

// ---------------------------------------------------------------------------
// Generating series. M(z) = sum m_n z^n and R(z) = sum kappa_n z^n, both
// with zero constant term, truncated at the sequence order.

RationalSeries moment_series(const MomentSequence& m);

/// R-transform, obtained by solving R(z M(z) + z) = M(z) order by order
/// (independent of the NC enumeration).
RationalSeries r_transform(const MomentSequence& m);

enum class SRoute {
    kCumulant,  // S = R^{<-1>}(z) / z
    kMoment,    // S = (1 + z)/z * M^{<-1>}(z)
};

/// S-transform truncated at order N-1. Throws InputError when m_1 == 0.
RationalSeries s_transform(const MomentSequence& m, SRoute route = SRoute::kCumulant);

/// Moments m_1..m_N of the law whose S-transform is s (s has order >= N-1
/// and nonzero constant term).
MomentSequence moments_from_s_transform(const RationalSeries& s, int order);

// ---------------------------------------------------------------------------
// Named laws.

/// Semicircle: m_{2k} = C_k, odd moments vanish.
MomentSequence semicircle_moments(int order);
/// Free Poisson (Marchenko-Pastur, rate 1): m_k = C_k.
MomentSequence free_poisson_moments(int order);
/// Free Bessel law with S(z) = (1+z)^(-l), computed by series inversion.
MomentSequence free_bessel_moments(int l, int order);

/// Number of non-crossing pair partitions of {1..two_k}, counted by
/// generating each one. Throws InputError for odd input.
std::uint64_t nc_pair_count(int two_k);

// ---------------------------------------------------------------------------
// Free central limit theorem, exact for finitely many summands.

/// Moments of S_N = (a_1 + ... + a_N)/sqrt(N) for free copies of a. Since
/// kappa_k(S_N) = N^(1-k/2) kappa_k(a), each m_k equals scaled.at(k) times
/// N^(-1/2) for odd k and times 1 for even k; scaled is always rational.
struct CltMoments {
    std::uint64_t summands = 1;
    MomentSequence scaled;

    /// True when m_k itself is rational (k even, N a perfect square, or the
    /// scaled coefficient is zero).
    bool is_rational(int k) const;
    /// m_k exactly, if rational.
    std::optional<Rational> exact(int k) const;
    double approx(int k) const;
};

CltMoments clt_moments(const CumulantSequence& base, std::uint64_t summands);

// ---------------------------------------------------------------------------
// Mixed cumulants over words in several variables, enough to exercise
// freeness through vanishing mixed cumulants.

/// phi of a word (letters are variable ids), e.g. {0,1,0,1} for phi(abab).
using JointMoments = std::function<Rational(std::span<const int>)>;

/// kappa_n[a_{w_1}, ..., a_{w_n}] = sum over q in NC(n) of phi_q[w] mu(q, 1_n).
Rational mixed_cumulant(std::span<const int> word, const JointMoments& phi);

/// Joint moments of free variables with the given cumulant sequences:
/// phi(word) = sum over p in NC(n) whose blocks are monochromatic of the
/// product of kappa_|B|(letter of B).
Rational free_joint_moment(std::span<const int> word, std::span<const CumulantSequence> laws);

}  // namespace noncross::freeprob
