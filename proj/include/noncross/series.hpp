#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "noncross/rational.hpp"

namespace noncross {

/// Truncated formal power series c_0 + c_1 z + ... + c_N z^N with exact
/// rational coefficients. Binary operations truncate to the smaller order.
class RationalSeries {
public:
    /// The zero series of order N (N >= 0).
    explicit RationalSeries(int order);
    /// Coefficients c_0..c_N; order is coeffs.size() - 1.
    explicit RationalSeries(std::vector<Rational> coeffs);
    RationalSeries(std::initializer_list<Rational> coeffs);

    /// Series with zero constant term and c_k = tail[k-1].
    static RationalSeries from_tail(const std::vector<Rational>& tail);
    /// z truncated at order N.
    static RationalSeries identity(int order);
    /// The constant c.
    static RationalSeries constant(const Rational& c, int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    /// c_1..c_N.
    std::vector<Rational> tail() const;

    RationalSeries truncated(int order) const;

    RationalSeries& operator+=(const RationalSeries& other);
    RationalSeries& operator-=(const RationalSeries& other);
    RationalSeries& operator*=(const Rational& scalar);

    friend RationalSeries operator+(RationalSeries a, const RationalSeries& b) { return a += b; }
    friend RationalSeries operator-(RationalSeries a, const RationalSeries& b) { return a -= b; }
    friend RationalSeries operator*(RationalSeries a, const Rational& s) { return a *= s; }
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

    /// self(inner(z)); inner must have zero constant term. Result order is
    /// min(order(), inner.order()).
    RationalSeries compose(const RationalSeries& inner) const;

    /// 1 / self; needs c_0 != 0. Throws InputError otherwise.
    RationalSeries reciprocal() const;

    /// g with self(g(z)) = z = g(self(z)) modulo z^(N+1); needs c_0 == 0 and
    /// c_1 != 0, otherwise throws InputError("non-invertible series").
    /// Solved coefficient by coefficient.
    RationalSeries compositional_inverse() const;

    /// self / z; needs c_0 == 0. Order drops by one.
    RationalSeries divided_by_z() const;
    /// z * self truncated so that the order grows by one.
    RationalSeries times_z() const;

    /// self^k for k >= 0.
    RationalSeries pow(int k) const;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

}  // namespace noncross
