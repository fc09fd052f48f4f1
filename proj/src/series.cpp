#include "noncross/series.hpp"

#include <algorithm>

#include "noncross/errors.hpp"

namespace noncross {

RationalSeries::RationalSeries(int order)
{
    if (order < 0) throw InputError("series order must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

RationalSeries::RationalSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) throw InputError("series needs at least one coefficient");
}

RationalSeries::RationalSeries(std::initializer_list<Rational> coeffs)
    : RationalSeries(std::vector<Rational>(coeffs))
{}

RationalSeries RationalSeries::from_tail(const std::vector<Rational>& tail)
{
    std::vector<Rational> c;
    c.reserve(tail.size() + 1);
    c.emplace_back(0);
    c.insert(c.end(), tail.begin(), tail.end());
    return RationalSeries(std::move(c));
}

RationalSeries RationalSeries::identity(int order)
{
    RationalSeries s(order);
    if (order >= 1) s[1] = 1;
    return s;
}

RationalSeries RationalSeries::constant(const Rational& c, int order)
{
    RationalSeries s(order);
    s[0] = c;
    return s;
}

std::vector<Rational> RationalSeries::tail() const { return {coeffs_.begin() + 1, coeffs_.end()}; }

RationalSeries RationalSeries::truncated(int order) const
{
    if (order < 0) throw InputError("series order must be non-negative");
    RationalSeries s(order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) s[k] = (*this)[k];
    return s;
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& other)
{
    coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& other)
{
    coeffs_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

RationalSeries& RationalSeries::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b)
{
    const int n = std::min(a.order(), b.order());
    RationalSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

RationalSeries RationalSeries::compose(const RationalSeries& inner) const
{
    if (inner[0] != 0) throw InputError("compose: inner series must have zero constant term");
    const int n = std::min(order(), inner.order());
    // Horner: c_0 + g (c_1 + g (c_2 + ...)).
    RationalSeries acc = constant((*this)[n], n);
    const RationalSeries g = inner.truncated(n);
    for (int k = n - 1; k >= 0; --k) {
        acc = acc * g;
        acc[0] += (*this)[k];
    }
    return acc;
}

RationalSeries RationalSeries::reciprocal() const
{
    if (coeffs_[0] == 0) throw InputError("reciprocal: constant term vanishes");
    const int n = order();
    RationalSeries out(n);
    const Rational inv0 = 1 / coeffs_[0];
    out[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        Rational sum = 0;
        for (int j = 1; j <= k; ++j) sum += (*this)[j] * out[k - j];
        out[k] = -sum * inv0;
    }
    return out;
}

RationalSeries RationalSeries::compositional_inverse() const
{
    if (order() < 1 || coeffs_[0] != 0 || coeffs_[1] == 0) throw InputError("non-invertible series");
    const int n = order();
    const Rational a1 = coeffs_[1];
    RationalSeries g(n);
    g[1] = 1 / a1;
    // With b_k still zero, [z^k] f(g) is a_1 b_k plus terms in b_1..b_{k-1}.
    for (int k = 2; k <= n; ++k) {
        const RationalSeries partial = compose(g.truncated(k)).truncated(k);
        g[k] = -partial[k] / a1;
    }
    return g;
}

RationalSeries RationalSeries::divided_by_z() const
{
    if (coeffs_[0] != 0) throw InputError("divided_by_z: constant term is nonzero");
    if (order() == 0) throw InputError("divided_by_z: series of order 0");
    return RationalSeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

RationalSeries RationalSeries::times_z() const
{
    std::vector<Rational> c;
    c.reserve(coeffs_.size() + 1);
    c.emplace_back(0);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return RationalSeries(std::move(c));
}

RationalSeries RationalSeries::pow(int k) const
{
    if (k < 0) throw InputError("pow: negative exponent");
    RationalSeries result = constant(1, order());
    RationalSeries base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

std::string RationalSeries::to_string() const
{
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        if (k) out += ", ";
        out += noncross::to_string((*this)[k]);
    }
    return "[" + out + "]";
}

}  // namespace noncross
