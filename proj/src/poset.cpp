#include "noncross/poset.hpp"

#include <algorithm>

#include "noncross/errors.hpp"

namespace noncross {

FinitePoset::FinitePoset(std::vector<Bits> up) : up_(std::move(up))
{
    const std::size_t n = up_.size();
    down_.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (up_[i].size() != n) throw InputError("FinitePoset: ragged relation");
        for (auto j = up_[i].find_first(); j != Bits::npos; j = up_[i].find_next(j)) down_[j].set(i);
    }
    order_.resize(n);
    for (std::size_t i = 0; i < n; ++i) order_[i] = i;
    // Sorting by down-set size is a linear extension of any finite poset.
    std::stable_sort(order_.begin(), order_.end(),
                     [this](std::size_t a, std::size_t b) { return down_[a].count() < down_[b].count(); });
}

FinitePoset::Bits FinitePoset::closed_interval(std::size_t i, std::size_t j) const { return up_[i] & down_[j]; }

FinitePoset::Bits FinitePoset::open_interval(std::size_t i, std::size_t j) const
{
    Bits b = closed_interval(i, j);
    b.reset(i);
    b.reset(j);
    return b;
}

std::vector<std::vector<std::size_t>> FinitePoset::covers() const
{
    const std::size_t n = size();
    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Bits above = up_[i];
        above.reset(i);
        Bits not_cover(n);
        for (auto w = above.find_first(); w != Bits::npos; w = above.find_next(w)) {
            Bits strictly_above_w = up_[w];
            strictly_above_w.reset(w);
            not_cover |= strictly_above_w;
        }
        const Bits c = above - not_cover;
        for (auto j = c.find_first(); j != Bits::npos; j = c.find_next(j)) out[i].push_back(j);
    }
    return out;
}

std::vector<std::int64_t> FinitePoset::mobius_from(std::size_t i) const
{
    std::vector<std::int64_t> mu(size(), 0);
    for (std::size_t w : order_) {
        if (!up_[i].test(w)) continue;
        if (w == i) {
            mu[w] = 1;
            continue;
        }
        std::int64_t sum = 0;
        const Bits below = up_[i] & down_[w];
        for (auto u = below.find_first(); u != Bits::npos; u = below.find_next(u)) {
            if (u != w) sum += mu[u];
        }
        mu[w] = -sum;
    }
    return mu;
}

std::int64_t FinitePoset::mobius(std::size_t i, std::size_t j) const
{
    if (!leq(i, j)) throw NotComparable("mobius: elements are not comparable");
    if (i == j) return 1;
    // Only the interval [i, j] matters.
    const Bits interval = closed_interval(i, j);
    std::vector<std::int64_t> mu(size(), 0);
    for (std::size_t w : order_) {
        if (!interval.test(w)) continue;
        if (w == i) {
            mu[w] = 1;
            continue;
        }
        std::int64_t sum = 0;
        const Bits below = interval & down_[w];
        for (auto u = below.find_first(); u != Bits::npos; u = below.find_next(u)) {
            if (u != w) sum += mu[u];
        }
        mu[w] = -sum;
        if (w == j) break;
    }
    return mu[j];
}

FinitePoset FinitePoset::dual() const { return FinitePoset(down_); }

std::optional<std::size_t> FinitePoset::meet(std::size_t i, std::size_t j) const
{
    const Bits lower = down_[i] & down_[j];
    for (auto w = lower.find_first(); w != Bits::npos; w = lower.find_next(w)) {
        if (lower.is_subset_of(down_[w])) return w;
    }
    return std::nullopt;
}

std::optional<std::size_t> FinitePoset::join(std::size_t i, std::size_t j) const
{
    const Bits upper = up_[i] & up_[j];
    for (auto w = upper.find_first(); w != Bits::npos; w = upper.find_next(w)) {
        if (upper.is_subset_of(up_[w])) return w;
    }
    return std::nullopt;
}

std::vector<std::size_t> FinitePoset::minimal_elements() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (down_[i].count() == 1) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (up_[i].count() == 1) out.push_back(i);
    }
    return out;
}

}  // namespace noncross
