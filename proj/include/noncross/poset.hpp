#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace noncross {

/// A finite poset on {0, ..., n-1} stored as its up-sets. Built once from a
/// comparison predicate; all queries are read-only.
class FinitePoset {
public:
    using Bits = boost::dynamic_bitset<>;

    /// leq(i, j) must be a partial order on the indices.
    template <class Leq>
    static FinitePoset from_relation(std::size_t n, Leq&& leq)
    {
        std::vector<Bits> up(n, Bits(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (leq(i, j)) up[i].set(j);
            }
        }
        return FinitePoset(std::move(up));
    }

    explicit FinitePoset(std::vector<Bits> up);

    std::size_t size() const noexcept { return up_.size(); }
    bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
    bool less(std::size_t i, std::size_t j) const { return i != j && up_[i].test(j); }
    const Bits& up_set(std::size_t i) const { return up_[i]; }
    const Bits& down_set(std::size_t i) const { return down_[i]; }

    /// Elements w with i < w < j.
    Bits open_interval(std::size_t i, std::size_t j) const;
    /// Elements w with i <= w <= j.
    Bits closed_interval(std::size_t i, std::size_t j) const;

    /// covers()[i] lists the j covering i (i < j with nothing in between).
    std::vector<std::vector<std::size_t>> covers() const;

    /// Moebius function mu(i, j) by the recursion over [i, j]: mu(i,i) = 1 and
    /// mu(i,j) = -sum over i <= w < j of mu(i,w). Requires i <= j.
    std::int64_t mobius(std::size_t i, std::size_t j) const;
    /// mu(i, w) for every w (zero where i is not below w).
    std::vector<std::int64_t> mobius_from(std::size_t i) const;

    /// The same ground set with the order reversed.
    FinitePoset dual() const;

    /// Greatest lower bound / least upper bound, if one exists.
    std::optional<std::size_t> meet(std::size_t i, std::size_t j) const;
    std::optional<std::size_t> join(std::size_t i, std::size_t j) const;

    /// Minimal and maximal elements.
    std::vector<std::size_t> minimal_elements() const;
    std::vector<std::size_t> maximal_elements() const;

    /// A linear extension (every element after all elements below it).
    const std::vector<std::size_t>& linear_extension() const noexcept { return order_; }

private:
    std::vector<Bits> up_;
    std::vector<Bits> down_;
    std::vector<std::size_t> order_;
};

}  // namespace noncross
