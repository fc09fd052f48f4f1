#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace noncross::ncp {

using Block = std::vector<int>;

/// A partition of the ground set {1, ..., m} in canonical form: every block
/// ascending, blocks ordered by their minima. Two equal partitions always
/// have identical representations, so comparison and hashing are structural.
class SetPartition {
public:
    /// The partition into singletons of {1..m} (m >= 1).
    static SetPartition singletons(int m);
    /// The one-block partition of {1..m}.
    static SetPartition single_block(int m);
    /// Builds from arbitrary blocks, canonicalising order. Throws InputError
    /// unless the blocks are nonempty, disjoint and cover {1..m} exactly.
    static SetPartition from_blocks(int m, std::vector<Block> blocks);
    /// Builds from a label per element (labels[i] is the block tag of i+1).
    static SetPartition from_labels(std::span<const int> labels);

    int ground_size() const noexcept { return m_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    /// Index into blocks() of the block containing element x (1-based).
    int block_of(int x) const { return labels_[static_cast<std::size_t>(x - 1)]; }
    /// Restricted growth string: block index of each element 1..m.
    std::span<const int> labels() const noexcept { return labels_; }

    /// Canonical text form, e.g. "1|2 6 7|3 5|4|8".
    std::string to_string() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) noexcept
    {
        return a.m_ == b.m_ && a.labels_ == b.labels_;
    }
    /// Lexicographic on the canonical block lists (then on m).
    friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b);

private:
    SetPartition(int m, std::vector<int> labels);

    int m_ = 0;
    std::vector<int> labels_;
    std::vector<Block> blocks_;
};

/// A non-crossing partition: no a < b < c < d with a, c in one block and
/// b, d in another. The invariant is checked on construction.
class NCPartition {
public:
    /// Throws InputError if p has a crossing.
    explicit NCPartition(SetPartition p);

    static NCPartition bottom(int m) { return NCPartition(SetPartition::singletons(m), Trusted{}); }
    static NCPartition top(int m) { return NCPartition(SetPartition::single_block(m), Trusted{}); }
    static NCPartition from_blocks(int m, std::vector<Block> blocks)
    {
        return NCPartition(SetPartition::from_blocks(m, std::move(blocks)));
    }

    const SetPartition& underlying() const noexcept { return p_; }
    int ground_size() const noexcept { return p_.ground_size(); }
    std::size_t block_count() const noexcept { return p_.block_count(); }
    const std::vector<Block>& blocks() const noexcept { return p_.blocks(); }
    int block_of(int x) const { return p_.block_of(x); }
    std::string to_string() const { return p_.to_string(); }

    friend bool operator==(const NCPartition&, const NCPartition&) = default;
    friend auto operator<=>(const NCPartition& a, const NCPartition& b) { return a.p_ <=> b.p_; }

private:
    struct Trusted {};
    NCPartition(SetPartition p, Trusted) : p_(std::move(p)) {}
    friend NCPartition trusted_nc(SetPartition p);

    SetPartition p_;
};

/// True iff no two blocks cross.
bool is_noncrossing(const SetPartition& p);

/// All of NC(m), each exactly once, sorted lexicographically by canonical
/// block lists. Results are cached per m; the reference stays valid for the
/// life of the program. Throws CapExceeded when m exceeds Limits::nc_max_m.
const std::vector<NCPartition>& enumerate_nc(int m);

/// Catalan number C_n = (2n)! / (n! (n+1)!).
std::uint64_t catalan(int n);

/// p refines q: every block of p lies inside a block of q.
bool refine_le(const SetPartition& p, const SetPartition& q);
inline bool refine_le(const NCPartition& p, const NCPartition& q)
{
    return refine_le(p.underlying(), q.underlying());
}

/// Blockwise intersection; the greatest lower bound in both the partition
/// lattice and NC(m).
SetPartition partition_meet(const SetPartition& p, const SetPartition& q);
NCPartition meet_nc(const NCPartition& p, const NCPartition& q);

/// Join in the full partition lattice (transitive closure of "same block").
SetPartition partition_join(const SetPartition& p, const SetPartition& q);
/// Finest non-crossing partition coarser than p, obtained by repeatedly
/// merging two crossing blocks until none cross.
SetPartition crossing_closure(const SetPartition& p);
/// Least upper bound in NC(m).
NCPartition join_nc(const NCPartition& p, const NCPartition& q);

/// Kreweras complement. Dual vertex i sits on the arc from i to i+1 (mod m).
NCPartition kreweras(const NCPartition& p);

/// m - number of blocks.
int rank(const NCPartition& p);

/// Relabels i -> i + k (mod m, into 1..m).
NCPartition rotate(const NCPartition& p, int k);

/// Blockwise Kreweras complement of p inside q (requires p <= q), as a
/// partition of the dual vertices. Within a block {b_1 < ... < b_k} of q
/// the dual vertex sitting after b_i (cyclically within the block) carries
/// the label b_i. With q = top this is kreweras(p). Throws NotComparable.
NCPartition blockwise_complement(const NCPartition& p, const NCPartition& q);
/// Block sizes of blockwise_complement(p, q), sorted descending.
std::vector<int> blockwise_complement_sizes(const NCPartition& p, const NCPartition& q);

/// Moebius function of NC(m) by the defining recursion over [p, q].
/// Throws NotComparable unless p <= q.
std::int64_t mobius_nc(const NCPartition& p, const NCPartition& q);
/// Moebius function as the product over blocks B of the blockwise
/// complement of (-1)^(|B|-1) C_(|B|-1).
std::int64_t mobius_closed(const NCPartition& p, const NCPartition& q);

/// Parses the canonical text format. Rejects non-canonical input (blocks
/// out of order, unsorted elements, gaps, stray whitespace).
SetPartition parse_partition(std::string_view text);
NCPartition parse_nc_partition(std::string_view text);

}  // namespace noncross::ncp

template <>
struct std::hash<noncross::ncp::SetPartition> {
    std::size_t operator()(const noncross::ncp::SetPartition& p) const noexcept;
};

template <>
struct std::hash<noncross::ncp::NCPartition> {
    std::size_t operator()(const noncross::ncp::NCPartition& p) const noexcept
    {
        return std::hash<noncross::ncp::SetPartition>{}(p.underlying());
    }
};
