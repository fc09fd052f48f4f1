#include "noncross/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "noncross/errors.hpp"

namespace noncross::ncp {

NCPartition trusted_nc(SetPartition p) { return NCPartition(std::move(p), NCPartition::Trusted{}); }

namespace {

void require_same_ground(const SetPartition& p, const SetPartition& q)
{
    if (p.ground_size() != q.ground_size()) {
        throw InputError("ground-set mismatch: m=" + std::to_string(p.ground_size()) + " vs m=" +
                         std::to_string(q.ground_size()));
    }
}

// s(x) = cyclic successor of x within its block (0-based elements).
std::vector<int> block_successor(const SetPartition& p)
{
    std::vector<int> next(static_cast<std::size_t>(p.ground_size()));
    for (const auto& b : p.blocks()) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            next[static_cast<std::size_t>(b[i] - 1)] = b[(i + 1) % b.size()] - 1;
        }
    }
    return next;
}

std::vector<int> block_predecessor(const SetPartition& p)
{
    std::vector<int> prev(static_cast<std::size_t>(p.ground_size()));
    for (const auto& b : p.blocks()) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            prev[static_cast<std::size_t>(b[(i + 1) % b.size()] - 1)] = b[i] - 1;
        }
    }
    return prev;
}

// Partition into the cycles of a permutation of {0..m-1}.
SetPartition cycles_of(const std::vector<int>& perm)
{
    std::vector<int> labels(perm.size(), -1);
    int next_label = 0;
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (labels[start] >= 0) continue;
        auto x = static_cast<int>(start);
        while (labels[static_cast<std::size_t>(x)] < 0) {
            labels[static_cast<std::size_t>(x)] = next_label;
            x = perm[static_cast<std::size_t>(x)];
        }
        ++next_label;
    }
    return SetPartition::from_labels(labels);
}

bool blocks_cross(const Block& x, const Block& y)
{
    // Some a < b < c < d alternating between x and y.
    for (int a : x) {
        for (int b : y) {
            if (b <= a) continue;
            for (int c : x) {
                if (c <= b) continue;
                for (int d : y) {
                    if (d > c) return true;
                }
            }
        }
    }
    return false;
}

std::int64_t signed_catalan_product(const std::vector<int>& sizes)
{
    std::int64_t value = 1;
    for (int s : sizes) {
        const auto c = static_cast<std::int64_t>(catalan(s - 1));
        value *= ((s - 1) % 2 == 0) ? c : -c;
    }
    return value;
}

}  // namespace

// ---------------------------------------------------------------------------
// SetPartition

SetPartition::SetPartition(int m, std::vector<int> labels) : m_(m), labels_(std::move(labels))
{
    const int count = labels_.empty() ? 0 : *std::max_element(labels_.begin(), labels_.end()) + 1;
    blocks_.assign(static_cast<std::size_t>(count), {});
    for (int i = 0; i < m_; ++i) blocks_[static_cast<std::size_t>(labels_[static_cast<std::size_t>(i)])].push_back(i + 1);
}

SetPartition SetPartition::singletons(int m)
{
    if (m < 1) throw InputError("ground-set size must be positive");
    std::vector<int> labels(static_cast<std::size_t>(m));
    std::iota(labels.begin(), labels.end(), 0);
    return SetPartition(m, std::move(labels));
}

SetPartition SetPartition::single_block(int m)
{
    if (m < 1) throw InputError("ground-set size must be positive");
    return SetPartition(m, std::vector<int>(static_cast<std::size_t>(m), 0));
}

SetPartition SetPartition::from_blocks(int m, std::vector<Block> blocks)
{
    if (m < 1) throw InputError("ground-set size must be positive");
    std::vector<int> labels(static_cast<std::size_t>(m), -1);
    int tag = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw InputError("empty block");
        for (int x : b) {
            if (x < 1 || x > m) throw InputError("element " + std::to_string(x) + " outside 1.." + std::to_string(m));
            auto& slot = labels[static_cast<std::size_t>(x - 1)];
            if (slot >= 0) throw InputError("element " + std::to_string(x) + " appears twice");
            slot = tag;
        }
        ++tag;
    }
    for (int i = 0; i < m; ++i) {
        if (labels[static_cast<std::size_t>(i)] < 0) throw InputError("element " + std::to_string(i + 1) + " missing");
    }
    return from_labels(labels);
}

SetPartition SetPartition::from_labels(std::span<const int> labels)
{
    if (labels.empty()) throw InputError("ground-set size must be positive");
    std::map<int, int> renumber;
    std::vector<int> rgs;
    rgs.reserve(labels.size());
    for (int tag : labels) {
        auto [it, inserted] = renumber.try_emplace(tag, static_cast<int>(renumber.size()));
        rgs.push_back(it->second);
    }
    return SetPartition(static_cast<int>(labels.size()), std::move(rgs));
}

std::string SetPartition::to_string() const
{
    std::string out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += '|';
        for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(blocks_[b][i]);
        }
    }
    return out;
}

std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b)
{
    if (auto c = a.blocks_ <=> b.blocks_; c != 0) return c;
    return a.m_ <=> b.m_;
}

NCPartition::NCPartition(SetPartition p) : p_(std::move(p))
{
    if (!is_noncrossing(p_)) throw InputError("partition " + p_.to_string() + " is crossing");
}

// ---------------------------------------------------------------------------
// Predicates and enumeration

bool is_noncrossing(const SetPartition& p)
{
    // For consecutive x < y of a block, every z strictly between them must
    // belong to a block lying entirely inside (x, y).
    const auto& blocks = p.blocks();
    std::vector<int> lo(blocks.size()), hi(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        lo[b] = blocks[b].front();
        hi[b] = blocks[b].back();
    }
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i + 1 < b.size(); ++i) {
            for (int z = b[i] + 1; z < b[i + 1]; ++z) {
                const auto other = static_cast<std::size_t>(p.block_of(z));
                if (lo[other] < b[i] || hi[other] > b[i + 1]) return false;
            }
        }
    }
    return true;
}

std::uint64_t catalan(int n)
{
    if (n < 0) throw InputError("catalan: negative index");
    std::uint64_t c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * static_cast<std::uint64_t>(2 * k + 1) / static_cast<std::uint64_t>(k + 2);
    return c;
}

namespace {

void extend_nc(int m, std::vector<int>& labels, std::vector<int>& first, std::vector<int>& last,
               std::vector<NCPartition>& out)
{
    const int i = static_cast<int>(labels.size());
    if (i == m) {
        out.push_back(trusted_nc(SetPartition::from_labels(labels)));
        return;
    }
    const int blocks = static_cast<int>(first.size());
    for (int b = 0; b < blocks; ++b) {
        // Joining i to block b crosses iff some element strictly after b's last
        // element belongs to a block that started before it.
        const int l = last[static_cast<std::size_t>(b)];
        bool ok = true;
        for (int j = l + 1; j < i && ok; ++j) {
            if (first[static_cast<std::size_t>(labels[static_cast<std::size_t>(j)])] < l) ok = false;
        }
        if (!ok) continue;
        labels.push_back(b);
        last[static_cast<std::size_t>(b)] = i;
        extend_nc(m, labels, first, last, out);
        last[static_cast<std::size_t>(b)] = l;
        labels.pop_back();
    }
    labels.push_back(blocks);
    first.push_back(i);
    last.push_back(i);
    extend_nc(m, labels, first, last, out);
    last.pop_back();
    first.pop_back();
    labels.pop_back();
}

}  // namespace

const std::vector<NCPartition>& enumerate_nc(int m)
{
    if (m < 1) throw InputError("enumerate_nc: m must be positive");
    const Limits limits = current_limits();
    if (m > limits.nc_max_m) {
        throw CapExceeded("enumerate_nc: m=" + std::to_string(m) + " exceeds cap " + std::to_string(limits.nc_max_m));
    }
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const std::vector<NCPartition>>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[m];
    if (!slot) {
        std::vector<NCPartition> out;
        out.reserve(static_cast<std::size_t>(catalan(m)));
        std::vector<int> labels, first, last;
        extend_nc(m, labels, first, last, out);
        std::sort(out.begin(), out.end());
        slot = std::make_unique<const std::vector<NCPartition>>(std::move(out));
    }
    return *slot;
}

// ---------------------------------------------------------------------------
// Order operations

bool refine_le(const SetPartition& p, const SetPartition& q)
{
    require_same_ground(p, q);
    for (const auto& b : p.blocks()) {
        const int target = q.block_of(b.front());
        for (int x : b) {
            if (q.block_of(x) != target) return false;
        }
    }
    return true;
}

SetPartition partition_meet(const SetPartition& p, const SetPartition& q)
{
    require_same_ground(p, q);
    const int m = p.ground_size();
    const auto width = static_cast<int>(q.block_count());
    std::vector<int> labels(static_cast<std::size_t>(m));
    for (int x = 1; x <= m; ++x) labels[static_cast<std::size_t>(x - 1)] = p.block_of(x) * width + q.block_of(x);
    return SetPartition::from_labels(labels);
}

NCPartition meet_nc(const NCPartition& p, const NCPartition& q)
{
    return trusted_nc(partition_meet(p.underlying(), q.underlying()));
}

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::vector<std::size_t> parent;
};

SetPartition from_union_find(UnionFind& uf, int m)
{
    std::vector<int> labels(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) labels[static_cast<std::size_t>(i)] = static_cast<int>(uf.find(static_cast<std::size_t>(i)));
    return SetPartition::from_labels(labels);
}

}  // namespace

SetPartition partition_join(const SetPartition& p, const SetPartition& q)
{
    require_same_ground(p, q);
    const int m = p.ground_size();
    UnionFind uf(static_cast<std::size_t>(m));
    for (const auto* part : {&p, &q}) {
        for (const auto& b : part->blocks()) {
            for (int x : b) uf.unite(static_cast<std::size_t>(x - 1), static_cast<std::size_t>(b.front() - 1));
        }
    }
    return from_union_find(uf, m);
}

SetPartition crossing_closure(const SetPartition& p)
{
    SetPartition current = p;
    for (;;) {
        const auto& blocks = current.blocks();
        bool merged = false;
        for (std::size_t a = 0; a < blocks.size() && !merged; ++a) {
            for (std::size_t b = a + 1; b < blocks.size() && !merged; ++b) {
                if (!blocks_cross(blocks[a], blocks[b])) continue;
                std::vector<int> labels(current.labels().begin(), current.labels().end());
                for (int& l : labels) {
                    if (l == static_cast<int>(b)) l = static_cast<int>(a);
                }
                current = SetPartition::from_labels(labels);
                merged = true;
            }
        }
        if (!merged) return current;
    }
}

NCPartition join_nc(const NCPartition& p, const NCPartition& q)
{
    return trusted_nc(crossing_closure(partition_join(p.underlying(), q.underlying())));
}

int rank(const NCPartition& p) { return p.ground_size() - static_cast<int>(p.block_count()); }

NCPartition rotate(const NCPartition& p, int k)
{
    const int m = p.ground_size();
    const int shift = ((k % m) + m) % m;
    std::vector<int> labels(static_cast<std::size_t>(m));
    for (int x = 1; x <= m; ++x) {
        const int y = (x - 1 + shift) % m;
        labels[static_cast<std::size_t>(y)] = p.block_of(x);
    }
    return trusted_nc(SetPartition::from_labels(labels));
}

NCPartition blockwise_complement(const NCPartition& p, const NCPartition& q)
{
    if (!refine_le(p, q)) {
        throw NotComparable("blockwise complement needs p <= q: " + p.to_string() + " vs " + q.to_string());
    }
    // Cycles of x -> s_p^{-1}(s_q(x)), where s_r walks each block of r upward
    // cyclically. For q = top this is the Kreweras complement.
    const auto p_prev = block_predecessor(p.underlying());
    const auto q_next = block_successor(q.underlying());
    std::vector<int> perm(q_next.size());
    for (std::size_t x = 0; x < perm.size(); ++x) perm[x] = p_prev[static_cast<std::size_t>(q_next[x])];
    return trusted_nc(cycles_of(perm));
}

std::vector<int> blockwise_complement_sizes(const NCPartition& p, const NCPartition& q)
{
    const auto c = blockwise_complement(p, q);
    std::vector<int> sizes;
    sizes.reserve(c.block_count());
    for (const auto& b : c.blocks()) sizes.push_back(static_cast<int>(b.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

NCPartition kreweras(const NCPartition& p)
{
    return blockwise_complement(p, NCPartition::top(p.ground_size()));
}

std::int64_t mobius_nc(const NCPartition& p, const NCPartition& q)
{
    if (!refine_le(p, q)) throw NotComparable("mobius: " + p.to_string() + " is not below " + q.to_string());
    if (p == q) return 1;
    std::vector<const NCPartition*> interval;
    for (const auto& w : enumerate_nc(p.ground_size())) {
        if (refine_le(p, w) && refine_le(w, q)) interval.push_back(&w);
    }
    // A strictly finer partition has strictly more blocks, so after sorting by
    // rank everything below w in the interval precedes w.
    std::stable_sort(interval.begin(), interval.end(),
                     [](const NCPartition* a, const NCPartition* b) { return rank(*a) < rank(*b); });
    std::vector<std::int64_t> mu(interval.size(), 0);
    for (std::size_t i = 0; i < interval.size(); ++i) {
        if (*interval[i] == p) {
            mu[i] = 1;
            continue;
        }
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < i; ++j) {
            if (refine_le(*interval[j], *interval[i])) sum += mu[j];
        }
        mu[i] = -sum;
    }
    return mu.back();
}

std::int64_t mobius_closed(const NCPartition& p, const NCPartition& q)
{
    if (!refine_le(p, q)) throw NotComparable("mobius: " + p.to_string() + " is not below " + q.to_string());
    return signed_catalan_product(blockwise_complement_sizes(p, q));
}

// ---------------------------------------------------------------------------
// Text format

SetPartition parse_partition(std::string_view text)
{
    if (text.empty()) throw InputError("empty partition text");
    std::vector<Block> blocks;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto bar = text.find('|', pos);
        const auto piece = text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
        if (piece.empty()) throw InputError("empty block at offset " + std::to_string(pos));
        Block block;
        std::size_t at = 0;
        while (at <= piece.size()) {
            const auto sp = piece.find(' ', at);
            const auto token = piece.substr(at, sp == std::string_view::npos ? std::string_view::npos : sp - at);
            if (token.empty() || token.front() == '0' || token.front() == '+' || token.front() == '-') {
                throw InputError("bad element token '" + std::string(token) + "' in block '" + std::string(piece) + "'");
            }
            int value = 0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || ptr != token.data() + token.size()) {
                throw InputError("bad element token '" + std::string(token) + "'");
            }
            if (!block.empty() && value <= block.back()) {
                throw InputError("block '" + std::string(piece) + "' is not strictly ascending");
            }
            block.push_back(value);
            if (sp == std::string_view::npos) break;
            at = sp + 1;
        }
        if (!blocks.empty() && block.front() <= blocks.back().front()) {
            throw InputError("blocks are not ordered by their minima at '" + std::string(piece) + "'");
        }
        blocks.push_back(std::move(block));
        if (bar == std::string_view::npos) break;
        pos = bar + 1;
    }
    int m = 0;
    for (const auto& b : blocks) m += static_cast<int>(b.size());
    return SetPartition::from_blocks(m, std::move(blocks));
}

NCPartition parse_nc_partition(std::string_view text) { return NCPartition(parse_partition(text)); }

}  // namespace noncross::ncp

std::size_t std::hash<noncross::ncp::SetPartition>::operator()(const noncross::ncp::SetPartition& p) const noexcept
{
    std::size_t h = static_cast<std::size_t>(p.ground_size()) * 0x9e3779b97f4a7c15ULL;
    for (int l : p.labels()) h = (h ^ static_cast<std::size_t>(l)) * 0x100000001b3ULL;
    return h;
}
