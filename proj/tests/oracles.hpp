// Brute-force reference computations shared by the unit and acceptance
// tests. Nothing here calls into the library's algorithms.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "noncross/rational.hpp"

namespace oracle {

using Blocks = std::vector<std::vector<int>>;

inline noncross::Integer catalan(int n)
{
    noncross::Integer num = 1, den = 1;
    for (int i = 1; i <= n; ++i) {
        num *= n + i;
        den *= i;
    }
    return num / den / (n + 1);
}

// Blocks from a label vector, canonical (ascending, sorted by minima).
inline Blocks blocks_of(const std::vector<int>& label)
{
    std::map<int, std::vector<int>> by;
    for (std::size_t i = 0; i < label.size(); ++i) by[label[i]].push_back(static_cast<int>(i) + 1);
    Blocks b;
    for (auto& [k, v] : by) b.push_back(v);
    std::sort(b.begin(), b.end());
    return b;
}

inline std::vector<int> labels_of(int m, const Blocks& b)
{
    std::vector<int> lab(static_cast<std::size_t>(m), -1);
    for (std::size_t k = 0; k < b.size(); ++k) {
        for (int x : b[k]) lab[static_cast<std::size_t>(x - 1)] = static_cast<int>(k);
    }
    return lab;
}

// All set partitions of [m] (restricted growth strings).
inline std::vector<Blocks> all_set_partitions(int m)
{
    std::vector<Blocks> out;
    std::vector<int> rgs(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int i, int maxv) -> void {
        if (i == m) {
            out.push_back(blocks_of(rgs));
            return;
        }
        for (int v = 0; v <= maxv + 1; ++v) {
            rgs[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, std::max(maxv, v));
        }
    };
    rgs[0] = 0;
    if (m == 1) return {Blocks{{1}}};
    rec(rec, 1, 0);
    return out;
}

// 4-point test over labels: a<b<c<d, a,c together, b,d together, apart.
inline bool crossing_labels(const std::vector<int>& lab)
{
    const int n = static_cast<int>(lab.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (lab[a] != lab[c] || lab[a] == lab[b]) continue;
                for (int d = c + 1; d < n; ++d) {
                    if (lab[b] == lab[d]) return true;
                }
            }
    return false;
}

inline bool noncrossing(int m, const Blocks& b) { return !crossing_labels(labels_of(m, b)); }

inline std::vector<Blocks> all_nc(int m)
{
    std::vector<Blocks> out;
    for (auto& b : all_set_partitions(m)) {
        if (noncrossing(m, b)) out.push_back(b);
    }
    return out;
}

// Kreweras complement from the definition: on 2m interleaved points
// v_1 w_1 v_2 w_2 ... v_m w_m, the coarsest partition of the w's whose
// union with p (on the v's) is still non-crossing.
inline Blocks kreweras(int m, const Blocks& p)
{
    const auto plab = labels_of(m, p);
    Blocks best;
    std::size_t best_count = SIZE_MAX;
    for (const auto& q : all_nc(m)) {
        const auto qlab = labels_of(m, q);
        std::vector<int> joint(2 * static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            joint[2 * static_cast<std::size_t>(i)] = plab[static_cast<std::size_t>(i)];
            joint[2 * static_cast<std::size_t>(i) + 1] = 1000 + qlab[static_cast<std::size_t>(i)];
        }
        if (crossing_labels(joint)) continue;
        if (q.size() < best_count) {
            best_count = q.size();
            best = q;
        }
    }
    return best;
}

inline bool refines(int m, const Blocks& p, const Blocks& q)
{
    const auto ql = labels_of(m, q);
    for (const auto& b : p) {
        for (int x : b) {
            if (ql[static_cast<std::size_t>(x - 1)] != ql[static_cast<std::size_t>(b[0] - 1)]) return false;
        }
    }
    return true;
}

// Relabel i -> i + k (mod m, into 1..m).
inline Blocks shift(int m, const Blocks& p, int k)
{
    Blocks out;
    for (const auto& b : p) {
        std::vector<int> nb;
        for (int x : b) nb.push_back(((x - 1 + k) % m + m) % m + 1);
        std::sort(nb.begin(), nb.end());
        out.push_back(nb);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Rank of an integer matrix over Q (rows of equal length).
inline int rational_rank(std::vector<std::vector<noncross::Rational>> a)
{
    int rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
        std::size_t p = static_cast<std::size_t>(rank);
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
            const noncross::Rational f = a[r][c] / a[static_cast<std::size_t>(rank)][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[static_cast<std::size_t>(rank)][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace oracle
