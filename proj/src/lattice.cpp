#include "noncross/lattice.hpp"

#include <algorithm>
#include <utility>

#include "noncross/errors.hpp"

namespace noncross::lattice {

std::vector<std::vector<Integer>> hermite_normal_form(const std::vector<IntVector>& rows)
{
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().size();
    std::vector<std::vector<Integer>> a;
    a.reserve(rows.size());
    for (const auto& r : rows) {
        if (r.size() != cols) throw InputError("lattice generators of different lengths");
        a.emplace_back(r.begin(), r.end());
    }
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;
    for (std::size_t c = 0; c < cols && pivot_row < a.size(); ++c) {
        // Euclid on column c below pivot_row.
        for (;;) {
            std::size_t best = a.size();
            for (std::size_t r = pivot_row; r < a.size(); ++r) {
                if (a[r][c] != 0 && (best == a.size() || abs(a[r][c]) < abs(a[best][c]))) best = r;
            }
            if (best == a.size()) break;
            std::swap(a[pivot_row], a[best]);
            bool clean = true;
            for (std::size_t r = pivot_row + 1; r < a.size(); ++r) {
                if (a[r][c] == 0) continue;
                const Integer q = a[r][c] / a[pivot_row][c];
                for (std::size_t k = c; k < cols; ++k) a[r][k] -= q * a[pivot_row][k];
                if (a[r][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (a[pivot_row][c] == 0) continue;
        if (a[pivot_row][c] < 0) {
            for (auto& x : a[pivot_row]) x = -x;
        }
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Integer q = a[r][c] / a[pivot_row][c];
            if (a[r][c] - q * a[pivot_row][c] < 0) q -= 1;
            if (q != 0) {
                for (std::size_t k = c; k < cols; ++k) a[r][k] -= q * a[pivot_row][k];
            }
        }
        pivot_cols.push_back(c);
        ++pivot_row;
    }
    a.resize(pivot_row);
    return a;
}

bool same_lattice(const std::vector<IntVector>& a, const std::vector<IntVector>& b)
{
    return hermite_normal_form(a) == hermite_normal_form(b);
}

int matrix_rank(std::vector<std::int64_t> entries, int rows, int cols)
{
    __extension__ typedef __int128 Wide;
    std::vector<Wide> m(entries.begin(), entries.end());
    auto at = [&](int r, int c) -> Wide& { return m[static_cast<std::size_t>(r * cols + c)]; };
    int rank = 0;
    Wide prev = 1;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = rank;
        while (p < rows && at(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != rank) {
            for (int k = 0; k < cols; ++k) std::swap(at(p, k), at(rank, k));
        }
        for (int r = rank + 1; r < rows; ++r) {
            for (int k = c + 1; k < cols; ++k) at(r, k) = (at(rank, c) * at(r, k) - at(r, c) * at(rank, k)) / prev;
            at(r, c) = 0;
        }
        prev = at(rank, c);
        ++rank;
    }
    return rank;
}

int rank_of(const std::vector<IntVector>& rows)
{
    if (rows.empty()) return 0;
    const int cols = static_cast<int>(rows.front().size());
    std::vector<std::int64_t> flat;
    flat.reserve(rows.size() * rows.front().size());
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return matrix_rank(std::move(flat), static_cast<int>(rows.size()), cols);
}

}  // namespace noncross::lattice
