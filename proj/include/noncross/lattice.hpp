#pragma once

#include <cstdint>
#include <vector>

#include "noncross/rational.hpp"

namespace noncross::lattice {

using IntVector = std::vector<std::int64_t>;

/// Row-style Hermite normal form of the lattice spanned by the given rows:
/// the nonzero rows of the unique HNF (positive pivots, entries above each
/// pivot reduced into [0, pivot)). Two generating sets span the same
/// lattice iff their HNFs are equal.
std::vector<std::vector<Integer>> hermite_normal_form(const std::vector<IntVector>& rows);

bool same_lattice(const std::vector<IntVector>& a, const std::vector<IntVector>& b);

/// Rank over Q of a small integer matrix (rows x cols, row-major) by
/// fraction-free Bareiss elimination.
int matrix_rank(std::vector<std::int64_t> entries, int rows, int cols);

/// Rank of the rows taken as vectors.
int rank_of(const std::vector<IntVector>& rows);

}  // namespace noncross::lattice
