#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "noncross/lattice.hpp"
#include "noncross/partition.hpp"
#include "noncross/signed_permutation.hpp"

namespace noncross::cox {

enum class Family { A, B, D };

Family parse_family(const std::string& text);
std::string to_string(Family f);

/// A reflection with its root and coroot in Z^letters.
///   t(i,j,+): swaps i and j, root e_i - e_j.
///   t(i,j,-): i -> -j, j -> -i, root e_i + e_j.
///   t(i,i,-): sign change of i (type B only), root e_i, coroot 2 e_i.
struct Reflection {
    SignedPermutation element;
    lattice::IntVector root;
    lattice::IntVector coroot;
    std::string name;
};

/// A finite Coxeter group of type A_n (permutations of n+1 letters),
/// B_n or D_n (signed permutations of n letters, even sign count for D).
/// The whole group, its reflections and the absolute length of every
/// element are computed on construction; afterwards the object is
/// read-only.
///
/// Simple reflections, in order:
///   A_n: s_i = (i i+1), i = 1..n
///   B_n: s_0 = t(1,1,-), s_i = (i i+1), i = 1..n-1
///   D_n: s_0 = t(1,2,-), s_i = (i i+1), i = 1..n-1
/// The default Coxeter element is their product in that order; in type A it
/// is the long cycle 1 -> 2 -> ... -> n+1 -> 1.
class CoxeterContext {
public:
    /// Throws InputError on a bad rank, CapExceeded if |W| exceeds the
    /// group-order limit.
    CoxeterContext(Family family, int rank);

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }
    int letters() const noexcept { return letters_; }
    /// "A3", "B3", "D4".
    std::string name() const;

    const std::vector<Reflection>& reflections() const noexcept { return reflections_; }
    const std::vector<SignedPermutation>& simple_reflections() const noexcept { return simple_; }
    const SignedPermutation& coxeter_element() const noexcept { return coxeter_; }
    SignedPermutation identity() const { return SignedPermutation::identity(letters_); }

    /// All of W, sorted by absolute length and then lexicographically.
    const std::vector<SignedPermutation>& elements() const noexcept { return elements_; }
    std::size_t order() const noexcept { return elements_.size(); }
    bool contains(const SignedPermutation& w) const;

    /// Index of w in reflections(), or nullopt.
    std::optional<std::size_t> reflection_index(const SignedPermutation& w) const;

    /// Length of a shortest word in T. Throws InputError if w is not in W.
    int absolute_length(const SignedPermutation& w) const;
    /// u <=_T v iff l_T(u) + l_T(u^{-1} v) = l_T(v).
    bool abs_le(const SignedPermutation& u, const SignedPermutation& v) const;

    /// One reduced T-factorization of w (greedy, deterministic).
    std::vector<std::size_t> some_reduced_factorization(const SignedPermutation& w) const;

    /// Generators of the root and coroot lattices (all positive roots).
    std::vector<lattice::IntVector> all_roots() const;
    std::vector<lattice::IntVector> all_coroots() const;

private:
    std::size_t index_of(const SignedPermutation& w) const;

    Family family_;
    int rank_;
    int letters_;
    std::vector<Reflection> reflections_;
    std::vector<SignedPermutation> simple_;
    SignedPermutation coxeter_;
    std::vector<SignedPermutation> elements_;
    std::vector<int> length_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::unordered_map<std::uint64_t, std::size_t> reflection_index_;
};

/// NC(W, c) = {u : u <=_T c}, in the order of ctx.elements() (so graded by
/// absolute length).
std::vector<SignedPermutation> nc_set(const CoxeterContext& ctx, const SignedPermutation& c);

/// x^{-1} c. Throws NotComparable unless x <=_T c.
SignedPermutation duality(const CoxeterContext& ctx, const SignedPermutation& x, const SignedPermutation& c);

/// True iff every pair of NC(W, c) has a meet and a join under <=_T.
/// Throws CapExceeded for rank above the factorization rank cap.
bool nc_lattice_check(const CoxeterContext& ctx, const SignedPermutation& c);

// ---------------------------------------------------------------------------
// Symmetric-group model of NC(m).

/// s_p: the product of the cycles b_1 -> b_2 -> ... -> b_k -> b_1 over the
/// blocks {b_1 < ... < b_k} of p.
SignedPermutation partition_to_permutation(const ncp::NCPartition& p);

/// Inverse of partition_to_permutation for w <=_T c in a type A context.
/// Throws NotComparable if w is not below c.
ncp::NCPartition permutation_to_partition(const CoxeterContext& ctx, const SignedPermutation& w,
                                          const SignedPermutation& c);

// ---------------------------------------------------------------------------
// Reflection subgroups and quasi-Coxeter elements.

/// The subgroup generated by the given elements (closure under products).
std::vector<SignedPermutation> generated_subgroup(const CoxeterContext& ctx,
                                                  const std::vector<SignedPermutation>& gens);

/// Parabolic closure of w: the pointwise stabilizer in W of the fixed space
/// of w, i.e. all u whose moved space im(u - 1) lies in im(w - 1).
std::vector<SignedPermutation> parabolic_closure(const CoxeterContext& ctx, const SignedPermutation& w);

/// A set of elements forming a subgroup is parabolic iff it equals the
/// pointwise stabilizer of its own fixed space.
bool is_parabolic_subgroup(const CoxeterContext& ctx, const std::vector<SignedPermutation>& subgroup);

/// l_T(w) = rank and the roots (resp. coroots) of one reduced factorization
/// span the full root (resp. coroot) lattice.
bool is_quasi_coxeter(const CoxeterContext& ctx, const SignedPermutation& w);

/// The reflections of one reduced factorization generate a parabolic
/// subgroup (equivalently, the parabolic closure of w).
bool is_parabolic_quasi_coxeter(const CoxeterContext& ctx, const SignedPermutation& w);

/// Lattice version of the previous test: the factorization's roots and
/// coroots span the same lattices as the roots and coroots lying in the
/// moved space of w.
bool is_parabolic_quasi_coxeter_lattice(const CoxeterContext& ctx, const SignedPermutation& w);

/// All conjugates u w u^{-1}.
std::vector<SignedPermutation> conjugacy_class(const CoxeterContext& ctx, const SignedPermutation& w);

// ---------------------------------------------------------------------------
// Reflection factorizations and the Hurwitz action.

struct ReflectionFactorization {
    std::vector<SignedPermutation> factors;

    std::size_t length() const noexcept { return factors.size(); }
    /// t_1 * ... * t_m. Throws InputError on an empty tuple.
    SignedPermutation product() const;
    /// "t(1,2,+) t(2,3,+)".
    std::string to_string(const CoxeterContext& ctx) const;

    friend bool operator==(const ReflectionFactorization&, const ReflectionFactorization&) = default;
    friend auto operator<=>(const ReflectionFactorization&, const ReflectionFactorization&) = default;
};

/// True iff every factor is a reflection and length() == l_T(product()).
bool is_reduced(const CoxeterContext& ctx, const ReflectionFactorization& f);

/// Red_T(w), in lexicographic order of reflection indices. Throws
/// CapExceeded above the length or rank caps.
std::vector<ReflectionFactorization> red_t_factorizations(const CoxeterContext& ctx, const SignedPermutation& w);

/// sigma_i (1-based i) replaces (t_i, t_{i+1}) by (t_i t_{i+1} t_i, t_i); the
/// inverse move gives (t_{i+1}, t_{i+1} t_i t_{i+1}). Throws InputError if i
/// is out of range.
ReflectionFactorization hurwitz_act(int i, bool inverse, const ReflectionFactorization& f);

struct OrbitReport {
    std::size_t factorizations = 0;
    std::vector<std::size_t> orbit_sizes;  // descending
};

/// Orbits of the Hurwitz action on Red_T(w).
OrbitReport hurwitz_orbits(const CoxeterContext& ctx, const SignedPermutation& w);

/// A dual braid relation t t' = (t t' t) t with t != t', l_T(t t') = 2 and
/// t t' <=_T c.
struct DualBraidRelation {
    std::size_t left_first;
    std::size_t left_second;
    std::size_t right_first;
    std::size_t right_second;
};

std::vector<DualBraidRelation> dual_braid_relations(const CoxeterContext& ctx, const SignedPermutation& c);

/// Every relation multiplies out on both sides, every Hurwitz move on
/// Red_T(c) is one of the relations, and the moves connect Red_T(c).
bool dual_braid_relation_check(const CoxeterContext& ctx, const SignedPermutation& c);

}  // namespace noncross::cox
