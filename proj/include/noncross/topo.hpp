#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "noncross/partition.hpp"
#include "noncross/poset.hpp"

namespace noncross::topo {

using Simplex = std::vector<std::size_t>;

/// A finite abstract simplicial complex on vertices 0..n-1. Simplices are
/// sorted index tuples; the empty simplex is implicit.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// `simplices` must be closed under taking nonempty subsets.
    SimplicialComplex(std::vector<std::string> vertex_labels, std::vector<Simplex> simplices);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }
    const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
    /// -1 for the empty complex.
    int dimension() const noexcept;
    /// f_0, ..., f_dim.
    std::vector<std::uint64_t> f_vector() const;

    /// One line per simplex (vertex indices separated by spaces), preceded
    /// by one "v <index> <label>" line per vertex.
    std::string to_text() const;

private:
    std::vector<std::string> labels_;
    std::vector<Simplex> simplices_;
};

/// sum over i >= -1 of (-1)^i f_i with f_{-1} = 1.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& cx);
std::int64_t reduced_euler_characteristic(const std::vector<std::uint64_t>& f_vector);

/// Order complex of the elements selected by `subset`: vertices are the
/// selected elements, simplices the chains among them.
SimplicialComplex order_complex(const FinitePoset& poset, const FinitePoset::Bits& subset,
                                const std::vector<std::string>& labels = {});

/// f-vector of the order complex of `subset`, counted without storing the
/// chains.
std::vector<std::uint64_t> chain_f_vector(const FinitePoset& poset, const FinitePoset::Bits& subset);

/// NC(m) as a poset on enumerate_nc(m) under refinement.
FinitePoset nc_poset(int m);

/// Order complex of the open interval (p, q) of NC(m). Throws NotComparable
/// unless p < q, CapExceeded above the topology cap on m.
SimplicialComplex order_complex_open_interval(const ncp::NCPartition& p, const ncp::NCPartition& q);
/// Same for the closed interval [p, q].
SimplicialComplex order_complex_closed_interval(const ncp::NCPartition& p, const ncp::NCPartition& q);

struct ChainCensus {
    int m = 0;
    int max_length = 0;                                   // longest bottom-top chain
    std::map<int, std::uint64_t> maximal_chains_by_length;  // over bottom-top maximal chains
    std::uint64_t maximal_chain_count = 0;
    bool graded = false;  // every maximal chain has length m-1 and every element lies on one
};

ChainCensus chain_census(int m);

/// mu(u, v) on NC(m) equals mu of the dual poset at (v, u) for every pair.
bool mobius_order_reversal_check(int m);

}  // namespace noncross::topo
