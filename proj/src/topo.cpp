#include "noncross/topo.hpp"

#include <algorithm>
#include <functional>

#include "noncross/errors.hpp"

namespace noncross::topo {

namespace {

void check_cap(int m)
{
    const int cap = current_limits().topo_max_m;
    if (m > cap) throw CapExceeded("order complexes limited to m <= " + std::to_string(cap));
}

std::vector<std::size_t> members(const FinitePoset::Bits& subset)
{
    std::vector<std::size_t> out;
    for (auto i = subset.find_first(); i != FinitePoset::Bits::npos; i = subset.find_next(i)) out.push_back(i);
    return out;
}

// Visits every nonempty chain whose elements lie in `allowed`, extending
// upwards from `last`.
void walk_chains(const FinitePoset& poset, const FinitePoset::Bits& allowed, std::vector<std::size_t>& chain,
                 const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    visit(chain);
    FinitePoset::Bits above = poset.up_set(chain.back()) & allowed;
    above.reset(chain.back());
    for (auto j = above.find_first(); j != FinitePoset::Bits::npos; j = above.find_next(j)) {
        chain.push_back(j);
        walk_chains(poset, allowed, chain, visit);
        chain.pop_back();
    }
}

std::pair<std::size_t, std::size_t> locate(const ncp::NCPartition& p, const ncp::NCPartition& q)
{
    if (p.ground_size() != q.ground_size()) throw InputError("partitions on different ground sets");
    check_cap(p.ground_size());
    if (!ncp::refine_le(p, q)) throw NotComparable(p.to_string() + " is not below " + q.to_string());
    const auto& all = ncp::enumerate_nc(p.ground_size());
    auto find = [&](const ncp::NCPartition& x) {
        return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), x) - all.begin());
    };
    return {find(p), find(q)};
}

std::vector<std::string> nc_labels(int m)
{
    std::vector<std::string> out;
    for (const auto& p : ncp::enumerate_nc(m)) out.push_back(p.to_string());
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_labels, std::vector<Simplex> simplices)
    : labels_(std::move(vertex_labels)), simplices_(std::move(simplices))
{
    for (auto& s : simplices_) {
        std::sort(s.begin(), s.end());
        if (s.empty() || s.back() >= labels_.size()) throw InputError("simplex refers to an unknown vertex");
    }
    std::sort(simplices_.begin(), simplices_.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
}

int SimplicialComplex::dimension() const noexcept
{
    return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1;
}

std::vector<std::uint64_t> SimplicialComplex::f_vector() const
{
    std::vector<std::uint64_t> f(static_cast<std::size_t>(dimension() + 1), 0);
    for (const auto& s : simplices_) ++f[s.size() - 1];
    return f;
}

std::string SimplicialComplex::to_text() const
{
    std::string out;
    for (std::size_t v = 0; v < labels_.size(); ++v) out += "v " + std::to_string(v) + " " + labels_[v] + "\n";
    for (const auto& s : simplices_) {
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (k) out += ' ';
            out += std::to_string(s[k]);
        }
        out += '\n';
    }
    return out;
}

std::int64_t reduced_euler_characteristic(const std::vector<std::uint64_t>& f_vector)
{
    std::int64_t chi = -1;
    for (std::size_t i = 0; i < f_vector.size(); ++i) {
        const auto fi = static_cast<std::int64_t>(f_vector[i]);
        chi += (i % 2 == 0) ? fi : -fi;
    }
    return chi;
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& cx) { return reduced_euler_characteristic(cx.f_vector()); }

SimplicialComplex order_complex(const FinitePoset& poset, const FinitePoset::Bits& subset,
                                const std::vector<std::string>& labels)
{
    const auto vs = members(subset);
    std::vector<std::size_t> dense(poset.size(), 0);
    std::vector<std::string> vlabels;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        dense[vs[k]] = k;
        vlabels.push_back(labels.empty() ? std::to_string(vs[k]) : labels[vs[k]]);
    }
    std::vector<Simplex> simplices;
    for (std::size_t v : vs) {
        std::vector<std::size_t> chain{v};
        walk_chains(poset, subset, chain, [&](const std::vector<std::size_t>& c) {
            Simplex s;
            for (std::size_t x : c) s.push_back(dense[x]);
            simplices.push_back(std::move(s));
        });
    }
    return SimplicialComplex(std::move(vlabels), std::move(simplices));
}

std::vector<std::uint64_t> chain_f_vector(const FinitePoset& poset, const FinitePoset::Bits& subset)
{
    // chains_from[x][k]: chains of k+1 elements in subset starting at x.
    const auto vs = members(subset);
    std::vector<std::vector<std::uint64_t>> chains_from(poset.size());
    std::vector<std::uint64_t> f;
    const auto& order = poset.linear_extension();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const std::size_t x = *it;
        if (!subset.test(x)) continue;
        auto& cx = chains_from[x];
        cx.assign(1, 1);
        FinitePoset::Bits above = poset.up_set(x) & subset;
        above.reset(x);
        for (auto y = above.find_first(); y != FinitePoset::Bits::npos; y = above.find_next(y)) {
            const auto& cy = chains_from[y];
            if (cx.size() < cy.size() + 1) cx.resize(cy.size() + 1, 0);
            for (std::size_t k = 0; k < cy.size(); ++k) cx[k + 1] += cy[k];
        }
        if (f.size() < cx.size()) f.resize(cx.size(), 0);
        for (std::size_t k = 0; k < cx.size(); ++k) f[k] += cx[k];
    }
    return f;
}

FinitePoset nc_poset(int m)
{
    const auto& all = ncp::enumerate_nc(m);
    return FinitePoset::from_relation(all.size(), [&](std::size_t i, std::size_t j) {
        return ncp::refine_le(all[i], all[j]);
    });
}

SimplicialComplex order_complex_open_interval(const ncp::NCPartition& p, const ncp::NCPartition& q)
{
    const auto [i, j] = locate(p, q);
    if (i == j) throw NotComparable("open interval needs p strictly below q");
    const FinitePoset poset = nc_poset(p.ground_size());
    return order_complex(poset, poset.open_interval(i, j), nc_labels(p.ground_size()));
}

SimplicialComplex order_complex_closed_interval(const ncp::NCPartition& p, const ncp::NCPartition& q)
{
    const auto [i, j] = locate(p, q);
    const FinitePoset poset = nc_poset(p.ground_size());
    return order_complex(poset, poset.closed_interval(i, j), nc_labels(p.ground_size()));
}

ChainCensus chain_census(int m)
{
    check_cap(m);
    const FinitePoset poset = nc_poset(m);
    const auto covers = poset.covers();
    const std::size_t n = poset.size();
    const std::size_t bottom = 0;  // all singletons sort first
    const std::size_t top = [&] {
        const auto& all = ncp::enumerate_nc(m);
        return static_cast<std::size_t>(std::find(all.begin(), all.end(), ncp::NCPartition::top(m)) - all.begin());
    }();

    // up[x][len]: saturated chains x -> top with len cover steps.
    // down[x][len]: saturated chains bottom -> x.
    std::vector<std::map<int, std::uint64_t>> up(n), down(n);
    const auto& order = poset.linear_extension();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const std::size_t x = *it;
        if (x == top) up[x][0] = 1;
        for (std::size_t y : covers[x]) {
            for (const auto& [len, cnt] : up[y]) up[x][len + 1] += cnt;
        }
    }
    std::vector<std::vector<std::size_t>> covered_by(n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y : covers[x]) covered_by[y].push_back(x);
    }
    for (std::size_t x : order) {
        if (x == bottom) down[x][0] = 1;
        for (std::size_t y : covered_by[x]) {
            for (const auto& [len, cnt] : down[y]) down[x][len + 1] += cnt;
        }
    }

    ChainCensus out;
    out.m = m;
    out.maximal_chains_by_length = up[bottom];
    for (const auto& [len, cnt] : up[bottom]) {
        out.max_length = std::max(out.max_length, len);
        out.maximal_chain_count += cnt;
    }
    bool graded = out.maximal_chains_by_length.size() == 1 && out.max_length == m - 1;
    for (std::size_t x = 0; x < n && graded; ++x) {
        if (up[x].empty() || down[x].empty()) graded = false;
    }
    out.graded = graded;
    return out;
}

bool mobius_order_reversal_check(int m)
{
    check_cap(m);
    const FinitePoset poset = nc_poset(m);
    const FinitePoset reversed = poset.dual();
    for (std::size_t v = 0; v < poset.size(); ++v) {
        const auto mu_rev = reversed.mobius_from(v);
        for (std::size_t u = 0; u < poset.size(); ++u) {
            if (!poset.leq(u, v)) continue;
            if (poset.mobius(u, v) != mu_rev[u]) return false;
        }
    }
    return true;
}

}  // namespace noncross::topo
