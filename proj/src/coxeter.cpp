#include "noncross/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "noncross/errors.hpp"
#include "noncross/poset.hpp"

namespace noncross::cox {

namespace {

std::size_t factorial(int n)
{
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
    return f;
}

Reflection make_reflection(int n, int i, int j, bool negative)
{
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(k)] = k + 1;
    lattice::IntVector root(static_cast<std::size_t>(n), 0);
    lattice::IntVector coroot(static_cast<std::size_t>(n), 0);
    const auto ii = static_cast<std::size_t>(i - 1);
    const auto jj = static_cast<std::size_t>(j - 1);
    if (i == j) {
        w[ii] = -i;
        root[ii] = 1;
        coroot[ii] = 2;
    } else if (negative) {
        w[ii] = -j;
        w[jj] = -i;
        root[ii] = root[jj] = coroot[ii] = coroot[jj] = 1;
    } else {
        w[ii] = j;
        w[jj] = i;
        root[ii] = coroot[ii] = 1;
        root[jj] = coroot[jj] = -1;
    }
    std::string name = "t(" + std::to_string(i) + "," + std::to_string(j) + "," + (negative ? "-" : "+") + ")";
    return {SignedPermutation(w), std::move(root), std::move(coroot), std::move(name)};
}

// Rows spanning im(w - 1): column j of w - 1 is sign * e_|w(j)| - e_j.
std::vector<lattice::IntVector> moved_space(const SignedPermutation& w)
{
    const int n = w.letters();
    std::vector<lattice::IntVector> rows;
    for (int j = 1; j <= n; ++j) {
        const int v = w(j);
        if (v == j) continue;
        lattice::IntVector col(static_cast<std::size_t>(n), 0);
        col[static_cast<std::size_t>(std::abs(v) - 1)] += v > 0 ? 1 : -1;
        col[static_cast<std::size_t>(j - 1)] -= 1;
        rows.push_back(std::move(col));
    }
    return rows;
}

// Elements u of W with im(u - 1) inside the span of `space`.
std::vector<SignedPermutation> stabilizer_of_complement(const CoxeterContext& ctx,
                                                        const std::vector<lattice::IntVector>& space)
{
    const int base = lattice::rank_of(space);
    std::vector<SignedPermutation> out;
    for (const auto& u : ctx.elements()) {
        auto rows = space;
        for (auto& r : moved_space(u)) rows.push_back(std::move(r));
        if (lattice::rank_of(rows) == base) out.push_back(u);
    }
    return out;
}

bool moved_within(const SignedPermutation& u, const std::vector<lattice::IntVector>& space, int base_rank)
{
    auto rows = space;
    for (auto& r : moved_space(u)) rows.push_back(std::move(r));
    return lattice::rank_of(rows) == base_rank;
}

}  // namespace

Family parse_family(const std::string& text)
{
    if (text == "A" || text == "a") return Family::A;
    if (text == "B" || text == "b") return Family::B;
    if (text == "D" || text == "d") return Family::D;
    throw InputError("unknown family '" + text + "' (expected A, B or D)");
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    }
    return "?";
}

CoxeterContext::CoxeterContext(Family family, int rank) : family_(family), rank_(rank)
{
    const int min_rank = family == Family::D ? 2 : 1;
    letters_ = family == Family::A ? rank + 1 : rank;
    if (rank < min_rank || letters_ > SignedPermutation::kMaxLetters) {
        throw InputError("rank " + std::to_string(rank) + " out of range for type " + cox::to_string(family));
    }
    std::size_t expected = factorial(letters_);
    if (family == Family::B) expected <<= rank;
    if (family == Family::D) expected <<= (rank - 1);
    const Limits lim = current_limits();
    if (expected > lim.max_group_order) {
        throw CapExceeded("group " + name() + " has order " + std::to_string(expected) + ", above the cap of " +
                          std::to_string(lim.max_group_order));
    }

    const int n = letters_;
    for (int i = 1; i <= n; ++i) {
        if (family == Family::B) reflections_.push_back(make_reflection(n, i, i, true));
        for (int j = i + 1; j <= n; ++j) {
            reflections_.push_back(make_reflection(n, i, j, false));
            if (family != Family::A) reflections_.push_back(make_reflection(n, i, j, true));
        }
    }
    for (std::size_t k = 0; k < reflections_.size(); ++k) reflection_index_.emplace(reflections_[k].element.key(), k);

    if (family == Family::B) simple_.push_back(make_reflection(n, 1, 1, true).element);
    if (family == Family::D) simple_.push_back(make_reflection(n, 1, 2, true).element);
    for (int i = 1; i < n; ++i) simple_.push_back(make_reflection(n, i, i + 1, false).element);
    coxeter_ = SignedPermutation::identity(n);
    for (const auto& s : simple_) coxeter_ = coxeter_ * s;

    // Breadth-first search from the identity in the Cayley graph over T.
    std::unordered_map<std::uint64_t, int> dist;
    std::vector<SignedPermutation> frontier{SignedPermutation::identity(n)};
    dist.emplace(frontier.front().key(), 0);
    std::vector<std::pair<int, SignedPermutation>> found{{0, frontier.front()}};
    for (int d = 1; !frontier.empty(); ++d) {
        std::vector<SignedPermutation> next;
        for (const auto& x : frontier) {
            for (const auto& t : reflections_) {
                SignedPermutation y = t.element * x;
                if (dist.emplace(y.key(), d).second) {
                    found.emplace_back(d, y);
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end());
    elements_.reserve(found.size());
    length_.reserve(found.size());
    for (auto& [d, w] : found) {
        index_.emplace(w.key(), elements_.size());
        elements_.push_back(w);
        length_.push_back(d);
    }
}

std::string CoxeterContext::name() const { return cox::to_string(family_) + std::to_string(rank_); }

bool CoxeterContext::contains(const SignedPermutation& w) const { return index_.contains(w.key()); }

std::size_t CoxeterContext::index_of(const SignedPermutation& w) const
{
    auto it = index_.find(w.key());
    if (it == index_.end()) throw InputError(w.to_string() + " is not an element of " + name());
    return it->second;
}

std::optional<std::size_t> CoxeterContext::reflection_index(const SignedPermutation& w) const
{
    auto it = reflection_index_.find(w.key());
    if (it == reflection_index_.end()) return std::nullopt;
    return it->second;
}

int CoxeterContext::absolute_length(const SignedPermutation& w) const { return length_[index_of(w)]; }

bool CoxeterContext::abs_le(const SignedPermutation& u, const SignedPermutation& v) const
{
    return absolute_length(u) + absolute_length(u.inverse() * v) == absolute_length(v);
}

std::vector<std::size_t> CoxeterContext::some_reduced_factorization(const SignedPermutation& w) const
{
    std::vector<std::size_t> out;
    SignedPermutation rest = w;
    int len = absolute_length(rest);
    while (len > 0) {
        for (std::size_t k = 0; k < reflections_.size(); ++k) {
            SignedPermutation shorter = reflections_[k].element * rest;
            if (absolute_length(shorter) == len - 1) {
                out.push_back(k);
                rest = shorter;
                --len;
                break;
            }
        }
    }
    return out;
}

std::vector<lattice::IntVector> CoxeterContext::all_roots() const
{
    std::vector<lattice::IntVector> out;
    for (const auto& t : reflections_) out.push_back(t.root);
    return out;
}

std::vector<lattice::IntVector> CoxeterContext::all_coroots() const
{
    std::vector<lattice::IntVector> out;
    for (const auto& t : reflections_) out.push_back(t.coroot);
    return out;
}

std::vector<SignedPermutation> nc_set(const CoxeterContext& ctx, const SignedPermutation& c)
{
    std::vector<SignedPermutation> out;
    const int lc = ctx.absolute_length(c);
    for (const auto& u : ctx.elements()) {
        if (ctx.absolute_length(u) > lc) break;
        if (ctx.abs_le(u, c)) out.push_back(u);
    }
    return out;
}

SignedPermutation duality(const CoxeterContext& ctx, const SignedPermutation& x, const SignedPermutation& c)
{
    if (!ctx.abs_le(x, c)) throw NotComparable(x.to_string() + " is not below " + c.to_string() + " in absolute order");
    return x.inverse() * c;
}

bool nc_lattice_check(const CoxeterContext& ctx, const SignedPermutation& c)
{
    if (ctx.rank() > current_limits().redt_max_rank) {
        throw CapExceeded("lattice check limited to rank " + std::to_string(current_limits().redt_max_rank));
    }
    const auto nc = nc_set(ctx, c);
    const auto poset = FinitePoset::from_relation(nc.size(), [&](std::size_t i, std::size_t j) {
        return ctx.abs_le(nc[i], nc[j]);
    });
    for (std::size_t i = 0; i < nc.size(); ++i) {
        for (std::size_t j = i + 1; j < nc.size(); ++j) {
            if (!poset.meet(i, j) || !poset.join(i, j)) return false;
        }
    }
    return true;
}

SignedPermutation partition_to_permutation(const ncp::NCPartition& p)
{
    const int m = p.ground_size();
    if (m > SignedPermutation::kMaxLetters) throw InputError("partition too large for the permutation model");
    std::vector<int> w(static_cast<std::size_t>(m));
    for (const auto& b : p.blocks()) {
        for (std::size_t i = 0; i < b.size(); ++i) w[static_cast<std::size_t>(b[i] - 1)] = b[(i + 1) % b.size()];
    }
    return SignedPermutation(w);
}

ncp::NCPartition permutation_to_partition(const CoxeterContext& ctx, const SignedPermutation& w,
                                          const SignedPermutation& c)
{
    if (ctx.family() != Family::A) throw InputError("permutation_to_partition needs a type A context");
    std::vector<int> long_cycle(static_cast<std::size_t>(ctx.letters()));
    for (int i = 0; i < ctx.letters(); ++i) long_cycle[static_cast<std::size_t>(i)] = i + 1;
    if (c != SignedPermutation::cycle(ctx.letters(), long_cycle)) {
        throw InputError("permutation_to_partition needs c = (1 2 ... n)");
    }
    if (!ctx.abs_le(w, c)) throw NotComparable(w.to_string() + " is not below " + c.to_string() + " in absolute order");
    return ncp::NCPartition::from_blocks(ctx.letters(), w.cycles());
}

std::vector<SignedPermutation> generated_subgroup(const CoxeterContext& ctx,
                                                  const std::vector<SignedPermutation>& gens)
{
    const SignedPermutation id = ctx.identity();
    std::unordered_set<SignedPermutation> seen{id};
    std::deque<SignedPermutation> queue{id};
    while (!queue.empty()) {
        const SignedPermutation x = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            SignedPermutation y = g * x;
            if (seen.insert(y).second) queue.push_back(y);
        }
    }
    std::vector<SignedPermutation> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SignedPermutation> parabolic_closure(const CoxeterContext& ctx, const SignedPermutation& w)
{
    ctx.absolute_length(w);  // membership check
    return stabilizer_of_complement(ctx, moved_space(w));
}

bool is_parabolic_subgroup(const CoxeterContext& ctx, const std::vector<SignedPermutation>& subgroup)
{
    std::vector<lattice::IntVector> space;
    for (const auto& g : subgroup) {
        for (auto& r : moved_space(g)) space.push_back(std::move(r));
    }
    return stabilizer_of_complement(ctx, space).size() == subgroup.size();
}

bool is_quasi_coxeter(const CoxeterContext& ctx, const SignedPermutation& w)
{
    if (ctx.absolute_length(w) != ctx.rank()) return false;
    std::vector<lattice::IntVector> roots, coroots;
    for (std::size_t k : ctx.some_reduced_factorization(w)) {
        roots.push_back(ctx.reflections()[k].root);
        coroots.push_back(ctx.reflections()[k].coroot);
    }
    return lattice::same_lattice(roots, ctx.all_roots()) && lattice::same_lattice(coroots, ctx.all_coroots());
}

bool is_parabolic_quasi_coxeter(const CoxeterContext& ctx, const SignedPermutation& w)
{
    std::vector<SignedPermutation> gens;
    for (std::size_t k : ctx.some_reduced_factorization(w)) gens.push_back(ctx.reflections()[k].element);
    return generated_subgroup(ctx, gens).size() == parabolic_closure(ctx, w).size();
}

bool is_parabolic_quasi_coxeter_lattice(const CoxeterContext& ctx, const SignedPermutation& w)
{
    const auto space = moved_space(w);
    const int base = lattice::rank_of(space);
    std::vector<lattice::IntVector> roots, coroots, sub_roots, sub_coroots;
    for (std::size_t k : ctx.some_reduced_factorization(w)) {
        roots.push_back(ctx.reflections()[k].root);
        coroots.push_back(ctx.reflections()[k].coroot);
    }
    for (const auto& t : ctx.reflections()) {
        if (moved_within(t.element, space, base)) {
            sub_roots.push_back(t.root);
            sub_coroots.push_back(t.coroot);
        }
    }
    return lattice::same_lattice(roots, sub_roots) && lattice::same_lattice(coroots, sub_coroots);
}

std::vector<SignedPermutation> conjugacy_class(const CoxeterContext& ctx, const SignedPermutation& w)
{
    std::set<SignedPermutation> cls;
    for (const auto& u : ctx.elements()) cls.insert(u * w * u.inverse());
    return {cls.begin(), cls.end()};
}

}  // namespace noncross::cox
