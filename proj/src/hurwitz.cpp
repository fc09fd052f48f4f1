#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "noncross/coxeter.hpp"
#include "noncross/errors.hpp"

namespace noncross::cox {

namespace {

using IndexTuple = std::vector<std::size_t>;

void check_caps(const CoxeterContext& ctx, int length)
{
    const Limits lim = current_limits();
    if (ctx.rank() > lim.redt_max_rank) {
        throw CapExceeded("reduced factorizations limited to rank " + std::to_string(lim.redt_max_rank));
    }
    if (length > lim.redt_max_length) {
        throw CapExceeded("reduced factorizations limited to absolute length " + std::to_string(lim.redt_max_length));
    }
}

void collect(const CoxeterContext& ctx, const SignedPermutation& rest, int len, IndexTuple& prefix,
             std::vector<IndexTuple>& out)
{
    if (len == 0) {
        out.push_back(prefix);
        return;
    }
    const auto& refl = ctx.reflections();
    for (std::size_t k = 0; k < refl.size(); ++k) {
        SignedPermutation shorter = refl[k].element * rest;
        if (ctx.absolute_length(shorter) != len - 1) continue;
        prefix.push_back(k);
        collect(ctx, shorter, len - 1, prefix, out);
        prefix.pop_back();
    }
}

std::vector<IndexTuple> red_t_indices(const CoxeterContext& ctx, const SignedPermutation& w)
{
    const int len = ctx.absolute_length(w);
    check_caps(ctx, len);
    std::vector<IndexTuple> out;
    IndexTuple prefix;
    collect(ctx, w, len, prefix, out);
    return out;
}

IndexTuple move_indices(const CoxeterContext& ctx, const IndexTuple& f, std::size_t i, bool inverse)
{
    const auto& refl = ctx.reflections();
    const SignedPermutation& a = refl[f[i]].element;
    const SignedPermutation& b = refl[f[i + 1]].element;
    IndexTuple g = f;
    if (!inverse) {
        g[i] = *ctx.reflection_index(a * b * a);
        g[i + 1] = f[i];
    } else {
        g[i] = f[i + 1];
        g[i + 1] = *ctx.reflection_index(b * a * b);
    }
    return g;
}

ReflectionFactorization from_indices(const CoxeterContext& ctx, const IndexTuple& f)
{
    ReflectionFactorization out;
    for (std::size_t k : f) out.factors.push_back(ctx.reflections()[k].element);
    return out;
}

}  // namespace

SignedPermutation ReflectionFactorization::product() const
{
    if (factors.empty()) throw InputError("empty factorization has no letter count");
    SignedPermutation p = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) p = p * factors[k];
    return p;
}

std::string ReflectionFactorization::to_string(const CoxeterContext& ctx) const
{
    std::string s;
    for (const auto& t : factors) {
        if (!s.empty()) s += ' ';
        auto k = ctx.reflection_index(t);
        s += k ? ctx.reflections()[*k].name : t.to_string();
    }
    return s;
}

bool is_reduced(const CoxeterContext& ctx, const ReflectionFactorization& f)
{
    if (f.factors.empty()) return true;
    for (const auto& t : f.factors) {
        if (!ctx.reflection_index(t)) return false;
    }
    return ctx.absolute_length(f.product()) == static_cast<int>(f.length());
}

std::vector<ReflectionFactorization> red_t_factorizations(const CoxeterContext& ctx, const SignedPermutation& w)
{
    std::vector<ReflectionFactorization> out;
    for (const auto& f : red_t_indices(ctx, w)) out.push_back(from_indices(ctx, f));
    return out;
}

ReflectionFactorization hurwitz_act(int i, bool inverse, const ReflectionFactorization& f)
{
    if (i < 1 || i >= static_cast<int>(f.length())) {
        throw InputError("Hurwitz move index " + std::to_string(i) + " outside 1.." + std::to_string(f.length() - 1));
    }
    const auto k = static_cast<std::size_t>(i - 1);
    const SignedPermutation a = f.factors[k];
    const SignedPermutation b = f.factors[k + 1];
    ReflectionFactorization g = f;
    if (!inverse) {
        g.factors[k] = a.inverse() * b * a;
        g.factors[k + 1] = a;
    } else {
        g.factors[k] = b;
        g.factors[k + 1] = b.inverse() * a * b;
    }
    return g;
}

OrbitReport hurwitz_orbits(const CoxeterContext& ctx, const SignedPermutation& w)
{
    const auto all = red_t_indices(ctx, w);
    std::map<IndexTuple, std::size_t> id;
    for (std::size_t k = 0; k < all.size(); ++k) id.emplace(all[k], k);
    std::vector<bool> seen(all.size(), false);
    OrbitReport report;
    report.factorizations = all.size();
    for (std::size_t s = 0; s < all.size(); ++s) {
        if (seen[s]) continue;
        std::size_t size = 0;
        std::deque<std::size_t> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            const IndexTuple f = all[queue.front()];
            queue.pop_front();
            ++size;
            for (std::size_t i = 0; i + 1 < f.size(); ++i) {
                for (bool inv : {false, true}) {
                    const std::size_t g = id.at(move_indices(ctx, f, i, inv));
                    if (!seen[g]) {
                        seen[g] = true;
                        queue.push_back(g);
                    }
                }
            }
        }
        report.orbit_sizes.push_back(size);
    }
    std::sort(report.orbit_sizes.rbegin(), report.orbit_sizes.rend());
    return report;
}

std::vector<DualBraidRelation> dual_braid_relations(const CoxeterContext& ctx, const SignedPermutation& c)
{
    std::vector<DualBraidRelation> out;
    const auto& refl = ctx.reflections();
    for (std::size_t a = 0; a < refl.size(); ++a) {
        for (std::size_t b = 0; b < refl.size(); ++b) {
            if (a == b) continue;
            const SignedPermutation u = refl[a].element * refl[b].element;
            if (ctx.absolute_length(u) != 2 || !ctx.abs_le(u, c)) continue;
            const auto conj = ctx.reflection_index(refl[a].element * refl[b].element * refl[a].element);
            out.push_back({a, b, *conj, a});
        }
    }
    return out;
}

bool dual_braid_relation_check(const CoxeterContext& ctx, const SignedPermutation& c)
{
    const auto& refl = ctx.reflections();
    std::set<std::pair<std::size_t, std::size_t>> lhs;
    for (const auto& r : dual_braid_relations(ctx, c)) {
        if (refl[r.left_first].element * refl[r.left_second].element !=
            refl[r.right_first].element * refl[r.right_second].element) {
            return false;
        }
        lhs.emplace(r.left_first, r.left_second);
    }
    const auto all = red_t_indices(ctx, c);
    for (const auto& f : all) {
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            if (!lhs.contains({f[i], f[i + 1]})) return false;
            const IndexTuple g = move_indices(ctx, f, i, false);
            if (!std::binary_search(all.begin(), all.end(), g)) return false;
        }
    }
    const auto orbits = hurwitz_orbits(ctx, c);
    return orbits.orbit_sizes.size() == 1;
}

}  // namespace noncross::cox
