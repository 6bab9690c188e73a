#pragma once

// Auslander-Reiten theory: the transpose, tau = D Tr and its inverse, catalogs of
// indecomposables for representation-finite algebras, the AR quiver, tau-orbits,
// the predecessor relation and Hom modulo projective-injectives.

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "replicated.hpp"

namespace repalg {

struct BudgetExceeded : ResourceError {
    using ResourceError::ResourceError;
};

/// Minimal projective presentation P_1 -> P_0 -> M -> 0 given by the summand
/// vertices of P_1 (`xs`), of P_0 (`ys`) and the elements lambda(j, s) in
/// e_{ys[j]} A e_{xs[s]} (dense coefficient vectors).
struct Presentation {
    std::vector<std::size_t> xs;
    std::vector<std::size_t> ys;
    std::vector<std::vector<std::vector<Fp::Elem>>> lambda; // [j][s]
};

inline Presentation minimal_presentation(const Module& m)
{
    const auto& alg = *m.algebra();
    Presentation pr;
    auto pc0 = projective_cover(m);
    pr.ys = pc0.vertices;
    auto [k, inc] = kernel(pc0.cover, pc0.epi);
    auto pc1 = projective_cover(k);
    pr.xs = pc1.vertices;
    pr.lambda.assign(pr.ys.size(), std::vector<std::vector<Fp::Elem>>(pr.xs.size(), std::vector<Fp::Elem>(alg.dim(), 0)));
    const Fp& F = alg.field();
    for (std::size_t s = 0; s < pr.xs.size(); ++s) {
        const std::size_t x = pr.xs[s];
        // image of the generator e_x in (P_0)_x, split into the blocks e_{y_j} A e_x
        Matrix v = mul(F, inc.maps[x], pc1.generators[s]);
        std::size_t off = 0;
        for (std::size_t j = 0; j < pr.ys.size(); ++j) {
            const auto& between = alg.between(pr.ys[j], x);
            for (std::size_t t = 0; t < between.size(); ++t)
                pr.lambda[j][s][between[t]] = v(off + t, 0);
            off += between.size();
        }
    }
    return pr;
}

/// Tr M as a right module over the opposite algebra.
inline Module transpose(const Module& m)
{
    auto op = m.algebra()->op();
    if (m.is_zero())
        return Module::zero(op);
    Presentation pr = minimal_presentation(m);
    // Hom(-, A) turns P(y) into the opposite projective at y and lambda into left multiplication.
    auto [src, tgt, f] = projective_map(op, pr.ys, pr.xs, [&](std::size_t t, std::size_t s) -> const std::vector<Fp::Elem>& {
        return pr.lambda[s][t];
    });
    return cokernel(tgt, f).first;
}

inline Module tau(const Module& m) { return dual(transpose(m)); }
inline Module tau_inverse(const Module& m) { return transpose(dual(m)); }

struct CatalogBudget {
    std::size_t max_entries = 10000;
    double max_seconds = 60.0;
    /// Any tau-translate larger than this aborts the search.
    std::size_t max_module_dim = 96;
};

/// One representative per isomorphism class of indecomposables, reached from the
/// indecomposable projectives and injectives by tau and tau^-1.
class IndecCatalog {
public:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    struct Entry {
        Module module;
        bool projective = false;
        bool injective = false;
        std::size_t tau = none;
        std::size_t tau_inv = none;
    };

    IndecCatalog() = default;

    explicit IndecCatalog(AlgebraPtr alg, CatalogBudget budget = {}) : alg_(std::move(alg))
    {
        auto start = std::chrono::steady_clock::now();
        auto check_budget = [&] {
            if (entries_.size() > budget.max_entries)
                throw BudgetExceeded("not representation-finite within budget: more than " +
                                     std::to_string(budget.max_entries) + " indecomposables");
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (secs > budget.max_seconds)
                throw BudgetExceeded("not representation-finite within budget: catalog exceeded " +
                                     std::to_string(budget.max_seconds) + " s");
        };
        auto check_size = [&](const Module& m) {
            if (m.total_dim() > budget.max_module_dim)
                throw BudgetExceeded("not representation-finite within budget: indecomposable of dimension " +
                                     std::to_string(m.total_dim()) + " exceeds " +
                                     std::to_string(budget.max_module_dim));
        };
        const std::size_t nv = alg_->num_vertices();
        std::vector<std::size_t> queue;
        for (std::size_t x = 0; x < nv; ++x) {
            auto [id, fresh] = insert(projective(alg_, x));
            if (fresh)
                queue.push_back(id);
        }
        for (std::size_t x = 0; x < nv; ++x) {
            auto [id, fresh] = insert(injective(alg_, x));
            if (fresh)
                queue.push_back(id);
        }
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            check_budget();
            const std::size_t id = queue[qi];
            Module cur = entries_[id].module;
            Module up = tau_inverse(cur);
            if (!up.is_zero()) {
                check_size(up);
                auto [j, fresh] = insert(up);
                entries_[id].tau_inv = j;
                entries_[j].tau = id;
                if (fresh)
                    queue.push_back(j);
            }
            Module down = tau(cur);
            if (!down.is_zero()) {
                check_size(down);
                auto [j, fresh] = insert(down);
                entries_[id].tau = j;
                entries_[j].tau_inv = id;
                if (fresh)
                    queue.push_back(j);
            }
        }
        for (auto& e : entries_) {
            e.projective = is_projective(e.module);
            e.injective = is_injective(e.module);
        }
    }

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t size() const { return entries_.size(); }
    const Entry& operator[](std::size_t i) const { return entries_[i]; }
    const Module& module(std::size_t i) const { return entries_[i].module; }
    const std::vector<Entry>& entries() const { return entries_; }
    bool projective_injective(std::size_t i) const { return entries_[i].projective && entries_[i].injective; }

    /// Catalog id of an indecomposable module, or `none`.
    std::size_t find(const Module& m) const
    {
        if (m.algebra() != alg_)
            throw InputError("catalog lookup: module over a different algebra");
        auto it = by_dims_.find(m.dims());
        if (it == by_dims_.end())
            return none;
        for (auto i : it->second)
            if (is_iso_indecomposable(entries_[i].module, m))
                return i;
        return none;
    }

    std::size_t require(const Module& m) const
    {
        auto i = find(m);
        if (i == none)
            throw InputError("module is not in the catalog");
        return i;
    }

    /// Catalog ids (with repetition) of the indecomposable summands of M.
    std::vector<std::size_t> classify(const Module& m) const
    {
        std::vector<std::size_t> ids;
        for (auto& part : indecomposable_summands(m))
            ids.push_back(require(part));
        std::sort(ids.begin(), ids.end());
        return ids;
    }

    /// Hom bases between catalog members, computed on demand and cached.
    const std::vector<Morphism>& hom(std::size_t i, std::size_t j) const
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto key = std::make_pair(i, j);
        auto it = hom_cache_.find(key);
        if (it != hom_cache_.end())
            return it->second;
        return hom_cache_.emplace(key, hom_basis(entries_[i].module, entries_[j].module)).first->second;
    }

    /// Rebuilds a catalog from stored modules and tau tables (no recomputation).
    static IndecCatalog from_entries(AlgebraPtr alg, std::vector<Entry> entries)
    {
        IndecCatalog c;
        c.alg_ = std::move(alg);
        c.entries_ = std::move(entries);
        for (std::size_t i = 0; i < c.entries_.size(); ++i)
            c.by_dims_[c.entries_[i].module.dims()].push_back(i);
        return c;
    }

    IndecCatalog(const IndecCatalog& o) : alg_(o.alg_), entries_(o.entries_), by_dims_(o.by_dims_) {}
    IndecCatalog& operator=(const IndecCatalog& o)
    {
        alg_ = o.alg_;
        entries_ = o.entries_;
        by_dims_ = o.by_dims_;
        hom_cache_.clear();
        return *this;
    }

private:
    std::pair<std::size_t, bool> insert(const Module& m)
    {
        auto i = find(m);
        if (i != none)
            return {i, false};
        entries_.push_back({m});
        by_dims_[m.dims()].push_back(entries_.size() - 1);
        return {entries_.size() - 1, true};
    }

    AlgebraPtr alg_;
    std::vector<Entry> entries_;
    std::map<DimVector, std::vector<std::size_t>> by_dims_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<Morphism>> hom_cache_;
};

/// Basis of rad(X, Y) for catalog members: Hom(X, Y) for X != Y, rad End(X) for X = Y.
inline std::vector<Morphism> radical_morphisms(const IndecCatalog& c, std::size_t i, std::size_t j)
{
    if (i != j)
        return c.hom(i, j);
    auto r = local_radical(c.module(i), c.hom(i, i));
    if (!r)
        throw InternalError("catalog member without a split local endomorphism ring");
    return *r;
}

struct ARQuiver {
    /// mult[i][j] = dim rad(X_i, X_j) / rad^2(X_i, X_j)
    std::vector<std::vector<std::size_t>> mult;
    /// Non-projective nodes where the mesh dimension identity fails.
    std::vector<std::size_t> mesh_failures;
};

inline ARQuiver ar_quiver(const IndecCatalog& c)
{
    const std::size_t n = c.size();
    const Fp& F = c.algebra()->field();
    std::vector<std::vector<std::vector<Morphism>>> rad(n, std::vector<std::vector<Morphism>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rad[i][j] = radical_morphisms(c, i, j);
    ARQuiver q;
    q.mult.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (rad[i][j].empty())
                continue;
            const std::size_t len = hom_space_len(c.module(i), c.module(j));
            std::vector<Morphism> sq;
            for (std::size_t k = 0; k < n; ++k) {
                if (rad[i][k].empty() || rad[k][j].empty())
                    continue;
                for (auto& f : rad[i][k])
                    for (auto& g : rad[k][j]) {
                        Morphism h = compose(F, g, f);
                        if (!h.is_zero())
                            sq.push_back(std::move(h));
                    }
            }
            std::size_t r2 = sq.empty() ? 0 : rank(F, morphisms_as_columns(sq, len));
            q.mult[i][j] = rad[i][j].size() - r2;
        }
    for (std::size_t z = 0; z < n; ++z) {
        if (c[z].tau == IndecCatalog::none)
            continue;
        DimVector lhs = c.module(z).dims();
        const auto& tz = c.module(c[z].tau).dims();
        for (std::size_t v = 0; v < lhs.size(); ++v)
            lhs[v] += tz[v];
        DimVector rhs(lhs.size(), 0);
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t v = 0; v < rhs.size(); ++v)
                rhs[v] += q.mult[y][z] * c.module(y).dim(v);
        DimVector rhs2(lhs.size(), 0);
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t v = 0; v < rhs2.size(); ++v)
                rhs2[v] += q.mult[c[z].tau][y] * c.module(y).dim(v);
        if (lhs != rhs || lhs != rhs2)
            q.mesh_failures.push_back(z);
    }
    return q;
}

/// tau-orbits: maximal chains ..., tau X, X, tau^-1 X, ... listed from the tau end.
struct OrbitTable {
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<std::size_t> orbit_of;

    std::size_t max_cardinality() const
    {
        std::size_t best = 0;
        for (auto& o : orbits)
            best = std::max(best, o.size());
        return best;
    }
    std::vector<std::size_t> cardinalities() const
    {
        std::vector<std::size_t> out;
        for (auto& o : orbits)
            out.push_back(o.size());
        std::sort(out.rbegin(), out.rend());
        return out;
    }
};

inline OrbitTable tau_orbits(const IndecCatalog& c)
{
    OrbitTable t;
    t.orbit_of.assign(c.size(), IndecCatalog::none);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (t.orbit_of[i] != IndecCatalog::none)
            continue;
        std::size_t start = i;
        std::size_t steps = 0;
        while (c[start].tau != IndecCatalog::none && steps++ <= c.size())
            start = c[start].tau;
        std::vector<std::size_t> orbit;
        for (std::size_t x = start; x != IndecCatalog::none && t.orbit_of[x] == IndecCatalog::none; x = c[x].tau_inv) {
            t.orbit_of[x] = t.orbits.size();
            orbit.push_back(x);
        }
        t.orbits.push_back(std::move(orbit));
    }
    return t;
}

/// The predecessor preorder on a catalog: reflexive-transitive closure of Hom != 0.
class Predecessors {
public:
    explicit Predecessors(const IndecCatalog& c) : n_(c.size()), reach_(c.size() * c.size(), false)
    {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                reach_[i * n_ + j] = (i == j) || !c.hom(i, j).empty();
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t i = 0; i < n_; ++i)
                if (reach_[i * n_ + k])
                    for (std::size_t j = 0; j < n_; ++j)
                        if (reach_[k * n_ + j])
                            reach_[i * n_ + j] = true;
    }

    bool leq(std::size_t x, std::size_t y) const
    {
        if (x >= n_ || y >= n_)
            throw InputError("module not in catalog");
        return reach_[x * n_ + y];
    }

    /// The set relation S1 <= S2: every member of S2 has a predecessor in S1, every
    /// member of S1 a successor in S2, and no member of S2 precedes a different member
    /// of S1. `strict` additionally requires disjointness.
    bool set_leq(const std::vector<std::size_t>& s1, const std::vector<std::size_t>& s2, bool strict) const
    {
        for (auto y : s2)
            if (std::none_of(s1.begin(), s1.end(), [&](std::size_t x) { return leq(x, y); }))
                return false;
        for (auto x : s1)
            if (std::none_of(s2.begin(), s2.end(), [&](std::size_t y) { return leq(x, y); }))
                return false;
        for (auto x : s1)
            for (auto y : s2)
                if (x != y && leq(y, x))
                    return false;
        if (strict)
            for (auto x : s1)
                if (std::find(s2.begin(), s2.end(), x) != s2.end())
                    return false;
        return true;
    }

    /// S < M for a single module: M is outside S, succeeds some member and precedes none.
    bool set_below(const std::vector<std::size_t>& s, std::size_t m) const
    {
        if (std::find(s.begin(), s.end(), m) != s.end())
            return false;
        bool some = false;
        for (auto x : s) {
            if (leq(m, x))
                return false;
            some |= leq(x, m);
        }
        return some;
    }

    /// M <= S for a single module: M is a member, or precedes some member and succeeds none.
    bool at_most(std::size_t m, const std::vector<std::size_t>& s) const
    {
        if (std::find(s.begin(), s.end(), m) != s.end())
            return true;
        bool some = false;
        for (auto y : s) {
            if (leq(y, m))
                return false;
            some |= leq(m, y);
        }
        return some;
    }

    /// S1 <= M < S2 style checks use the two functions above.
    std::size_t size() const { return n_; }

private:
    std::size_t n_;
    std::vector<bool> reach_;
};

/// dim Hom(M, N) minus the dimension of the maps factoring through the given
/// projective-injective modules.
inline std::size_t stable_hom_dim(const Module& m, const Module& n, const std::vector<Module>& proj_inj)
{
    const Fp& F = m.field();
    auto hb = hom_basis(m, n);
    if (hb.empty())
        return 0;
    const std::size_t len = hom_space_len(m, n);
    std::vector<Morphism> through;
    for (auto& p : proj_inj) {
        auto a = hom_basis(m, p);
        if (a.empty())
            continue;
        auto b = hom_basis(p, n);
        for (auto& f : a)
            for (auto& g : b) {
                Morphism h = compose(F, g, f);
                if (!h.is_zero())
                    through.push_back(std::move(h));
            }
    }
    std::size_t r = through.empty() ? 0 : rank(F, morphisms_as_columns(through, len));
    return hb.size() - r;
}

/// DOT rendering: irreducible maps as solid edges (labelled when multiple), tau as dashed back-edges.
inline std::string ar_quiver_dot(const IndecCatalog& c, const ARQuiver& q,
                                 const std::function<std::string(const Module&)>& label = {})
{
    std::ostringstream out;
    out << "digraph ARQuiver {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::string dims = label ? label(c.module(i)) : dimvec_str(c.module(i).dims());
        out << "  n" << i << " [label=\"" << i << ": " << dims << "\"";
        if (c.projective_injective(i))
            out << ", shape=box";
        out << "];\n";
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if (q.mult[i][j]) {
                out << "  n" << i << " -> n" << j;
                if (q.mult[i][j] > 1)
                    out << " [label=\"" << q.mult[i][j] << "\"]";
                out << ";\n";
            }
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].tau != IndecCatalog::none)
            out << "  n" << i << " -> n" << c[i].tau << " [style=dashed, constraint=false];\n";
    out << "}\n";
    return out.str();
}

inline nlohmann::json orbit_report(const IndecCatalog& c, const OrbitTable& t,
                                   const std::function<std::string(const Module&)>& label = {})
{
    nlohmann::json orbits = nlohmann::json::array();
    for (auto& o : t.orbits) {
        nlohmann::json members = nlohmann::json::array();
        for (auto id : o)
            members.push_back({{"id", id},
                               {"dims", label ? label(c.module(id)) : dimvec_str(c.module(id).dims())},
                               {"projective", c[id].projective},
                               {"injective", c[id].injective}});
        orbits.push_back({{"cardinality", o.size()}, {"members", members}});
    }
    return {{"catalog_size", c.size()}, {"max_cardinality", t.max_cardinality()}, {"orbits", orbits}};
}

} // namespace repalg
