#pragma once

// Generator-cogenerators of a replicated algebra: minimal right add M-approximations,
// the iterated approximation kernels Omega_M and the M-dimension, the global
// dimension of End(M), and the explicit constructions of special generator-cogenerators.

#include <bit>
#include <deque>
#include <random>
#include <set>

#include "artrans.hpp"
#include "replicated.hpp"

namespace repalg {

/// A precondition on the mathematical input does not hold (not a generator-cogenerator, wrong type of algebra).
struct ContractError : InputError {
    using InputError::InputError;
};

/// No module with the requested tau-orbit behaviour exists.
struct WitnessNotFound : ContractError {
    using ContractError::ContractError;
};

/// Positive definiteness of the symmetrized Euler form, i.e. the underlying graph is a union of Dynkin diagrams.
inline bool is_representation_finite(const Quiver& q)
{
    const std::size_t n = q.num_vertices();
    std::vector<std::vector<long double>> s(n, std::vector<long double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        s[i][i] = 2;
    for (auto& a : q.arrows()) {
        s[a.source][a.target] -= 1;
        s[a.target][a.source] -= 1;
    }
    // Cholesky-style elimination: every pivot must stay positive.
    for (std::size_t k = 0; k < n; ++k) {
        if (s[k][k] <= 1e-9L)
            return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            long double f = s[i][k] / s[k][k];
            for (std::size_t j = k; j < n; ++j)
                s[i][j] -= f * s[k][j];
        }
    }
    return true;
}

/// Iso-classified store of indecomposable modules with cached Hom and radical bases.
/// A registry built from a complete catalog is frozen: its ids are the catalog ids and
/// meeting an unknown indecomposable is an internal error.
class IndecRegistry {
public:
    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    explicit IndecRegistry(AlgebraPtr alg) : alg_(std::move(alg)) {}

    explicit IndecRegistry(const IndecCatalog& c) : alg_(c.algebra())
    {
        for (std::size_t i = 0; i < c.size(); ++i)
            add(c.module(i));
        frozen_ = true;
    }

    const AlgebraPtr& algebra() const { return alg_; }
    bool frozen() const { return frozen_; }
    std::size_t size() const
    {
        std::lock_guard<std::mutex> lock(mutex_);
        return modules_.size();
    }
    const Module& module(std::size_t i) const
    {
        std::lock_guard<std::mutex> lock(mutex_);
        return modules_.at(i);
    }

    std::size_t find(const Module& m) const
    {
        std::lock_guard<std::mutex> lock(mutex_);
        return find_locked(m);
    }

    /// Id of an indecomposable module, registering it if new.
    std::size_t intern(const Module& m)
    {
        if (m.algebra() != alg_)
            throw InputError("registry: module over a different algebra");
        std::lock_guard<std::mutex> lock(mutex_);
        auto i = find_locked(m);
        if (i != none)
            return i;
        if (frozen_)
            throw InternalError("indecomposable " + dimvec_str(m.dims()) + " missing from a complete catalog");
        return add(m);
    }

    /// Ids of the indecomposable summands (with repetition, sorted).
    std::vector<std::size_t> classify(const Module& m)
    {
        std::vector<std::size_t> ids;
        for (auto& part : indecomposable_summands(m))
            ids.push_back(intern(part));
        std::sort(ids.begin(), ids.end());
        return ids;
    }

    const std::vector<Morphism>& hom(std::size_t i, std::size_t j) const
    {
        const Module& a = module(i);
        const Module& b = module(j);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = hom_.find({i, j});
            if (it != hom_.end())
                return it->second;
        }
        auto h = hom_basis(a, b);
        std::lock_guard<std::mutex> lock(mutex_);
        return hom_.emplace(std::make_pair(i, j), std::move(h)).first->second;
    }

    /// Basis of rad(X_i, X_j).
    const std::vector<Morphism>& rad(std::size_t i, std::size_t j) const
    {
        if (i != j)
            return hom(i, j);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = rad_.find(i);
            if (it != rad_.end())
                return it->second;
        }
        auto r = local_radical(module(i), hom(i, i));
        if (!r)
            throw InternalError("indecomposable without a split local endomorphism ring");
        std::lock_guard<std::mutex> lock(mutex_);
        return rad_.emplace(i, std::move(*r)).first->second;
    }

    bool projective(std::size_t i) const { return flag(i).first; }
    bool injective(std::size_t i) const { return flag(i).second; }

private:
    std::size_t find_locked(const Module& m) const
    {
        auto it = by_dims_.find(m.dims());
        if (it == by_dims_.end())
            return none;
        for (auto i : it->second)
            if (is_iso_indecomposable(modules_[i], m))
                return i;
        return none;
    }

    std::size_t add(const Module& m)
    {
        modules_.push_back(m);
        by_dims_[m.dims()].push_back(modules_.size() - 1);
        return modules_.size() - 1;
    }

    std::pair<bool, bool> flag(std::size_t i) const
    {
        const Module& m = module(i);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = flags_.find(i);
            if (it != flags_.end())
                return it->second;
        }
        std::pair<bool, bool> f{is_projective(m), is_injective(m)};
        std::lock_guard<std::mutex> lock(mutex_);
        flags_[i] = f;
        return f;
    }

    AlgebraPtr alg_;
    bool frozen_ = false;
    std::deque<Module> modules_;
    std::map<DimVector, std::vector<std::size_t>> by_dims_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<Morphism>> hom_;
    mutable std::map<std::size_t, std::vector<Morphism>> rad_;
    mutable std::map<std::size_t, std::pair<bool, bool>> flags_;
};

using RegistryPtr = std::shared_ptr<IndecRegistry>;

/// A basic module M given by pairwise non-isomorphic indecomposable summands.
class GenCog {
public:
    GenCog(RegistryPtr reg, std::vector<std::size_t> ids) : reg_(std::move(reg))
    {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        ids_ = std::move(ids);
        for (auto i : ids_)
            if (i >= reg_->size())
                throw InputError("summand id " + std::to_string(i) + " out of range");
        const auto& alg = reg_->algebra();
        has_proj_ = has_inj_ = true;
        for (std::size_t x = 0; x < alg->num_vertices(); ++x) {
            has_proj_ = has_proj_ && contains_module(projective(alg, x));
            has_inj_ = has_inj_ && contains_module(injective(alg, x));
        }
    }

    /// The basic module whose summands are all indecomposable summands of the given modules.
    static GenCog from_modules(RegistryPtr reg, const std::vector<Module>& mods)
    {
        std::vector<std::size_t> ids;
        for (auto& m : mods)
            for (auto i : reg->classify(m))
                ids.push_back(i);
        return GenCog(std::move(reg), std::move(ids));
    }

    IndecRegistry& registry() const { return *reg_; }
    const RegistryPtr& registry_ptr() const { return reg_; }
    const AlgebraPtr& algebra() const { return reg_->algebra(); }
    const std::vector<std::size_t>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    const Module& summand(std::size_t k) const { return reg_->module(ids_[k]); }
    bool contains(std::size_t id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }
    /// Position of a registry id among the summands, or npos.
    std::size_t position(std::size_t id) const
    {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        return (it != ids_.end() && *it == id) ? static_cast<std::size_t>(it - ids_.begin()) : npos;
    }

    bool has_all_projectives() const { return has_proj_; }
    bool has_all_injectives() const { return has_inj_; }
    bool is_generator_cogenerator() const { return has_proj_ && has_inj_; }
    void require_generator_cogenerator() const
    {
        if (!has_proj_)
            throw ContractError("not a generator: an indecomposable projective is missing from add M");
        if (!has_inj_)
            throw ContractError("not a cogenerator: an indecomposable injective is missing from add M");
    }

    Module module() const
    {
        std::vector<Module> parts;
        for (auto i : ids_)
            parts.push_back(reg_->module(i));
        return direct_sum_module(algebra(), parts);
    }

    /// Memo for the approximation kernels of registry members: id -> kernel summand ids.
    std::map<std::size_t, std::vector<std::size_t>>& omega_memo() const { return omega_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    bool contains_module(const Module& m) const
    {
        auto i = reg_->find(m);
        return i != IndecRegistry::none && contains(i);
    }

    RegistryPtr reg_;
    std::vector<std::size_t> ids_;
    bool has_proj_ = false, has_inj_ = false;
    mutable std::map<std::size_t, std::vector<std::size_t>> omega_;
};

/// A minimal right add M-approximation f : M' -> X with its kernel.
struct ApproxResult {
    /// Multiplicity of each summand of M (aligned with M.ids()) in M'.
    std::vector<std::size_t> multiplicity;
    /// Summand position (into M.ids()) of each direct summand of M', in order.
    std::vector<std::size_t> parts;
    DirectSum source;
    Morphism map;
    Module kernel;
    Morphism kernel_inclusion;
    bool surjective = false;
};

namespace detail {

template <class HomToX>
ApproxResult approximate(const GenCog& M, const Module& x, HomToX&& hom_to_x)
{
    const Fp& F = x.field();
    const auto& alg = M.algebra();
    IndecRegistry& reg = M.registry();
    ApproxResult res;
    res.multiplicity.assign(M.size(), 0);
    std::vector<Module> mods;
    std::vector<Morphism> comps;
    for (std::size_t i = 0; i < M.size(); ++i) {
        const auto& h = hom_to_x(i);
        if (h.empty())
            continue;
        const Module& mi = M.summand(i);
        const std::size_t len = hom_space_len(mi, x);
        // Maps M_i -> X through radical maps into add M.
        std::vector<Morphism> through;
        for (std::size_t j = 0; j < M.size(); ++j) {
            const auto& hj = hom_to_x(j);
            if (hj.empty())
                continue;
            for (auto& r : reg.rad(M.ids()[i], M.ids()[j]))
                for (auto& g : hj) {
                    Morphism c = compose(F, g, r);
                    if (!c.is_zero())
                        through.push_back(std::move(c));
                }
        }
        Matrix hc = morphisms_as_columns(h, len);
        Matrix all = through.empty() ? hc : hstack(morphisms_as_columns(through, len), hc);
        const std::size_t offset = through.size();
        for (auto c : echelon(F, all).pivots)
            if (c >= offset) {
                mods.push_back(mi);
                comps.push_back(h[c - offset]);
                res.parts.push_back(i);
                ++res.multiplicity[i];
            }
    }
    if (mods.empty()) {
        res.source.sum = Module::zero(alg);
        res.map = zero_morphism(res.source.sum, x);
    } else {
        res.source = direct_sum(alg, mods);
        res.map = row_morphism(F, res.source, comps);
    }
    auto [k, inc] = kernel(res.source.sum, res.map);
    res.kernel = std::move(k);
    res.kernel_inclusion = std::move(inc);
    res.surjective = true;
    for (std::size_t v = 0; v < x.dims().size(); ++v)
        if (rank(F, res.map.maps[v]) != x.dim(v))
            res.surjective = false;
    return res;
}

inline bool is_nilpotent(const Fp& F, const Morphism& f)
{
    for (auto& a : f.maps) {
        Matrix p = a;
        for (std::size_t k = 1; k < a.rows() && !p.is_zero(); ++k)
            p = mul(F, p, a);
        if (!p.is_zero())
            return false;
    }
    return true;
}

} // namespace detail

/// Minimal right add M-approximation of an arbitrary module, built from the top of Hom(-, X) on add M.
inline ApproxResult min_right_approx(const GenCog& M, const Module& x)
{
    if (x.algebra() != M.algebra())
        throw InputError("approximation: module over a different algebra");
    std::vector<std::vector<Morphism>> homs;
    for (std::size_t i = 0; i < M.size(); ++i)
        homs.push_back(hom_basis(M.summand(i), x));
    return detail::approximate(M, x, [&](std::size_t i) -> const std::vector<Morphism>& { return homs[i]; });
}

/// Same for a registry member, using cached Hom spaces.
inline ApproxResult min_right_approx_id(const GenCog& M, std::size_t id)
{
    IndecRegistry& reg = M.registry();
    return detail::approximate(M, reg.module(id), [&](std::size_t i) -> const std::vector<Morphism>& {
        return reg.hom(M.ids()[i], id);
    });
}

struct ApproxCheck {
    bool approximation = true;
    bool right_minimal = true;
    bool ok() const { return approximation && right_minimal; }
};

/// Checks the approximation property and right minimality by direct linear algebra.
inline ApproxCheck check_approximation(const GenCog& M, const Module& x, const ApproxResult& r)
{
    const Fp& F = x.field();
    ApproxCheck out;
    const Module& src = r.source.sum;
    for (std::size_t i = 0; i < M.size(); ++i) {
        const Module& mi = M.summand(i);
        auto target = hom_basis(mi, x);
        if (target.empty())
            continue;
        std::vector<Morphism> img;
        if (!src.is_zero())
            for (auto& g : hom_basis(mi, src)) {
                Morphism c = compose(F, r.map, g);
                if (!c.is_zero())
                    img.push_back(std::move(c));
            }
        std::size_t rk = img.empty() ? 0 : rank(F, morphisms_as_columns(img, hom_space_len(mi, x)));
        if (rk != target.size())
            out.approximation = false;
    }
    if (src.is_zero())
        return out;
    // Endomorphisms h of M' with f h = 0 must be radical: every diagonal block between
    // copies of the same summand is nilpotent (blocks between different summands always are).
    auto end = hom_basis(src, src);
    const std::size_t len = hom_space_len(src, x);
    std::vector<Morphism> fh;
    for (auto& h : end)
        fh.push_back(compose(F, r.map, h));
    Matrix ker = kernel_basis(F, morphisms_as_columns(fh, len));
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        std::vector<Fp::Elem> coeff(end.size());
        for (std::size_t k = 0; k < end.size(); ++k)
            coeff[k] = ker(k, c);
        Morphism h = linear_combination(F, end, coeff);
        for (std::size_t a = 0; a < r.parts.size(); ++a)
            for (std::size_t b = 0; b < r.parts.size(); ++b) {
                if (r.parts[a] != r.parts[b])
                    continue;
                Morphism blk = compose(F, r.source.projections[a], compose(F, h, r.source.injections[b]));
                if (!detail::is_nilpotent(F, blk))
                    out.right_minimal = false;
            }
    }
    return out;
}

/// Kernel summands (registry ids, with repetition) of the minimal approximation of a registry member.
inline const std::vector<std::size_t>& omega_ids(const GenCog& M, std::size_t id)
{
    auto& memo = M.omega_memo();
    auto it = memo.find(id);
    if (it != memo.end())
        return it->second;
    std::vector<std::size_t> ids;
    if (!M.contains(id)) {
        auto r = min_right_approx_id(M, id);
        ids = M.registry().classify(r.kernel);
    }
    return memo.emplace(id, std::move(ids)).first->second;
}

struct MDimOptions {
    std::size_t max_steps = 256;
    /// Total dimension above which a chain member counts as leaving the window (0: no limit).
    std::size_t max_module_dim = 0;
};

struct MDimResult {
    enum class Verdict { finite, infinite, indeterminate };
    Verdict verdict = Verdict::finite;
    /// The M-dimension when finite.
    std::size_t value = 0;
    /// chain[i]: distinct summands of Omega_M^i(X); outside[i]: those not in add M.
    std::vector<std::vector<std::size_t>> chain;
    std::vector<std::vector<std::size_t>> outside;
    /// Infinite verdict: outside[cycle_end] contains outside[cycle_start], so the chain never empties.
    std::size_t cycle_start = 0;
    std::size_t cycle_end = 0;
    std::string reason;

    bool finite() const { return verdict == Verdict::finite; }
    bool infinite() const { return verdict == Verdict::infinite; }
};

inline std::string verdict_name(MDimResult::Verdict v)
{
    switch (v) {
    case MDimResult::Verdict::finite:
        return "finite";
    case MDimResult::Verdict::infinite:
        return "infinite";
    default:
        return "indeterminate";
    }
}

/// M-dimension of the module whose distinct indecomposable summands are `start`.
inline MDimResult m_dimension_ids(const GenCog& M, std::vector<std::size_t> start, const MDimOptions& opt = {})
{
    IndecRegistry& reg = M.registry();
    MDimResult res;
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());
    std::vector<std::size_t> cur = std::move(start);
    for (std::size_t step = 0;; ++step) {
        std::vector<std::size_t> out;
        for (auto i : cur)
            if (!M.contains(i))
                out.push_back(i);
        res.chain.push_back(cur);
        res.outside.push_back(out);
        if (out.empty()) {
            res.value = step;
            return res;
        }
        for (std::size_t s = 0; s < step; ++s)
            if (std::includes(out.begin(), out.end(), res.outside[s].begin(), res.outside[s].end())) {
                res.verdict = MDimResult::Verdict::infinite;
                res.cycle_start = s;
                res.cycle_end = step;
                return res;
            }
        if (step >= opt.max_steps) {
            res.verdict = MDimResult::Verdict::indeterminate;
            res.reason = "step limit " + std::to_string(opt.max_steps) + " reached";
            return res;
        }
        std::set<std::size_t> next;
        for (auto i : out)
            for (auto k : omega_ids(M, i)) {
                if (opt.max_module_dim && reg.module(k).total_dim() > opt.max_module_dim) {
                    res.verdict = MDimResult::Verdict::indeterminate;
                    res.reason = "chain left the window: summand of dimension " +
                                 std::to_string(reg.module(k).total_dim());
                    return res;
                }
                next.insert(k);
            }
        cur.assign(next.begin(), next.end());
    }
}

inline MDimResult m_dimension(const GenCog& M, const Module& x, const MDimOptions& opt = {})
{
    return m_dimension_ids(M, M.registry().classify(x), opt);
}

/// gl.dim End(M) computed directly: End(M) by structure constants, then projective
/// resolutions of its simples. Returns nothing when sum of dim Hom(M_i, M_j) exceeds `cap`.
inline std::optional<std::size_t> end_algebra_gldim(const GenCog& M, std::size_t cap = 400, std::size_t pd_cap = 64)
{
    IndecRegistry& reg = M.registry();
    const Fp& F = M.algebra()->field();
    const std::size_t n = M.size();
    std::size_t total = 0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            total += reg.hom(M.ids()[x], M.ids()[y]).size();
            if (total > cap)
                return std::nullopt;
        }
    // Basis of Hom(M_x, M_y): the identity first when x = y, then a radical basis.
    std::vector<std::vector<std::vector<Morphism>>> hb(n, std::vector<std::vector<Morphism>>(n));
    std::vector<std::vector<std::size_t>> first(n, std::vector<std::size_t>(n, 0));
    std::vector<BasisElement> basis;
    std::vector<std::pair<std::size_t, std::size_t>> where;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            auto& b = hb[x][y];
            if (x == y)
                b.push_back(identity_morphism(M.summand(x)));
            for (auto& r : reg.rad(M.ids()[x], M.ids()[y]))
                b.push_back(r);
            first[x][y] = basis.size();
            for (std::size_t k = 0; k < b.size(); ++k) {
                basis.push_back({x, y, x == y && k == 0, "h" + std::to_string(x) + "_" + std::to_string(y) + "_" + std::to_string(k)});
                where.emplace_back(x, y);
            }
        }
    std::vector<std::vector<Matrix>> coords(n, std::vector<Matrix>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (!hb[x][y].empty())
                coords[x][y] = left_inverse(F, morphisms_as_columns(hb[x][y], hom_space_len(M.summand(x), M.summand(y))));
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < n; ++x)
        labels.push_back("M" + std::to_string(x));
    auto product = [&](std::size_t i, std::size_t j) {
        auto [x, y] = where[i];
        auto z = where[j].second;
        // b_i b_j acts as b_i followed by b_j
        Morphism c = compose(F, hb[y][z][j - first[y][z]], hb[x][y][i - first[x][y]]);
        Combination out;
        if (c.is_zero())
            return out;
        auto v = flatten(c);
        Matrix col(v.size(), 1);
        for (std::size_t r = 0; r < v.size(); ++r)
            col(r, 0) = v[r];
        Matrix k = mul(F, coords[x][z], col);
        for (std::size_t r = 0; r < k.rows(); ++r)
            if (k(r, 0))
                out.push_back({first[x][z] + r, k(r, 0)});
        return out;
    };
    auto gamma = Algebra::create(F, labels, basis, product);
    return global_dimension(gamma, pd_cap);
}

struct GldimEnd {
    enum class Kind { exact, infinite, at_most_two, window, indeterminate };
    Kind kind = Kind::exact;
    /// Exact value; in window mode the certified lower bound (0 when no witness).
    std::size_t value = 0;
    /// Window mode: upper bound verified on the window, if every chain there was determinate.
    std::optional<std::size_t> upper;
    std::size_t witness = IndecRegistry::none;
    MDimResult witness_chain;
    std::size_t checked = 0;
    std::vector<std::size_t> indeterminate;
    std::optional<std::size_t> oracle;

    std::string describe() const
    {
        switch (kind) {
        case Kind::exact:
            return std::to_string(value);
        case Kind::infinite:
            return "infinite";
        case Kind::at_most_two:
            return "<= 2";
        case Kind::window:
            return ">= " + std::to_string(value) +
                   (upper ? ", <= " + std::to_string(*upper) + " verified on window" : ", window check indeterminate");
        default:
            return "indeterminate";
        }
    }
};

inline std::string kind_name(GldimEnd::Kind k)
{
    switch (k) {
    case GldimEnd::Kind::exact:
        return "exact";
    case GldimEnd::Kind::infinite:
        return "infinite";
    case GldimEnd::Kind::at_most_two:
        return "at_most_two";
    case GldimEnd::Kind::window:
        return "window";
    default:
        return "indeterminate";
    }
}

/// gl.dim End(M) = 2 + max M-dim X over the indecomposables X in `universe`.
/// With `complete` the universe is all of ind A and the result is exact; values
/// below 3 are settled by the end-algebra oracle when it fits in `oracle_cap`.
inline GldimEnd gldim_end(const GenCog& M, const std::vector<std::size_t>& universe, bool complete,
                          const MDimOptions& opt = {}, std::size_t oracle_cap = 400)
{
    M.require_generator_cogenerator();
    GldimEnd res;
    std::size_t best = 0;
    bool have = false;
    for (auto x : universe) {
        auto r = m_dimension_ids(M, {x}, opt);
        ++res.checked;
        if (r.infinite()) {
            res.kind = GldimEnd::Kind::infinite;
            res.witness = x;
            res.witness_chain = std::move(r);
            return res;
        }
        if (!r.finite()) {
            res.indeterminate.push_back(x);
            continue;
        }
        if (!have || r.value > best) {
            best = r.value;
            have = true;
            res.witness = x;
            res.witness_chain = std::move(r);
        }
    }
    if (!complete) {
        res.kind = GldimEnd::Kind::window;
        res.value = best >= 1 ? best + 2 : 0;
        if (res.indeterminate.empty())
            res.upper = best + 2;
        return res;
    }
    if (!res.indeterminate.empty()) {
        res.kind = GldimEnd::Kind::indeterminate;
        return res;
    }
    if (best >= 1) {
        res.value = best + 2;
        return res;
    }
    res.oracle = end_algebra_gldim(M, oracle_cap);
    if (!res.oracle) {
        res.kind = GldimEnd::Kind::at_most_two;
        res.value = 2;
        return res;
    }
    if (*res.oracle > 2)
        throw InternalError("end-algebra oracle exceeds the bound forced by vanishing M-dimensions");
    res.value = *res.oracle;
    return res;
}

/// Exact gl.dim End(M) over a complete catalog registry.
inline GldimEnd gldim_end_exact(const GenCog& M, std::size_t oracle_cap = 400)
{
    IndecRegistry& reg = M.registry();
    if (!reg.frozen())
        throw ContractError("exact mode needs a registry built from a complete catalog");
    std::vector<std::size_t> all(reg.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return gldim_end(M, all, true, {}, oracle_cap);
}

/// Window mode over explicit modules.
inline GldimEnd gldim_end_window(const GenCog& M, const std::vector<Module>& window, const MDimOptions& opt)
{
    std::vector<std::size_t> ids;
    for (auto& w : window)
        ids.push_back(M.registry().intern(w));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return gldim_end(M, ids, false, opt);
}

// ---------------------------------------------------------------------------
// Constructions

struct Thm32Construction {
    GenCog module;
    /// The module Z with tau^{d-2} Z projective (none when d = 2).
    std::size_t z = IndecCatalog::none;
    /// tau^i Z for 0 <= i <= d-3, the members left out.
    std::vector<std::size_t> removed;
};

/// All indecomposables except tau^i Z (0 <= i <= d-3), for a non-injective Z with tau^{d-2} Z projective.
inline Thm32Construction construct_thm32(RegistryPtr reg, const IndecCatalog& c, std::size_t d)
{
    if (d < 2)
        throw InputError("construct_thm32: d must be at least 2");
    if (!reg->frozen() || reg->size() != c.size())
        throw ContractError("construct_thm32 needs the registry of the complete catalog");
    std::vector<std::size_t> all(c.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (d == 2)
        return {GenCog(reg, all), IndecCatalog::none, {}};
    for (std::size_t z = 0; z < c.size(); ++z) {
        if (c[z].injective)
            continue;
        std::vector<std::size_t> walk{z};
        std::size_t cur = z;
        bool ok = true;
        for (std::size_t k = 0; k < d - 2 && ok; ++k) {
            cur = c[cur].tau;
            ok = cur != IndecCatalog::none;
            walk.push_back(cur);
        }
        if (!ok || !c[cur].projective)
            continue;
        walk.resize(d - 2);
        std::vector<std::size_t> keep;
        for (auto i : all)
            if (std::find(walk.begin(), walk.end(), i) == walk.end())
                keep.push_back(i);
        return {GenCog(reg, keep), z, walk};
    }
    throw WitnessNotFound("no tau-orbit of cardinality at least " + std::to_string(d) +
                          " (max orbit cardinality < d)");
}

/// A + DA_m + P + U_i + ... + U_{t-1}, with t = gl.dim of the replicated algebra.
inline GenCog construct_E(RegistryPtr reg, const ReplicatedAlgebra& R, const Strata& S, std::size_t i)
{
    const std::size_t t = global_dimension(R.algebra());
    if (i < 1 || i + 1 > t)
        throw InputError("construct_E: need 1 <= i <= " + std::to_string(t > 0 ? t - 1 : 0));
    if (S.max_k() + 1 < t)
        throw InputError("construct_E: strata computed only up to " + std::to_string(S.max_k()));
    std::vector<Module> parts;
    for (std::size_t x = 0; x < R.base_vertices(); ++x) {
        parts.push_back(R.proj(x, 0));
        parts.push_back(R.inj(x, R.level()));
    }
    for (auto& p : R.projective_injectives())
        parts.push_back(p);
    for (std::size_t k = i; k < t; ++k)
        for (auto& u : S.u(k, R))
            parts.push_back(u);
    return GenCog::from_modules(std::move(reg), parts);
}

/// A + DA_m + P, the part shared by the constructions for representation-infinite bases.
inline std::vector<Module> base_generator_cogenerator(const ReplicatedAlgebra& R)
{
    std::vector<Module> parts;
    for (std::size_t x = 0; x < R.base_vertices(); ++x) {
        parts.push_back(R.proj(x, 0));
        parts.push_back(R.inj(x, R.level()));
    }
    for (auto& p : R.projective_injectives())
        parts.push_back(p);
    return parts;
}

struct Lem47Construction {
    GenCog module;
    Module z;
    /// tau^i Z for 0 <= i <= d-(2m+2); the last one is simple projective.
    std::vector<Module> tau_z;
    /// Middle terms of the almost split sequence ending in Z.
    std::vector<Module> y;
    /// The lower-bound witness Omega^{-2m} Z.
    Module n;
};

inline Lem47Construction construct_lem47(RegistryPtr reg, const ReplicatedAlgebra& R, std::size_t d)
{
    const std::size_t m = R.level();
    if (d < 2 * m + 3)
        throw InputError("construct_lem47: d must be at least 2m+3 = " + std::to_string(2 * m + 3));
    if (is_representation_finite(R.quiver()))
        throw ContractError("construct_lem47: the base algebra is representation-finite");
    const std::size_t steps = d - (2 * m + 2);
    const auto& base = R.base();
    std::optional<Lem47Construction> found;
    for (std::size_t x = 0; x < R.base_vertices() && !found; ++x) {
        Module s = base.projective(x);
        if (s.total_dim() != 1)
            continue;
        std::vector<Module> chain{R.lift(s, 0)};
        bool ok = true;
        for (std::size_t k = 0; k < steps && ok; ++k) {
            Module up = tau_inverse(chain.back());
            ok = !up.is_zero() && R.is_base_module(up) && is_indecomposable(up);
            if (ok)
                chain.push_back(std::move(up));
        }
        if (!ok || is_injective(chain.back()))
            continue;
        std::reverse(chain.begin(), chain.end());
        Lem47Construction c{GenCog(reg, {}), chain.front(), chain, {}, Module::zero(R.algebra())};
        found = std::move(c);
    }
    if (!found)
        throw WitnessNotFound("construct_lem47: no preprojective Z with tau^" + std::to_string(steps) +
                              " Z simple projective");
    Lem47Construction& c = *found;
    ExtSpace e = ext1(c.z, c.tau_z[1]);
    if (e.classes.size() != 1)
        throw InternalError("construct_lem47: Ext^1(Z, tau Z) is not one-dimensional");
    Extension ar = realize_extension(c.z, c.tau_z[1], e, {1});
    c.y = indecomposable_summands(ar.middle);
    std::vector<Module> parts = base_generator_cogenerator(R);
    for (auto& y : c.y) {
        Module cur = y;
        for (std::size_t i = 0; i + 2 * m + 3 <= d && !cur.is_zero(); ++i) {
            parts.push_back(cur);
            cur = tau(cur);
        }
    }
    c.module = GenCog::from_modules(std::move(reg), parts);
    Module n = c.z;
    for (std::size_t k = 0; k < 2 * m; ++k)
        n = cosyzygy(n);
    c.n = std::move(n);
    return c;
}

struct Lem48Construction {
    GenCog module;
    Module n;
    Module n_prime;
    Extension sequence;
};

/// A thin brick N of the base algebra with Ext^1(N, N) != 0, searched by support size and arrow pattern.
inline std::optional<Module> find_self_extending_brick(const PathAlgebra& A)
{
    const Quiver& q = A.quiver();
    const std::size_t n = q.num_vertices();
    const std::size_t na = q.arrows().size();
    if (n > 20 || na > 20)
        throw ResourceError("brick search: quiver too large");
    std::vector<std::uint32_t> supports;
    for (std::uint32_t s = 1; s < (1u << n); ++s)
        supports.push_back(s);
    std::stable_sort(supports.begin(), supports.end(),
                     [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
    for (auto s : supports) {
        DimVector dims(n);
        for (std::size_t v = 0; v < n; ++v)
            dims[v] = (s >> v) & 1u;
        std::vector<std::size_t> inside;
        for (std::size_t a = 0; a < na; ++a)
            if (dims[q.arrows()[a].source] && dims[q.arrows()[a].target])
                inside.push_back(a);
        for (std::uint32_t code = 1; code < (1u << inside.size()); ++code) {
            std::vector<Matrix> maps;
            for (std::size_t a = 0; a < na; ++a)
                maps.emplace_back(dims[q.arrows()[a].target], dims[q.arrows()[a].source]);
            for (std::size_t k = 0; k < inside.size(); ++k)
                if ((code >> k) & 1u)
                    maps[inside[k]](0, 0) = 1;
            Module cand = A.representation(dims, maps);
            if (hom_dim(cand, cand) == 1 && ext1_dim(cand, cand) > 0)
                return cand;
        }
    }
    return std::nullopt;
}

/// A + DA_m + P + N' for a non-split self-extension 0 -> N -> N' -> N -> 0 of a brick N.
inline Lem48Construction construct_lem48(RegistryPtr reg, const ReplicatedAlgebra& R)
{
    if (is_representation_finite(R.quiver()))
        throw ContractError("construct_lem48: the base algebra is representation-finite");
    auto brick = find_self_extending_brick(R.base());
    if (!brick)
        throw ContractError("construct_lem48: no thin brick with self-extensions found");
    Extension seq = realize_extension(*brick, *brick, 0);
    Module n = R.lift(*brick, 0);
    Module np = R.lift(seq.middle, 0);
    std::vector<Module> parts = base_generator_cogenerator(R);
    parts.push_back(np);
    return {GenCog::from_modules(std::move(reg), parts), n, np, std::move(seq)};
}

/// Indecomposable A^(m)-modules Omega^{-i} Y for Y in ind A with every dimension <= bound,
/// together with all indecomposable projectives and injectives. Cosyzygies are taken in
/// A^(m+1), where they agree with the right repetitive algebra while they stay in layers <= m.
inline std::vector<Module> window_indecomposables(const ReplicatedAlgebra& R, std::size_t bound)
{
    const std::size_t m = R.level();
    ReplicatedAlgebra big(R.quiver(), m + 1, R.field(), false);
    BoundedIndecomposables ind(R.base().algebra(), bound);
    IndecRegistry reg(R.algebra());
    std::vector<Module> out;
    auto add = [&](const Module& x) {
        std::size_t before = reg.size();
        reg.intern(x);
        if (reg.size() > before)
            out.push_back(x);
    };
    for (std::size_t x = 0; x < R.algebra()->num_vertices(); ++x) {
        add(projective(R.algebra(), x));
        add(injective(R.algebra(), x));
    }
    for (auto& y : ind.modules()) {
        Module cur = big.lift(big.base().from_json(R.base().to_json(y)), 0);
        while (!cur.is_zero()) {
            auto top = big.top_layer(cur);
            if (!top || *top > m)
                break;
            add(R.transfer(cur));
            cur = cosyzygy(cur);
        }
    }
    return out;
}

/// A random generator-cogenerator: every projective and injective plus each other catalog member with probability 1/2.
inline GenCog random_generator_cogenerator(RegistryPtr reg, const IndecCatalog& c, std::mt19937_64& rng)
{
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i].projective || c[i].injective || (rng() & 1u))
            ids.push_back(i);
    return GenCog(std::move(reg), std::move(ids));
}

} // namespace repalg
