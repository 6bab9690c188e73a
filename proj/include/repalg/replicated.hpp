#pragma once

// The m-replicated algebra of a path algebra A = kQ: layers A_0, ..., A_m with
// the dual bimodule DA linking layer k to layer k-1, and DA * DA = 0.
//
// Vertex (i, k) has index k * n + i. The basis is ordered layer by layer (layer 0
// paths; then for each k >= 1 the duals (p*, k) followed by the paths (p, k)), so the
// algebra for level m is a prefix of the one for any larger level.

#include <optional>

#include "quiverrep.hpp"

namespace repalg {

class ReplicatedAlgebra {
public:
    ReplicatedAlgebra(const Quiver& q, std::size_t m, Fp field = Fp(), bool check_associativity = true)
        : base_(q, field), paths_(q), m_(m)
    {
        if (m < 1)
            throw InputError("replication level must be at least 1");
        const std::size_t n = q.num_vertices();
        const std::size_t np = paths_.size();
        std::vector<std::string> vlabels;
        for (std::size_t k = 0; k <= m; ++k)
            for (std::size_t i = 0; i < n; ++i)
                vlabels.push_back(q.vertices()[i] + "@" + std::to_string(k));
        std::vector<BasisElement> basis;
        path_index_.assign((m + 1) * np, 0);
        dual_index_.assign((m + 1) * np, npos);
        for (std::size_t k = 0; k <= m; ++k) {
            if (k > 0)
                for (std::size_t p = 0; p < np; ++p) {
                    dual_index_[k * np + p] = basis.size();
                    info_.push_back({true, p, k});
                    basis.push_back({vertex(paths_[p].target, k), vertex(paths_[p].source, k - 1), false,
                                     paths_.name(p) + "*@" + std::to_string(k)});
                }
            for (std::size_t p = 0; p < np; ++p) {
                path_index_[k * np + p] = basis.size();
                info_.push_back({false, p, k});
                basis.push_back({vertex(paths_[p].source, k), vertex(paths_[p].target, k), paths_[p].trivial(),
                                 paths_.name(p) + "@" + std::to_string(k)});
            }
        }
        alg_ = Algebra::create(field, vlabels, std::move(basis), [&](std::size_t i, std::size_t j) {
            Combination c;
            const Elem& a = info_[i];
            const Elem& b = info_[j];
            if (a.dual && b.dual)
                return c;
            if (!a.dual && !b.dual) {
                if (a.layer == b.layer)
                    if (auto r = paths_.compose(a.path, b.path))
                        c.push_back({path_index_[a.layer * np + *r], 1});
                return c;
            }
            if (a.dual) {
                // (p*, k) (r, k-1) = (q*, k) when p = r q
                if (b.layer + 1 == a.layer)
                    if (auto q = paths_.strip_prefix(a.path, b.path))
                        c.push_back({dual_index_[a.layer * np + *q], 1});
                return c;
            }
            // (r, k) (p*, k) = (q*, k) when p = q r
            if (a.layer == b.layer)
                if (auto q = paths_.strip_suffix(b.path, a.path))
                    c.push_back({dual_index_[b.layer * np + *q], 1});
            return c;
        });
        if (check_associativity && !alg_->is_associative())
            throw InternalError("replicated algebra multiplication is not associative");
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const AlgebraPtr& algebra() const { return alg_; }
    const PathAlgebra& base() const { return base_; }
    const Quiver& quiver() const { return base_.quiver(); }
    const PathBasis& paths() const { return paths_; }
    const Fp& field() const { return alg_->field(); }
    std::size_t level() const { return m_; }
    std::size_t base_vertices() const { return quiver().num_vertices(); }
    std::size_t vertex(std::size_t i, std::size_t k) const { return k * base_vertices() + i; }
    std::size_t layer_of(std::size_t v) const { return v / base_vertices(); }
    std::size_t path_element(std::size_t p, std::size_t k) const { return path_index_[k * paths_.size() + p]; }
    /// Basis index of (p*, k), k >= 1.
    std::size_t dual_element(std::size_t p, std::size_t k) const { return dual_index_[k * paths_.size() + p]; }

    Module proj(std::size_t i, std::size_t k) const
    {
        check_index(i, k);
        return projective(alg_, vertex(i, k));
    }
    Module inj(std::size_t i, std::size_t k) const
    {
        check_index(i, k);
        return injective(alg_, vertex(i, k));
    }
    Module simple_at(std::size_t i, std::size_t k) const
    {
        check_index(i, k);
        return simple(alg_, vertex(i, k));
    }

    /// The projective-injectives proj(i, k), k >= 1.
    std::vector<Module> projective_injectives() const
    {
        std::vector<Module> out;
        for (std::size_t k = 1; k <= m_; ++k)
            for (std::size_t i = 0; i < base_vertices(); ++i)
                out.push_back(proj(i, k));
        return out;
    }

    /// An A-module placed in layer k.
    Module lift(const Module& x, std::size_t k) const
    {
        if (x.algebra() != base_.algebra())
            throw InputError("lift: module is not over the base path algebra");
        const std::size_t n = base_vertices();
        DimVector d(alg_->num_vertices(), 0);
        for (std::size_t i = 0; i < n; ++i)
            d[vertex(i, k)] = x.dim(i);
        std::vector<Matrix> act(alg_->dim());
        for (auto b : alg_->radical()) {
            const auto& e = alg_->basis(b);
            const Elem& el = info_[b];
            if (!el.dual && el.layer == k)
                act[b] = x.action(el.path);
            else
                act[b] = Matrix(d[e.tgt], d[e.src]);
        }
        return Module(alg_, d, std::move(act));
    }

    /// Layer k of M as an A-module.
    Module layer(const Module& m, std::size_t k) const
    {
        check_module(m);
        const std::size_t n = base_vertices();
        DimVector d(n);
        for (std::size_t i = 0; i < n; ++i)
            d[i] = m.dim(vertex(i, k));
        const auto& A = base_.algebra();
        std::vector<Matrix> act(A->dim());
        for (auto p : A->radical())
            act[p] = m.action(path_element(p, k));
        return Module(A, d, std::move(act));
    }

    DimVector layer_dims(const Module& m, std::size_t k) const
    {
        DimVector d;
        for (std::size_t i = 0; i < base_vertices(); ++i)
            d.push_back(m.dim(vertex(i, k)));
        return d;
    }

    /// Largest layer with nonzero support, or nothing for the zero module.
    std::optional<std::size_t> top_layer(const Module& m) const
    {
        std::optional<std::size_t> t;
        for (std::size_t v = 0; v < m.dims().size(); ++v)
            if (m.dim(v))
                t = layer_of(v);
        return t;
    }
    std::optional<std::size_t> bottom_layer(const Module& m) const
    {
        for (std::size_t v = 0; v < m.dims().size(); ++v)
            if (m.dim(v))
                return layer_of(v);
        return std::nullopt;
    }

    /// Whether M is supported in layer 0 only (an A-module).
    bool is_base_module(const Module& m) const
    {
        auto t = top_layer(m);
        return !t || *t == 0;
    }

    /// M viewed over this algebra; M must live over a replicated algebra of the same
    /// quiver and field, and be supported in layers <= level() if it comes from a larger one.
    Module transfer(const Module& m) const
    {
        const auto& src = m.algebra();
        if (src == alg_)
            return m;
        const std::size_t nv = alg_->num_vertices();
        const std::size_t dim = alg_->dim();
        if (src->field().p() != field().p())
            throw InputError("transfer: field mismatch");
        DimVector d(nv, 0);
        for (std::size_t v = 0; v < std::min(nv, m.dims().size()); ++v)
            d[v] = m.dim(v);
        for (std::size_t v = nv; v < m.dims().size(); ++v)
            if (m.dim(v))
                throw InternalError("transfer: module exceeds the target window");
        std::vector<Matrix> act(dim);
        for (auto b : alg_->radical()) {
            const auto& e = alg_->basis(b);
            if (b < src->dim() && src->basis(b).label == e.label)
                act[b] = m.action(b);
            else
                act[b] = Matrix(d[e.tgt], d[e.src]);
        }
        return Module(alg_, d, std::move(act));
    }

    /// Layered JSON form: per-layer representations plus the nonzero connecting matrices.
    nlohmann::json to_json(const Module& m) const
    {
        check_module(m);
        nlohmann::json layers = nlohmann::json::array();
        for (std::size_t k = 0; k <= m_; ++k)
            layers.push_back(base_.to_json(layer(m, k)));
        nlohmann::json conn = nlohmann::json::array();
        for (std::size_t k = 1; k <= m_; ++k)
            for (std::size_t p = 0; p < paths_.size(); ++p) {
                const Matrix& x = m.action(dual_element(p, k));
                if (x.is_zero())
                    continue;
                nlohmann::json rows = nlohmann::json::array();
                for (std::size_t r = 0; r < x.rows(); ++r) {
                    std::vector<Fp::Elem> row(x.cols());
                    for (std::size_t c = 0; c < x.cols(); ++c)
                        row[c] = x(r, c);
                    rows.push_back(row);
                }
                conn.push_back({{"k", k}, {"path", paths_.name(p)}, {"matrix", rows}});
            }
        return {{"level", m_}, {"layers", layers}, {"connecting", conn}};
    }

    Module from_json(const nlohmann::json& j) const
    {
        try {
            if (j.at("level").get<std::size_t>() != m_ || j.at("layers").size() != m_ + 1)
                throw InputError("layered module JSON: level mismatch");
            DimVector d(alg_->num_vertices(), 0);
            std::vector<Module> layers;
            for (std::size_t k = 0; k <= m_; ++k) {
                layers.push_back(base_.from_json(j.at("layers")[k]));
                for (std::size_t i = 0; i < base_vertices(); ++i)
                    d[vertex(i, k)] = layers[k].dim(i);
            }
            std::vector<Matrix> act(alg_->dim());
            for (auto b : alg_->radical()) {
                const auto& e = alg_->basis(b);
                const Elem& el = info_[b];
                act[b] = el.dual ? Matrix(d[e.tgt], d[e.src]) : layers[el.layer].action(el.path);
            }
            for (auto& c : j.at("connecting")) {
                std::size_t k = c.at("k").get<std::size_t>();
                auto p = paths_.find_by_name(c.at("path").get<std::string>());
                if (k < 1 || k > m_ || !p)
                    throw InputError("layered module JSON: bad connecting key");
                std::size_t b = dual_element(*p, k);
                Matrix& x = act[b];
                const auto& rows = c.at("matrix");
                if (rows.size() != x.rows())
                    throw InputError("layered module JSON: connecting matrix has the wrong shape");
                for (std::size_t r = 0; r < x.rows(); ++r) {
                    if (rows[r].size() != x.cols())
                        throw InputError("layered module JSON: connecting matrix has the wrong shape");
                    for (std::size_t col = 0; col < x.cols(); ++col)
                        x(r, col) = field().reduce(rows[r][col].get<std::int64_t>());
                }
            }
            Module out(alg_, d, std::move(act));
            out.check();
            return out;
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("layered module JSON: ") + e.what());
        }
    }

    /// "(d_0 | d_1 | ...)" with per-layer dimension vectors.
    std::string dims_str(const Module& m) const
    {
        std::string s = "(";
        for (std::size_t k = 0; k <= m_; ++k) {
            if (k)
                s += "|";
            auto d = layer_dims(m, k);
            for (std::size_t i = 0; i < d.size(); ++i)
                s += (i ? "," : "") + std::to_string(d[i]);
        }
        return s + ")";
    }

private:
    struct Elem {
        bool dual;
        std::size_t path;
        std::size_t layer;
    };

    void check_index(std::size_t i, std::size_t k) const
    {
        if (i >= base_vertices() || k > m_)
            throw InputError("vertex/layer index out of range");
    }
    void check_module(const Module& m) const
    {
        if (m.algebra() != alg_)
            throw InputError("module is not over this replicated algebra");
    }

    PathAlgebra base_;
    PathBasis paths_;
    std::size_t m_;
    AlgebraPtr alg_;
    std::vector<Elem> info_;
    std::vector<std::size_t> path_index_;
    std::vector<std::size_t> dual_index_;
};

/// The strata Sigma_k: k-th cosyzygies of the indecomposable projective A-modules,
/// computed in a window large enough that the cosyzygies agree with the infinite algebra.
class Strata {
public:
    /// Computes Sigma_0, ..., Sigma_kmax for the given base quiver and field.
    Strata(const Quiver& q, std::size_t kmax, Fp field = Fp())
        : window_(std::make_shared<ReplicatedAlgebra>(q, std::max<std::size_t>(kmax + 1, 1), field, false))
    {
        const auto& W = *window_;
        std::vector<Module> cur;
        for (std::size_t i = 0; i < W.base_vertices(); ++i)
            cur.push_back(W.proj(i, 0));
        strata_.push_back(cur);
        for (std::size_t k = 1; k <= kmax; ++k) {
            std::vector<Module> next;
            for (auto& x : cur) {
                Module c = cosyzygy(x);
                if (c.is_zero())
                    continue;
                auto t = W.top_layer(c);
                if (*t >= W.level())
                    throw InternalError("stratum left the computation window");
                auto parts = indecomposable_summands(c);
                if (parts.size() != 1)
                    throw InternalError("cosyzygy of a stratum member decomposes");
                next.push_back(c);
            }
            strata_.push_back(next);
            cur = std::move(next);
        }
    }

    const ReplicatedAlgebra& window() const { return *window_; }
    std::size_t max_k() const { return strata_.size() - 1; }
    /// Members of Sigma_k over the window algebra.
    const std::vector<Module>& sigma(std::size_t k) const
    {
        if (k >= strata_.size())
            throw InputError("stratum index out of range");
        return strata_[k];
    }

    /// Members of Sigma_k supported in layers <= level of `target`, moved to that algebra.
    std::vector<Module> u(std::size_t k, const ReplicatedAlgebra& target) const
    {
        std::vector<Module> out;
        for (auto& x : sigma(k)) {
            auto t = window_->top_layer(x);
            if (t && *t <= target.level())
                out.push_back(target.transfer(x));
        }
        return out;
    }

private:
    std::shared_ptr<ReplicatedAlgebra> window_;
    std::vector<std::vector<Module>> strata_;
};

} // namespace repalg
