#pragma once

// Representations of a finite acyclic quiver: modules over the path algebra kQ
// given by one matrix per arrow. Also Ext^1, realized extensions, and a bounded
// enumeration of indecomposables by iterated extension.

#include <map>
#include <set>

#include "decompose.hpp"

namespace repalg {

/// A path algebra together with its quiver.
class PathAlgebra {
public:
    PathAlgebra(Quiver q, Fp field = Fp()) : quiver_(std::move(q)), alg_(path_algebra(quiver_, field))
    {
        PathBasis pb(quiver_);
        for (std::size_t a = 0; a < quiver_.arrows().size(); ++a)
            arrow_index_.push_back(*pb.find({quiver_.arrows()[a].source, quiver_.arrows()[a].target, {a}}));
    }

    const Quiver& quiver() const { return quiver_; }
    const AlgebraPtr& algebra() const { return alg_; }
    const Fp& field() const { return alg_->field(); }
    std::size_t num_vertices() const { return quiver_.num_vertices(); }
    /// Basis index of the arrow with the given position in the quiver.
    std::size_t arrow_basis(std::size_t a) const { return arrow_index_[a]; }

    /// Representation from dimension vector and one matrix (dims[target] x dims[source]) per arrow.
    Module representation(const DimVector& dims, const std::vector<Matrix>& arrow_maps) const
    {
        if (dims.size() != num_vertices() || arrow_maps.size() != quiver_.arrows().size())
            throw InputError("representation: wrong number of dimensions or arrow matrices");
        std::vector<std::pair<std::size_t, Matrix>> gens;
        for (std::size_t a = 0; a < arrow_maps.size(); ++a) {
            const auto& ar = quiver_.arrows()[a];
            if (arrow_maps[a].rows() != dims[ar.target] || arrow_maps[a].cols() != dims[ar.source])
                throw InputError("arrow matrix of '" + ar.name + "' has the wrong shape");
            gens.emplace_back(arrow_index_[a], arrow_maps[a]);
        }
        return Module::from_generators(alg_, dims, gens);
    }

    const Matrix& arrow_map(const Module& m, std::size_t a) const { return m.action(arrow_index_[a]); }

    Module simple(std::size_t i) const { return repalg::simple(alg_, i); }
    Module projective(std::size_t i) const { return repalg::projective(alg_, i); }
    Module injective(std::size_t i) const { return repalg::injective(alg_, i); }

    long euler_form(const DimVector& d, const DimVector& e) const { return quiver_.euler_form(d, e); }

    nlohmann::json to_json(const Module& m) const
    {
        nlohmann::json arrows = nlohmann::json::object();
        for (std::size_t a = 0; a < quiver_.arrows().size(); ++a) {
            const Matrix& x = arrow_map(m, a);
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t r = 0; r < x.rows(); ++r) {
                std::vector<Fp::Elem> row(x.cols());
                for (std::size_t c = 0; c < x.cols(); ++c)
                    row[c] = x(r, c);
                rows.push_back(row);
            }
            arrows[quiver_.arrows()[a].name] = rows;
        }
        return {{"dims", m.dims()}, {"arrows", arrows}};
    }

    Module from_json(const nlohmann::json& j) const
    {
        try {
            DimVector dims = j.at("dims").get<DimVector>();
            if (dims.size() != num_vertices())
                throw InputError("representation JSON: wrong number of dimensions");
            std::vector<Matrix> maps;
            for (auto& ar : quiver_.arrows()) {
                Matrix x(dims[ar.target], dims[ar.source]);
                const auto& rows = j.at("arrows").at(ar.name);
                if (rows.size() != x.rows())
                    throw InputError("representation JSON: arrow '" + ar.name + "' has the wrong row count");
                for (std::size_t r = 0; r < x.rows(); ++r) {
                    if (rows[r].size() != x.cols())
                        throw InputError("representation JSON: arrow '" + ar.name + "' has the wrong column count");
                    for (std::size_t c = 0; c < x.cols(); ++c)
                        x(r, c) = field().reduce(rows[r][c].get<std::int64_t>());
                }
                maps.push_back(std::move(x));
            }
            return representation(dims, maps);
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("representation JSON: ") + e.what());
        }
    }

private:
    Quiver quiver_;
    AlgebraPtr alg_;
    std::vector<std::size_t> arrow_index_;
};

/// Ext^1(M, N) presented as Hom(Omega M, N) modulo restrictions of Hom(P_0, N).
struct ExtSpace {
    ProjectiveCover cover;
    Module syzygy;
    Morphism inclusion;
    /// Morphisms Omega M -> N whose classes form a basis of Ext^1(M, N).
    std::vector<Morphism> classes;
};

inline ExtSpace ext1(const Module& m, const Module& n)
{
    const Fp& F = m.field();
    ExtSpace e;
    e.cover = projective_cover(m);
    auto [k, inc] = kernel(e.cover.cover, e.cover.epi);
    e.syzygy = std::move(k);
    e.inclusion = std::move(inc);
    const std::size_t len = hom_space_len(e.syzygy, n);
    std::vector<Morphism> restricted;
    for (auto& g : hom_basis(e.cover.cover, n))
        restricted.push_back(compose(F, g, e.inclusion));
    Matrix img = restricted.empty() ? Matrix(len, 0) : column_space(F, morphisms_as_columns(restricted, len));
    auto hom = hom_basis(e.syzygy, n);
    Matrix acc = img;
    for (auto& h : hom) {
        Matrix col = morphisms_as_columns({h}, len);
        Matrix next = hstack(acc, col);
        if (rank(F, next) > acc.cols()) {
            acc = next;
            e.classes.push_back(h);
        }
    }
    return e;
}

inline std::size_t ext1_dim(const Module& m, const Module& n)
{
    return ext1(m, n).classes.size();
}

/// A short exact sequence 0 -> N -> E -> M -> 0.
struct Extension {
    Module middle;
    Morphism inclusion;  // N -> E
    Morphism projection; // E -> M
};

/// Middle term of the extension with class sum_i coeffs[i] * classes[i] (pushout along Omega M -> N).
inline Extension realize_extension(const Module& m, const Module& n, const ExtSpace& e, const std::vector<Fp::Elem>& coeffs)
{
    const Fp& F = m.field();
    const auto& alg = m.algebra();
    Morphism h = zero_morphism(e.syzygy, n);
    for (std::size_t i = 0; i < coeffs.size() && i < e.classes.size(); ++i)
        if (coeffs[i])
            h = add(F, h, scale(F, e.classes[i], coeffs[i]));
    DirectSum ds = direct_sum(alg, {e.cover.cover, n});
    // relations (iota(x), -h(x)) for x in Omega M
    Morphism rel = add(F, compose(F, ds.injections[0], e.inclusion),
                       compose(F, ds.injections[1], scale(F, h, F.neg(1))));
    auto [mid, pr] = cokernel(ds.sum, rel);
    Extension out;
    out.middle = std::move(mid);
    out.inclusion = compose(F, pr, ds.injections[1]);
    // E -> M induced by (epi, 0) on P_0 + N
    Morphism onto = compose(F, e.cover.epi, ds.projections[0]);
    // factor through the quotient: onto = proj_E o pr
    Morphism proj;
    for (std::size_t v = 0; v < m.dims().size(); ++v) {
        auto sol = solve(F, pr.maps[v].transpose(), onto.maps[v].transpose());
        if (!sol)
            throw InternalError("realize_extension: projection does not factor");
        proj.maps.push_back(sol->transpose());
    }
    out.projection = std::move(proj);
    return out;
}

inline Extension realize_extension(const Module& m, const Module& n, std::size_t class_index)
{
    ExtSpace e = ext1(m, n);
    if (class_index >= e.classes.size())
        throw InputError("extension class index out of range");
    std::vector<Fp::Elem> c(e.classes.size(), 0);
    c[class_index] = 1;
    return realize_extension(m, n, e, c);
}

/// Whether f : N -> E admits r : E -> N with r f = id.
inline bool has_retraction(const Module& n, const Module& e, const Morphism& f)
{
    const Fp& F = n.field();
    auto hb = hom_basis(e, n);
    const std::size_t len = hom_space_len(n, n);
    if (hb.empty())
        return n.is_zero();
    std::vector<Morphism> comps;
    for (auto& r : hb)
        comps.push_back(compose(F, r, f));
    Matrix a = morphisms_as_columns(comps, len);
    Matrix b = morphisms_as_columns({identity_morphism(n)}, len);
    return solve(F, a, b).has_value();
}

/// All indecomposables whose dimension vector is bounded by `bound` at every vertex,
/// found by extending known modules by simples through every Ext^1 class (up to scalars).
/// Requires a finite field small enough for the class count to stay manageable.
class BoundedIndecomposables {
public:
    BoundedIndecomposables(AlgebraPtr alg, std::size_t bound, std::size_t max_classes = 1u << 14)
        : alg_(std::move(alg)), bound_(bound)
    {
        const Fp& F = alg_->field();
        const std::size_t nv = alg_->num_vertices();
        // Modules are multisets (sorted id lists) of indecomposables.
        std::set<std::vector<std::size_t>> seen;
        std::vector<std::vector<std::size_t>> queue;
        auto add_module = [&](std::vector<std::size_t> ids) {
            std::sort(ids.begin(), ids.end());
            if (seen.insert(ids).second)
                queue.push_back(std::move(ids));
        };
        for (std::size_t x = 0; x < nv; ++x)
            add_module({classify(simple(alg_, x))});
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::vector<std::size_t> ids = queue[qi];
            std::vector<Module> parts;
            for (auto i : ids)
                parts.push_back(indecs_[i]);
            Module base = direct_sum_module(alg_, parts);
            for (std::size_t x = 0; x < nv; ++x) {
                if (base.dim(x) + 1 > bound_)
                    continue;
                Module s = simple(alg_, x);
                // split extension
                auto split = ids;
                split.push_back(classify(s));
                add_module(split);
                ExtSpace e = ext1(s, base);
                const std::size_t k = e.classes.size();
                if (k == 0)
                    continue;
                std::size_t total = 1;
                for (std::size_t i = 0; i < k; ++i) {
                    total *= F.p();
                    if (total > max_classes)
                        throw ResourceError("bounded enumeration: too many extension classes");
                }
                // projective points: first nonzero coordinate equal to 1
                std::vector<Fp::Elem> c(k, 0);
                for (std::size_t code = 1; code < total; ++code) {
                    std::size_t t = code;
                    for (std::size_t i = 0; i < k; ++i) {
                        c[i] = static_cast<Fp::Elem>(t % F.p());
                        t /= F.p();
                    }
                    std::size_t lead = 0;
                    while (c[lead] == 0)
                        ++lead;
                    if (c[lead] != 1)
                        continue;
                    Extension ext = realize_extension(s, base, e, c);
                    std::vector<std::size_t> mid;
                    for (auto& piece : indecomposable_summands(ext.middle))
                        mid.push_back(classify(piece));
                    add_module(mid);
                }
            }
        }
    }

    const std::vector<Module>& modules() const { return indecs_; }
    std::size_t bound() const { return bound_; }

private:
    std::size_t classify(const Module& m)
    {
        for (std::size_t i = 0; i < indecs_.size(); ++i)
            if (indecs_[i].dims() == m.dims() && is_iso_indecomposable(indecs_[i], m))
                return i;
        indecs_.push_back(m);
        return indecs_.size() - 1;
    }

    AlgebraPtr alg_;
    std::size_t bound_;
    std::vector<Module> indecs_;
};

} // namespace repalg
