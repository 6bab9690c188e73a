#pragma once

// Right modules over a basic algebra, their morphisms, and the standard
// constructions: Hom, kernels, cokernels, tops, socles, projective covers,
// injective envelopes, syzygies and duality.

#include <numeric>
#include <string>
#include <vector>

#include "algebra.hpp"

namespace repalg {

using DimVector = std::vector<std::size_t>;

inline std::string dimvec_str(const DimVector& d)
{
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i)
        s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

/// A right module: one vector space per vertex and, for every radical basis
/// element b, the matrix of right multiplication by b (dims[tgt] x dims[src]).
class Module {
public:
    Module() = default;
    Module(AlgebraPtr alg, DimVector dims, std::vector<Matrix> actions)
        : alg_(std::move(alg)), dims_(std::move(dims)), act_(std::move(actions))
    {
        if (dims_.size() != alg_->num_vertices() || act_.size() != alg_->dim())
            throw InputError("module data does not match the algebra");
        for (auto b : alg_->radical()) {
            const auto& e = alg_->basis(b);
            if (act_[b].rows() != dims_[e.tgt] || act_[b].cols() != dims_[e.src])
                throw InputError("action matrix of '" + e.label + "' has the wrong shape");
        }
    }

    static Module zero(AlgebraPtr alg)
    {
        DimVector d(alg->num_vertices(), 0);
        std::vector<Matrix> act(alg->dim());
        return Module(alg, d, act);
    }

    /// Builds a module from the actions of the generators only; the remaining
    /// radical actions are derived from factorizations, then everything is checked.
    static Module from_generators(AlgebraPtr alg, DimVector dims, const std::vector<std::pair<std::size_t, Matrix>>& gens)
    {
        const Fp& F = alg->field();
        std::vector<Matrix> act(alg->dim());
        std::vector<bool> known(alg->dim(), false);
        for (auto i : alg->radical()) {
            const auto& e = alg->basis(i);
            act[i] = Matrix(dims[e.tgt], dims[e.src]);
        }
        for (auto& [g, m] : gens) {
            act[g] = m;
            known[g] = true;
        }
        for (auto g : alg->generators())
            known[g] = true;
        // Close under products b_i * b_j = single basis element (monomial tables).
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto i : alg->radical()) {
                if (!known[i])
                    continue;
                for (auto j : alg->radical()) {
                    if (!known[j])
                        continue;
                    const auto& c = alg->product(i, j);
                    if (c.size() != 1 || known[c[0].index])
                        continue;
                    act[c[0].index] = scale(F, mul(F, act[j], act[i]), F.inv(c[0].coeff));
                    known[c[0].index] = true;
                    progress = true;
                }
            }
        }
        for (auto i : alg->radical())
            if (!known[i])
                throw InputError("cannot derive the action of '" + alg->basis(i).label + "' from generators");
        Module m(alg, std::move(dims), std::move(act));
        m.check();
        return m;
    }

    const AlgebraPtr& algebra() const { return alg_; }
    const Fp& field() const { return alg_->field(); }
    const DimVector& dims() const { return dims_; }
    std::size_t dim(std::size_t v) const { return dims_[v]; }
    std::size_t total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }
    bool is_zero() const { return total_dim() == 0; }
    const Matrix& action(std::size_t b) const { return act_[b]; }
    const std::vector<Matrix>& actions() const { return act_; }

    /// Verifies that the action respects all structure constants.
    void check() const
    {
        const Fp& F = field();
        for (auto i : alg_->radical())
            for (auto j : alg_->radical()) {
                if (alg_->basis(i).tgt != alg_->basis(j).src)
                    continue;
                Matrix lhs = mul(F, act_[j], act_[i]);
                Matrix rhs(lhs.rows(), lhs.cols());
                for (auto& t : alg_->product(i, j)) {
                    if (alg_->basis(t.index).idempotent)
                        throw InputError("radical product has an idempotent component");
                    rhs = add(F, rhs, scale(F, act_[t.index], t.coeff));
                }
                if (lhs != rhs)
                    throw InputError("module relation fails for '" + alg_->basis(i).label + "' * '" +
                                     alg_->basis(j).label + "'");
            }
    }

    bool operator==(const Module& o) const { return alg_ == o.alg_ && dims_ == o.dims_ && act_ == o.act_; }

private:
    AlgebraPtr alg_;
    DimVector dims_;
    std::vector<Matrix> act_;
};

/// Per-vertex matrices f_v : M_v -> N_v (dims_N[v] x dims_M[v]).
struct Morphism {
    std::vector<Matrix> maps;

    bool is_zero() const
    {
        for (auto& m : maps)
            if (!m.is_zero())
                return false;
        return true;
    }
    bool operator==(const Morphism&) const = default;
};

inline Morphism zero_morphism(const Module& m, const Module& n)
{
    Morphism f;
    for (std::size_t v = 0; v < m.dims().size(); ++v)
        f.maps.emplace_back(n.dim(v), m.dim(v));
    return f;
}

inline Morphism identity_morphism(const Module& m)
{
    Morphism f;
    for (auto d : m.dims())
        f.maps.push_back(Matrix::identity(d));
    return f;
}

/// g after f.
inline Morphism compose(const Fp& F, const Morphism& g, const Morphism& f)
{
    Morphism h;
    for (std::size_t v = 0; v < f.maps.size(); ++v)
        h.maps.push_back(mul(F, g.maps[v], f.maps[v]));
    return h;
}

inline Morphism add(const Fp& F, const Morphism& a, const Morphism& b)
{
    Morphism h;
    for (std::size_t v = 0; v < a.maps.size(); ++v)
        h.maps.push_back(add(F, a.maps[v], b.maps[v]));
    return h;
}

inline Morphism scale(const Fp& F, const Morphism& a, Fp::Elem s)
{
    Morphism h;
    for (auto& m : a.maps)
        h.maps.push_back(scale(F, m, s));
    return h;
}

inline Morphism linear_combination(const Fp& F, const std::vector<Morphism>& basis, const std::vector<Fp::Elem>& c)
{
    Morphism h = basis.front();
    h = scale(F, h, c[0]);
    for (std::size_t i = 1; i < basis.size(); ++i)
        if (c[i])
            h = add(F, h, scale(F, basis[i], c[i]));
    return h;
}

/// Entries of all vertex matrices, concatenated.
inline std::vector<Fp::Elem> flatten(const Morphism& f)
{
    std::vector<Fp::Elem> v;
    for (auto& m : f.maps)
        v.insert(v.end(), m.data().begin(), m.data().end());
    return v;
}

/// Columns are the flattened morphisms.
inline Matrix morphisms_as_columns(const std::vector<Morphism>& fs, std::size_t len)
{
    Matrix m(len, fs.size());
    for (std::size_t j = 0; j < fs.size(); ++j) {
        auto v = flatten(fs[j]);
        for (std::size_t i = 0; i < len; ++i)
            m(i, j) = v[i];
    }
    return m;
}

inline std::size_t hom_space_len(const Module& m, const Module& n)
{
    std::size_t s = 0;
    for (std::size_t v = 0; v < m.dims().size(); ++v)
        s += m.dim(v) * n.dim(v);
    return s;
}

inline Morphism unflatten(const Module& m, const Module& n, const std::vector<Fp::Elem>& v, std::size_t offset = 0)
{
    Morphism f;
    std::size_t pos = offset;
    for (std::size_t x = 0; x < m.dims().size(); ++x) {
        Matrix a(n.dim(x), m.dim(x));
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                a(r, c) = v[pos++];
        f.maps.push_back(std::move(a));
    }
    return f;
}

inline bool is_morphism(const Module& m, const Module& n, const Morphism& f)
{
    const Fp& F = m.field();
    for (auto b : m.algebra()->radical()) {
        const auto& e = m.algebra()->basis(b);
        if (mul(F, f.maps[e.tgt], m.action(b)) != mul(F, n.action(b), f.maps[e.src]))
            return false;
    }
    return true;
}

/// Basis of Hom(M, N): solutions of f_tgt M_g = N_g f_src for every generator g.
inline std::vector<Morphism> hom_basis(const Module& m, const Module& n)
{
    if (m.algebra() != n.algebra())
        throw InputError("hom_basis: modules over different algebras");
    const auto& alg = *m.algebra();
    const Fp& F = alg.field();
    const std::size_t nv = alg.num_vertices();
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        off[v + 1] = off[v] + m.dim(v) * n.dim(v);
    const std::size_t unknowns = off[nv];
    if (unknowns == 0)
        return {};
    std::size_t eqs = 0;
    for (auto g : alg.generators())
        eqs += n.dim(alg.basis(g).tgt) * m.dim(alg.basis(g).src);
    Matrix sys(eqs, unknowns);
    std::size_t row = 0;
    auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return off[v] + r * m.dim(v) + c; };
    for (auto g : alg.generators()) {
        const auto& e = alg.basis(g);
        const Matrix& mg = m.action(g);
        const Matrix& ng = n.action(g);
        for (std::size_t r = 0; r < n.dim(e.tgt); ++r)
            for (std::size_t c = 0; c < m.dim(e.src); ++c, ++row) {
                // (f_tgt * M_g)(r, c) - (N_g * f_src)(r, c)
                for (std::size_t s = 0; s < m.dim(e.tgt); ++s)
                    if (mg(s, c))
                        sys(row, var(e.tgt, r, s)) = F.add(sys(row, var(e.tgt, r, s)), mg(s, c));
                for (std::size_t s = 0; s < n.dim(e.src); ++s)
                    if (ng(r, s))
                        sys(row, var(e.src, s, c)) = F.sub(sys(row, var(e.src, s, c)), ng(r, s));
            }
    }
    Matrix k = kernel_basis(F, sys);
    std::vector<Morphism> out;
    for (std::size_t j = 0; j < k.cols(); ++j) {
        std::vector<Fp::Elem> v(unknowns);
        for (std::size_t i = 0; i < unknowns; ++i)
            v[i] = k(i, j);
        out.push_back(unflatten(m, n, v));
    }
    return out;
}

inline std::size_t hom_dim(const Module& m, const Module& n) { return hom_basis(m, n).size(); }

/// The submodule spanned per vertex by the columns of `bases` (assumed invariant
/// and of full column rank), with its inclusion.
inline std::pair<Module, Morphism> submodule(const Module& m, const std::vector<Matrix>& bases)
{
    const auto& alg = m.algebra();
    const Fp& F = alg->field();
    DimVector d;
    std::vector<Matrix> linv;
    for (auto& b : bases) {
        d.push_back(b.cols());
        linv.push_back(left_inverse(F, b));
    }
    std::vector<Matrix> act(alg->dim());
    for (auto i : alg->radical()) {
        const auto& e = alg->basis(i);
        act[i] = mul(F, linv[e.tgt], mul(F, m.action(i), bases[e.src]));
    }
    Morphism incl{bases};
    return {Module(alg, d, std::move(act)), incl};
}

inline std::pair<Module, Morphism> kernel(const Module& m, const Morphism& f)
{
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < m.dims().size(); ++v)
        bases.push_back(kernel_basis(m.field(), f.maps[v]));
    return submodule(m, bases);
}

/// Quotient of N by the per-vertex subspaces spanned by the columns of `sub`,
/// together with the projection.
inline std::pair<Module, Morphism> quotient(const Module& n, const std::vector<Matrix>& sub)
{
    const auto& alg = n.algebra();
    const Fp& F = alg->field();
    DimVector d;
    std::vector<Matrix> proj, sect;
    for (std::size_t v = 0; v < n.dims().size(); ++v) {
        Matrix img = sub[v].cols() ? column_space(F, sub[v]) : Matrix(n.dim(v), 0);
        auto comp = complement_units(F, img);
        Matrix s(n.dim(v), comp.size());
        for (std::size_t j = 0; j < comp.size(); ++j)
            s(comp[j], j) = 1;
        Matrix full = hstack(img, s);
        Matrix inv = *inverse(F, full);
        proj.push_back(inv.block(img.cols(), 0, comp.size(), n.dim(v)));
        sect.push_back(std::move(s));
        d.push_back(comp.size());
    }
    std::vector<Matrix> act(alg->dim());
    for (auto i : alg->radical()) {
        const auto& e = alg->basis(i);
        act[i] = mul(F, proj[e.tgt], mul(F, n.action(i), sect[e.src]));
    }
    return {Module(alg, d, std::move(act)), Morphism{proj}};
}

inline std::pair<Module, Morphism> cokernel(const Module& n, const Morphism& f)
{
    return quotient(n, f.maps);
}

inline std::pair<Module, Morphism> image(const Module& m, const Module& n, const Morphism& f)
{
    std::vector<Matrix> bases;
    for (std::size_t v = 0; v < m.dims().size(); ++v)
        bases.push_back(f.maps[v].cols() ? column_space(m.field(), f.maps[v]) : Matrix(n.dim(v), 0));
    return submodule(n, bases);
}

/// Direct sum with the canonical injections and projections.
struct DirectSum {
    Module sum;
    std::vector<Morphism> injections;
    std::vector<Morphism> projections;
};

inline DirectSum direct_sum(AlgebraPtr alg, const std::vector<Module>& parts)
{
    const std::size_t nv = alg->num_vertices();
    DimVector d(nv, 0);
    for (auto& p : parts)
        for (std::size_t v = 0; v < nv; ++v)
            d[v] += p.dim(v);
    std::vector<Matrix> act(alg->dim());
    for (auto i : alg->radical()) {
        const auto& e = alg->basis(i);
        act[i] = Matrix(d[e.tgt], d[e.src]);
    }
    DirectSum out;
    DimVector off(nv, 0);
    for (auto& p : parts) {
        for (auto i : alg->radical()) {
            const auto& e = alg->basis(i);
            act[i].set_block(off[e.tgt], off[e.src], p.action(i));
        }
        Morphism inj, pr;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix a(d[v], p.dim(v)), b(p.dim(v), d[v]);
            for (std::size_t k = 0; k < p.dim(v); ++k) {
                a(off[v] + k, k) = 1;
                b(k, off[v] + k) = 1;
            }
            inj.maps.push_back(std::move(a));
            pr.maps.push_back(std::move(b));
            off[v] += p.dim(v);
        }
        out.injections.push_back(std::move(inj));
        out.projections.push_back(std::move(pr));
    }
    out.sum = Module(alg, d, std::move(act));
    return out;
}

inline Module direct_sum_module(AlgebraPtr alg, const std::vector<Module>& parts)
{
    return direct_sum(std::move(alg), parts).sum;
}

/// Morphism from a direct sum given by its components (sum of f_i on summand i).
inline Morphism row_morphism(const Fp& F, const DirectSum& src, const std::vector<Morphism>& comps)
{
    Morphism f = compose(F, comps[0], src.projections[0]);
    for (std::size_t i = 1; i < comps.size(); ++i)
        f = add(F, f, compose(F, comps[i], src.projections[i]));
    return f;
}

/// Indecomposable projective e_x A: basis elements starting at x.
inline Module projective(AlgebraPtr alg, std::size_t x)
{
    const std::size_t nv = alg->num_vertices();
    if (x >= nv)
        throw InputError("projective: vertex out of range");
    const Fp& F = alg->field();
    DimVector d(nv);
    std::vector<std::vector<std::size_t>> comp(nv);
    std::vector<std::size_t> pos(alg->dim(), 0);
    for (std::size_t y = 0; y < nv; ++y) {
        comp[y] = alg->between(x, y);
        d[y] = comp[y].size();
        for (std::size_t k = 0; k < comp[y].size(); ++k)
            pos[comp[y][k]] = k;
    }
    std::vector<Matrix> act(alg->dim());
    for (auto b : alg->radical()) {
        const auto& e = alg->basis(b);
        Matrix a(d[e.tgt], d[e.src]);
        for (std::size_t k = 0; k < comp[e.src].size(); ++k)
            for (auto& t : alg->product(comp[e.src][k], b))
                a(pos[t.index], k) = F.add(a(pos[t.index], k), t.coeff);
        act[b] = std::move(a);
    }
    return Module(alg, d, std::move(act));
}

/// Indecomposable injective D(A e_x): duals of basis elements ending at x.
inline Module injective(AlgebraPtr alg, std::size_t x)
{
    const std::size_t nv = alg->num_vertices();
    if (x >= nv)
        throw InputError("injective: vertex out of range");
    const Fp& F = alg->field();
    DimVector d(nv);
    std::vector<std::vector<std::size_t>> comp(nv);
    std::vector<std::size_t> pos(alg->dim(), 0);
    for (std::size_t y = 0; y < nv; ++y) {
        comp[y] = alg->between(y, x);
        d[y] = comp[y].size();
        for (std::size_t k = 0; k < comp[y].size(); ++k)
            pos[comp[y][k]] = k;
    }
    std::vector<Matrix> act(alg->dim());
    for (auto b : alg->radical()) {
        const auto& e = alg->basis(b);
        // (c^* . b)(c') = c^*(b c') for c' ending at x and starting at tgt(b).
        Matrix a(d[e.tgt], d[e.src]);
        for (std::size_t k = 0; k < comp[e.tgt].size(); ++k)
            for (auto& t : alg->product(b, comp[e.tgt][k]))
                a(k, pos[t.index]) = F.add(a(k, pos[t.index]), t.coeff);
        act[b] = std::move(a);
    }
    return Module(alg, d, std::move(act));
}

inline Module simple(AlgebraPtr alg, std::size_t x)
{
    const std::size_t nv = alg->num_vertices();
    if (x >= nv)
        throw InputError("simple: vertex out of range");
    DimVector d(nv, 0);
    d[x] = 1;
    std::vector<Matrix> act(alg->dim());
    for (auto b : alg->radical()) {
        const auto& e = alg->basis(b);
        act[b] = Matrix(d[e.tgt], d[e.src]);
    }
    return Module(alg, d, std::move(act));
}

/// D M = Hom_k(M, k) as a right module over the opposite algebra.
inline Module dual(const Module& m)
{
    auto op = m.algebra()->op();
    std::vector<Matrix> act(op->dim());
    for (auto b : op->radical())
        act[b] = m.action(b).transpose();
    return Module(op, m.dims(), std::move(act));
}

inline Morphism dual(const Morphism& f)
{
    Morphism g;
    for (auto& m : f.maps)
        g.maps.push_back(m.transpose());
    return g;
}

/// Per vertex, a basis of (M rad)_v.
inline std::vector<Matrix> radical_subspace(const Module& m)
{
    const auto& alg = *m.algebra();
    const Fp& F = alg.field();
    std::vector<Matrix> out;
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        Matrix span(m.dim(v), 0);
        for (auto g : alg.generators())
            if (alg.basis(g).tgt == v && m.action(g).cols())
                span = hstack(span, m.action(g));
        out.push_back(span.cols() ? column_space(F, span) : Matrix(m.dim(v), 0));
    }
    return out;
}

/// Per vertex, a basis of the socle component.
inline std::vector<Matrix> socle_subspace(const Module& m)
{
    const auto& alg = *m.algebra();
    const Fp& F = alg.field();
    std::vector<Matrix> out;
    for (std::size_t v = 0; v < alg.num_vertices(); ++v) {
        Matrix stack(0, m.dim(v));
        for (auto g : alg.generators())
            if (alg.basis(g).src == v && m.action(g).rows())
                stack = vstack(stack, m.action(g));
        out.push_back(kernel_basis(F, stack));
    }
    return out;
}

inline DimVector top_dims(const Module& m)
{
    auto rad = radical_subspace(m);
    DimVector d;
    for (std::size_t v = 0; v < rad.size(); ++v)
        d.push_back(m.dim(v) - rad[v].cols());
    return d;
}

inline DimVector socle_dims(const Module& m)
{
    DimVector d;
    for (auto& s : socle_subspace(m))
        d.push_back(s.cols());
    return d;
}

/// Projective cover P -> M; `vertices` lists the summands P(x) of P in order.
struct ProjectiveCover {
    Module cover;
    Morphism epi;
    std::vector<std::size_t> vertices;
    /// generators[i] is the image of e_x in M for the i-th summand.
    std::vector<Matrix> generators;
};

/// The morphism P(x) -> M sending e_x to the vector `gen` of M_x.
inline Morphism projective_to(const Module& m, std::size_t x, const Matrix& gen)
{
    const auto& alg = *m.algebra();
    const Fp& F = alg.field();
    Morphism f;
    for (std::size_t y = 0; y < alg.num_vertices(); ++y) {
        const auto& cs = alg.between(x, y);
        Matrix a(m.dim(y), cs.size());
        for (std::size_t k = 0; k < cs.size(); ++k) {
            Matrix col = alg.basis(cs[k]).idempotent ? gen : mul(F, m.action(cs[k]), gen);
            a.set_block(0, k, col);
        }
        f.maps.push_back(std::move(a));
    }
    return f;
}

inline ProjectiveCover projective_cover(const Module& m)
{
    const auto& alg = m.algebra();
    const Fp& F = alg->field();
    auto rad = radical_subspace(m);
    ProjectiveCover pc;
    std::vector<Module> parts;
    std::vector<Morphism> comps;
    for (std::size_t x = 0; x < alg->num_vertices(); ++x) {
        for (auto u : complement_units(F, rad[x])) {
            Matrix gen(m.dim(x), 1);
            gen(u, 0) = 1;
            parts.push_back(projective(alg, x));
            comps.push_back(projective_to(m, x, gen));
            pc.vertices.push_back(x);
            pc.generators.push_back(gen);
        }
    }
    if (parts.empty()) {
        pc.cover = Module::zero(alg);
        pc.epi = zero_morphism(pc.cover, m);
        return pc;
    }
    DirectSum ds = direct_sum(alg, parts);
    pc.epi = row_morphism(F, ds, comps);
    pc.cover = std::move(ds.sum);
    return pc;
}

inline Module syzygy(const Module& m)
{
    auto pc = projective_cover(m);
    return kernel(pc.cover, pc.epi).first;
}

/// Injective envelope M -> I, obtained by duality from a projective cover over the opposite algebra.
struct InjectiveEnvelope {
    Module envelope;
    Morphism mono;
    std::vector<std::size_t> vertices;
};

inline InjectiveEnvelope injective_envelope(const Module& m)
{
    auto pc = projective_cover(dual(m));
    InjectiveEnvelope ie;
    ie.envelope = dual(pc.cover);
    ie.mono = dual(pc.epi);
    ie.vertices = pc.vertices;
    return ie;
}

inline Module cosyzygy(const Module& m)
{
    return dual(syzygy(dual(m)));
}

inline bool is_projective(const Module& m)
{
    return syzygy(m).is_zero();
}

inline bool is_injective(const Module& m)
{
    return cosyzygy(m).is_zero();
}

/// Projective dimension by iterated syzygies; throws if it exceeds `cap`.
inline std::size_t projective_dimension(const Module& m, std::size_t cap = 64)
{
    if (m.is_zero())
        return 0;
    Module cur = m;
    for (std::size_t k = 0; k <= cap; ++k) {
        Module next = syzygy(cur);
        if (next.is_zero())
            return k;
        cur = std::move(next);
    }
    throw ResourceError("projective dimension exceeds " + std::to_string(cap));
}

inline std::size_t global_dimension(AlgebraPtr alg, std::size_t cap = 64)
{
    std::size_t g = 0;
    for (std::size_t x = 0; x < alg->num_vertices(); ++x)
        g = std::max(g, projective_dimension(simple(alg, x), cap));
    return g;
}

/// Morphism between sums of indecomposable projectives: the component from
/// P(src[s]) to P(tgt[t]) is left multiplication by elem(t, s), an element of
/// e_{tgt[t]} A e_{src[s]} given as dense basis coefficients.
template <class ElemFn>
inline std::tuple<Module, Module, Morphism> projective_map(AlgebraPtr alg, const std::vector<std::size_t>& src,
                                                           const std::vector<std::size_t>& tgt, ElemFn&& elem)
{
    const Fp& F = alg->field();
    std::vector<Module> sp, tp;
    for (auto x : src)
        sp.push_back(projective(alg, x));
    for (auto x : tgt)
        tp.push_back(projective(alg, x));
    DirectSum S = direct_sum(alg, sp);
    DirectSum T = direct_sum(alg, tp);
    if (src.empty() || tgt.empty())
        return {S.sum, T.sum, zero_morphism(S.sum, T.sum)};
    std::vector<Morphism> comps;
    for (std::size_t s = 0; s < src.size(); ++s) {
        // image of e_{src[s]} in T = sum over t of elem(t, s) viewed inside P(tgt[t])
        Morphism f = zero_morphism(sp[s], T.sum);
        for (std::size_t t = 0; t < tgt.size(); ++t) {
            const std::vector<Fp::Elem>& lam = elem(t, s);
            const auto& pos = alg->between(tgt[t], src[s]);
            Matrix gen(pos.size(), 1);
            for (std::size_t k = 0; k < pos.size(); ++k)
                gen(k, 0) = lam[pos[k]];
            f = add(F, f, compose(F, T.injections[t], projective_to(tp[t], src[s], gen)));
        }
        comps.push_back(std::move(f));
    }
    Morphism g = row_morphism(F, S, comps);
    return {S.sum, T.sum, g};
}

} // namespace repalg
