#pragma once

// Krull-Schmidt decomposition by Fitting splitting, local endomorphism rings,
// and isomorphism testing.

#include <optional>
#include <random>

#include "module.hpp"

namespace repalg {

namespace detail {

inline Poly total_char_poly(const Fp& F, const Morphism& f)
{
    Poly c{1};
    for (auto& m : f.maps)
        c = poly_mul(F, c, char_poly(F, m));
    return c;
}

inline Morphism random_combination(const Fp& F, const std::vector<Morphism>& basis, std::mt19937_64& rng)
{
    std::vector<Fp::Elem> c(basis.size());
    for (auto& x : c)
        x = static_cast<Fp::Elem>(rng() % F.p());
    return linear_combination(F, basis, c);
}

inline bool is_invertible(const Fp& F, const Morphism& f)
{
    for (auto& m : f.maps)
        if (m.rows() != m.cols() || rank(F, m) != m.rows())
            return false;
    return true;
}

} // namespace detail

/// If End(M) is local with residue field k, returns a basis of its radical
/// (the endomorphisms phi - c(phi) id); otherwise nothing.
inline std::optional<std::vector<Morphism>> local_radical(const Module& m, const std::vector<Morphism>& end)
{
    if (m.is_zero() || end.empty())
        return std::nullopt;
    const Fp& F = m.field();
    const std::size_t len = hom_space_len(m, m);
    Morphism id = identity_morphism(m);
    std::vector<Morphism> rad;
    for (auto& phi : end) {
        auto fs = factor_poly(F, detail::total_char_poly(F, phi));
        if (fs.size() != 1 || fs[0].factor.size() != 2)
            return std::nullopt;
        Fp::Elem c = F.neg(fs[0].factor[0]);
        Morphism psi = add(F, phi, scale(F, id, F.neg(c)));
        if (!psi.is_zero())
            rad.push_back(std::move(psi));
    }
    Matrix span = rad.empty() ? Matrix(len, 0) : column_space(F, morphisms_as_columns(rad, len));
    if (span.cols() + 1 != end.size())
        return std::nullopt;
    // The span must be closed under composition and nilpotent: its powers shrink to zero.
    auto as_morphisms = [&](const Matrix& cols) {
        std::vector<Morphism> out;
        for (std::size_t j = 0; j < cols.cols(); ++j) {
            std::vector<Fp::Elem> v(len);
            for (std::size_t i = 0; i < len; ++i)
                v[i] = cols(i, j);
            out.push_back(unflatten(m, m, v));
        }
        return out;
    };
    std::vector<Morphism> basis = as_morphisms(span);
    std::vector<Morphism> power = basis;
    while (!power.empty()) {
        std::vector<Morphism> prods;
        for (auto& a : power)
            for (auto& b : basis) {
                Morphism ab = compose(F, a, b);
                if (!ab.is_zero())
                    prods.push_back(std::move(ab));
            }
        if (prods.empty())
            break;
        Matrix pm = column_space(F, morphisms_as_columns(prods, len));
        if (rank(F, hstack(span, pm)) != span.cols() || pm.cols() >= power.size())
            return std::nullopt;
        power = as_morphisms(pm);
    }
    return basis;
}

inline std::optional<std::vector<Morphism>> local_radical(const Module& m)
{
    return local_radical(m, hom_basis(m, m));
}

struct DecomposeOptions {
    std::uint64_t seed = 0;
    /// Random endomorphisms tried before a non-local module is accepted as indecomposable.
    std::size_t trials = 96;
    /// Largest total dimension attempted.
    std::size_t max_dim = 400;
};

namespace detail {

inline void split_module(const Module& m, std::mt19937_64& rng, const DecomposeOptions& opt, std::vector<Module>& out)
{
    if (m.is_zero())
        return;
    const Fp& F = m.field();
    auto end = hom_basis(m, m);
    if (end.size() == 1 || local_radical(m, end)) {
        out.push_back(m);
        return;
    }
    std::size_t trials = end.size() + opt.trials * (F.p() <= 3 ? 2 : 1);
    for (std::size_t t = 0; t < trials; ++t) {
        Morphism phi = t < end.size() ? end[t] : random_combination(F, end, rng);
        auto fs = factor_poly(F, total_char_poly(F, phi), rng());
        if (fs.size() < 2)
            continue;
        Poly g{1}, h{1};
        for (int k = 0; k < fs[0].multiplicity; ++k)
            g = poly_mul(F, g, fs[0].factor);
        for (std::size_t i = 1; i < fs.size(); ++i)
            for (int k = 0; k < fs[i].multiplicity; ++k)
                h = poly_mul(F, h, fs[i].factor);
        std::vector<Matrix> kg, kh;
        for (auto& a : phi.maps) {
            kg.push_back(kernel_basis(F, poly_eval(F, g, a)));
            kh.push_back(kernel_basis(F, poly_eval(F, h, a)));
        }
        split_module(submodule(m, kg).first, rng, opt, out);
        split_module(submodule(m, kh).first, rng, opt, out);
        return;
    }
    // No splitting endomorphism: End(M) / rad is a proper extension field of k.
    out.push_back(m);
}

} // namespace detail

/// Indecomposable direct summands of M (with repetition), in splitting order.
inline std::vector<Module> indecomposable_summands(const Module& m, const DecomposeOptions& opt = {})
{
    if (m.total_dim() > opt.max_dim)
        throw ResourceError("decomposition budget exceeded: module of dimension " + std::to_string(m.total_dim()));
    std::mt19937_64 rng(opt.seed);
    std::vector<Module> out;
    detail::split_module(m, rng, opt, out);
    return out;
}

inline bool is_indecomposable(const Module& m, const DecomposeOptions& opt = {})
{
    return !m.is_zero() && indecomposable_summands(m, opt).size() == 1;
}

/// Isomorphism of two modules with local endomorphism rings: M = N iff some
/// composite of basis morphisms M -> N -> M is invertible (the induced pairing into
/// End(M)/rad is bilinear, so testing basis pairs is exact).
inline bool is_iso_indecomposable(const Module& a, const Module& b)
{
    if (a.algebra() != b.algebra() || a.dims() != b.dims())
        return false;
    if (a.is_zero())
        return true;
    const Fp& F = a.field();
    auto ab = hom_basis(a, b);
    if (ab.empty())
        return false;
    auto ba = hom_basis(b, a);
    for (auto& f : ab)
        if (detail::is_invertible(F, f))
            return true;
    for (auto& f : ab)
        for (auto& g : ba)
            if (detail::is_invertible(F, compose(F, g, f)))
                return true;
    return false;
}

struct Summand {
    Module module;
    std::size_t multiplicity;
};

/// Groups indecomposables into isomorphism classes, keeping first representatives.
inline std::vector<Summand> group_summands(const std::vector<Module>& parts)
{
    std::vector<Summand> out;
    for (auto& p : parts) {
        bool found = false;
        for (auto& s : out)
            if (is_iso_indecomposable(s.module, p)) {
                ++s.multiplicity;
                found = true;
                break;
            }
        if (!found)
            out.push_back({p, 1});
    }
    return out;
}

inline std::vector<Summand> decompose(const Module& m, const DecomposeOptions& opt = {})
{
    return group_summands(indecomposable_summands(m, opt));
}

inline bool is_iso(const Module& a, const Module& b, const DecomposeOptions& opt = {})
{
    if (a.algebra() != b.algebra() || a.dims() != b.dims())
        return false;
    if (a.is_zero())
        return true;
    auto da = indecomposable_summands(a, opt);
    auto db = indecomposable_summands(b, opt);
    if (da.size() != db.size())
        return false;
    std::vector<bool> used(db.size(), false);
    for (auto& x : da) {
        bool matched = false;
        for (std::size_t j = 0; j < db.size() && !matched; ++j)
            if (!used[j] && is_iso_indecomposable(x, db[j]))
                used[j] = matched = true;
        if (!matched)
            return false;
    }
    return true;
}

} // namespace repalg
