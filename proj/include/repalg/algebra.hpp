#pragma once

// Basic finite-dimensional algebras presented by a basis adapted to a complete
// set of primitive orthogonal idempotents, with explicit structure constants.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "field.hpp"
#include "quiver.hpp"

namespace repalg {

/// A basis element b with b = e_src * b * e_tgt. Right modules see b as a map
/// from the component at `src` to the component at `tgt`.
struct BasisElement {
    std::size_t src;
    std::size_t tgt;
    bool idempotent;
    std::string label;
};

struct Term {
    std::size_t index;
    Fp::Elem coeff;
    bool operator==(const Term&) const = default;
};

using Combination = std::vector<Term>;

class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    /// `products(i, j)` must return b_i * b_j as a combination of basis elements; it is
    /// only queried when tgt(b_i) == src(b_j).
    template <class ProductFn>
    static std::shared_ptr<Algebra> create(Fp field, std::vector<std::string> vertex_labels,
                                           std::vector<BasisElement> basis, ProductFn&& products)
    {
        auto a = std::shared_ptr<Algebra>(new Algebra(field, std::move(vertex_labels), std::move(basis)));
        const std::size_t n = a->basis_.size();
        a->table_.assign(n * n, {});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a->basis_[i].tgt == a->basis_[j].src)
                    a->table_[i * n + j] = products(i, j);
        a->finish();
        return a;
    }

    const Fp& field() const { return field_; }
    std::size_t num_vertices() const { return vertex_labels_.size(); }
    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    std::size_t dim() const { return basis_.size(); }
    const BasisElement& basis(std::size_t i) const { return basis_[i]; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    std::size_t idempotent(std::size_t vertex) const { return idempotent_[vertex]; }
    /// Non-idempotent basis elements (they span the radical).
    const std::vector<std::size_t>& radical() const { return radical_; }
    /// Radical basis elements whose classes span rad / rad^2; they generate the algebra.
    const std::vector<std::size_t>& generators() const { return generators_; }
    /// Basis elements b with src(b) = from and tgt(b) = to.
    const std::vector<std::size_t>& between(std::size_t from, std::size_t to) const
    {
        return between_[from * num_vertices() + to];
    }

    const Combination& product(std::size_t i, std::size_t j) const
    {
        static const Combination zero;
        if (basis_[i].tgt != basis_[j].src)
            return zero;
        return table_[i * dim() + j];
    }

    /// Product of two elements given as dense coefficient vectors over the basis.
    std::vector<Fp::Elem> multiply(const std::vector<Fp::Elem>& x, const std::vector<Fp::Elem>& y) const
    {
        std::vector<Fp::Elem> z(dim(), 0);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (!x[i])
                continue;
            for (std::size_t j = 0; j < dim(); ++j) {
                if (!y[j])
                    continue;
                Fp::Elem c = field_.mul(x[i], y[j]);
                for (auto& t : product(i, j))
                    z[t.index] = field_.add(z[t.index], field_.mul(c, t.coeff));
            }
        }
        return z;
    }

    /// The opposite algebra; op()->op() is this algebra.
    std::shared_ptr<const Algebra> op() const
    {
        std::call_once(op_once_, [this] {
            if (auto back = op_back_.lock()) {
                op_cache_ = back;
                return;
            }
            std::vector<BasisElement> b = basis_;
            for (auto& e : b)
                std::swap(e.src, e.tgt);
            auto self = shared_from_this();
            auto o = std::shared_ptr<Algebra>(new Algebra(field_, vertex_labels_, std::move(b)));
            const std::size_t n = dim();
            o->table_.assign(n * n, {});
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (o->basis_[i].tgt == o->basis_[j].src)
                        o->table_[i * n + j] = table_[j * n + i];
            o->finish();
            o->op_back_ = self;
            op_strong_ = o;
            op_cache_ = o;
        });
        if (auto strong = op_strong_)
            return strong;
        return op_cache_.lock();
    }

    /// Checks (b_i b_j) b_k = b_i (b_j b_k) on all basis triples.
    bool is_associative() const
    {
        const std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (basis_[i].tgt != basis_[j].src)
                    continue;
                for (std::size_t k = 0; k < n; ++k) {
                    if (basis_[j].tgt != basis_[k].src)
                        continue;
                    std::vector<Fp::Elem> left(n, 0), right(n, 0);
                    for (auto& t : product(i, j))
                        for (auto& u : product(t.index, k))
                            left[u.index] = field_.add(left[u.index], field_.mul(t.coeff, u.coeff));
                    for (auto& t : product(j, k))
                        for (auto& u : product(i, t.index))
                            right[u.index] = field_.add(right[u.index], field_.mul(t.coeff, u.coeff));
                    if (left != right)
                        return false;
                }
            }
        return true;
    }

private:
    Algebra(Fp field, std::vector<std::string> vertex_labels, std::vector<BasisElement> basis)
        : field_(field), vertex_labels_(std::move(vertex_labels)), basis_(std::move(basis))
    {
    }

    void finish()
    {
        const std::size_t nv = num_vertices();
        idempotent_.assign(nv, static_cast<std::size_t>(-1));
        between_.assign(nv * nv, {});
        for (std::size_t i = 0; i < dim(); ++i) {
            const auto& b = basis_[i];
            if (b.src >= nv || b.tgt >= nv)
                throw InputError("basis element vertex out of range");
            between_[b.src * nv + b.tgt].push_back(i);
            if (b.idempotent) {
                if (b.src != b.tgt || idempotent_[b.src] != static_cast<std::size_t>(-1))
                    throw InputError("malformed idempotent basis element");
                idempotent_[b.src] = i;
            } else {
                radical_.push_back(i);
            }
        }
        for (auto e : idempotent_)
            if (e == static_cast<std::size_t>(-1))
                throw InputError("vertex without idempotent basis element");
        // rad^2 = span of products of radical basis elements; generators complete it to rad.
        std::vector<std::size_t> pos(dim(), static_cast<std::size_t>(-1));
        for (std::size_t r = 0; r < radical_.size(); ++r)
            pos[radical_[r]] = r;
        std::vector<std::vector<Fp::Elem>> rows;
        for (auto i : radical_)
            for (auto j : radical_) {
                const auto& c = product(i, j);
                if (c.empty())
                    continue;
                std::vector<Fp::Elem> row(radical_.size(), 0);
                for (auto& t : c)
                    if (pos[t.index] != static_cast<std::size_t>(-1))
                        row[pos[t.index]] = t.coeff;
                rows.push_back(std::move(row));
            }
        Matrix sq(radical_.size(), rows.size());
        for (std::size_t c = 0; c < rows.size(); ++c)
            for (std::size_t r = 0; r < radical_.size(); ++r)
                sq(r, c) = rows[c][r];
        Matrix basis_sq = rows.empty() ? Matrix(radical_.size(), 0) : column_space(field_, sq);
        for (auto u : complement_units(field_, basis_sq))
            generators_.push_back(radical_[u]);
    }

    Fp field_;
    std::vector<std::string> vertex_labels_;
    std::vector<BasisElement> basis_;
    std::vector<Combination> table_;
    std::vector<std::size_t> idempotent_;
    std::vector<std::size_t> radical_;
    std::vector<std::size_t> generators_;
    std::vector<std::vector<std::size_t>> between_;

    mutable std::once_flag op_once_;
    mutable std::shared_ptr<const Algebra> op_strong_;
    mutable std::weak_ptr<const Algebra> op_cache_;
    std::weak_ptr<const Algebra> op_back_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// The path algebra kQ with basis the paths of Q (`PathBasis` order).
inline AlgebraPtr path_algebra(const Quiver& q, Fp field = Fp())
{
    PathBasis pb(q);
    std::vector<BasisElement> basis;
    for (std::size_t i = 0; i < pb.size(); ++i)
        basis.push_back({pb[i].source, pb[i].target, pb[i].trivial(), pb.name(i)});
    return Algebra::create(field, q.vertices(), std::move(basis), [&](std::size_t i, std::size_t j) {
        Combination c;
        if (auto k = pb.compose(i, j))
            c.push_back({*k, 1});
        return c;
    });
}

} // namespace repalg
