#pragma once

// Exact dense linear algebra and univariate polynomials over a prime field F_p.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace repalg {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Arithmetic in F_p. Elements are residues in [0, p).
class Fp {
public:
    using Elem = std::uint32_t;

    explicit Fp(std::uint32_t p = kDefaultPrime) : p_(p)
    {
        if (p >= (1u << 31) || !is_prime(p))
            throw InputError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
    }

    std::uint32_t p() const { return p_; }

    Elem reduce(std::int64_t v) const
    {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<Elem>(r < 0 ? r + p_ : r);
    }
    Elem add(Elem a, Elem b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const
    {
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Elem pow(Elem a, std::uint64_t e) const
    {
        Elem r = 1 % p_;
        while (e) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const
    {
        if (a == 0)
            throw InternalError("inverse of zero in F_p");
        std::int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr) {
            std::int64_t q = r / nr;
            std::tie(t, nt) = std::make_pair(nt, t - q * nt);
            std::tie(r, nr) = std::make_pair(nr, r - q * nr);
        }
        return reduce(t);
    }

    bool operator==(const Fp& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

/// Dense row-major matrix of residues.
class Matrix {
public:
    using Elem = Fp::Elem;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Elem> data)
        : rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows_ * cols_)
            throw InputError("matrix data size mismatch");
    }

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }
    static Matrix from_rows(const Fp& F, const std::vector<std::vector<std::int64_t>>& rows)
    {
        std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
        Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw InputError("ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = F.reduce(rows[i][j]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Elem>& data() const { return data_; }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix column(std::size_t j) const
    {
        Matrix c(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i)
            c(i, 0) = (*this)(i, j);
        return c;
    }

    Matrix columns(const std::vector<std::size_t>& idx) const
    {
        Matrix c(rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j)
                c(i, j) = (*this)(i, idx[j]);
        return c;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b)
    {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                (*this)(r0 + i, c0 + j) = b(i, j);
    }

    bool operator==(const Matrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::string str() const
    {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < cols_; ++j)
                os << (j ? "," : "") << (*this)(i, j);
            os << ']';
        }
        os << ']';
        return os.str();
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

inline Matrix mul(const Fp& F, const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw InputError("matrix product dimension mismatch");
    Matrix c(a.rows(), b.cols());
    const std::uint64_t p = F.p();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint64_t aik = a(i, k);
            if (!aik)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) = static_cast<Fp::Elem>((c(i, j) + aik * b(k, j)) % p);
        }
    }
    return c;
}

inline Matrix add(const Fp& F, const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InputError("matrix sum dimension mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = F.add(a(i, j), b(i, j));
    return c;
}

inline Matrix sub(const Fp& F, const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InputError("matrix difference dimension mismatch");
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = F.sub(a(i, j), b(i, j));
    return c;
}

inline Matrix scale(const Fp& F, const Matrix& a, Fp::Elem s)
{
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = F.mul(a(i, j), s);
    return c;
}

inline Matrix hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw InputError("hstack row mismatch");
    Matrix c(a.rows(), a.cols() + b.cols());
    c.set_block(0, 0, a);
    c.set_block(0, a.cols(), b);
    return c;
}

inline Matrix vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw InputError("vstack column mismatch");
    Matrix c(a.rows() + b.rows(), a.cols());
    c.set_block(0, 0, a);
    c.set_block(a.rows(), 0, b);
    return c;
}

/// Reduced row echelon form. Pivots are chosen in the first nonzero column,
/// from the lowest-index row holding a nonzero entry, so the reduced form is unique.
struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

inline Echelon echelon(const Fp& F, Matrix m)
{
    Echelon e;
    std::size_t row = 0;
    const std::uint64_t p = F.p();
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(row, j));
        Fp::Elem inv = F.inv(m(row, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) = F.mul(m(row, j), inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0)
                continue;
            std::uint64_t f = p - m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (m(row, j))
                    m(r, j) = static_cast<Fp::Elem>((m(r, j) + f * m(row, j)) % p);
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rref = std::move(m);
    return e;
}

inline std::size_t rank(const Fp& F, const Matrix& m)
{
    if (m.empty())
        return 0;
    return echelon(F, m).rank();
}

/// Basis of the null space, as the columns of a cols x k matrix.
inline Matrix kernel_basis(const Fp& F, const Matrix& m)
{
    const std::size_t n = m.cols();
    if (m.rows() == 0)
        return Matrix::identity(n);
    Echelon e = echelon(F, m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c])
            free.push_back(c);
    Matrix k(n, free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        k(free[j], j) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            k(e.pivots[r], j) = F.neg(e.rref(r, free[j]));
    }
    return k;
}

/// One solution X of A X = B, or nothing when the system is inconsistent.
inline std::optional<Matrix> solve(const Fp& F, const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw InputError("solve: dimension mismatch");
    const std::size_t n = a.cols();
    if (a.rows() == 0)
        return Matrix(n, b.cols());
    Echelon e = echelon(F, hstack(a, b));
    Matrix x(n, b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        std::size_t c = e.pivots[r];
        if (c >= n)
            return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(c, j) = e.rref(r, n + j);
    }
    return x;
}

/// Basis (as columns) of the column space, taken from the pivot columns of m.
inline Matrix column_space(const Fp& F, const Matrix& m)
{
    if (m.empty())
        return Matrix(m.rows(), 0);
    Echelon e = echelon(F, m);
    return m.columns(e.pivots);
}

/// L with L * b = I for a full column rank b (n x k).
inline Matrix left_inverse(const Fp& F, const Matrix& b)
{
    const std::size_t n = b.rows(), k = b.cols();
    Echelon e = echelon(F, hstack(b, Matrix::identity(n)));
    if (e.pivots.size() < k || (k > 0 && e.pivots[k - 1] >= k))
        throw InternalError("left_inverse: matrix does not have full column rank");
    return e.rref.block(0, k, k, n);
}

inline std::optional<Matrix> inverse(const Fp& F, const Matrix& m)
{
    if (m.rows() != m.cols())
        throw InputError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Echelon e = echelon(F, hstack(m, Matrix::identity(n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n))
        return std::nullopt;
    return e.rref.block(0, n, n, n);
}

/// Indices of unit vectors that complete the columns of `basis` to a basis of F^n.
inline std::vector<std::size_t> complement_units(const Fp& F, const Matrix& basis)
{
    const std::size_t n = basis.rows();
    Echelon e = echelon(F, hstack(basis, Matrix::identity(n)));
    std::vector<std::size_t> out;
    for (auto c : e.pivots)
        if (c >= basis.cols())
            out.push_back(c - basis.cols());
    return out;
}

// ---------------------------------------------------------------------------
// Polynomials, coefficients stored lowest degree first, always trimmed.

using Poly = std::vector<Fp::Elem>;

inline void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

inline int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly poly_add(const Fp& F, const Poly& a, const Poly& b)
{
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(c);
    return c;
}

inline Poly poly_sub(const Fp& F, const Poly& a, const Poly& b)
{
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(c);
    return c;
}

inline Poly poly_mul(const Fp& F, const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    trim(c);
    return c;
}

inline std::pair<Poly, Poly> poly_divmod(const Fp& F, Poly a, const Poly& b)
{
    if (b.empty())
        throw InternalError("polynomial division by zero");
    trim(a);
    if (a.size() < b.size())
        return {{}, a};
    Poly q(a.size() - b.size() + 1, 0);
    Fp::Elem lead_inv = F.inv(b.back());
    for (std::size_t k = q.size(); k-- > 0;) {
        Fp::Elem c = F.mul(a[k + b.size() - 1], lead_inv);
        q[k] = c;
        if (c)
            for (std::size_t j = 0; j < b.size(); ++j)
                a[k + j] = F.sub(a[k + j], F.mul(c, b[j]));
    }
    trim(q);
    trim(a);
    return {q, a};
}

inline Poly poly_mod(const Fp& F, const Poly& a, const Poly& b) { return poly_divmod(F, a, b).second; }

inline Poly make_monic(const Fp& F, Poly f)
{
    trim(f);
    if (f.empty())
        return f;
    Fp::Elem inv = F.inv(f.back());
    for (auto& c : f)
        c = F.mul(c, inv);
    return f;
}

inline Poly poly_gcd(const Fp& F, Poly a, Poly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

inline Poly poly_derivative(const Fp& F, const Poly& f)
{
    if (f.size() <= 1)
        return {};
    Poly d(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        d[i - 1] = F.mul(f[i], F.reduce(static_cast<std::int64_t>(i)));
    trim(d);
    return d;
}

inline Poly poly_powmod(const Fp& F, Poly base, std::uint64_t e, const Poly& mod)
{
    Poly r{1};
    base = poly_mod(F, base, mod);
    while (e) {
        if (e & 1)
            r = poly_mod(F, poly_mul(F, r, base), mod);
        base = poly_mod(F, poly_mul(F, base, base), mod);
        e >>= 1;
    }
    return poly_mod(F, r, mod);
}

/// f evaluated at a square matrix.
inline Matrix poly_eval(const Fp& F, const Poly& f, const Matrix& m)
{
    const std::size_t n = m.rows();
    Matrix r(n, n);
    for (std::size_t i = f.size(); i-- > 0;) {
        r = mul(F, r, m);
        for (std::size_t d = 0; d < n; ++d)
            r(d, d) = F.add(r(d, d), f[i]);
    }
    return r;
}

/// Characteristic polynomial det(xI - M), via reduction to upper Hessenberg form.
inline Poly char_poly(const Fp& F, const Matrix& m0)
{
    if (m0.rows() != m0.cols())
        throw InputError("characteristic polynomial of a non-square matrix");
    const std::size_t n = m0.rows();
    Matrix h = m0;
    for (std::size_t j = 0; j + 2 <= n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && h(piv, j) == 0)
            ++piv;
        if (piv == n)
            continue;
        if (piv != j + 1) {
            for (std::size_t c = 0; c < n; ++c)
                std::swap(h(piv, c), h(j + 1, c));
            for (std::size_t r = 0; r < n; ++r)
                std::swap(h(r, piv), h(r, j + 1));
        }
        Fp::Elem inv = F.inv(h(j + 1, j));
        for (std::size_t i = j + 2; i < n; ++i) {
            if (h(i, j) == 0)
                continue;
            Fp::Elem u = F.mul(h(i, j), inv);
            for (std::size_t c = 0; c < n; ++c)
                h(i, c) = F.sub(h(i, c), F.mul(u, h(j + 1, c)));
            for (std::size_t r = 0; r < n; ++r)
                h(r, j + 1) = F.add(h(r, j + 1), F.mul(u, h(r, i)));
        }
    }
    // p_k = char poly of leading k x k block.
    std::vector<Poly> pk(n + 1);
    pk[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        Poly xm{F.neg(h(k - 1, k - 1)), 1};
        pk[k] = poly_mul(F, xm, pk[k - 1]);
        Fp::Elem prod = 1;
        for (std::size_t i = 1; i < k; ++i) {
            prod = F.mul(prod, h(k - i, k - i - 1));
            Fp::Elem coef = F.mul(prod, h(k - i - 1, k - 1));
            if (coef == 0)
                continue;
            Poly term = pk[k - i - 1];
            for (auto& c : term)
                c = F.mul(c, coef);
            pk[k] = poly_sub(F, pk[k], term);
        }
    }
    return pk[n];
}

struct PolyFactor {
    Poly factor; // monic irreducible
    int multiplicity;
    bool operator==(const PolyFactor&) const = default;
};

namespace detail {

inline Poly pth_root(const Fp& F, const Poly& f)
{
    const std::size_t p = F.p();
    Poly r;
    for (std::size_t i = 0; i < f.size(); i += p)
        r.push_back(f[i]);
    trim(r);
    return r;
}

inline void squarefree(const Fp& F, const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out)
{
    if (degree(f) < 1)
        return;
    Poly d = poly_derivative(F, f);
    if (d.empty()) {
        squarefree(F, pth_root(F, f), mult * static_cast<int>(F.p()), out);
        return;
    }
    Poly c = poly_gcd(F, f, d);
    Poly w = poly_divmod(F, f, c).first;
    int i = 1;
    while (degree(w) > 0) {
        Poly y = poly_gcd(F, w, c);
        Poly z = poly_divmod(F, w, y).first;
        if (degree(z) > 0)
            out.emplace_back(make_monic(F, z), i * mult);
        ++i;
        w = y;
        c = poly_divmod(F, c, y).first;
    }
    if (degree(c) > 0)
        squarefree(F, pth_root(F, c), mult * static_cast<int>(F.p()), out);
}

inline void equal_degree(const Fp& F, const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out)
{
    const int n = degree(f);
    if (n <= d) {
        out.push_back(make_monic(F, f));
        return;
    }
    std::uniform_int_distribution<std::uint32_t> coef(0, F.p() - 1);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Poly a(n);
        for (auto& c : a)
            c = coef(rng);
        trim(a);
        if (degree(a) < 1)
            continue;
        Poly g = poly_gcd(F, a, f);
        if (degree(g) > 0 && degree(g) < n) {
            equal_degree(F, g, d, rng, out);
            equal_degree(F, poly_divmod(F, f, g).first, d, rng, out);
            return;
        }
        Poly b;
        if (F.p() == 2) {
            b = a;
            Poly t = a;
            for (int j = 1; j < d; ++j) {
                t = poly_mod(F, poly_mul(F, t, t), f);
                b = poly_add(F, b, t);
            }
        } else {
            Poly u = a, t = a;
            for (int j = 1; j < d; ++j) {
                u = poly_powmod(F, u, F.p(), f);
                t = poly_mod(F, poly_mul(F, t, u), f);
            }
            b = poly_sub(F, poly_powmod(F, t, (F.p() - 1) / 2, f), Poly{1});
        }
        g = poly_gcd(F, b, f);
        if (degree(g) > 0 && degree(g) < n) {
            equal_degree(F, g, d, rng, out);
            equal_degree(F, poly_divmod(F, f, g).first, d, rng, out);
            return;
        }
    }
    throw ResourceError("equal-degree factorization did not converge");
}

} // namespace detail

/// Factorization of a monic polynomial into irreducibles with multiplicities,
/// sorted by degree and then coefficients.
inline std::vector<PolyFactor> factor_poly(const Fp& F, const Poly& f0, std::uint64_t seed = 0)
{
    Poly f = make_monic(F, f0);
    std::vector<PolyFactor> out;
    if (degree(f) < 1)
        return out;
    std::vector<std::pair<Poly, int>> sqf;
    detail::squarefree(F, f, 1, sqf);
    std::mt19937_64 rng(seed);
    for (auto& [g0, mult] : sqf) {
        Poly g = g0;
        Poly h{0, 1};
        const Poly x{0, 1};
        for (int i = 1; 2 * i <= degree(g); ++i) {
            h = poly_powmod(F, h, F.p(), g);
            Poly gi = poly_gcd(F, poly_sub(F, h, x), g);
            if (degree(gi) > 0) {
                std::vector<Poly> parts;
                detail::equal_degree(F, gi, i, rng, parts);
                for (auto& q : parts)
                    out.push_back({q, mult});
                g = poly_divmod(F, g, gi).first;
                h = poly_mod(F, h, g);
            }
        }
        if (degree(g) > 0)
            out.push_back({make_monic(F, g), mult});
    }
    // Merge equal factors coming from different square-free layers.
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.size() != b.factor.size())
            return a.factor.size() < b.factor.size();
        return a.factor < b.factor;
    });
    std::vector<PolyFactor> merged;
    for (auto& pf : out) {
        if (!merged.empty() && merged.back().factor == pf.factor)
            merged.back().multiplicity += pf.multiplicity;
        else
            merged.push_back(pf);
    }
    return merged;
}

inline std::vector<PolyFactor> factor_char_poly(const Fp& F, const Matrix& m, std::uint64_t seed = 0)
{
    if (m.rows() != m.cols())
        throw InputError("factor_char_poly: matrix is not square");
    return factor_poly(F, char_poly(F, m), seed);
}

} // namespace repalg
