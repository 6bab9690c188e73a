#include <gtest/gtest.h>

#include <random>

#include "repalg/algebra.hpp"

using namespace repalg;

namespace {

// Cofactor expansion; independent of the elimination code.
std::int64_t det_cofactor(const std::vector<std::vector<std::int64_t>>& a, std::int64_t p)
{
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return ((a[0][0] % p) + p) % p;
    std::int64_t d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<std::int64_t>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::int64_t> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(a[r][c]);
            minor.push_back(row);
        }
        std::int64_t term = (a[0][j] % p + p) % p * det_cofactor(minor, p) % p;
        d = (j % 2 == 0) ? (d + term) % p : (d - term + p) % p;
    }
    return d;
}

} // namespace

TEST(Field, Arithmetic)
{
    Fp F(7);
    EXPECT_EQ(F.mul(3, 5), 1u);
    EXPECT_EQ(F.inv(3), 5u);
    EXPECT_EQ(F.reduce(-1), 6u);
    EXPECT_THROW(Fp(8), InputError);
    for (Fp::Elem a = 1; a < 7; ++a)
        EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
}

TEST(Field, RankKernelSolve)
{
    Fp F(5);
    Matrix a = Matrix::from_rows(F, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    EXPECT_EQ(rank(F, a), 2u);
    Matrix k = kernel_basis(F, a);
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_TRUE(mul(F, a, k).is_zero());
    Matrix b = Matrix::from_rows(F, {{6}, {12}, {2}});
    auto x = solve(F, a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(mul(F, a, *x), b);
    Matrix bad = Matrix::from_rows(F, {{1}, {0}, {0}});
    EXPECT_FALSE(solve(F, a, bad).has_value());
}

TEST(Field, RankMatchesCofactorDeterminant)
{
    const std::int64_t p = 3;
    Fp F(p);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 4;
        std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
        for (auto& r : rows)
            for (auto& v : r)
                v = static_cast<std::int64_t>(rng() % p);
        Matrix m = Matrix::from_rows(F, rows);
        bool invertible = det_cofactor(rows, p) != 0;
        EXPECT_EQ(rank(F, m) == n, invertible);
        EXPECT_EQ(inverse(F, m).has_value(), invertible);
        if (invertible)
            EXPECT_EQ(mul(F, m, *inverse(F, m)), Matrix::identity(n));
    }
}

TEST(Field, CharPolyAgainstCofactor)
{
    // det(xI - A) evaluated at x = t must equal the characteristic polynomial at t.
    const std::int64_t p = 11;
    Fp F(p);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = 1 + rng() % 4;
        std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
        for (auto& r : rows)
            for (auto& v : r)
                v = static_cast<std::int64_t>(rng() % p);
        Poly cp = char_poly(F, Matrix::from_rows(F, rows));
        ASSERT_EQ(degree(cp), static_cast<int>(n));
        for (std::int64_t t = 0; t < p; ++t) {
            auto shifted = rows;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    shifted[i][j] = (i == j ? t : 0) - rows[i][j];
            Fp::Elem val = 0;
            for (std::size_t i = cp.size(); i-- > 0;)
                val = F.add(F.mul(val, static_cast<Fp::Elem>(t)), cp[i]);
            EXPECT_EQ(val, static_cast<Fp::Elem>(det_cofactor(shifted, p)));
        }
    }
}

TEST(Field, Factorization)
{
    Fp F2(2);
    // x^2 + 1 = (x + 1)^2 over F_2
    auto f = factor_poly(F2, Poly{1, 0, 1});
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0].factor, (Poly{1, 1}));
    EXPECT_EQ(f[0].multiplicity, 2);

    Fp F3(3);
    auto g = factor_char_poly(F3, Matrix::from_rows(F3, {{1, 0}, {0, -1}}));
    ASSERT_EQ(g.size(), 2u);
    Poly prod{1};
    for (auto& pf : g)
        for (int i = 0; i < pf.multiplicity; ++i)
            prod = poly_mul(F3, prod, pf.factor);
    EXPECT_EQ(prod, (Poly{2, 0, 1}));

    // random products of known irreducibles over F_5 recombine exactly
    Fp F5(5);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        Poly h{1};
        for (int k = 0; k < 4; ++k) {
            Poly lin{static_cast<Fp::Elem>(rng() % 5), 1};
            h = poly_mul(F5, h, lin);
        }
        h = poly_mul(F5, h, Poly{2, 0, 1}); // x^2 + 2 is irreducible mod 5
        auto fs = factor_poly(F5, h, trial);
        Poly back{1};
        for (auto& pf : fs) {
            EXPECT_GE(degree(pf.factor), 1);
            for (int i = 0; i < pf.multiplicity; ++i)
                back = poly_mul(F5, back, pf.factor);
        }
        EXPECT_EQ(back, h);
        bool has_quadratic = false;
        for (auto& pf : fs)
            has_quadratic |= degree(pf.factor) == 2;
        EXPECT_TRUE(has_quadratic);
    }
}

TEST(Quiver, ParseAndPaths)
{
    auto q = Quiver::parse_text("vertex 1\nvertex 2\nvertex 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n");
    PathBasis pb(q);
    // e1 e2 e3 a b ab
    EXPECT_EQ(pb.size(), 6u);
    auto ab = pb.find_by_name("a.b");
    ASSERT_TRUE(ab.has_value());
    EXPECT_EQ(pb[*ab].source, 0u);
    EXPECT_EQ(pb[*ab].target, 2u);
    EXPECT_THROW(Quiver::parse_text("vertex 1\narrow a: 1 -> 9\n"), ParseError);
    EXPECT_THROW(Quiver::parse_text("vertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 2 -> 1\n"), InputError);
}

TEST(Algebra, PathAlgebraAndOpposite)
{
    auto q = Quiver::parse_text("vertex 1\nvertex 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n");
    auto A = path_algebra(q, Fp(3));
    EXPECT_EQ(A->dim(), 4u);
    EXPECT_TRUE(A->is_associative());
    EXPECT_EQ(A->generators().size(), 2u);
    auto op = A->op();
    EXPECT_EQ(op->op().get(), A.get());
    EXPECT_EQ(op->between(1, 0).size(), 2u);
    EXPECT_TRUE(op->is_associative());
}
