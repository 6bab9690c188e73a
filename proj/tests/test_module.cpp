#include <gtest/gtest.h>

#include <random>

#include "repalg/module.hpp"

using namespace repalg;

namespace {

AlgebraPtr kronecker(std::uint32_t p)
{
    return path_algebra(Quiver::parse_text("vertex 1\nvertex 2\narrow a: 2 -> 1\narrow b: 2 -> 1\n"), Fp(p));
}

AlgebraPtr a3(std::uint32_t p)
{
    return path_algebra(Quiver::parse_text("vertex 1\nvertex 2\nvertex 3\narrow a: 3 -> 2\narrow b: 2 -> 1\n"), Fp(p));
}

Module random_module(AlgebraPtr alg, const DimVector& d, std::mt19937_64& rng)
{
    std::vector<std::pair<std::size_t, Matrix>> gens;
    for (auto g : alg->generators()) {
        const auto& e = alg->basis(g);
        Matrix m(d[e.tgt], d[e.src]);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) = static_cast<Fp::Elem>(rng() % alg->field().p());
        gens.emplace_back(g, m);
    }
    return Module::from_generators(alg, d, gens);
}

} // namespace

TEST(Module, ProjectivesAndInjectives)
{
    auto K = kronecker(3);
    EXPECT_EQ(projective(K, 0).dims(), (DimVector{1, 0}));
    EXPECT_EQ(projective(K, 1).dims(), (DimVector{2, 1}));
    EXPECT_EQ(injective(K, 0).dims(), (DimVector{1, 2}));
    EXPECT_EQ(injective(K, 1).dims(), (DimVector{0, 1}));
    for (std::size_t x = 0; x < 2; ++x) {
        projective(K, x).check();
        injective(K, x).check();
        EXPECT_TRUE(is_projective(projective(K, x)));
        EXPECT_TRUE(is_injective(injective(K, x)));
    }
    EXPECT_FALSE(is_projective(simple(K, 1)));
    EXPECT_EQ(global_dimension(K), 1u);
    EXPECT_EQ(global_dimension(a3(5)), 1u);
}

TEST(Module, HomFromProjectiveIsEvaluation)
{
    auto A = a3(3);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        DimVector d{rng() % 3, rng() % 3, rng() % 3};
        Module m = random_module(A, d, rng);
        for (std::size_t x = 0; x < 3; ++x) {
            EXPECT_EQ(hom_dim(projective(A, x), m), d[x]);
            EXPECT_EQ(hom_dim(m, injective(A, x)), d[x]);
        }
    }
}

TEST(Module, HomBasisAgainstBruteForce)
{
    // Enumerate all vertexwise maps over F_2 and count the ones that commute.
    auto K = kronecker(2);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 15; ++t) {
        DimVector dm{rng() % 2 + 1, rng() % 2}, dn{rng() % 2 + 1, rng() % 2 + 1};
        Module m = random_module(K, dm, rng), n = random_module(K, dn, rng);
        std::size_t len = hom_space_len(m, n);
        ASSERT_LE(len, 12u);
        std::size_t count = 0;
        for (std::uint64_t mask = 0; mask < (1ull << len); ++mask) {
            std::vector<Fp::Elem> v(len);
            for (std::size_t i = 0; i < len; ++i)
                v[i] = (mask >> i) & 1;
            if (is_morphism(m, n, unflatten(m, n, v)))
                ++count;
        }
        EXPECT_EQ(count, 1ull << hom_dim(m, n));
        for (auto& f : hom_basis(m, n))
            EXPECT_TRUE(is_morphism(m, n, f));
    }
}

TEST(Module, KernelCokernelExactness)
{
    auto K = kronecker(5);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        Module m = random_module(K, {rng() % 3 + 1, rng() % 3}, rng);
        auto pc = projective_cover(m);
        EXPECT_TRUE(is_morphism(pc.cover, m, pc.epi));
        auto [coker, pr] = cokernel(m, pc.epi);
        EXPECT_TRUE(coker.is_zero());
        auto [ker, inc] = kernel(pc.cover, pc.epi);
        ker.check();
        EXPECT_EQ(ker.total_dim() + m.total_dim(), pc.cover.total_dim());
        EXPECT_TRUE(is_projective(ker)); // hereditary
        EXPECT_EQ(top_dims(m), [&] {
            DimVector d(2, 0);
            for (auto v : pc.vertices)
                ++d[v];
            return d;
        }());
    }
}

TEST(Module, DualityAndCosyzygy)
{
    auto K = kronecker(3);
    EXPECT_EQ(dual(dual(simple(K, 0))).algebra().get(), K.get());
    Module s = simple(K, 0);
    Module cs = cosyzygy(s);
    EXPECT_EQ(cs.dims(), (DimVector{0, 2}));
    auto ie = injective_envelope(s);
    EXPECT_EQ(ie.envelope.dims(), (DimVector{1, 2}));
    EXPECT_TRUE(is_morphism(s, ie.envelope, ie.mono));
    EXPECT_EQ(syzygy(simple(K, 1)).dims(), (DimVector{2, 0}));
    EXPECT_EQ(socle_dims(projective(K, 1)), (DimVector{2, 0}));
}

TEST(Module, ProjectiveMap)
{
    auto K = kronecker(3);
    // P(1) -> P(2) by the arrow a: cokernel has dims (1,1)
    std::size_t a = *std::find_if(K->radical().begin(), K->radical().end(),
                                  [&](std::size_t i) { return K->basis(i).label == "a"; });
    auto [S, T, f] = projective_map(K, {0}, {1}, [&](std::size_t, std::size_t) {
        static std::vector<Fp::Elem> v;
        v.assign(K->dim(), 0);
        v[a] = 1;
        return v;
    });
    EXPECT_TRUE(is_morphism(S, T, f));
    EXPECT_EQ(cokernel(T, f).first.dims(), (DimVector{1, 1}));
}
