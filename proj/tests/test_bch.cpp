#include <gtest/gtest.h>

#include "leibrack/bch.hpp"
#include "leibrack/corpus.hpp"
#include "oracles.hpp"

using namespace leibrack;

namespace {

Vector<Rational> vec(std::initializer_list<long> xs) {
    Vector<Rational> v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

// Filiform Lie algebra: [e1, e_i] = e_{i+1} for 2 <= i < n. Class n - 1.
LeibnizAlgebra filiform(std::size_t n) {
    AlgebraBuilder b("filiform", n);
    for (std::size_t i = 1; i + 1 < n; ++i) b.set_antisymmetric(0, i, i + 1, 1);
    return b.build();
}

Rational q(long a, long b) { return make_rational(a, b); }

}  // namespace

TEST(FreeSeries, LowDegreeCoefficients) {
    auto s = log_exp_exp(3);
    using W = Word;
    EXPECT_EQ(s[W{0}], 1);
    EXPECT_EQ(s[W{1}], 1);
    EXPECT_EQ(s[(W{0, 1})], q(1, 2));
    EXPECT_EQ(s[(W{1, 0})], q(-1, 2));
    // 1/12 [X,[X,Y]] + 1/12 [Y,[Y,X]]
    EXPECT_EQ(s[(W{0, 0, 1})], q(1, 12));
    EXPECT_EQ(s[(W{0, 1, 0})], q(-1, 6));
    EXPECT_EQ(s[(W{1, 0, 0})], q(1, 12));
    EXPECT_EQ(s[(W{1, 1, 0})], q(1, 12));
    EXPECT_EQ(s[(W{1, 0, 1})], q(-1, 6));
    EXPECT_EQ(s[(W{0, 1, 1})], q(1, 12));
    EXPECT_EQ(s.count(W{0, 0}), 0u);
}

TEST(Bch, Examples) {
    BchConfig cfg;
    auto h = corpus::heisenberg();
    auto x = vec({1, 0, 0}), y = vec({0, 1, 0});
    EXPECT_EQ(bch(h, x, vec({0, 0, 0}), cfg), x);
    for (int order = 2; order <= kMaxBchOrder; ++order) {
        Vector<Rational> expected{1, 1, q(1, 2)};
        EXPECT_EQ(bch(h, x, y, BchConfig{order}), expected);
    }
    auto ab = corpus::abelian3();
    EXPECT_EQ(bch(ab, vec({1, 2, 3}), vec({4, 5, 6}), cfg), vec({5, 7, 9}));
    EXPECT_EQ(bch(h, x, y, BchConfig{1}), vec({1, 1, 0}));
}

TEST(Bch, RejectsBadInput) {
    EXPECT_THROW(bch(corpus::leib2(), vec({1, 0}), vec({0, 1}), BchConfig{}), PreconditionFailed);
    EXPECT_THROW(bch(corpus::heisenberg(), vec({1, 0, 0}), vec({0, 1, 0}), BchConfig{0}), PreconditionFailed);
    EXPECT_THROW(bch(corpus::heisenberg(), vec({1, 0, 0}), vec({0, 1, 0}), BchConfig{9}), PreconditionFailed);
}

TEST(Bch, ThirdOrderFormulaOnClassThree) {
    auto fn = corpus::free_nilpotent3();
    Sampler s(71);
    for (int t = 0; t < 30; ++t) {
        auto x = s.vector<Rational>(5), y = s.vector<Rational>(5);
        auto xy = oracle::bracket(fn, x, y);
        Vector<Rational> expected = x + y + scaled(xy, q(1, 2)) +
                                    scaled(oracle::bracket(fn, x, xy), q(1, 12)) +
                                    scaled(oracle::bracket(fn, y, oracle::bracket(fn, y, x)), q(1, 12));
        for (int order = 3; order <= kMaxBchOrder; ++order) EXPECT_EQ(bch(fn, x, y, BchConfig{order}), expected);
    }
}

TEST(Bch, AssociativeOnClassEight) {
    auto f = filiform(9);
    ASSERT_EQ(nilpotency_class(f), std::optional<std::size_t>(8));
    BchConfig cfg{8};
    Sampler s(73);
    for (int t = 0; t < 10; ++t) {
        auto x = s.vector<Rational>(9), y = s.vector<Rational>(9), z = s.vector<Rational>(9);
        EXPECT_EQ(bch(f, bch(f, x, y, cfg), z, cfg), bch(f, x, bch(f, y, z, cfg), cfg));
        EXPECT_TRUE(is_zero_vector(bch(f, x, scaled(x, Rational(-1)), cfg)));
    }
}

TEST(Bch, AgreesWithMatrixLogarithm) {
    // sl2 in its defining representation
    auto sl = corpus::sl2();
    std::array<Eigen::Matrix2d, 3> rep;
    rep[0] << 1, 0, 0, -1;
    rep[1] << 0, 1, 0, 0;
    rep[2] << 0, 0, 1, 0;
    auto to_matrix = [&](const Vector<double>& v) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
        for (int i = 0; i < 3; ++i) m += v[i] * rep[i];
        return m;
    };
    Sampler s(79);
    double worst8 = 0, worst4 = 0;
    for (int t = 0; t < 50; ++t) {
        auto x = s.vector<double>(3, 0.25), y = s.vector<double>(3, 0.25);
        Eigen::MatrixXd ref = oracle::logm_near_identity(oracle::expm(to_matrix(x)) * oracle::expm(to_matrix(y)));
        worst8 = std::max(worst8, (to_matrix(bch(sl, x, y, BchConfig{8})) - ref).cwiseAbs().maxCoeff());
        worst4 = std::max(worst4, (to_matrix(bch(sl, x, y, BchConfig{4})) - ref).cwiseAbs().maxCoeff());
    }
    EXPECT_LE(worst8, 1e-6);
    EXPECT_LT(worst8, worst4);
}

TEST(ConjStar, Examples) {
    BchConfig cfg;
    auto h = corpus::heisenberg();
    EXPECT_EQ(conj_star(h, vec({1, 0, 0}), vec({0, 0, 0}), cfg), vec({0, 0, 0}));
    EXPECT_EQ(conj_star(h, vec({1, 0, 0}), vec({0, 1, 0}), cfg), vec({0, 1, 1}));
    EXPECT_EQ(conj_star(corpus::abelian3(), vec({1, 2, 3}), vec({4, 5, 6}), cfg), vec({4, 5, 6}));
}

TEST(ConjStar, MatchesBassProduct) {
    Sampler s(83);
    for (const auto& alg : {corpus::abelian3(), corpus::heisenberg(), corpus::free_nilpotent3(), filiform(9)}) {
        auto pairs = s.pairs<Rational>(alg.dim(), 50);
        auto r = verify_conj_identity(alg, std::span<const std::array<Element<Rational>, 2>>(pairs), BchConfig{8},
                                      ExpMode::exact(), 0);
        EXPECT_TRUE(r.ok()) << alg.name();
        EXPECT_EQ(r.max_residual, 0.0) << alg.name();
    }
    auto sl = corpus::sl2();
    auto pairs = s.pairs<double>(3, 50, 0.25);
    auto r = verify_conj_identity(sl, std::span<const std::array<Element<double>, 2>>(pairs), BchConfig{8},
                                  ExpMode::floating(12), 1e-6);
    EXPECT_TRUE(r.ok());
    EXPECT_LE(r.max_residual, 1e-6);
}

TEST(ConjStar, TruncationBelowClassIsDetected) {
    auto fn = corpus::free_nilpotent3();
    Sampler s(89);
    auto pairs = s.pairs<Rational>(5, 20);
    auto r = verify_conj_identity(fn, std::span<const std::array<Element<Rational>, 2>>(pairs), BchConfig{2},
                                  ExpMode::exact(), 0);
    EXPECT_FALSE(r.ok());
}
