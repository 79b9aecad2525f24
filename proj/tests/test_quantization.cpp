#include <gtest/gtest.h>

#include "leibrack/corpus.hpp"
#include "leibrack/quantization.hpp"
#include "oracles.hpp"

using namespace leibrack;

namespace {

using P = Observable<Rational>;

Vector<Rational> vec(std::initializer_list<long> xs) {
    Vector<Rational> v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

P xi(std::size_t n, std::size_t i) { return P::variable(n, i); }

std::vector<LeibnizAlgebra> nilpotent_corpus() {
    std::vector<LeibnizAlgebra> out;
    for (auto& a : corpus::all())
        if (nilpotency_class(a)) out.push_back(a);
    return out;
}

}  // namespace

TEST(Poisson, Examples) {
    auto h = corpus::heisenberg();
    EXPECT_EQ(poisson_bracket(h, xi(3, 0), xi(3, 1)), xi(3, 2));
    EXPECT_EQ(poisson_bracket(h, xi(3, 0), xi(3, 1), PoissonSign::negative), xi(3, 2) * Rational(-1));
    EXPECT_TRUE(poisson_bracket(h, P::constant(3, 5), xi(3, 1) * xi(3, 1)).is_zero());

    Sampler s(97);
    for (const auto& alg : corpus::all())
        for (int t = 0; t < 20; ++t) {
            auto a = s.vector<Rational>(alg.dim()), b = s.vector<Rational>(alg.dim());
            EXPECT_EQ(poisson_bracket(alg, P::linear(a), P::linear(b)), P::linear(oracle::bracket(alg, a, b)));
        }
}

TEST(Poisson, RightLeibnizRule) {
    auto h = corpus::heisenberg();
    auto f = xi(3, 0), g = xi(3, 1);
    EXPECT_EQ(poisson_bracket(h, f, g * g), xi(3, 1) * xi(3, 2) * Rational(2));
    EXPECT_TRUE(verify_right_leibniz(h, f, g, g));
    EXPECT_TRUE(verify_right_leibniz(h, f, P::constant(3, 1), P::constant(3, 1)));

    Sampler s(101);
    for (const auto& alg : corpus::all())
        for (int t = 0; t < 30; ++t) {
            auto a = random_observable<Rational>(s, alg.dim(), 4);
            auto b = random_observable<Rational>(s, alg.dim(), 4);
            auto c = random_observable<Rational>(s, alg.dim(), 4);
            EXPECT_TRUE(verify_right_leibniz(alg, a, b, c)) << alg.name();
        }
}

TEST(Poisson, DifferentialAtZeroIsPointwiseDerivation) {
    Sampler s(103);
    for (int t = 0; t < 50; ++t) {
        auto f = random_observable<Rational>(s, 3, 3), g = random_observable<Rational>(s, 3, 3);
        EXPECT_EQ((f * g).gradient_at_zero(),
                  scaled(g.gradient_at_zero(), f.constant_term()) + scaled(f.gradient_at_zero(), g.constant_term()));
        EXPECT_EQ((f + g).gradient_at_zero(), f.gradient_at_zero() + g.gradient_at_zero());
    }
}

TEST(Polynomial, DerivativeAndEvaluate) {
    Sampler s(107);
    for (int t = 0; t < 20; ++t) {
        auto f = random_observable<double>(s, 3, 4);
        auto x = s.vector<double>(3);
        const double h = 1e-5;
        for (std::size_t i = 0; i < 3; ++i) {
            auto xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            EXPECT_NEAR(f.derivative(i).evaluate(x), (f.evaluate(xp) - f.evaluate(xm)) / (2 * h), 1e-6);
        }
    }
}

TEST(QuantumRack, UnitaryExamples) {
    auto h = corpus::heisenberg();
    auto mode = ExpMode::exact();
    ExpLabel<Rational> e1{vec({1, 0, 0})}, e2{vec({0, 1, 0})}, zero{vec({0, 0, 0})};
    EXPECT_EQ(quantum_rack_unitary(h, zero, e2, mode), e2);
    EXPECT_EQ(quantum_rack_unitary(h, e1, e2, mode).x, vec({0, 1, 1}));
    EXPECT_EQ(conjugate(e1).x, vec({-1, 0, 0}));

    BchConfig cfg;
    EXPECT_EQ(gutt_star_unitary(h, e1, zero, cfg), e1);
    Vector<Rational> star{1, 1, make_rational(1, 2)};
    EXPECT_EQ(gutt_star_unitary(h, e1, e2, cfg).x, star);
    EXPECT_EQ(gutt_rack_unitary(h, zero, e2, cfg), e2);
    EXPECT_EQ(gutt_rack_unitary(h, e1, e2, cfg), quantum_rack_unitary(h, e1, e2, mode));
    ExpLabel<Rational> a{vec({1, 2, 3})}, b{vec({-1, 0, 2})};
    EXPECT_EQ(gutt_rack_unitary(corpus::abelian3(), a, b, cfg), b);
    EXPECT_THROW(gutt_star_unitary(corpus::leib2(), ExpLabel<Rational>{vec({1, 0})}, ExpLabel<Rational>{vec({1, 0})}, cfg),
                 PreconditionFailed);
}

TEST(QuantumRack, ActionExamples) {
    auto l2 = corpus::leib2();
    auto mode = ExpMode::exact();
    ExpLabel<Rational> e1{vec({1, 0})};
    EXPECT_EQ(quantum_rack_action(l2, e1, xi(2, 1), mode), xi(2, 1));
    EXPECT_EQ(quantum_rack_action(l2, e1, xi(2, 0), mode), xi(2, 0) + xi(2, 1));
    auto f = xi(2, 0) * xi(2, 0) + P::constant(2, 3);
    EXPECT_EQ(quantum_rack_action(l2, ExpLabel<Rational>{vec({0, 0})}, f, mode), f);
    EXPECT_EQ(quantum_rack_action(l2, e1, f, mode).degree(), f.degree());
}

TEST(QuantumRack, ActionMatchesCoadjointEvaluation) {
    // (E_X |> f)(xi) = f(Ad*_{-X} xi)
    Sampler s(109);
    for (const auto& alg : nilpotent_corpus())
        for (int t = 0; t < 10; ++t) {
            auto x = s.vector<Rational>(alg.dim()), p = s.vector<Rational>(alg.dim());
            auto f = random_observable<Rational>(s, alg.dim(), 3);
            auto moved = coadjoint(alg, Vector<Rational>(scaled(x, Rational(-1))), p, ExpMode::exact());
            EXPECT_EQ(quantum_rack_action(alg, ExpLabel<Rational>{x}, f, ExpMode::exact()).evaluate(p), f.evaluate(moved))
                << alg.name();
        }
}

TEST(QuantumRack, LawsOnNilpotentCorpus) {
    Sampler s(113);
    for (const auto& alg : nilpotent_corpus()) {
        auto pairs = s.pairs<Rational>(alg.dim(), 10);
        std::vector<P> obs;
        for (int k = 0; k < 3; ++k) obs.push_back(random_observable<Rational>(s, alg.dim(), 3));
        auto r = check_quantum_action_law(alg, std::span<const std::array<Element<Rational>, 2>>(pairs),
                                          std::span<const P>(obs), ExpMode::exact());
        EXPECT_TRUE(r.ok()) << alg.name();
    }
}

TEST(GeneratingFunction, Examples) {
    auto h = corpus::heisenberg();
    auto mode = ExpMode::exact();
    EXPECT_EQ(generating_function(h, vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), mode), 1);
    auto y = vec({2, -1, 3}), p = vec({1, 1, 2});
    EXPECT_EQ(generating_function(h, vec({0, 0, 0}), y, p, mode), dot(p, y));
    EXPECT_EQ(grad_generating_function(h, vec({0, 0, 0}), y, p, mode).d_xi, y);
    auto ab = corpus::abelian3();
    EXPECT_EQ(generating_function(ab, vec({5, 1, 1}), y, p, mode), dot(p, y));
}

TEST(GeneratingFunction, GradientMatchesFiniteDifferences) {
    Sampler s(127);
    const double h = 1e-5;
    for (const auto& alg : corpus::all()) {
        const std::size_t n = alg.dim();
        const auto mode = ExpMode::floating(20);
        for (int t = 0; t < 5; ++t) {
            auto x = s.vector<double>(n, 0.5), y = s.vector<double>(n), p = s.vector<double>(n);
            auto g = grad_generating_function(alg, x, y, p, mode);
            for (std::size_t i = 0; i < n; ++i) {
                auto fd = [&](int which) {
                    std::array<Vector<double>, 3> plus{x, y, p}, minus{x, y, p};
                    plus[which][i] += h;
                    minus[which][i] -= h;
                    return (generating_function(alg, plus[0], plus[1], plus[2], mode) -
                            generating_function(alg, minus[0], minus[1], minus[2], mode)) /
                           (2 * h);
                };
                EXPECT_NEAR(g.d_x[i], fd(0), 1e-6) << alg.name();
                EXPECT_NEAR(g.d_y[i], fd(1), 1e-6) << alg.name();
                EXPECT_NEAR(g.d_xi[i], fd(2), 1e-6) << alg.name();
            }
        }
    }
}

TEST(GeneratingFunction, ExactGradientOnNilpotentCorpus) {
    Sampler s(131);
    for (const auto& alg : nilpotent_corpus()) {
        const std::size_t n = alg.dim();
        for (int t = 0; t < 5; ++t) {
            auto x = s.vector<Rational>(n), y = s.vector<Rational>(n), p = s.vector<Rational>(n);
            auto exact = grad_generating_function(alg, x, y, p, ExpMode::exact());
            auto approx = grad_generating_function(alg, to_double_vector(x), to_double_vector(y), to_double_vector(p),
                                                   ExpMode::floating(20));
            for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(exact.d_x[i].get_d(), approx.d_x[i], 1e-9) << alg.name();
        }
        auto triples = s.triples<Rational>(n, 20);
        EXPECT_TRUE(check_generating_conditions(alg, std::span<const std::array<Element<Rational>, 3>>(triples),
                                                ExpMode::exact(), 0)
                        .ok())
            << alg.name();
    }
    EXPECT_THROW(grad_generating_function(corpus::sl2(), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), ExpMode::exact()),
                 NotNilpotent);
}

TEST(Inertia, MatchesEigenvalues) {
    Sampler s(137);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 2 + s.index(5);
        // low-rank and zero-diagonal symmetric matrices exercise pivot swaps
        Matrix<Rational> a(n, n);
        const std::size_t r = 1 + s.index(n);
        for (std::size_t k = 0; k < r; ++k) {
            auto v = s.vector<Rational>(n);
            Rational w = s.index(2) ? 1 : -1;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) a(i, j) += w * v[i] * v[j];
        }
        if (t % 3 == 0)
            for (std::size_t i = 0; i < n; ++i) a(i, i) = 0;
        auto got = inertia(a);
        auto ref = oracle::spectrum(a);
        EXPECT_EQ(static_cast<int>(got.positive), ref.positive);
        EXPECT_EQ(static_cast<int>(got.negative), ref.negative);
        EXPECT_EQ(static_cast<int>(got.zero), ref.zero);
    }
    Matrix<Rational> off(2, 2);
    off(0, 1) = off(1, 0) = 1;
    auto in = inertia(off);
    EXPECT_EQ(in.positive, 1u);
    EXPECT_EQ(in.negative, 1u);
    Matrix<Rational> asym(2, 2);
    asym(0, 1) = 1;
    EXPECT_THROW(inertia(asym), PreconditionFailed);
}

TEST(Hessian, Examples) {
    for (const auto& [alg, p] : std::vector<std::pair<LeibnizAlgebra, Vector<Rational>>>{
             {corpus::abelian3(), vec({1, 2, 3})},
             {corpus::heisenberg(), vec({0, 0, 1})},
             {corpus::sl2(), vec({1, 2, 3})}}) {
        auto r = hessian_check(alg, p);
        EXPECT_EQ(r.det, 1) << alg.name();
        EXPECT_EQ(r.signature, 0) << alg.name();
        EXPECT_TRUE(r.critical_point_ok) << alg.name();
        EXPECT_TRUE(r.ok());
    }
    auto b = phase_hessian(corpus::abelian3(), vec({1, 2, 3}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(b(i, 3 + j), 0);
}

TEST(Hessian, MatchesFiniteDifferences) {
    // phase(X, Y, zeta, eta) = -X.zeta - Y.eta + S(X, Y, xi) at (0, 0, 0, xi)
    Sampler s(139);
    const double h = 1e-4;
    for (const auto& alg : corpus::all()) {
        const std::size_t n = alg.dim();
        auto p = s.vector<Rational>(n);
        auto pd = to_double_vector(p);
        auto phase = [&](const Vector<double>& z) {
            Vector<double> x(z.begin(), z.begin() + n), y(z.begin() + n, z.begin() + 2 * n);
            Vector<double> zeta(z.begin() + 2 * n, z.begin() + 3 * n), eta(z.begin() + 3 * n, z.end());
            return -dot(x, zeta) - dot(y, eta) + dot(pd, oracle::bass(alg, x, y));
        };
        auto b = phase_hessian(alg, p);
        ASSERT_EQ(b.rows(), 4 * n);
        Vector<double> zero(4 * n, 0.0);
        for (std::size_t i = 0; i < 4 * n; ++i)
            for (std::size_t j = 0; j < 4 * n; ++j) {
                auto pp = zero, pm = zero, mp = zero, mm = zero;
                pp[i] += h, pp[j] += h;
                pm[i] += h, pm[j] -= h;
                mp[i] -= h, mp[j] += h;
                mm[i] -= h, mm[j] -= h;
                double fd = (phase(pp) - phase(pm) - phase(mp) + phase(mm)) / (4 * h * h);
                EXPECT_NEAR(b(i, j).get_d(), fd, 1e-6) << alg.name() << " (" << i << "," << j << ")";
            }
        auto spec = oracle::spectrum(b);
        EXPECT_EQ(spec.positive, spec.negative) << alg.name();
        EXPECT_EQ(spec.zero, 0) << alg.name();
    }
}

TEST(Semiclassical, Examples) {
    auto h = corpus::heisenberg();
    auto g = xi(3, 1) * xi(3, 2) + P::constant(3, 2);
    auto one = semiclassical_leading_terms(h, P::constant(3, 1), g);
    EXPECT_EQ(one.order0, g);
    EXPECT_TRUE(one.order1.is_zero());
    auto lin = semiclassical_leading_terms(h, xi(3, 0), xi(3, 1));
    EXPECT_TRUE(lin.order0.is_zero());
    EXPECT_EQ(lin.order1, xi(3, 2));

    Sampler s(149);
    for (int t = 0; t < 50; ++t) {
        auto a = random_observable<Rational>(s, 3, 3), b = random_observable<Rational>(s, 3, 3),
             c = random_observable<Rational>(s, 3, 3);
        EXPECT_EQ(zeroth_order_product(zeroth_order_product(a, b), c), zeroth_order_product(a, zeroth_order_product(b, c)));
    }
}
