#ifndef LEIBRACK_QUANTIZATION_HPP
#define LEIBRACK_QUANTIZATION_HPP

#include <array>
#include <span>
#include <utility>

#include "leibrack/algebra.hpp"
#include "leibrack/bch.hpp"
#include "leibrack/polynomial.hpp"
#include "leibrack/rack.hpp"

namespace leibrack {

// Observables on h* are polynomials; the planck constant never takes a
// numeric value, so the quantum layer works with exponential labels E_X and
// with the graded coefficients of the expansion.

template <Scalar T>
using Observable = Polynomial<T>;

// E_X(xi) = exp((i/hbar) <X, xi>), represented by X.
template <Scalar T>
struct ExpLabel {
    Element<T> x;
    friend bool operator==(const ExpLabel&, const ExpLabel&) = default;
};

// conj(E_X) = E_{-X}
template <Scalar T>
ExpLabel<T> conjugate(const ExpLabel<T>& a) {
    return {scaled(a.x, T(-1))};
}

// {f, g}(xi) = sign * sum c_ij^k d_i f(0) d_j g(xi) xi_k. `positive` is the
// convention <xi, [df(0), dg(xi)]>; `negative` flips it.
enum class PoissonSign { positive, negative };

template <Scalar T>
Observable<T> poisson_bracket(const LeibnizAlgebra& alg, const Observable<T>& f, const Observable<T>& g,
                              PoissonSign sign = PoissonSign::positive);

// {f, gh} = {f, g} h + g {f, h}
template <Scalar T>
bool verify_right_leibniz(const LeibnizAlgebra& alg, const Observable<T>& f, const Observable<T>& g,
                          const Observable<T>& h);

// E_X |> E_Y = E_{exp(ad_X) Y}
template <Scalar T>
ExpLabel<T> quantum_rack_unitary(const LeibnizAlgebra& alg, const ExpLabel<T>& a, const ExpLabel<T>& b,
                                 const ExpMode& mode);

// (E_X |> f)(xi) = f(xi o exp(ad_X)).
template <Scalar T>
Observable<T> quantum_rack_action(const LeibnizAlgebra& alg, const ExpLabel<T>& a, const Observable<T>& f,
                                  const ExpMode& mode);

// E_X * E_Y = E_{X * Y} (BCH). Lie algebras only.
template <Scalar T>
ExpLabel<T> gutt_star_unitary(const LeibnizAlgebra& alg, const ExpLabel<T>& a, const ExpLabel<T>& b,
                              const BchConfig& cfg);

// E_X * E_Y * conj(E_X) = E_{conj_*(X, Y)}. Lie algebras only.
template <Scalar T>
ExpLabel<T> gutt_rack_unitary(const LeibnizAlgebra& alg, const ExpLabel<T>& a, const ExpLabel<T>& b,
                              const BchConfig& cfg);

// a |> (b |> f) = (a |> b) |> (a |> f) on samples (a, b) and observables f.
template <Scalar T>
ViolationReport check_quantum_action_law(const LeibnizAlgebra& alg,
                                         std::span<const std::array<Element<T>, 2>> labels,
                                         std::span<const Observable<T>> observables, const ExpMode& mode);

// ---------------------------------------------------------------------------
// generating function S(X, Y, xi) = <xi, exp(ad_X) Y>

template <Scalar T>
T generating_function(const LeibnizAlgebra& alg, const Element<T>& x, const Element<T>& y, const Covector<T>& xi,
                      const ExpMode& mode);

template <Scalar T>
struct GeneratingGradient {
    Vector<T> d_x;   // differential of the truncated series in X
    Vector<T> d_y;   // xi o exp(ad_X)
    Vector<T> d_xi;  // exp(ad_X) Y
};

// Exact mode needs a nilpotent algebra (the series in X is then a
// polynomial); floating mode differentiates the series truncated at
// mode.order.
template <Scalar T>
GeneratingGradient<T> grad_generating_function(const LeibnizAlgebra& alg, const Element<T>& x, const Element<T>& y,
                                               const Covector<T>& xi, const ExpMode& mode);

// Base-point conditions of S on sampled (X, Y, xi):
//   S(0, Y, xi) = <xi, Y>, dS/dxi(0, Y, xi) = Y, S(X, Y, 0) = 0,
//   dS/dX(X, 0, xi) = 0, and the gradient identities for dS/dY, dS/dxi.
template <Scalar T>
ViolationReport check_generating_conditions(const LeibnizAlgebra& alg,
                                            std::span<const std::array<Element<T>, 3>> samples, const ExpMode& mode,
                                            double tol);

// ---------------------------------------------------------------------------
// Hessian of the full phase -X.zeta - Y.eta + <xi, exp(ad_X) Y> at its
// critical point (0, 0, 0, xi).

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
    long signature() const { return static_cast<long>(positive) - static_cast<long>(negative); }
};

// Sylvester inertia of a symmetric rational matrix by exact congruence.
Inertia inertia(Matrix<Rational> symmetric);

struct HessianReport {
    Matrix<Rational> hessian;
    Rational det;
    long signature = 0;
    // Phase gradient vanishes at (X, Y, zeta, eta) = (0, 0, 0, xi).
    bool critical_point_ok = false;
    bool ok() const { return det == 1 && signature == 0 && critical_point_ok; }
};

// Block matrix in the variable order (X, Y, zeta, eta):
//   [[0, C, -I, 0], [C^T, 0, 0, -I], [-I, 0, 0, 0], [0, -I, 0, 0]]
// with C_ij = sum_k c_ij^k xi_k.
Matrix<Rational> phase_hessian(const LeibnizAlgebra& alg, const Covector<Rational>& xi);

HessianReport hessian_check(const LeibnizAlgebra& alg, const Covector<Rational>& xi);

// ---------------------------------------------------------------------------

// Sum of `terms` random monomials of degree <= max_degree.
template <Scalar T>
Observable<T> random_observable(Sampler& sampler, std::size_t nvars, unsigned max_degree, std::size_t terms = 4) {
    Observable<T> p(nvars);
    for (std::size_t t = 0; t < terms; ++t) {
        typename Observable<T>::Exponents e(nvars, 0);
        auto degree = sampler.index(max_degree + 1);
        for (std::size_t d = 0; d < degree; ++d) ++e[sampler.index(nvars)];
        p.add_term(e, sampler.scalar<T>());
    }
    return p;
}

// f(0) g
template <Scalar T>
Observable<T> zeroth_order_product(const Observable<T>& f, const Observable<T>& g) {
    return g * f.constant_term();
}

template <Scalar T>
struct SemiclassicalTerms {
    Observable<T> order0;
    Observable<T> order1;
};

// Coefficients of hbar^0 and (i/hbar)^1 in f |>_hbar g.
template <Scalar T>
SemiclassicalTerms<T> semiclassical_leading_terms(const LeibnizAlgebra& alg, const Observable<T>& f,
                                                  const Observable<T>& g, PoissonSign sign = PoissonSign::positive) {
    return {zeroth_order_product(f, g), poisson_bracket(alg, f, g, sign)};
}

}  // namespace leibrack

#endif
