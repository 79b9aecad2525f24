#include "leibrack/quantization.hpp"

#include <fmt/format.h>

namespace leibrack {

template <Scalar T>
Observable<T> poisson_bracket(const LeibnizAlgebra& alg, const Observable<T>& f, const Observable<T>& g,
                              PoissonSign sign) {
    const std::size_t n = alg.dim();
    if (f.nvars() != n || g.nvars() != n) throw DimensionMismatch("observables must live on the dual of the algebra");
    const Vector<T> df0 = f.gradient_at_zero();
    Observable<T> out(n);
    for (const auto& [i, j] : alg.nonzero_pairs()) {
        if (is_zero(df0[i])) continue;
        Observable<T> dg = g.derivative(j);
        if (dg.is_zero()) continue;
        Observable<T> pairing(n);  // <xi, [e_i, e_j]>
        for (const auto& t : alg.terms(i, j)) pairing += Observable<T>::variable(n, t.k) * t.template as<T>();
        out += pairing * dg * df0[i];
    }
    if (sign == PoissonSign::negative) out *= T(-1);
    return out;
}

template <Scalar T>
bool verify_right_leibniz(const LeibnizAlgebra& alg, const Observable<T>& f, const Observable<T>& g,
                          const Observable<T>& h) {
    Observable<T> lhs = poisson_bracket(alg, f, g * h);
    Observable<T> rhs = poisson_bracket(alg, f, g) * h + g * poisson_bracket(alg, f, h);
    if constexpr (is_exact<T>()) {
        return lhs == rhs;
    } else {
        Observable<T> diff = lhs - rhs;
        for (const auto& [e, c] : diff.terms())
            if (std::fabs(c) > 1e-9) return false;
        return true;
    }
}

template <Scalar T>
ExpLabel<T> quantum_rack_unitary(const LeibnizAlgebra& alg, const ExpLabel<T>& a, const ExpLabel<T>& b,
                                 const ExpMode& mode) {
    return {bass_product(alg, a.x, b.x, mode)};
}

template <Scalar T>
Observable<T> quantum_rack_action(const LeibnizAlgebra& alg, const ExpLabel<T>& a, const Observable<T>& f,
                                  const ExpMode& mode) {
    if (f.nvars() != alg.dim()) throw DimensionMismatch("observable must live on the dual of the algebra");
    // (xi o E)_i = sum_k xi_k E(k, i)
    return f.compose_linear(exp_endo(ad(alg, a.x), mode));
}

template <Scalar T>
ExpLabel<T> gutt_star_unitary(const LeibnizAlgebra& alg, const ExpLabel<T>& a, const ExpLabel<T>& b,
                              const BchConfig& cfg) {
    return {bch(alg, a.x, b.x, cfg)};
}

template <Scalar T>
ExpLabel<T> gutt_rack_unitary(const LeibnizAlgebra& alg, const ExpLabel<T>& a, const ExpLabel<T>& b,
                              const BchConfig& cfg) {
    return {conj_star(alg, a.x, b.x, cfg)};
}

template <Scalar T>
ViolationReport check_quantum_action_law(const LeibnizAlgebra& alg,
                                         std::span<const std::array<Element<T>, 2>> labels,
                                         std::span<const Observable<T>> observables, const ExpMode& mode) {
    ViolationReport report("quantum_rack_action_law");
    for (std::size_t s = 0; s < labels.size(); ++s) {
        ExpLabel<T> a{labels[s][0]};
        ExpLabel<T> b{labels[s][1]};
        ExpLabel<T> ab = quantum_rack_unitary(alg, a, b, mode);
        for (std::size_t o = 0; o < observables.size(); ++o) {
            const auto& f = observables[o];
            Observable<T> lhs = quantum_rack_action(alg, a, quantum_rack_action(alg, b, f, mode), mode);
            Observable<T> rhs = quantum_rack_action(alg, ab, quantum_rack_action(alg, a, f, mode), mode);
            double residual = 0.0;
            bool bad = false;
            const Observable<T> diff = lhs - rhs;
            for (const auto& [e, c] : diff.terms()) {
                residual = std::max(residual, std::fabs(to_double(c)));
                if constexpr (is_exact<T>())
                    bad = true;
                else
                    bad = bad || std::fabs(c) > 1e-9;
            }
            report.record(fmt::format("labels {}, observable {}", s, o), residual, bad);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

template <Scalar T>
T generating_function(const LeibnizAlgebra& alg, const Element<T>& x, const Element<T>& y, const Covector<T>& xi,
                      const ExpMode& mode) {
    return dot(xi, bass_product(alg, x, y, mode));
}

template <Scalar T>
GeneratingGradient<T> grad_generating_function(const LeibnizAlgebra& alg, const Element<T>& x, const Element<T>& y,
                                               const Covector<T>& xi, const ExpMode& mode) {
    const std::size_t n = alg.dim();
    if (x.size() != n || y.size() != n || xi.size() != n) throw DimensionMismatch("generating function arguments");
    const Endomorphism<T> ad_x = ad(alg, x);
    const Endomorphism<T> e = exp_endo(ad_x, mode);

    // Number of series terms to differentiate. Every term of order >= 2 in X
    // vanishes to first order at X = 0.
    std::size_t terms = 0;
    if (mode.is_exact()) {
        if (ad_x.is_zero())
            terms = 1;
        else if (nilpotency_class(alg))
            terms = n;
        else
            throw NotNilpotent("exact derivative in X needs a nilpotent algebra", n);
    } else {
        terms = static_cast<std::size_t>(mode.order);
    }

    // u_j = ad_X^j Y, w_m = (ad_X^T)^m xi
    std::vector<Vector<T>> u{y}, w{xi};
    const Endomorphism<T> ad_xt = ad_x.transpose();
    for (std::size_t j = 1; j < terms; ++j) {
        u.push_back(ad_x * u.back());
        w.push_back(ad_xt * w.back());
    }

    // d/dX_i of sum_k 1/k! xi^T ad_X^k Y
    //   = sum_k 1/k! sum_{m < k} w_m . [e_i, u_{k-1-m}]
    Vector<T> d_x(n, T(0));
    T inv_fact(1);
    for (std::size_t k = 1; k <= terms; ++k) {
        inv_fact /= T(static_cast<long>(k));
        for (std::size_t m = 0; m < k; ++m) {
            const Vector<T>& um = u[k - 1 - m];
            if (is_zero_vector(um) || is_zero_vector(w[m])) continue;
            for (std::size_t i = 0; i < n; ++i)
                d_x[i] += inv_fact * dot(w[m], bracket(alg, unit_vector<T>(n, i), um));
        }
    }
    return {std::move(d_x), e.transpose() * xi, e * y};
}

template <Scalar T>
ViolationReport check_generating_conditions(const LeibnizAlgebra& alg,
                                            std::span<const std::array<Element<T>, 3>> samples, const ExpMode& mode,
                                            double tol) {
    ViolationReport report("generating_function_conditions");
    const std::size_t n = alg.dim();
    const Vector<T> zero = zeros<T>(n);
    auto scalar_cmp = [&](const T& a, const T& b) { return compare(Vector<T>{a}, Vector<T>{b}, tol); };

    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto& [x, y, xi] = samples[s];
        const std::string where = "sample " + std::to_string(s);

        auto c = scalar_cmp(generating_function(alg, zero, y, xi, mode), dot(xi, y));
        report.record(where + ": S(0,Y,xi)", c.residual, c.violated);

        auto at_origin = grad_generating_function(alg, zero, y, xi, mode);
        c = compare(at_origin.d_xi, y, tol);
        report.record(where + ": dS/dxi(0,Y,xi)", c.residual, c.violated);
        Vector<T> expected_dx(n);
        for (std::size_t i = 0; i < n; ++i) expected_dx[i] = dot(xi, bracket(alg, unit_vector<T>(n, i), y));
        c = compare(at_origin.d_x, expected_dx, tol);
        report.record(where + ": dS/dX(0,Y,xi)", c.residual, c.violated);

        c = scalar_cmp(generating_function(alg, x, y, zero, mode), T(0));
        report.record(where + ": S(X,Y,0)", c.residual, c.violated);

        c = compare(grad_generating_function(alg, x, zero, xi, mode).d_x, zero, tol);
        report.record(where + ": dS/dX(X,0,xi)", c.residual, c.violated);

        auto g = grad_generating_function(alg, x, y, xi, mode);
        T value = generating_function(alg, x, y, xi, mode);
        c = worst(scalar_cmp(dot(g.d_xi, xi), value), scalar_cmp(dot(g.d_y, y), value));
        report.record(where + ": linearity in Y and xi", c.residual, c.violated);
    }
    return report;
}

// ---------------------------------------------------------------------------

Inertia inertia(Matrix<Rational> a) {
    if (!a.square()) throw DimensionMismatch("inertia of a non-square matrix");
    if (a != a.transpose()) throw PreconditionFailed("inertia needs a symmetric matrix");
    const std::size_t n = a.rows();
    Inertia out;
    auto swap_sym = [&](std::size_t p, std::size_t q) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(q, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, q));
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t j = k + 1;
            while (j < n && sgn(a(j, j)) == 0) ++j;
            if (j < n) {
                swap_sym(k, j);
            } else {
                j = k + 1;
                while (j < n && sgn(a(k, j)) == 0) ++j;
                if (j == n) {
                    ++out.zero;
                    continue;
                }
                // row_k += row_j, col_k += col_j; a(k, k) becomes 2 a(k, j).
                for (std::size_t c = 0; c < n; ++c) a(k, c) += a(j, c);
                for (std::size_t r = 0; r < n; ++r) a(r, k) += a(r, j);
            }
        }
        const Rational pivot = a(k, k);
        (sgn(pivot) > 0 ? out.positive : out.negative)++;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a(i, k)) == 0) continue;
            Rational f = a(i, k) / pivot;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
        for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
    }
    return out;
}

Matrix<Rational> phase_hessian(const LeibnizAlgebra& alg, const Covector<Rational>& xi) {
    const std::size_t n = alg.dim();
    if (xi.size() != n) throw DimensionMismatch("covector of the wrong length");
    Matrix<Rational> b(4 * n, 4 * n);
    for (const auto& [i, j] : alg.nonzero_pairs()) {
        Rational cij = 0;
        for (const auto& t : alg.terms(i, j)) cij += t.value * xi[t.k];
        b(i, n + j) = cij;
        b(n + j, i) = cij;
    }
    for (std::size_t i = 0; i < n; ++i) {
        b(i, 2 * n + i) = b(2 * n + i, i) = -1;
        b(n + i, 3 * n + i) = b(3 * n + i, n + i) = -1;
    }
    return b;
}

HessianReport hessian_check(const LeibnizAlgebra& alg, const Covector<Rational>& xi) {
    const std::size_t n = alg.dim();
    HessianReport report;
    report.hessian = phase_hessian(alg, xi);
    report.det = determinant(report.hessian);
    report.signature = inertia(report.hessian).signature();

    // grad of -X.zeta - Y.eta + S(X, Y, xi) at (0, 0, 0, xi):
    //   (-zeta + dS/dX, -eta + dS/dY, -X, -Y)
    const Vector<Rational> zero = zeros<Rational>(n);
    auto g = grad_generating_function(alg, zero, zero, xi, ExpMode::exact());
    report.critical_point_ok = is_zero_vector(g.d_x) && is_zero_vector(Vector<Rational>(g.d_y - xi));
    return report;
}

// ---------------------------------------------------------------------------

#define LEIBRACK_INSTANTIATE(T)                                                                                    \
    template Observable<T> poisson_bracket(const LeibnizAlgebra&, const Observable<T>&, const Observable<T>&,     \
                                           PoissonSign);                                                          \
    template bool verify_right_leibniz(const LeibnizAlgebra&, const Observable<T>&, const Observable<T>&,          \
                                       const Observable<T>&);                                                     \
    template ExpLabel<T> quantum_rack_unitary(const LeibnizAlgebra&, const ExpLabel<T>&, const ExpLabel<T>&,       \
                                              const ExpMode&);                                                    \
    template Observable<T> quantum_rack_action(const LeibnizAlgebra&, const ExpLabel<T>&, const Observable<T>&,    \
                                               const ExpMode&);                                                   \
    template ExpLabel<T> gutt_star_unitary(const LeibnizAlgebra&, const ExpLabel<T>&, const ExpLabel<T>&,          \
                                           const BchConfig&);                                                     \
    template ExpLabel<T> gutt_rack_unitary(const LeibnizAlgebra&, const ExpLabel<T>&, const ExpLabel<T>&,          \
                                           const BchConfig&);                                                     \
    template ViolationReport check_quantum_action_law(const LeibnizAlgebra&,                                       \
                                                      std::span<const std::array<Element<T>, 2>>,                 \
                                                      std::span<const Observable<T>>, const ExpMode&);            \
    template T generating_function(const LeibnizAlgebra&, const Element<T>&, const Element<T>&, const Covector<T>&, \
                                   const ExpMode&);                                                               \
    template GeneratingGradient<T> grad_generating_function(const LeibnizAlgebra&, const Element<T>&,              \
                                                            const Element<T>&, const Covector<T>&,                \
                                                            const ExpMode&);                                      \
    template ViolationReport check_generating_conditions(const LeibnizAlgebra&,                                    \
                                                         std::span<const std::array<Element<T>, 3>>,              \
                                                         const ExpMode&, double);

LEIBRACK_INSTANTIATE(Rational)
LEIBRACK_INSTANTIATE(double)

#undef LEIBRACK_INSTANTIATE

}  // namespace leibrack
