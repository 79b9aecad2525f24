#include "leibrack/rack.hpp"

#include <fmt/format.h>

#include <cmath>

namespace leibrack {

namespace {

template <Scalar T>
Matrix<T> cast_matrix(const Matrix<Rational>& m) {
    if constexpr (is_exact<T>())
        return m;
    else
        return m.template cast<double>();
}

double relative_residual(double diff, double scale) {
    return diff / std::max(1.0, scale);
}

}  // namespace

// ---------------------------------------------------------------------------

template <Scalar T>
std::optional<std::size_t> nilpotency_index(const Endomorphism<T>& d) {
    if (!d.square()) throw DimensionMismatch("nilpotency of a non-square matrix");
    const std::size_t n = d.rows();
    if (n == 0 || d.is_zero()) return 1;
    Endomorphism<T> power = d;
    for (std::size_t m = 2; m <= n; ++m) {
        power = power * d;
        if (power.is_zero()) return m;
    }
    return std::nullopt;
}

template <Scalar T>
Endomorphism<T> exp_endo(const Endomorphism<T>& d, const ExpMode& mode) {
    if (!d.square()) throw DimensionMismatch("exponential of a non-square matrix");
    const std::size_t n = d.rows();

    if (mode.is_exact()) {
        auto index = nilpotency_index(d);
        if (!index)
            throw NotNilpotent(fmt::format("operator is not nilpotent: D^m != 0 for every m <= {}", n), n);
        Endomorphism<T> sum = Endomorphism<T>::identity(n);
        Endomorphism<T> term = Endomorphism<T>::identity(n);
        for (std::size_t k = 1; k < *index; ++k) {
            term = term * d;
            term *= T(1) / T(static_cast<long>(k));
            sum += term;
        }
        return sum;
    }

    if constexpr (is_exact<T>()) {
        throw PreconditionFailed("floating exponential requested for exact scalars");
    } else {
        if (mode.order < 1) throw PreconditionFailed("truncation order must be at least 1");
        int squarings = 0;
        const double norm = norm1(d);
        if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
        Endomorphism<T> scaled_d = d * std::ldexp(1.0, -squarings);
        // Horner: I + D(I + D/2(I + D/3(...)))
        Endomorphism<T> acc = Endomorphism<T>::identity(n);
        for (int k = mode.order; k >= 1; --k) {
            acc = scaled_d * acc;
            acc *= 1.0 / k;
            acc += Endomorphism<T>::identity(n);
        }
        for (int s = 0; s < squarings; ++s) acc = acc * acc;
        return acc;
    }
}

template <Scalar T>
Element<T> bass_product(const LeibnizAlgebra& alg, const Element<T>& x, const Element<T>& y, const ExpMode& mode) {
    if (y.size() != alg.dim()) throw DimensionMismatch("rack operand of the wrong length");
    return exp_endo(ad(alg, x), mode) * y;
}

// ---------------------------------------------------------------------------

template <Scalar T>
Comparison compare(const Vector<T>& a, const Vector<T>& b, double tol) {
    if (a.size() != b.size()) throw DimensionMismatch("comparing vectors of different length");
    double diff = 0.0;
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) differs = true;
        diff = std::max(diff, std::fabs(to_double(T(a[i] - b[i]))));
    }
    if constexpr (is_exact<T>()) return {diff, differs};
    double r = relative_residual(diff, max_abs(a));
    return {r, r > tol};
}

template <Scalar T>
Comparison compare(const Matrix<T>& a, const Matrix<T>& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("comparing matrices of different shape");
    if constexpr (is_exact<T>()) {
        if (a == b) return {0.0, false};
        return {max_abs(Matrix<T>(a - b)), true};
    } else {
        double r = relative_residual(max_abs(Matrix<T>(a - b)), max_abs(a));
        return {r, r > tol};
    }
}

template <Scalar T>
LinearPair<T> hs_rack_product(const LinearPair<T>& x, const LinearPair<T>& y) {
    return {x.g * y.v, x.g * y.g * inverse(x.g)};
}

template <Scalar T>
RhElement<T> rh_element(const LeibnizAlgebra& alg, const Element<T>& x, const ExpMode& mode) {
    return {x, exp_endo(ad(alg, x), mode)};
}

template <Scalar T>
RhElement<T> rh_product(const LeibnizAlgebra& alg, const RhElement<T>& x, const RhElement<T>& y,
                        const ExpMode& mode) {
    Element<T> first = exp_endo(ad(alg, x.x), mode) * y.x;
    Endomorphism<T> a_inv = inverse(x.a);
    return {std::move(first), x.a * y.a * a_inv};
}

template <Scalar T>
Comparison rh_closure(const LeibnizAlgebra& alg, const RhElement<T>& x, const ExpMode& mode, double tol) {
    return compare(x.a, exp_endo(ad(alg, x.x), mode), tol);
}

template <Scalar T>
LinearPair<T> dig_inverse(const LinearPair<T>& x) {
    return {zeros<T>(x.v.size()), inverse(x.g)};
}

template <Scalar T>
DigroupAxiomReport digroup_axioms_check(std::span<const std::array<LinearPair<T>, 3>> samples, double tol) {
    DigroupAxiomReport report;
    const char* names[] = {"semigroups", "left_right_assoc", "right_absorbs_left", "left_absorbs_right",
                           "bar_unit", "inverse"};
    for (std::size_t a = 0; a < 6; ++a) report.axioms[a].check = names[a];

    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto& [x, y, z] = samples[s];
        const std::string where = "sample " + std::to_string(s);
        const auto one = dig_unit<T>(x.v.size());
        auto rec = [&](std::size_t axiom, Comparison c) { report.axioms[axiom].record(where, c.residual, c.violated); };

        rec(0, worst(compare(dig_left(x, dig_left(y, z)), dig_left(dig_left(x, y), z), tol),
                     compare(dig_right(x, dig_right(y, z)), dig_right(dig_right(x, y), z), tol)));
        rec(1, compare(dig_left(x, dig_right(y, z)), dig_right(dig_left(x, y), z), tol));
        rec(2, compare(dig_right(x, dig_left(y, z)), dig_right(x, dig_right(y, z)), tol));
        rec(3, compare(dig_left(dig_right(x, y), z), dig_left(dig_left(x, y), z), tol));
        for (const auto* e : {&x, &y, &z}) {
            rec(4, worst(compare(dig_left(one, *e), *e, tol), compare(dig_right(*e, one), *e, tol)));
            auto inv = dig_inverse(*e);
            rec(5, worst(compare(dig_left(*e, inv), one, tol), compare(dig_right(inv, *e), one, tol)));
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

template <Scalar T>
Covector<T> coadjoint(const LeibnizAlgebra& alg, const Element<T>& x, const Covector<T>& xi, const ExpMode& mode) {
    if (xi.size() != alg.dim()) throw DimensionMismatch("covector of the wrong length");
    Element<T> minus_x = scaled(x, T(-1));
    return exp_endo(ad(alg, minus_x), mode).transpose() * xi;
}

template <Scalar T>
ViolationReport check_coadjoint_action(const LeibnizAlgebra& alg, std::span<const std::array<Element<T>, 3>> samples,
                                       const ExpMode& mode, double tol) {
    ViolationReport report("coadjoint_left_action");
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto& [r, r2, xi] = samples[s];
        auto lhs = coadjoint(alg, r, coadjoint(alg, r2, xi, mode), mode);
        auto rhs = coadjoint(alg, bass_product(alg, r, r2, mode), coadjoint(alg, r, xi, mode), mode);
        auto c = compare(lhs, rhs, tol);
        report.record("sample " + std::to_string(s), c.residual, c.violated);
    }
    return report;
}

template <Scalar T>
ViolationReport rack_morphism_check(const LeibnizAlgebra& source, const LeibnizAlgebra& target,
                                    const Matrix<Rational>& alpha,
                                    std::span<const std::array<Element<T>, 2>> samples, const ExpMode& mode,
                                    double tol) {
    if (auto bad = morphism_violation(source, target, alpha))
        throw PreconditionFailed(fmt::format("not a Leibniz morphism: fails on ({}, {})",
                                             source.basis_names()[bad->first], source.basis_names()[bad->second]));
    const Matrix<T> a = cast_matrix<T>(alpha);
    auto phi = [&](const RhElement<T>& x) { return rh_element(target, Element<T>(a * x.x), mode); };

    ViolationReport report("rack_morphism");
    for (std::size_t s = 0; s < samples.size(); ++s) {
        auto x = rh_element(source, samples[s][0], mode);
        auto y = rh_element(source, samples[s][1], mode);
        auto lhs = phi(rh_product(source, x, y, mode));
        auto rhs = rh_product(target, phi(x), phi(y), mode);
        auto c = compare(lhs, rhs, tol);
        report.record("sample " + std::to_string(s), c.residual, c.violated);
    }
    return report;
}

template <Scalar T>
ViolationReport check_automorphism_conjugation(const LeibnizAlgebra& alg, const Endomorphism<T>& alpha,
                                               std::span<const Element<T>> samples, const ExpMode& mode, double tol) {
    ViolationReport report("automorphism_conjugation");
    if (!is_automorphism(alg, alpha, tol)) throw PreconditionFailed("conjugation identity needs an automorphism");
    const Endomorphism<T> alpha_inv = inverse(alpha);
    for (std::size_t s = 0; s < samples.size(); ++s) {
        auto lhs = alpha * exp_endo(ad(alg, samples[s]), mode) * alpha_inv;
        auto rhs = exp_endo(ad(alg, Element<T>(alpha * samples[s])), mode);
        auto c = compare(lhs, rhs, tol);
        report.record("sample " + std::to_string(s), c.residual, c.violated);
    }
    return report;
}

template <Scalar T>
ViolationReport check_exp_of_derivations(const LeibnizAlgebra& alg, std::span<const Endomorphism<T>> derivations,
                                         const ExpMode& mode, double tol) {
    ViolationReport report("exp_of_derivation_is_endomorphism");
    for (std::size_t s = 0; s < derivations.size(); ++s) {
        if (!is_derivation(alg, derivations[s], tol)) throw PreconditionFailed("input is not a derivation");
        bool ok = is_endomorphism(alg, exp_endo(derivations[s], mode), tol);
        report.record("derivation " + std::to_string(s), 0.0, !ok);
    }
    return report;
}

// ---------------------------------------------------------------------------

template <Scalar T>
Element<T> rack_cocycle_exact(const LeibnizAlgebra& alg, const ExtensionData& ext, const Element<T>& x,
                              const Element<T>& y, const ExpMode& mode) {
    const std::size_t q = ext.quotient_dim();
    if (x.size() != q || y.size() != q) throw DimensionMismatch("rack cocycle arguments must live in the quotient");
    const Matrix<T> s = cast_matrix<T>(ext.section);
    Element<T> sx = s * x;
    Element<T> sy = s * y;
    Element<T> f = bass_product(alg, sx, sy, mode) - Element<T>(s * bass_product(ext.quotient, x, y, mode));

    if constexpr (is_exact<T>()) {
        if (!ext.center.contains(f)) throw InternalInconsistency("rack cocycle value is not left central");
    } else {
        Element<T> residue = cast_matrix<T>(ext.pi) * f;
        if (relative_residual(max_abs(residue), max_abs(f)) > 1e-8)
            throw InternalInconsistency("rack cocycle value is not left central");
    }
    return f;
}

template <Scalar T>
Element<T> rack_cocycle_series(const LeibnizAlgebra& alg, const ExtensionData& ext, const Element<T>& x,
                               const Element<T>& y, int order, int sign) {
    if (order < 1) throw PreconditionFailed("series order must be at least 1");
    if (sign != 1 && sign != -1) throw PreconditionFailed("series sign must be +1 or -1");
    const std::size_t q = ext.quotient_dim();
    if (x.size() != q || y.size() != q) throw DimensionMismatch("rack cocycle arguments must live in the quotient");

    const Matrix<T> s = cast_matrix<T>(ext.section);
    const Endomorphism<T> ad_sx = ad(alg, Element<T>(s * x));
    const Endomorphism<T> ad_x = ad(ext.quotient, x);

    // omega(X, Z) = s([X, Z]) - [sX, sZ]
    auto omega = [&](const Element<T>& z) {
        return Element<T>(s * bracket(ext.quotient, x, z)) - Element<T>(ad_sx * Element<T>(s * z));
    };

    Element<T> total = zeros<T>(alg.dim());
    Element<T> inner = y;  // ad_X^q Y
    for (int qn = 0; qn < order; ++qn) {
        Element<T> term = omega(inner);
        for (int p = 0; p + qn < order; ++p) {
            // 1 / (p + q + 1)!
            T coeff(1);
            for (int k = 2; k <= p + qn + 1; ++k) coeff /= T(k);
            add_in_place(total, term, T(coeff * sign));
            term = ad_sx * term;
        }
        inner = ad_x * inner;
    }
    return total;
}

// ---------------------------------------------------------------------------

TangentRecovery tangent_leibniz_recover(const RackProduct& product, std::size_t n, double h,
                                        const LeibnizAlgebra* reference) {
    if (!(h > 0.0)) throw PreconditionFailed("finite-difference step must be positive");
    if (reference && reference->dim() != n) throw DimensionMismatch("reference algebra has the wrong dimension");
    TangentRecovery out;
    out.table.assign(n * n * n, 0.0);
    const double signs[2] = {1.0, -1.0};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector<double> acc(n, 0.0);
            for (double si : signs)
                for (double sj : signs) {
                    Vector<double> x(n, 0.0), y(n, 0.0);
                    x[i] = si * h;
                    y[j] = sj * h;
                    Vector<double> p = product(x, y);
                    if (p.size() != n) throw DimensionMismatch("rack product returned a vector of the wrong length");
                    for (std::size_t k = 0; k < n; ++k) {
                        if (std::isnan(p[k]))
                            throw Error(fmt::format("rack product returned NaN at s = {}, t = {} along (e{}, e{}), "
                                                    "component {}",
                                                    si * h, sj * h, i + 1, j + 1, k + 1));
                        acc[k] += si * sj * p[k];
                    }
                }
            for (std::size_t k = 0; k < n; ++k) out.table[(i * n + j) * n + k] = acc[k] / (4.0 * h * h);
        }
    if (reference) {
        double worst_err = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    worst_err = std::max(worst_err,
                                         std::fabs(out.table[(i * n + j) * n + k] - reference->c(i, j, k).get_d()));
        out.max_error = worst_err;
    }
    return out;
}

// ---------------------------------------------------------------------------

Rational Sampler::rational() {
    long num = static_cast<long>(engine_() % 7) - 3;
    long den = static_cast<long>(engine_() % 2) + 1;
    return make_rational(num, den);
}

double Sampler::uniform(double bound) {
    double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return (2.0 * u - 1.0) * bound;
}

template <Scalar T>
Matrix<T> Sampler::invertible_matrix(std::size_t n, double bound) {
    for (;;) {
        Matrix<T> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if constexpr (is_exact<T>())
                    m(i, j) = rational();
                else
                    m(i, j) = uniform(bound);
            }
        T det = determinant(m);
        if constexpr (is_exact<T>()) {
            if (!is_zero(det)) return m;
        } else {
            if (std::fabs(det) > 1e-3) return m;
        }
    }
}

// ---------------------------------------------------------------------------

#define LEIBRACK_INSTANTIATE(T)                                                                                     \
    template std::optional<std::size_t> nilpotency_index(const Endomorphism<T>&);                                  \
    template Endomorphism<T> exp_endo(const Endomorphism<T>&, const ExpMode&);                                     \
    template Element<T> bass_product(const LeibnizAlgebra&, const Element<T>&, const Element<T>&, const ExpMode&); \
    template Comparison compare(const Vector<T>&, const Vector<T>&, double);                                       \
    template Comparison compare(const Matrix<T>&, const Matrix<T>&, double);                                       \
    template LinearPair<T> hs_rack_product(const LinearPair<T>&, const LinearPair<T>&);                            \
    template RhElement<T> rh_element(const LeibnizAlgebra&, const Element<T>&, const ExpMode&);                    \
    template RhElement<T> rh_product(const LeibnizAlgebra&, const RhElement<T>&, const RhElement<T>&,              \
                                     const ExpMode&);                                                              \
    template Comparison rh_closure(const LeibnizAlgebra&, const RhElement<T>&, const ExpMode&, double);            \
    template LinearPair<T> dig_inverse(const LinearPair<T>&);                                                      \
    template DigroupAxiomReport digroup_axioms_check(std::span<const std::array<LinearPair<T>, 3>>, double);       \
    template Covector<T> coadjoint(const LeibnizAlgebra&, const Element<T>&, const Covector<T>&, const ExpMode&);  \
    template ViolationReport check_coadjoint_action(const LeibnizAlgebra&, std::span<const std::array<Element<T>, 3>>, \
                                                    const ExpMode&, double);                                       \
    template ViolationReport rack_morphism_check(const LeibnizAlgebra&, const LeibnizAlgebra&,                     \
                                                 const Matrix<Rational>&,                                          \
                                                 std::span<const std::array<Element<T>, 2>>, const ExpMode&,       \
                                                 double);                                                          \
    template ViolationReport check_automorphism_conjugation(const LeibnizAlgebra&, const Endomorphism<T>&,         \
                                                            std::span<const Element<T>>, const ExpMode&, double);  \
    template ViolationReport check_exp_of_derivations(const LeibnizAlgebra&, std::span<const Endomorphism<T>>,     \
                                                      const ExpMode&, double);                                     \
    template Element<T> rack_cocycle_exact(const LeibnizAlgebra&, const ExtensionData&, const Element<T>&,         \
                                           const Element<T>&, const ExpMode&);                                     \
    template Element<T> rack_cocycle_series(const LeibnizAlgebra&, const ExtensionData&, const Element<T>&,        \
                                            const Element<T>&, int, int);                                          \
    template Matrix<T> Sampler::invertible_matrix<T>(std::size_t, double);

LEIBRACK_INSTANTIATE(Rational)
LEIBRACK_INSTANTIATE(double)

#undef LEIBRACK_INSTANTIATE

}  // namespace leibrack
