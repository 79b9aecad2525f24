#ifndef LEIBRACK_TESTS_ORACLES_HPP
#define LEIBRACK_TESTS_ORACLES_HPP

// Reference computations written independently of the library code paths:
// dense loops over the structure constants, plain power series, and Eigen
// for floating rank and spectra.

#include <Eigen/Dense>

#include <vector>

#include "leibrack/algebra.hpp"

namespace oracle {

using leibrack::LeibnizAlgebra;
using leibrack::Matrix;
using leibrack::Rational;
using leibrack::Vector;

// sum_{i,j,k} x_i y_j c(i,j,k) e_k over the dense table.
inline Vector<Rational> bracket(const LeibnizAlgebra& alg, const Vector<Rational>& x, const Vector<Rational>& y) {
    const std::size_t n = alg.dim();
    Vector<Rational> out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * alg.c(i, j, k);
    return out;
}

inline Vector<double> bracket(const LeibnizAlgebra& alg, const Vector<double>& x, const Vector<double>& y) {
    const std::size_t n = alg.dim();
    Vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * alg.c(i, j, k).get_d();
    return out;
}

inline Vector<Rational> basis(std::size_t n, std::size_t i) {
    Vector<Rational> v(n, Rational(0));
    v[i] = 1;
    return v;
}

// Leibniz identity on every basis triple, counting failures.
inline std::size_t leibniz_failures(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    std::size_t bad = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto x = basis(n, i), y = basis(n, j), z = basis(n, k);
                auto lhs = bracket(alg, x, bracket(alg, y, z));
                auto a = bracket(alg, bracket(alg, x, y), z);
                auto b = bracket(alg, y, bracket(alg, x, z));
                for (std::size_t m = 0; m < n; ++m)
                    if (lhs[m] != a[m] + b[m]) {
                        ++bad;
                        break;
                    }
            }
    return bad;
}

// Repeated bracket y -> [x, y], summed with 1/k! until the terms vanish.
inline Vector<Rational> bass(const LeibnizAlgebra& alg, const Vector<Rational>& x, const Vector<Rational>& y) {
    Vector<Rational> sum = y, term = y;
    Rational fact = 1;
    for (std::size_t k = 1; k <= alg.dim() + 1; ++k) {
        term = bracket(alg, x, term);
        fact *= static_cast<long>(k);
        for (std::size_t m = 0; m < sum.size(); ++m) sum[m] += term[m] / fact;
    }
    return sum;
}

inline Vector<double> bass(const LeibnizAlgebra& alg, const Vector<double>& x, const Vector<double>& y, int terms = 60) {
    Vector<double> sum = y, term = y;
    for (int k = 1; k < terms; ++k) {
        term = bracket(alg, x, term);
        for (auto& t : term) t /= k;
        for (std::size_t m = 0; m < sum.size(); ++m) sum[m] += term[m];
    }
    return sum;
}

inline Eigen::MatrixXd to_eigen(const Matrix<Rational>& a) {
    Eigen::MatrixXd m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j).get_d();
    return m;
}

// Derivation equations D[e_i,e_j] = [De_i,e_j] + [e_i,De_j] as a dense
// n^3 x n^2 system in the unknowns D(a, b) (row a, column b); returns its
// nullity.
inline std::size_t derivation_dim(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(n * n * n, n * n);
    auto var = [n](std::size_t a, std::size_t b) { return a * n + b; };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::size_t row = (i * n + j) * n + k;
                // (D[e_i,e_j])_k = sum_m c(i,j,m) D(k,m)
                for (std::size_t m = 0; m < n; ++m) sys(row, var(k, m)) += alg.c(i, j, m).get_d();
                // [De_i, e_j]_k = sum_m D(m,i) c(m,j,k)
                for (std::size_t m = 0; m < n; ++m) sys(row, var(m, i)) -= alg.c(m, j, k).get_d();
                for (std::size_t m = 0; m < n; ++m) sys(row, var(m, j)) -= alg.c(i, m, k).get_d();
            }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
    lu.setThreshold(1e-10);
    return n * n - static_cast<std::size_t>(lu.rank());
}

// rank of {ad e_i}
inline std::size_t inner_dim(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    Eigen::MatrixXd m(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = alg.c(i, j, k).get_d();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    lu.setThreshold(1e-10);
    return static_cast<std::size_t>(lu.rank());
}

// dim {x : [x, e_j] = 0 for all j}
inline std::size_t left_center_dim(const LeibnizAlgebra& alg) { return alg.dim() - inner_dim(alg); }

struct Spectrum {
    int positive = 0, negative = 0, zero = 0;
};

inline Spectrum spectrum(const Matrix<Rational>& symmetric) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(symmetric));
    Spectrum s;
    for (double ev : es.eigenvalues()) {
        if (ev > 1e-9)
            ++s.positive;
        else if (ev < -1e-9)
            ++s.negative;
        else
            ++s.zero;
    }
    return s;
}

// exp of a small square matrix by 40 Taylor terms.
inline Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
    Eigen::MatrixXd sum = Eigen::MatrixXd::Identity(a.rows(), a.cols());
    Eigen::MatrixXd term = sum;
    for (int k = 1; k < 40; ++k) {
        term = term * a / k;
        sum += term;
    }
    return sum;
}

// log of a matrix close to the identity by its Mercator series.
inline Eigen::MatrixXd logm_near_identity(const Eigen::MatrixXd& a) {
    Eigen::MatrixXd z = a - Eigen::MatrixXd::Identity(a.rows(), a.cols());
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(a.rows(), a.cols());
    Eigen::MatrixXd power = z;
    for (int k = 1; k < 200; ++k) {
        sum += (k % 2 ? 1.0 : -1.0) / k * power;
        power = power * z;
    }
    return sum;
}

}  // namespace oracle

#endif
