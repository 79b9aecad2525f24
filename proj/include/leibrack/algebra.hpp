#ifndef LEIBRACK_ALGEBRA_HPP
#define LEIBRACK_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibrack/matrix.hpp"
#include "leibrack/report.hpp"
#include "leibrack/scalar.hpp"

namespace leibrack {

template <Scalar T>
using Element = Vector<T>;

template <Scalar T>
using Covector = Vector<T>;

template <Scalar T>
using Endomorphism = Matrix<T>;

// Finite-dimensional algebra given by structure constants
//   [e_i, e_j] = sum_k c(i, j, k) e_k
// over exact rationals. Indices are 0-based throughout the library; the
// interchange format is 1-based.
//
// Nothing here assumes the Leibniz identity; verify_leibniz decides.
class LeibnizAlgebra {
public:
    struct Term {
        std::size_t k;
        Rational value;
        double value_d;

        template <Scalar T>
        T as() const {
            if constexpr (std::is_same_v<T, double>)
                return value_d;
            else
                return value;
        }
    };

    // `table` is c(i, j, k) laid out row-major as [i][j][k].
    LeibnizAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<Rational> table);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }

    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return table_[index(i, j, k)]; }

    template <Scalar T>
    T coefficient(std::size_t i, std::size_t j, std::size_t k) const {
        if constexpr (std::is_same_v<T, double>)
            return table_d_[index(i, j, k)];
        else
            return table_[index(i, j, k)];
    }

    // Nonzero coordinates of [e_i, e_j].
    const std::vector<Term>& terms(std::size_t i, std::size_t j) const { return sparse_[i * dim_ + j]; }

    // Basis pairs (i, j) with [e_i, e_j] != 0.
    const std::vector<std::pair<std::size_t, std::size_t>>& nonzero_pairs() const { return nonzero_pairs_; }

    friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
        return a.dim_ == b.dim_ && a.table_ == b.table_;
    }

private:
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

    std::string name_;
    std::size_t dim_;
    std::vector<std::string> basis_names_;
    std::vector<Rational> table_;
    std::vector<double> table_d_;
    std::vector<std::vector<Term>> sparse_;
    std::vector<std::pair<std::size_t, std::size_t>> nonzero_pairs_;
};

// Incremental construction; unset brackets are zero.
class AlgebraBuilder {
public:
    AlgebraBuilder(std::string name, std::size_t dim);

    AlgebraBuilder& basis_names(std::vector<std::string> names);
    AlgebraBuilder& set(std::size_t i, std::size_t j, std::size_t k, Rational value);
    // Sets [e_i, e_j] = value and [e_j, e_i] = -value.
    AlgebraBuilder& set_antisymmetric(std::size_t i, std::size_t j, std::size_t k, Rational value);
    AlgebraBuilder& set_bracket(std::size_t i, std::size_t j, const Vector<Rational>& value);

    LeibnizAlgebra build() const;

private:
    std::string name_;
    std::size_t dim_;
    std::vector<std::string> names_;
    std::vector<Rational> table_;
};

// ---------------------------------------------------------------------------
// brackets and identities

template <Scalar T>
Element<T> bracket(const LeibnizAlgebra& alg, const Element<T>& x, const Element<T>& y);

// Left multiplication ad_X = [X, -]; column j is [X, e_j].
template <Scalar T>
Endomorphism<T> ad(const LeibnizAlgebra& alg, const Element<T>& x);

// Checks [e_i,[e_j,e_k]] = [[e_i,e_j],e_k] + [e_j,[e_i,e_k]] on all basis
// triples, exactly.
ViolationReport verify_leibniz(const LeibnizAlgebra& alg);

bool is_lie(const LeibnizAlgebra& alg);

// Jacobi in Leibniz form plus antisymmetry.
inline bool is_lie_algebra(const LeibnizAlgebra& alg) { return is_lie(alg) && verify_leibniz(alg).ok(); }

// D[e_i, e_j] = [D e_i, e_j] + [e_i, D e_j] on basis pairs, residual <= tol.
template <Scalar T>
bool is_derivation(const LeibnizAlgebra& alg, const Endomorphism<T>& d, double tol = 0.0);

template <Scalar T>
bool is_endomorphism(const LeibnizAlgebra& alg, const Endomorphism<T>& a, double tol = 0.0);

// Endomorphism plus invertibility: det != 0 exactly, or |det| > 1e-12.
template <Scalar T>
bool is_automorphism(const LeibnizAlgebra& alg, const Endomorphism<T>& a, double tol = 0.0);

// First basis pair (i, j) on which alpha([e_i,e_j]) != [alpha e_i, alpha e_j],
// for a linear map alpha : source -> target given as a target.dim x
// source.dim matrix.
std::optional<std::pair<std::size_t, std::size_t>> morphism_violation(const LeibnizAlgebra& source,
                                                                      const LeibnizAlgebra& target,
                                                                      const Matrix<Rational>& alpha);

inline bool is_morphism(const LeibnizAlgebra& source, const LeibnizAlgebra& target, const Matrix<Rational>& alpha) {
    return !morphism_violation(source, target, alpha).has_value();
}

// Smallest c with h^{c+1} = 0 for the lower central series h^1 = h,
// h^{k+1} = [h, h^k]; nullopt when the series stabilizes at a nonzero space.
std::optional<std::size_t> nilpotency_class(const LeibnizAlgebra& alg);

// ---------------------------------------------------------------------------
// subspaces

struct Subspace {
    std::size_t ambient_dim = 0;
    // Rows of a reduced echelon matrix.
    std::vector<Vector<Rational>> basis;
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return basis.size(); }
    bool contains(const Vector<Rational>& v) const;
};

// Span of the given vectors, stored in reduced echelon form.
Subspace span_of(std::size_t ambient_dim, const std::vector<Vector<Rational>>& vectors);

// Z_L(h) = { X : [X, -] = 0 }.
Subspace left_center(const LeibnizAlgebra& alg);

struct DerivationAlgebra {
    std::vector<Endomorphism<Rational>> derivations;
    // Independent subset spanning {ad e_i}.
    std::vector<Endomorphism<Rational>> inner;
    std::size_t dim_der = 0;
    std::size_t dim_inn = 0;
    std::size_t dim_out = 0;
    // [D, D'] stays in der for all basis derivations.
    bool closed_under_commutator = false;
    // [D, ad e_i] = ad(D e_i) for all basis derivations and basis e_i.
    bool inner_is_ideal = false;
};

DerivationAlgebra derivation_algebra(const LeibnizAlgebra& alg);

// ---------------------------------------------------------------------------
// canonical abelian extension 0 -> Z_L(h) -> h -> h_Lie -> 0

struct ExtensionData {
    Subspace center;
    LeibnizAlgebra quotient;
    // dim_q x dim projection and dim x dim_q coordinate section.
    Matrix<Rational> pi;
    Matrix<Rational> section;
    // Indices of the original basis vectors that s hits, in order.
    std::vector<std::size_t> section_coordinates;
    // omega[a][b] = s([a, b]_q) - [s(a), s(b)]; see omega_ext for the
    // opposite-sign convention used by the reconstruction formula.
    std::vector<std::vector<Element<Rational>>> omega;

    std::size_t quotient_dim() const { return quotient.dim(); }
    Element<Rational> omega_of(const Element<Rational>& x, const Element<Rational>& y) const;
    Element<Rational> omega_ext_of(const Element<Rational>& x, const Element<Rational>& y) const;
    Element<Rational> lift(const Element<Rational>& x) const { return section * x; }
    Element<Rational> project(const Element<Rational>& v) const { return pi * v; }
};

// Throws InternalInconsistency if the quotient fails the Lie check or an
// omega value leaves the left center.
ExtensionData build_extension(const LeibnizAlgebra& alg);

// X.omega(Y,Z) - Y.omega(X,Z) - omega([X,Y],Z) + omega(X,[Y,Z]) - omega(Y,[X,Z])
// on quotient basis triples, with X.v = [s(X), v].
ViolationReport verify_leibniz_2cocycle(const LeibnizAlgebra& alg, const ExtensionData& ext);

// [s(X)+a, s(Y)+b] = s([X,Y]) - omega(X,Y) + X.b for quotient basis X, Y and
// center basis a, b (including a = 0 or b = 0).
ViolationReport verify_reconstruction(const LeibnizAlgebra& alg, const ExtensionData& ext);

// ---------------------------------------------------------------------------
// hemi-semi-direct products

// Basis order is (module, g): e_1..e_m span V, e_{m+1}.. span g.
// Bracket [(v,X),(v',X')] = (rho(X) v', [X,X']). Throws PreconditionFailed
// unless g is Lie and rho is an action.
LeibnizAlgebra hemi_semi_direct(const LeibnizAlgebra& g, const std::vector<Matrix<Rational>>& rho,
                                std::string name = "hemi_semi_direct");

// gl(n) with basis E_{ab} (index a*n + b) and the commutator bracket.
LeibnizAlgebra gl_algebra(std::size_t n);

struct Embedding {
    LeibnizAlgebra target;
    Matrix<Rational> map;  // target.dim x source.dim
};

// h -> h x_hs gl(h), X -> (X, ad_X).
Embedding hemi_semi_direct_embedding(const LeibnizAlgebra& alg);

}  // namespace leibrack

#endif
