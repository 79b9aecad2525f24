#ifndef LEIBRACK_BCH_HPP
#define LEIBRACK_BCH_HPP

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "leibrack/algebra.hpp"
#include "leibrack/rack.hpp"

namespace leibrack {

inline constexpr int kMaxBchOrder = 8;

// `order` is the largest bracket degree kept; at most kMaxBchOrder.
struct BchConfig {
    int order = kMaxBchOrder;
};

// Word in two noncommuting letters, 0 = X and 1 = Y.
using Word = std::vector<std::uint8_t>;
using FreeSeries = std::map<Word, Rational>;

// log(exp(X) exp(Y)) in the free associative algebra, truncated after
// words of length `degree`.
FreeSeries log_exp_exp(int degree);

// Right-nested Dynkin form of the series above:
//   log(e^X e^Y) = sum_w coeff(w) [w_1, [w_2, ... [w_{n-1}, w_n]]]
// Built once on first use from log_exp_exp(kMaxBchOrder).
struct DynkinTerm {
    Word word;
    Rational coeff;
    double coeff_d;
};
const std::vector<DynkinTerm>& bch_dynkin_terms();

// Truncated X * Y = log(exp X exp Y). Throws PreconditionFailed for
// non-antisymmetric brackets or an order outside [1, kMaxBchOrder].
template <Scalar T>
Element<T> bch(const LeibnizAlgebra& alg, const Element<T>& x, const Element<T>& y, const BchConfig& cfg);

// conj_*(X, Y) = (X * Y) * (-X).
template <Scalar T>
Element<T> conj_star(const LeibnizAlgebra& alg, const Element<T>& x, const Element<T>& y, const BchConfig& cfg);

// conj_star(X, Y) against exp(ad_X)(Y) on sampled pairs.
template <Scalar T>
ViolationReport verify_conj_identity(const LeibnizAlgebra& alg, std::span<const std::array<Element<T>, 2>> samples,
                                     const BchConfig& cfg, const ExpMode& mode, double tol);

}  // namespace leibrack

#endif
