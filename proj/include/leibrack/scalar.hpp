#ifndef LEIBRACK_SCALAR_HPP
#define LEIBRACK_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>
#include <type_traits>

namespace leibrack {

using Rational = mpq_class;

enum class ScalarMode { exact, floating };

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr ScalarMode mode = ScalarMode::exact;
    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static double to_double(const Rational& x) { return x.get_d(); }
    static Rational abs(const Rational& x) { return ::abs(x); }
};

template <>
struct ScalarTraits<double> {
    static constexpr ScalarMode mode = ScalarMode::floating;
    static bool is_zero(double x) { return x == 0.0; }
    static double to_double(double x) { return x; }
    static double abs(double x) { return std::fabs(x); }
};

template <class T>
concept Scalar = requires { ScalarTraits<T>::mode; };

template <Scalar T>
bool is_zero(const T& x) {
    return ScalarTraits<T>::is_zero(x);
}

template <Scalar T>
double to_double(const T& x) {
    return ScalarTraits<T>::to_double(x);
}

template <Scalar T>
constexpr bool is_exact() {
    return ScalarTraits<T>::mode == ScalarMode::exact;
}

// Builds a canonical rational from numerator/denominator. Throws on zero
// denominator.
Rational make_rational(long num, long den = 1);

// Parses "p", "-p", "p/q". Rejects empty input, zero denominators and
// anything that is not an integer or a fraction of integers.
Rational parse_rational(std::string_view text);

// "p/q" or "p" in lowest terms.
std::string to_string(const Rational& x);

// True when num/den is already in lowest terms with den > 0.
bool is_canonical_fraction(const mpz_class& num, const mpz_class& den);

}  // namespace leibrack

#endif
