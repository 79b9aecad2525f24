#ifndef LEIBRACK_POLYNOMIAL_HPP
#define LEIBRACK_POLYNOMIAL_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "leibrack/matrix.hpp"

namespace leibrack {

// Sparse polynomial in the dual coordinates xi_1..xi_n. Terms are kept in a
// sorted map keyed by exponent vector; zero coefficients are never stored.
template <Scalar T>
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;
    using Terms = std::map<Exponents, T>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const T& c) {
        Polynomial p(nvars);
        p.add_term(Exponents(nvars, 0), c);
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i) {
        Polynomial p(nvars);
        Exponents e(nvars, 0);
        e.at(i) = 1;
        p.add_term(e, T(1));
        return p;
    }

    // <a, xi>
    static Polynomial linear(const Vector<T>& a) {
        Polynomial p(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) p += variable(a.size(), i) * a[i];
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    unsigned degree() const {
        unsigned d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, total(e));
        return d;
    }

    void add_term(const Exponents& e, const T& c) {
        if (e.size() != nvars_) throw DimensionMismatch("exponent vector of the wrong length");
        if (leibrack::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (leibrack::is_zero(it->second)) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same_vars(o);
        for (const auto& [e, c] : o.terms_) add_term(e, T(-c));
        return *this;
    }
    Polynomial& operator*=(const T& s) {
        if (leibrack::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_vars(b);
        Polynomial out(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(a.nvars_);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, T(ca * cb));
            }
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    Polynomial derivative(std::size_t i) const {
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            if (e.at(i) == 0) continue;
            Exponents d = e;
            --d[i];
            out.add_term(d, T(c * T(static_cast<long>(e[i]))));
        }
        return out;
    }

    // f(0)
    T constant_term() const {
        auto it = terms_.find(Exponents(nvars_, 0));
        return it == terms_.end() ? T(0) : it->second;
    }

    // df(0), read off the linear monomials.
    Vector<T> gradient_at_zero() const {
        Vector<T> g(nvars_, T(0));
        for (const auto& [e, c] : terms_) {
            if (total(e) != 1) continue;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (e[i] == 1) g[i] = c;
        }
        return g;
    }

    T evaluate(const Vector<T>& xi) const {
        if (xi.size() != nvars_) throw DimensionMismatch("evaluation point of the wrong length");
        T sum(0);
        for (const auto& [e, c] : terms_) {
            T term = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned p = 0; p < e[i]; ++p) term *= xi[i];
            sum += term;
        }
        return sum;
    }

    // f(M^T xi): substitutes xi_i -> sum_k m(k, i) xi_k.
    Polynomial compose_linear(const Matrix<T>& m) const {
        if (m.rows() != nvars_ || m.cols() != nvars_) throw DimensionMismatch("substitution matrix of the wrong size");
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < nvars_; ++i) {
            Polynomial img(nvars_);
            for (std::size_t k = 0; k < nvars_; ++k) img += variable(nvars_, k) * m(k, i);
            images.push_back(std::move(img));
        }
        Polynomial out(nvars_);
        for (const auto& [e, c] : terms_) {
            Polynomial term = constant(nvars_, c);
            for (std::size_t i = 0; i < nvars_; ++i)
                for (unsigned p = 0; p < e[i]; ++p) term = term * images[i];
            out += term;
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c;
            for (std::size_t i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                os << "*x" << (i + 1);
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

private:
    static unsigned total(const Exponents& e) {
        unsigned s = 0;
        for (auto x : e) s += x;
        return s;
    }

    void require_same_vars(const Polynomial& o) const {
        if (o.nvars_ != nvars_) throw DimensionMismatch("polynomials in different numbers of variables");
    }

    std::size_t nvars_;
    Terms terms_;
};

}  // namespace leibrack

#endif
