#include "leibrack/bch.hpp"

#include <fmt/format.h>

#include <functional>

namespace leibrack {

namespace {

FreeSeries multiply(const FreeSeries& a, const FreeSeries& b, int degree) {
    FreeSeries out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            if (static_cast<int>(wa.size() + wb.size()) > degree) continue;
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out[w] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
    return out;
}

Rational factorial(int k) {
    mpz_class f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return Rational(f);
}

void validate(const LeibnizAlgebra& alg, const BchConfig& cfg) {
    if (cfg.order < 1 || cfg.order > kMaxBchOrder)
        throw PreconditionFailed(fmt::format("BCH order {} outside [1, {}]", cfg.order, kMaxBchOrder));
    if (!is_lie(alg)) throw PreconditionFailed("BCH needs a Lie algebra; " + alg.name() + " is not antisymmetric");
}

// Looks up Dynkin coefficients by word.
const std::map<Word, const DynkinTerm*>& dynkin_index() {
    static const std::map<Word, const DynkinTerm*> index = [] {
        std::map<Word, const DynkinTerm*> m;
        for (const auto& t : bch_dynkin_terms()) m.emplace(t.word, &t);
        return m;
    }();
    return index;
}

}  // namespace

FreeSeries log_exp_exp(int degree) {
    // exp(X) exp(Y) - 1 = sum_{a + b >= 1} X^a Y^b / (a! b!)
    FreeSeries z;
    for (int a = 0; a <= degree; ++a)
        for (int b = 0; a + b <= degree; ++b) {
            if (a + b == 0) continue;
            Word w(a, 0);
            w.insert(w.end(), b, 1);
            z[w] = Rational(1) / (factorial(a) * factorial(b));
        }
    // log(1 + Z) = sum_k (-1)^{k+1} Z^k / k; Z has no constant term.
    FreeSeries result;
    FreeSeries power = z;
    for (int k = 1; k <= degree; ++k) {
        Rational coeff(k % 2 == 1 ? 1 : -1, k);
        coeff.canonicalize();
        for (const auto& [w, c] : power) result[w] += coeff * c;
        power = multiply(power, z, degree);
    }
    std::erase_if(result, [](const auto& kv) { return sgn(kv.second) == 0; });
    return result;
}

const std::vector<DynkinTerm>& bch_dynkin_terms() {
    // A homogeneous Lie element L of degree n satisfies r(L) = n L for the
    // right-nested bracketing r, so L = sum_w (c_w / n) r(w).
    static const std::vector<DynkinTerm> terms = [] {
        std::vector<DynkinTerm> out;
        for (const auto& [w, c] : log_exp_exp(kMaxBchOrder)) {
            Rational coeff = c / Rational(static_cast<long>(w.size()));
            out.push_back({w, coeff, coeff.get_d()});
        }
        return out;
    }();
    return terms;
}

template <Scalar T>
Element<T> bch(const LeibnizAlgebra& alg, const Element<T>& x, const Element<T>& y, const BchConfig& cfg) {
    validate(alg, cfg);
    const std::size_t n = alg.dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("BCH operands of the wrong length");
    const auto& index = dynkin_index();
    const Element<T>* letters[2] = {&x, &y};

    Element<T> total = zeros<T>(n);
    // Grow words leftwards from their last letter: r(a w) = [a, r(w)].
    Word word;
    std::function<void(const Element<T>&)> visit = [&](const Element<T>& value) {
        if (is_zero_vector(value)) return;
        Word key(word.rbegin(), word.rend());
        if (auto it = index.find(key); it != index.end()) {
            if constexpr (is_exact<T>())
                add_in_place(total, value, it->second->coeff);
            else
                add_in_place(total, value, it->second->coeff_d);
        }
        if (static_cast<int>(word.size()) >= cfg.order) return;
        for (std::uint8_t a : {0, 1}) {
            word.push_back(a);
            visit(bracket(alg, *letters[a], value));
            word.pop_back();
        }
    };
    for (std::uint8_t last : {0, 1}) {
        word.assign(1, last);
        visit(*letters[last]);
    }
    return total;
}

template <Scalar T>
Element<T> conj_star(const LeibnizAlgebra& alg, const Element<T>& x, const Element<T>& y, const BchConfig& cfg) {
    return bch(alg, bch(alg, x, y, cfg), scaled(x, T(-1)), cfg);
}

template <Scalar T>
ViolationReport verify_conj_identity(const LeibnizAlgebra& alg, std::span<const std::array<Element<T>, 2>> samples,
                                     const BchConfig& cfg, const ExpMode& mode, double tol) {
    ViolationReport report("conj_star_vs_bass");
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto& [x, y] = samples[s];
        auto c = compare(conj_star(alg, x, y, cfg), bass_product(alg, x, y, mode), tol);
        report.record("sample " + std::to_string(s), c.residual, c.violated);
    }
    return report;
}

template Element<Rational> bch(const LeibnizAlgebra&, const Element<Rational>&, const Element<Rational>&,
                               const BchConfig&);
template Element<double> bch(const LeibnizAlgebra&, const Element<double>&, const Element<double>&, const BchConfig&);
template Element<Rational> conj_star(const LeibnizAlgebra&, const Element<Rational>&, const Element<Rational>&,
                                     const BchConfig&);
template Element<double> conj_star(const LeibnizAlgebra&, const Element<double>&, const Element<double>&,
                                   const BchConfig&);
template ViolationReport verify_conj_identity(const LeibnizAlgebra&, std::span<const std::array<Element<Rational>, 2>>,
                                              const BchConfig&, const ExpMode&, double);
template ViolationReport verify_conj_identity(const LeibnizAlgebra&, std::span<const std::array<Element<double>, 2>>,
                                              const BchConfig&, const ExpMode&, double);

}  // namespace leibrack
