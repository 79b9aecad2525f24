#ifndef LEIBRACK_RACK_HPP
#define LEIBRACK_RACK_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "leibrack/algebra.hpp"
#include "leibrack/matrix.hpp"
#include "leibrack/report.hpp"

namespace leibrack {

// How operator exponentials are evaluated. Exact mode sums the (finite)
// series of a nilpotent operator; floating mode truncates the Taylor series
// at `order` after scaling the operator to 1-norm <= 1/2 and squares back.
struct ExpMode {
    enum class Kind { exact_nilpotent, floating };
    Kind kind = Kind::exact_nilpotent;
    int order = 12;

    static ExpMode exact() { return {Kind::exact_nilpotent, 0}; }
    static ExpMode floating(int order = 12) { return {Kind::floating, order}; }
    bool is_exact() const { return kind == Kind::exact_nilpotent; }
};

// Smallest m <= dim with D^m = 0, or nullopt.
template <Scalar T>
std::optional<std::size_t> nilpotency_index(const Endomorphism<T>& d);

template <Scalar T>
Endomorphism<T> exp_endo(const Endomorphism<T>& d, const ExpMode& mode);

// X |> Y = exp(ad_X)(Y).
template <Scalar T>
Element<T> bass_product(const LeibnizAlgebra& alg, const Element<T>& x, const Element<T>& y, const ExpMode& mode);

// ---------------------------------------------------------------------------
// comparisons

struct Comparison {
    double residual = 0.0;
    bool violated = false;
};

// Exact scalars: violated iff a != b, residual = max |a - b|. Floating:
// residual = max |a - b| / max(1, max |a|), violated iff residual > tol.
template <Scalar T>
Comparison compare(const Vector<T>& a, const Vector<T>& b, double tol);

template <Scalar T>
Comparison compare(const Matrix<T>& a, const Matrix<T>& b, double tol);

inline Comparison worst(Comparison a, Comparison b) {
    return {std::max(a.residual, b.residual), a.violated || b.violated};
}

// ---------------------------------------------------------------------------
// rack carriers

template <Scalar T>
struct BassRack {
    using Element = leibrack::Element<T>;

    const LeibnizAlgebra* alg;
    ExpMode mode;

    Element product(const Element& x, const Element& y) const { return bass_product(*alg, x, y, mode); }
    Element unit() const { return zeros<T>(alg->dim()); }
    static Comparison compare(const Element& a, const Element& b, double tol) { return leibrack::compare(a, b, tol); }
};

// (vector, invertible matrix) pairs: carrier of the linear rack V x_hs G and
// of the linear digroup.
template <Scalar T>
struct LinearPair {
    Vector<T> v;
    Matrix<T> g;
};

template <Scalar T>
Comparison compare(const LinearPair<T>& a, const LinearPair<T>& b, double tol) {
    return worst(compare(a.v, b.v, tol), compare(a.g, b.g, tol));
}

// (v, g) |> (v', g') = (g v', g g' g^-1). Throws SingularMatrix.
template <Scalar T>
LinearPair<T> hs_rack_product(const LinearPair<T>& x, const LinearPair<T>& y);

template <Scalar T>
struct LinearRack {
    using Element = LinearPair<T>;
    std::size_t module_dim;

    Element product(const Element& x, const Element& y) const { return hs_rack_product(x, y); }
    Element unit() const { return {zeros<T>(module_dim), Matrix<T>::identity(module_dim)}; }
    static Comparison compare(const Element& a, const Element& b, double tol) { return leibrack::compare(a, b, tol); }
};

// Elements (X, exp ad_X) of R_h.
template <Scalar T>
struct RhElement {
    Element<T> x;
    Endomorphism<T> a;
};

template <Scalar T>
RhElement<T> rh_element(const LeibnizAlgebra& alg, const Element<T>& x, const ExpMode& mode);

// (X, A) |> (Y, B) = (exp(ad_X)(Y), A B A^-1).
template <Scalar T>
RhElement<T> rh_product(const LeibnizAlgebra& alg, const RhElement<T>& x, const RhElement<T>& y, const ExpMode& mode);

template <Scalar T>
Comparison compare(const RhElement<T>& a, const RhElement<T>& b, double tol) {
    return worst(compare(a.x, b.x, tol), compare(a.a, b.a, tol));
}

template <Scalar T>
struct RhRack {
    using Element = RhElement<T>;
    const LeibnizAlgebra* alg;
    ExpMode mode;

    Element product(const Element& x, const Element& y) const { return rh_product(*alg, x, y, mode); }
    Element unit() const { return {zeros<T>(alg->dim()), Matrix<T>::identity(alg->dim())}; }
    static Comparison compare(const Element& a, const Element& b, double tol) { return leibrack::compare(a, b, tol); }
};

// Second component equals exp(ad of the first component).
template <Scalar T>
Comparison rh_closure(const LeibnizAlgebra& alg, const RhElement<T>& x, const ExpMode& mode, double tol);

// ---------------------------------------------------------------------------
// digroups: the linear digroup M x G

template <Scalar T>
LinearPair<T> dig_left(const LinearPair<T>& x, const LinearPair<T>& y) {
    return {x.g * y.v, x.g * y.g};
}

template <Scalar T>
LinearPair<T> dig_right(const LinearPair<T>& x, const LinearPair<T>& y) {
    return {x.v, x.g * y.g};
}

template <Scalar T>
LinearPair<T> dig_inverse(const LinearPair<T>& x);

template <Scalar T>
LinearPair<T> dig_unit(std::size_t module_dim) {
    return {zeros<T>(module_dim), Matrix<T>::identity(module_dim)};
}

// x |> y = (x |- y) -| x^-1.
template <Scalar T>
LinearPair<T> digroup_rack(const LinearPair<T>& x, const LinearPair<T>& y) {
    return dig_right(dig_left(x, y), dig_inverse(x));
}

template <Scalar T>
struct DigroupRack {
    using Element = LinearPair<T>;
    std::size_t module_dim;

    Element product(const Element& x, const Element& y) const { return digroup_rack(x, y); }
    Element unit() const { return dig_unit<T>(module_dim); }
    static Comparison compare(const Element& a, const Element& b, double tol) { return leibrack::compare(a, b, tol); }
};

// The six digroup axioms, one report each, on sampled triples.
struct DigroupAxiomReport {
    std::array<ViolationReport, 6> axioms;
    bool ok() const {
        for (const auto& r : axioms)
            if (!r.ok()) return false;
        return true;
    }
};

template <Scalar T>
DigroupAxiomReport digroup_axioms_check(std::span<const std::array<LinearPair<T>, 3>> samples, double tol = 0.0);

// ---------------------------------------------------------------------------
// axiom checks

struct RackAxiomReport {
    ViolationReport self_distributivity{"self_distributivity"};
    ViolationReport left_injectivity{"left_injectivity"};
    ViolationReport pointed{"pointed"};

    bool ok() const { return self_distributivity.ok() && left_injectivity.ok() && pointed.ok(); }
    double max_residual() const {
        return std::max({self_distributivity.max_residual, left_injectivity.max_residual, pointed.max_residual});
    }
};

// x |> (y |> z) = (x |> y) |> (x |> z); x |> y = x |> z implies y = z;
// 1 |> x = x and x |> 1 = 1. `tol` is ignored for exact scalars.
template <class Rack>
RackAxiomReport check_rack_axioms(const Rack& rack, std::span<const std::array<typename Rack::Element, 3>> samples,
                                  double tol) {
    RackAxiomReport report;
    const auto one = rack.unit();
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const auto& [x, y, z] = samples[s];
        const std::string where = "sample " + std::to_string(s);

        auto xy = rack.product(x, y);
        auto lhs = rack.product(x, rack.product(y, z));
        auto rhs = rack.product(xy, rack.product(x, z));
        auto sd = Rack::compare(lhs, rhs, tol);
        report.self_distributivity.record(where, sd.residual, sd.violated);

        auto images = Rack::compare(xy, rack.product(x, z), tol);
        auto sources = Rack::compare(y, z, tol);
        bool inj_bad = !images.violated && sources.violated;
        report.left_injectivity.record(where, inj_bad ? sources.residual : 0.0, inj_bad);

        for (const auto* e : {&x, &y, &z}) {
            auto left = Rack::compare(rack.product(one, *e), *e, tol);
            auto right = Rack::compare(rack.product(*e, one), one, tol);
            auto c = worst(left, right);
            report.pointed.record(where, c.residual, c.violated);
        }
    }
    return report;
}

// Lifts element triples to a rack carrier.
template <class Out, class In, class F>
std::vector<std::array<Out, 3>> map_triples(std::span<const std::array<In, 3>> in, F&& f) {
    std::vector<std::array<Out, 3>> out;
    out.reserve(in.size());
    for (const auto& t : in) out.push_back({f(t[0]), f(t[1]), f(t[2])});
    return out;
}

// ---------------------------------------------------------------------------
// coadjoint action, morphisms, automorphism identities

// Ad*_X(xi) = xi o exp(-ad_X).
template <Scalar T>
Covector<T> coadjoint(const LeibnizAlgebra& alg, const Element<T>& x, const Covector<T>& xi, const ExpMode& mode);

// Ad*_r(Ad*_r' xi) = Ad*_{r |> r'}(Ad*_r xi) on samples (r, r', xi).
template <Scalar T>
ViolationReport check_coadjoint_action(const LeibnizAlgebra& alg, std::span<const std::array<Element<T>, 3>> samples,
                                       const ExpMode& mode, double tol);

// phi(x) = (alpha X, exp ad_{alpha X}) satisfies phi(x |> y) = phi(x) |> phi(y)
// on the sampled pairs. Throws PreconditionFailed (naming the basis pair)
// when alpha is not a Leibniz morphism.
template <Scalar T>
ViolationReport rack_morphism_check(const LeibnizAlgebra& source, const LeibnizAlgebra& target,
                                    const Matrix<Rational>& alpha,
                                    std::span<const std::array<Element<T>, 2>> samples, const ExpMode& mode,
                                    double tol);

// alpha exp(ad_X) alpha^-1 = exp(ad_{alpha X}) for an automorphism alpha.
template <Scalar T>
ViolationReport check_automorphism_conjugation(const LeibnizAlgebra& alg, const Endomorphism<T>& alpha,
                                               std::span<const Element<T>> samples, const ExpMode& mode, double tol);

// exp(D) is an endomorphism for each derivation D.
template <Scalar T>
ViolationReport check_exp_of_derivations(const LeibnizAlgebra& alg, std::span<const Endomorphism<T>> derivations,
                                         const ExpMode& mode, double tol);

// ---------------------------------------------------------------------------
// rack cocycle of the canonical extension

// f(X, Y) = exp(ad_{s X})(s Y) - s(exp(ad_X) Y), X, Y in h_Lie. Throws
// InternalInconsistency if the value is not left central.
template <Scalar T>
Element<T> rack_cocycle_exact(const LeibnizAlgebra& alg, const ExtensionData& ext, const Element<T>& x,
                              const Element<T>& y, const ExpMode& mode);

// sign * sum_{p + q < N} 1/(p+q+1)! ad_{sX}^p omega(X, ad_X^q Y), with
// omega(X, Y) = s([X,Y]) - [sX, sY]. Agreement with rack_cocycle_exact
// requires sign = kRackCocycleSeriesSign.
template <Scalar T>
Element<T> rack_cocycle_series(const LeibnizAlgebra& alg, const ExtensionData& ext, const Element<T>& x,
                               const Element<T>& y, int order, int sign);

inline constexpr int kRackCocycleSeriesSign = -1;

// ---------------------------------------------------------------------------
// tangent Leibniz algebra of a rack on R^n

using RackProduct = std::function<Vector<double>(const Vector<double>&, const Vector<double>&)>;

struct TangentRecovery {
    // c(i, j, k) at [(i * n + j) * n + k].
    std::vector<double> table;
    std::optional<double> max_error;
};

// c(i, j, k) ~ d^2/ds dt [(s e_i) |> (t e_j)]_k at s = t = 0 by central
// differences with step h. Throws Error on NaN output, naming the stencil
// point.
TangentRecovery tangent_leibniz_recover(const RackProduct& product, std::size_t n, double h,
                                        const LeibnizAlgebra* reference = nullptr);

// ---------------------------------------------------------------------------
// deterministic sampling

// Exact samples have numerators in [-3, 3] and denominators in {1, 2};
// floating samples are uniform in [-bound, bound]. The stream is a pure
// function of the seed.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    Rational rational();
    double uniform(double bound);
    // Uniform in [0, bound).
    std::size_t index(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }

    template <Scalar T>
    T scalar(double bound = 1.0) {
        if constexpr (is_exact<T>())
            return rational();
        else
            return uniform(bound);
    }

    template <Scalar T>
    Vector<T> vector(std::size_t n, double bound = 1.0) {
        Vector<T> v(n);
        for (auto& x : v) {
            if constexpr (is_exact<T>())
                x = rational();
            else
                x = uniform(bound);
        }
        return v;
    }

    template <Scalar T>
    Matrix<T> invertible_matrix(std::size_t n, double bound = 1.0);

    template <Scalar T>
    std::vector<std::array<Vector<T>, 3>> triples(std::size_t n, std::size_t count, double bound = 1.0) {
        std::vector<std::array<Vector<T>, 3>> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back({vector<T>(n, bound), vector<T>(n, bound), vector<T>(n, bound)});
        return out;
    }

    template <Scalar T>
    std::vector<std::array<Vector<T>, 2>> pairs(std::size_t n, std::size_t count, double bound = 1.0) {
        std::vector<std::array<Vector<T>, 2>> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back({vector<T>(n, bound), vector<T>(n, bound)});
        return out;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace leibrack

#endif
