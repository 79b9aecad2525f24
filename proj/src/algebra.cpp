#include "leibrack/algebra.hpp"

#include <fmt/format.h>

namespace leibrack {

namespace {

template <Scalar T>
bool negligible(const Vector<T>& diff, double tol) {
    if constexpr (is_exact<T>())
        return is_zero_vector(diff);
    else
        return max_abs(diff) <= tol;
}

std::string triple_label(const LeibnizAlgebra& alg, std::size_t i, std::size_t j, std::size_t k) {
    const auto& n = alg.basis_names();
    return fmt::format("({}, {}, {})", n[i], n[j], n[k]);
}

std::vector<Rational> flatten(const Matrix<Rational>& m) {
    std::vector<Rational> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

Matrix<Rational> unflatten(const std::vector<Rational>& v, std::size_t n) {
    Matrix<Rational> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
    return m;
}

// Accumulates coeff * [e_i, e_j] into out.
void add_basis_bracket(const LeibnizAlgebra& alg, std::size_t i, std::size_t j, const Rational& coeff,
                       Vector<Rational>& out) {
    for (const auto& t : alg.terms(i, j)) out[t.k] += coeff * t.value;
}

}  // namespace

// ---------------------------------------------------------------------------

LeibnizAlgebra::LeibnizAlgebra(std::string name, std::vector<std::string> basis_names, std::vector<Rational> table)
    : name_(std::move(name)), dim_(basis_names.size()), basis_names_(std::move(basis_names)), table_(std::move(table)) {
    if (table_.size() != dim_ * dim_ * dim_)
        throw DimensionMismatch(fmt::format("structure table has {} entries, expected {}^3", table_.size(), dim_));
    for (auto& x : table_) x.canonicalize();
    table_d_.reserve(table_.size());
    for (const auto& x : table_) table_d_.push_back(x.get_d());
    sparse_.resize(dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            auto& terms = sparse_[i * dim_ + j];
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rational& v = table_[index(i, j, k)];
                if (sgn(v) != 0) terms.push_back({k, v, v.get_d()});
            }
            if (!terms.empty()) nonzero_pairs_.emplace_back(i, j);
        }
}

AlgebraBuilder::AlgebraBuilder(std::string name, std::size_t dim)
    : name_(std::move(name)), dim_(dim), table_(dim * dim * dim, Rational(0)) {
    if (dim == 0) throw PreconditionFailed("algebra dimension must be positive");
    for (std::size_t i = 0; i < dim; ++i) names_.push_back(fmt::format("e{}", i + 1));
}

AlgebraBuilder& AlgebraBuilder::basis_names(std::vector<std::string> names) {
    if (names.size() != dim_) throw DimensionMismatch("basis name count differs from dimension");
    names_ = std::move(names);
    return *this;
}

AlgebraBuilder& AlgebraBuilder::set(std::size_t i, std::size_t j, std::size_t k, Rational value) {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionMismatch("structure constant index out of range");
    table_[(i * dim_ + j) * dim_ + k] = std::move(value);
    return *this;
}

AlgebraBuilder& AlgebraBuilder::set_antisymmetric(std::size_t i, std::size_t j, std::size_t k, Rational value) {
    set(j, i, k, -value);
    return set(i, j, k, std::move(value));
}

AlgebraBuilder& AlgebraBuilder::set_bracket(std::size_t i, std::size_t j, const Vector<Rational>& value) {
    if (value.size() != dim_) throw DimensionMismatch("bracket value length differs from dimension");
    for (std::size_t k = 0; k < dim_; ++k) set(i, j, k, value[k]);
    return *this;
}

LeibnizAlgebra AlgebraBuilder::build() const {
    return LeibnizAlgebra(name_, names_, table_);
}

// ---------------------------------------------------------------------------

template <Scalar T>
Element<T> bracket(const LeibnizAlgebra& alg, const Element<T>& x, const Element<T>& y) {
    const std::size_t n = alg.dim();
    if (x.size() != n || y.size() != n)
        throw DimensionMismatch(fmt::format("bracket operands of length {} and {} in a {}-dimensional algebra",
                                            x.size(), y.size(), n));
    Element<T> out(n, T(0));
    for (const auto& [i, j] : alg.nonzero_pairs()) {
        if (is_zero(x[i]) || is_zero(y[j])) continue;
        T w = x[i] * y[j];
        for (const auto& t : alg.terms(i, j)) out[t.k] += w * t.template as<T>();
    }
    return out;
}

template <Scalar T>
Endomorphism<T> ad(const LeibnizAlgebra& alg, const Element<T>& x) {
    const std::size_t n = alg.dim();
    if (x.size() != n) throw DimensionMismatch("ad of an element of the wrong length");
    Endomorphism<T> m(n, n);
    for (const auto& [i, j] : alg.nonzero_pairs()) {
        if (is_zero(x[i])) continue;
        for (const auto& t : alg.terms(i, j)) m(t.k, j) += x[i] * t.template as<T>();
    }
    return m;
}

ViolationReport verify_leibniz(const LeibnizAlgebra& alg) {
    ViolationReport report("leibniz_identity");
    const std::size_t n = alg.dim();
    Vector<Rational> diff(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                std::fill(diff.begin(), diff.end(), Rational(0));
                for (const auto& t : alg.terms(j, k)) add_basis_bracket(alg, i, t.k, t.value, diff);
                for (const auto& t : alg.terms(i, j)) add_basis_bracket(alg, t.k, k, -t.value, diff);
                for (const auto& t : alg.terms(i, k)) add_basis_bracket(alg, j, t.k, -t.value, diff);
                bool bad = !is_zero_vector(diff);
                report.record(triple_label(alg, i, j, k), bad ? max_abs(diff) : 0.0, bad);
            }
    return report;
}

bool is_lie(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (alg.c(i, j, k) != -alg.c(j, i, k)) return false;
    return true;
}

template <Scalar T>
bool is_derivation(const LeibnizAlgebra& alg, const Endomorphism<T>& d, double tol) {
    const std::size_t n = alg.dim();
    if (d.rows() != n || d.cols() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Element<T> di = d.column(i);
        for (std::size_t j = 0; j < n; ++j) {
            Element<T> eij(n, T(0));
            for (const auto& t : alg.terms(i, j)) eij[t.k] = t.template as<T>();
            Element<T> diff = d * eij;
            add_in_place(diff, bracket(alg, di, unit_vector<T>(n, j)), T(-1));
            add_in_place(diff, bracket(alg, unit_vector<T>(n, i), d.column(j)), T(-1));
            if (!negligible(diff, tol)) return false;
        }
    }
    return true;
}

template <Scalar T>
bool is_endomorphism(const LeibnizAlgebra& alg, const Endomorphism<T>& a, double tol) {
    const std::size_t n = alg.dim();
    if (a.rows() != n || a.cols() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element<T> eij(n, T(0));
            for (const auto& t : alg.terms(i, j)) eij[t.k] = t.template as<T>();
            Element<T> diff = a * eij - bracket(alg, a.column(i), a.column(j));
            if (!negligible(diff, tol)) return false;
        }
    return true;
}

template <Scalar T>
bool is_automorphism(const LeibnizAlgebra& alg, const Endomorphism<T>& a, double tol) {
    if (!is_endomorphism(alg, a, tol)) return false;
    T det = determinant(a);
    if constexpr (is_exact<T>())
        return !is_zero(det);
    else
        return std::fabs(det) > 1e-12;
}

std::optional<std::pair<std::size_t, std::size_t>> morphism_violation(const LeibnizAlgebra& source,
                                                                      const LeibnizAlgebra& target,
                                                                      const Matrix<Rational>& alpha) {
    if (alpha.rows() != target.dim() || alpha.cols() != source.dim())
        throw DimensionMismatch("morphism matrix must be target.dim x source.dim");
    const std::size_t n = source.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector<Rational> eij(n, Rational(0));
            for (const auto& t : source.terms(i, j)) eij[t.k] = t.value;
            if (alpha * eij != bracket(target, alpha.column(i), alpha.column(j))) return std::pair{i, j};
        }
    return std::nullopt;
}

std::optional<std::size_t> nilpotency_class(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<Vector<Rational>> current;
    for (std::size_t i = 0; i < n; ++i) current.push_back(unit_vector<Rational>(n, i));
    std::size_t prev_dim = n;
    for (std::size_t c = 1;; ++c) {
        std::vector<Vector<Rational>> next;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& v : current) next.push_back(bracket(alg, unit_vector<Rational>(n, i), v));
        Subspace s = span_of(n, next);
        if (s.dim() == 0) return c;
        if (s.dim() == prev_dim) return std::nullopt;
        prev_dim = s.dim();
        current = s.basis;
    }
}

// ---------------------------------------------------------------------------

bool Subspace::contains(const Vector<Rational>& v) const {
    if (v.size() != ambient_dim) throw DimensionMismatch("vector length differs from ambient dimension");
    Vector<Rational> r = v;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        Rational f = r[pivots[k]];
        if (sgn(f) != 0) add_in_place(r, basis[k], Rational(-f));
    }
    return is_zero_vector(r);
}

Subspace span_of(std::size_t ambient_dim, const std::vector<Vector<Rational>>& vectors) {
    Subspace s;
    s.ambient_dim = ambient_dim;
    if (vectors.empty()) return s;
    Matrix<Rational> m(vectors.size(), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient_dim) throw DimensionMismatch("spanning vector of the wrong length");
        for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
    }
    auto [r, pivots] = rref(std::move(m));
    for (std::size_t k = 0; k < pivots.size(); ++k) s.basis.push_back(r.row(k));
    s.pivots = std::move(pivots);
    return s;
}

Subspace left_center(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    Matrix<Rational> stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : alg.terms(i, j)) stacked(j * n + t.k, i) = t.value;
    return span_of(n, nullspace(stacked));
}

DerivationAlgebra derivation_algebra(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    // Unknown D(a, b) sits at column a*n + b. Row (i, j, k) encodes
    // sum_m c_ijm D_km - sum_l D_li c_ljk - sum_l D_lj c_ilk = 0.
    Matrix<Rational> system(n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const std::size_t row = (i * n + j) * n + k;
                for (const auto& t : alg.terms(i, j)) system(row, k * n + t.k) += t.value;
                for (std::size_t l = 0; l < n; ++l) {
                    system(row, l * n + i) -= alg.c(l, j, k);
                    system(row, l * n + j) -= alg.c(i, l, k);
                }
            }

    DerivationAlgebra out;
    Subspace der = span_of(n * n, nullspace(system));
    for (const auto& v : der.basis) out.derivations.push_back(unflatten(v, n));

    std::vector<Vector<Rational>> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(flatten(ad(alg, unit_vector<Rational>(n, i))));
    Subspace inn = span_of(n * n, ads);
    for (const auto& v : inn.basis) out.inner.push_back(unflatten(v, n));

    out.dim_der = der.dim();
    out.dim_inn = inn.dim();
    out.dim_out = out.dim_der - out.dim_inn;

    out.closed_under_commutator = true;
    for (std::size_t a = 0; a < out.derivations.size() && out.closed_under_commutator; ++a)
        for (std::size_t b = a + 1; b < out.derivations.size(); ++b)
            if (!der.contains(flatten(commutator(out.derivations[a], out.derivations[b])))) {
                out.closed_under_commutator = false;
                break;
            }

    out.inner_is_ideal = true;
    for (const auto& d : out.derivations) {
        for (std::size_t i = 0; i < n; ++i) {
            auto ei = unit_vector<Rational>(n, i);
            if (commutator(d, ad(alg, ei)) != ad(alg, d * ei)) {
                out.inner_is_ideal = false;
                break;
            }
        }
        if (!out.inner_is_ideal) break;
    }
    return out;
}

// ---------------------------------------------------------------------------

Element<Rational> ExtensionData::omega_of(const Element<Rational>& x, const Element<Rational>& y) const {
    const std::size_t q = quotient_dim();
    if (x.size() != q || y.size() != q) throw DimensionMismatch("cocycle arguments must live in the quotient");
    Element<Rational> out(center.ambient_dim, Rational(0));
    for (std::size_t a = 0; a < q; ++a) {
        if (sgn(x[a]) == 0) continue;
        for (std::size_t b = 0; b < q; ++b) {
            if (sgn(y[b]) == 0) continue;
            add_in_place(out, omega[a][b], Rational(x[a] * y[b]));
        }
    }
    return out;
}

Element<Rational> ExtensionData::omega_ext_of(const Element<Rational>& x, const Element<Rational>& y) const {
    return scaled(omega_of(x, y), Rational(-1));
}

ExtensionData build_extension(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    Subspace center = left_center(alg);

    std::vector<bool> is_pivot(n, false);
    for (auto p : center.pivots) is_pivot[p] = true;
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < n; ++i)
        if (!is_pivot[i]) comp.push_back(i);
    const std::size_t q = comp.size();

    Matrix<Rational> section(n, q);
    Matrix<Rational> pi(q, n);
    for (std::size_t a = 0; a < q; ++a) {
        section(comp[a], a) = 1;
        pi(a, comp[a]) = 1;
        for (std::size_t r = 0; r < center.dim(); ++r) pi(a, center.pivots[r]) = -center.basis[r][comp[a]];
    }

    std::vector<std::string> names;
    std::vector<Rational> table(q * q * q, Rational(0));
    for (std::size_t a = 0; a < q; ++a) {
        names.push_back(alg.basis_names()[comp[a]]);
        for (std::size_t b = 0; b < q; ++b) {
            Vector<Rational> v = pi * bracket(alg, section.column(a), section.column(b));
            for (std::size_t k = 0; k < q; ++k) table[(a * q + b) * q + k] = v[k];
        }
    }
    LeibnizAlgebra quotient(alg.name() + "/Z_L", std::move(names), std::move(table));
    if (!is_lie_algebra(quotient))
        throw InternalInconsistency("quotient of " + alg.name() + " by its left center is not a Lie algebra");
    if (pi * section != Matrix<Rational>::identity(q))
        throw InternalInconsistency("projection does not invert the section");
    if (auto bad = morphism_violation(alg, quotient, pi))
        throw InternalInconsistency(fmt::format("projection fails the morphism check on ({}, {})",
                                                alg.basis_names()[bad->first], alg.basis_names()[bad->second]));

    ExtensionData ext{.center = std::move(center),
                      .quotient = std::move(quotient),
                      .pi = std::move(pi),
                      .section = std::move(section),
                      .section_coordinates = comp,
                      .omega = {}};
    ext.omega.assign(q, std::vector<Element<Rational>>(q));
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            auto ea = unit_vector<Rational>(q, a);
            auto eb = unit_vector<Rational>(q, b);
            Element<Rational> w = ext.lift(bracket(ext.quotient, ea, eb)) -
                                  bracket(alg, ext.section.column(a), ext.section.column(b));
            if (!ext.center.contains(w))
                throw InternalInconsistency(fmt::format("omega({}, {}) is not left central",
                                                        ext.quotient.basis_names()[a], ext.quotient.basis_names()[b]));
            ext.omega[a][b] = std::move(w);
        }
    return ext;
}

ViolationReport verify_leibniz_2cocycle(const LeibnizAlgebra& alg, const ExtensionData& ext) {
    ViolationReport report("leibniz_2cocycle");
    const std::size_t q = ext.quotient_dim();
    const auto& names = ext.quotient.basis_names();
    auto act = [&](const Element<Rational>& x, const Element<Rational>& v) { return bracket(alg, ext.lift(x), v); };
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            for (std::size_t c = 0; c < q; ++c) {
                auto x = unit_vector<Rational>(q, a);
                auto y = unit_vector<Rational>(q, b);
                auto z = unit_vector<Rational>(q, c);
                Element<Rational> r = act(x, ext.omega_of(y, z));
                add_in_place(r, act(y, ext.omega_of(x, z)), Rational(-1));
                add_in_place(r, ext.omega_of(bracket(ext.quotient, x, y), z), Rational(-1));
                add_in_place(r, ext.omega_of(x, bracket(ext.quotient, y, z)));
                add_in_place(r, ext.omega_of(y, bracket(ext.quotient, x, z)), Rational(-1));
                bool bad = !is_zero_vector(r);
                report.record(fmt::format("({}, {}, {})", names[a], names[b], names[c]), max_abs(r), bad);
            }
    return report;
}

ViolationReport verify_reconstruction(const LeibnizAlgebra& alg, const ExtensionData& ext) {
    ViolationReport report("extension_reconstruction");
    const std::size_t n = alg.dim();
    const std::size_t q = ext.quotient_dim();
    std::vector<Vector<Rational>> shifts{zeros<Rational>(n)};
    for (const auto& z : ext.center.basis) shifts.push_back(z);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            auto x = unit_vector<Rational>(q, a);
            auto y = unit_vector<Rational>(q, b);
            for (std::size_t u = 0; u < shifts.size(); ++u)
                for (std::size_t v = 0; v < shifts.size(); ++v) {
                    Element<Rational> lhs = bracket(alg, ext.lift(x) + shifts[u], ext.lift(y) + shifts[v]);
                    Element<Rational> rhs = ext.lift(bracket(ext.quotient, x, y)) - ext.omega_of(x, y) +
                                            bracket(alg, ext.lift(x), shifts[v]);
                    Element<Rational> r = lhs - rhs;
                    bool bad = !is_zero_vector(r);
                    report.record(fmt::format("({}, {}; shifts {}, {})", ext.quotient.basis_names()[a],
                                              ext.quotient.basis_names()[b], u, v),
                                  max_abs(r), bad);
                }
        }
    return report;
}

// ---------------------------------------------------------------------------

LeibnizAlgebra hemi_semi_direct(const LeibnizAlgebra& g, const std::vector<Matrix<Rational>>& rho, std::string name) {
    if (!is_lie_algebra(g)) throw PreconditionFailed("hemi-semi-direct product needs a Lie algebra, got " + g.name());
    const std::size_t gd = g.dim();
    if (rho.size() != gd) throw DimensionMismatch("need one action matrix per basis vector of g");
    const std::size_t m = rho.empty() ? 0 : rho.front().rows();
    for (const auto& r : rho)
        if (r.rows() != m || r.cols() != m) throw DimensionMismatch("action matrices must be m x m");
    for (std::size_t a = 0; a < gd; ++a)
        for (std::size_t b = 0; b < gd; ++b) {
            Matrix<Rational> lhs(m, m);
            for (const auto& t : g.terms(a, b)) lhs += rho[t.k] * t.value;
            if (lhs != commutator(rho[a], rho[b]))
                throw PreconditionFailed(fmt::format("rho is not an action on ({}, {})", g.basis_names()[a],
                                                     g.basis_names()[b]));
        }

    const std::size_t n = m + gd;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back(fmt::format("v{}", i + 1));
    for (const auto& s : g.basis_names()) names.push_back(s);
    std::vector<Rational> table(n * n * n, Rational(0));
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return table[(i * n + j) * n + k]; };
    for (std::size_t a = 0; a < gd; ++a) {
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t k = 0; k < m; ++k) at(m + a, b, k) = rho[a](k, b);
        for (std::size_t b = 0; b < gd; ++b)
            for (const auto& t : g.terms(a, b)) at(m + a, m + b, m + t.k) = t.value;
    }
    return LeibnizAlgebra(std::move(name), std::move(names), std::move(table));
}

LeibnizAlgebra gl_algebra(std::size_t n) {
    const std::size_t d = n * n;
    std::vector<std::string> names;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) names.push_back(fmt::format("E{}{}", a + 1, b + 1));
    std::vector<Rational> table(d * d * d, Rational(0));
    auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return table[(i * d + j) * d + k]; };
    // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t e = 0; e < n; ++e) {
                    std::size_t i = a * n + b, j = c * n + e;
                    if (b == c) at(i, j, a * n + e) += 1;
                    if (e == a) at(i, j, c * n + b) -= 1;
                }
    return LeibnizAlgebra(fmt::format("gl{}", n), std::move(names), std::move(table));
}

Embedding hemi_semi_direct_embedding(const LeibnizAlgebra& alg) {
    const std::size_t n = alg.dim();
    std::vector<Matrix<Rational>> rho;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Matrix<Rational> unit(n, n);
            unit(a, b) = 1;
            rho.push_back(std::move(unit));
        }
    LeibnizAlgebra target = hemi_semi_direct(gl_algebra(n), rho, alg.name() + " x_hs gl");
    Matrix<Rational> map(n + n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        map(i, i) = 1;
        Matrix<Rational> adi = ad(alg, unit_vector<Rational>(n, i));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) map(n + a * n + b, i) = adi(a, b);
    }
    return {std::move(target), std::move(map)};
}

// ---------------------------------------------------------------------------

template Element<Rational> bracket(const LeibnizAlgebra&, const Element<Rational>&, const Element<Rational>&);
template Element<double> bracket(const LeibnizAlgebra&, const Element<double>&, const Element<double>&);
template Endomorphism<Rational> ad(const LeibnizAlgebra&, const Element<Rational>&);
template Endomorphism<double> ad(const LeibnizAlgebra&, const Element<double>&);
template bool is_derivation(const LeibnizAlgebra&, const Endomorphism<Rational>&, double);
template bool is_derivation(const LeibnizAlgebra&, const Endomorphism<double>&, double);
template bool is_endomorphism(const LeibnizAlgebra&, const Endomorphism<Rational>&, double);
template bool is_endomorphism(const LeibnizAlgebra&, const Endomorphism<double>&, double);
template bool is_automorphism(const LeibnizAlgebra&, const Endomorphism<Rational>&, double);
template bool is_automorphism(const LeibnizAlgebra&, const Endomorphism<double>&, double);

}  // namespace leibrack
