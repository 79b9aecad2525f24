#include "leibrack/cli.hpp"

#include <fmt/format.h>

#include <functional>
#include <sstream>

#include <json.hpp>

#include "leibrack/bch.hpp"
#include "leibrack/quantization.hpp"
#include "leibrack/rack.hpp"

namespace leibrack::cli {

namespace {

constexpr double kRackTol = 1e-9;
constexpr double kBchFloatTol = 1e-6;
constexpr double kTangentTol = 1e-5;
constexpr int kDefaultExpOrder = 12;

const char* kNeedsNilpotent = "exact exponentials need a nilpotent algebra; rerun with --mode float";

std::string scalar_text(const Rational& x) { return leibrack::to_string(x); }
std::string scalar_text(double x) { return fmt::format("{:.6g}", x); }

template <Scalar T>
std::string vector_text(const Vector<T>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += scalar_text(v[i]);
    }
    return out + ")";
}

std::string csv(const Vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += leibrack::to_string(v[i]);
    }
    return out;
}

Check from_report(const ViolationReport& r, std::string name = {}) {
    Check c;
    c.name = name.empty() ? r.check : std::move(name);
    c.status = r.ok() ? Status::pass : Status::fail;
    c.residual = format_residual(r.max_residual);
    c.details = fmt::format("{} cases, {} violations", r.cases, r.violation_count);
    if (!r.violations.empty()) c.details += "; first at " + r.violations.front().location;
    return c;
}

Check skipped(std::string name, std::string why) { return {std::move(name), Status::skipped, "0", std::move(why)}; }

// Runs `body`; library errors become a failed check under `name`.
void guarded(RunReport& report, const std::string& name, const std::function<void()>& body) {
    try {
        body();
    } catch (const NotNilpotent& e) {
        report.checks.push_back({name, Status::fail, "0", std::string(e.what()) + "; " + kNeedsNilpotent});
    } catch (const Error& e) {
        report.checks.push_back({name, Status::fail, "0", e.what()});
    }
}

bool nilpotent(const LeibnizAlgebra& alg) { return nilpotency_class(alg).has_value(); }

template <Scalar T>
Vector<T> cast_vector(const Vector<Rational>& v) {
    if constexpr (is_exact<T>())
        return v;
    else
        return to_double_vector(v);
}

template <Scalar T>
ExpMode exp_mode(const RunConfig& cfg) {
    if constexpr (is_exact<T>())
        return ExpMode::exact();
    else
        return ExpMode::floating(cfg.order.value_or(kDefaultExpOrder));
}

void require_length(const std::optional<Vector<Rational>>& v, std::size_t n, const char* flag) {
    if (v && v->size() != n) throw DimensionMismatch(fmt::format("{} has {} entries, algebra has dim {}", flag, v->size(), n));
}

// ---------------------------------------------------------------------------

void cmd_validate(const LeibnizAlgebra& alg, RunReport& report) {
    report.checks.push_back(from_report(verify_leibniz(alg), "leibniz_identity"));
    bool lie = is_lie(alg);
    report.checks.push_back({"lie", Status::pass, "0", fmt::format("lie={}", lie)});
    report.checks.push_back({"summary", Status::pass, "0",
                             fmt::format("dim={}, nonzero brackets={}, nilpotent={}", alg.dim(),
                                         alg.nonzero_pairs().size(), nilpotent(alg))});
}

std::string bracket_table(const LeibnizAlgebra& alg) {
    if (alg.nonzero_pairs().empty()) return "abelian";
    std::string out;
    for (const auto& [i, j] : alg.nonzero_pairs()) {
        if (!out.empty()) out += "; ";
        Vector<Rational> v(alg.dim());
        for (std::size_t k = 0; k < alg.dim(); ++k) v[k] = alg.c(i, j, k);
        out += fmt::format("[{},{}] = {}", alg.basis_names()[i], alg.basis_names()[j], vector_text(v));
    }
    return out;
}

void cmd_analyze(const LeibnizAlgebra& alg, RunReport& report) {
    auto leibniz = verify_leibniz(alg);
    report.checks.push_back(from_report(leibniz, "leibniz_identity"));
    if (!leibniz.ok()) {
        for (const char* name : {"left_center", "derivations", "quotient", "omega", "leibniz_2cocycle", "reconstruction"})
            report.checks.push_back(skipped(name, "not a Leibniz algebra"));
        return;
    }

    Subspace center = left_center(alg);
    {
        std::string basis;
        for (const auto& b : center.basis) basis += (basis.empty() ? "" : ", ") + vector_text(b);
        report.checks.push_back({"left_center", Status::pass, "0",
                                 fmt::format("dim {}{}", center.dim(), basis.empty() ? "" : "; basis " + basis)});
    }

    guarded(report, "derivations", [&] {
        auto der = derivation_algebra(alg);
        bool ok = der.closed_under_commutator && der.inner_is_ideal && der.dim_der == der.dim_inn + der.dim_out;
        report.checks.push_back({"derivations", ok ? Status::pass : Status::fail, "0",
                                 fmt::format("der {}, inn {}, out {}; closed under commutator: {}; inner is an ideal: {}",
                                             der.dim_der, der.dim_inn, der.dim_out, der.closed_under_commutator,
                                             der.inner_is_ideal)});
    });

    guarded(report, "quotient", [&] {
        auto ext = build_extension(alg);
        bool lie = is_lie_algebra(ext.quotient);
        report.checks.push_back({"quotient", lie ? Status::pass : Status::fail, "0",
                                 fmt::format("dim {}, lie={}; {}", ext.quotient_dim(), lie, bracket_table(ext.quotient))});

        std::string table;
        const auto& names = ext.quotient.basis_names();
        for (std::size_t a = 0; a < ext.quotient_dim(); ++a)
            for (std::size_t b = 0; b < ext.quotient_dim(); ++b) {
                if (is_zero_vector(ext.omega[a][b])) continue;
                if (!table.empty()) table += "; ";
                table += fmt::format("omega({},{}) = {}", names[a], names[b], vector_text(ext.omega[a][b]));
            }
        report.checks.push_back({"omega", Status::pass, "0",
                                 (table.empty() ? std::string("omega = 0") : table) +
                                     " (omega(X,Y) = s([X,Y]) - [s(X),s(Y)])"});
        report.checks.push_back(from_report(verify_leibniz_2cocycle(alg, ext), "leibniz_2cocycle"));
        report.checks.push_back(from_report(verify_reconstruction(alg, ext), "reconstruction"));
    });
}

template <Scalar T>
void cmd_rack(const LeibnizAlgebra& alg, const RunConfig& cfg, RunReport& report) {
    const std::size_t n = alg.dim();
    if (is_exact<T>() && !nilpotent(alg)) {
        report.checks.push_back(skipped("rack", kNeedsNilpotent));
        return;
    }
    const ExpMode mode = exp_mode<T>(cfg);
    const double tol = kRackTol;
    Sampler sampler(cfg.seed);
    auto triples = sampler.triples<T>(n, cfg.samples);
    auto pairs = sampler.pairs<T>(n, cfg.samples);
    std::span<const std::array<Element<T>, 3>> tspan(triples);

    guarded(report, "bass", [&] {
        BassRack<T> bass{&alg, mode};
        auto ax = check_rack_axioms(bass, tspan, tol);
        report.checks.push_back(from_report(ax.self_distributivity, "bass.self_distributivity"));
        report.checks.push_back(from_report(ax.left_injectivity, "bass.left_injectivity"));
        report.checks.push_back(from_report(ax.pointed, "bass.pointed"));
    });

    guarded(report, "rh", [&] {
        RhRack<T> rh{&alg, mode};
        auto lifted = map_triples<RhElement<T>>(tspan, [&](const Element<T>& x) { return rh_element(alg, x, mode); });
        auto ax = check_rack_axioms(rh, std::span<const std::array<RhElement<T>, 3>>(lifted), tol);
        ViolationReport all("rh.rack_axioms");
        all.merge(ax.self_distributivity);
        all.merge(ax.left_injectivity);
        all.merge(ax.pointed);
        report.checks.push_back(from_report(all));
        ViolationReport closure("rh.closure");
        for (std::size_t s = 0; s < lifted.size(); ++s) {
            auto c = rh_closure(alg, rh_product(alg, lifted[s][0], lifted[s][1], mode), mode, tol);
            closure.record("sample " + std::to_string(s), c.residual, c.violated);
        }
        report.checks.push_back(from_report(closure));
    });

    guarded(report, "coadjoint_action",
            [&] { report.checks.push_back(from_report(check_coadjoint_action(alg, tspan, mode, tol), "coadjoint_action")); });

    guarded(report, "inner_automorphism_conjugation", [&] {
        ViolationReport all("inner_automorphism_conjugation");
        std::vector<Element<T>> ys;
        for (const auto& t : triples) ys.push_back(t[1]);
        for (std::size_t s = 0; s < std::min<std::size_t>(triples.size(), 5); ++s) {
            Endomorphism<T> alpha = exp_endo(ad(alg, triples[s][0]), mode);
            all.merge(check_automorphism_conjugation(alg, alpha, std::span<const Element<T>>(ys), mode, tol));
        }
        report.checks.push_back(from_report(all));
    });

    guarded(report, "exp_of_derivations", [&] {
        auto der = derivation_algebra(alg);
        std::vector<Endomorphism<T>> usable;
        for (const auto& d : der.derivations) {
            if (is_exact<T>() && !nilpotency_index(d)) continue;
            usable.push_back(d.template cast<T>());
        }
        auto c = from_report(check_exp_of_derivations(alg, std::span<const Endomorphism<T>>(usable), mode, tol),
                             "exp_of_derivations");
        c.details += fmt::format("; {} of {} basis derivations{}", usable.size(), der.derivations.size(),
                                 is_exact<T>() ? " (nilpotent ones)" : "");
        report.checks.push_back(c);
    });

    guarded(report, "embedding_rack_morphism", [&] {
        auto emb = hemi_semi_direct_embedding(alg);
        report.checks.push_back(from_report(
            rack_morphism_check(alg, emb.target, emb.map, std::span<const std::array<Element<T>, 2>>(pairs), mode, tol),
            "embedding_rack_morphism"));
    });
}

template <Scalar T>
void cmd_bch(const LeibnizAlgebra& alg, const RunConfig& cfg, RunReport& report) {
    const std::size_t n = alg.dim();
    const BchConfig bcfg{cfg.order.value_or(kMaxBchOrder)};
    if (bcfg.order < 1 || bcfg.order > kMaxBchOrder)
        throw PreconditionFailed(fmt::format("--order must be in [1, {}] for bch", kMaxBchOrder));
    require_length(cfg.x, n, "--x");
    require_length(cfg.y, n, "--y");
    if (cfg.x.has_value() != cfg.y.has_value()) throw PreconditionFailed("--x and --y go together");
    if (!is_lie(alg)) {
        report.checks.push_back({"bch", Status::fail, "0", "BCH needs a Lie algebra; the bracket is not antisymmetric"});
        return;
    }
    if (is_exact<T>() && !nilpotent(alg)) {
        report.checks.push_back(skipped("conj_star_vs_bass", kNeedsNilpotent));
        return;
    }
    const double tol = is_exact<T>() ? 0.0 : kBchFloatTol;
    const ExpMode mode = exp_mode<T>(cfg);
    if (auto cls = nilpotency_class(alg); cls && static_cast<int>(*cls) > bcfg.order)
        report.config_extra.emplace_back("note", fmt::format("order {} is below the nilpotency class {}", bcfg.order, *cls));

    guarded(report, "given_pair", [&] {
        if (!cfg.x) return;
        Element<T> x = cast_vector<T>(*cfg.x), y = cast_vector<T>(*cfg.y);
        Element<T> z = bch(alg, x, y, bcfg);
        Element<T> conj = conj_star(alg, x, y, bcfg);
        Element<T> bass = bass_product(alg, x, y, mode);
        auto c = compare(conj, bass, tol);
        report.checks.push_back({"given_pair", c.violated ? Status::fail : Status::pass, format_residual(c.residual),
                                 fmt::format("X*Y = {}; conj_*(X,Y) = {}; X|>Y = {}", vector_text(z), vector_text(conj),
                                             vector_text(bass))});
    });

    guarded(report, "conj_star_vs_bass", [&] {
        Sampler sampler(cfg.seed);
        auto pairs = sampler.pairs<T>(n, cfg.samples, 0.25);
        report.checks.push_back(from_report(
            verify_conj_identity(alg, std::span<const std::array<Element<T>, 2>>(pairs), bcfg, mode, tol)));
    });
}

template <Scalar T>
void cmd_cocycle(const LeibnizAlgebra& alg, const RunConfig& cfg, RunReport& report) {
    report.config_extra.emplace_back("cocycle_sign", std::to_string(kRackCocycleSeriesSign));
    report.config_extra.emplace_back("cocycle_omega", "s([X,Y]) - [s(X),s(Y)]");
    const int order = cfg.order.value_or(static_cast<int>(alg.dim()));
    if (order < 1) throw PreconditionFailed("--order must be positive for cocycle");

    auto leibniz = verify_leibniz(alg);
    if (!leibniz.ok()) {
        report.checks.push_back(from_report(leibniz, "leibniz_identity"));
        return;
    }
    if (is_exact<T>() && !nilpotent(alg)) {
        report.checks.push_back(skipped("series_vs_exact", kNeedsNilpotent));
        return;
    }
    guarded(report, "series_vs_exact", [&] {
        const ExtensionData ext = build_extension(alg);
        const std::size_t q = ext.quotient_dim();
        const ExpMode mode = exp_mode<T>(cfg);
        const double tol = kRackTol;
        if (q == 0) {
            report.checks.push_back(skipped("series_vs_exact", "the quotient by the left center is zero"));
            return;
        }
        Sampler sampler(cfg.seed);
        auto pairs = sampler.pairs<T>(q, cfg.samples);
        ViolationReport pinned("series_vs_exact");
        std::size_t opposite_agrees = 0, nonzero = 0;
        for (std::size_t s = 0; s < pairs.size(); ++s) {
            const auto& [x, y] = pairs[s];
            auto exact = rack_cocycle_exact(alg, ext, x, y, mode);
            auto series = rack_cocycle_series(alg, ext, x, y, order, kRackCocycleSeriesSign);
            auto flipped = rack_cocycle_series(alg, ext, x, y, order, -kRackCocycleSeriesSign);
            auto c = compare(series, exact, tol);
            pinned.record("sample " + std::to_string(s), c.residual, c.violated);
            if (!compare(flipped, exact, tol).violated) ++opposite_agrees;
            if (!is_zero_vector(exact)) ++nonzero;
        }
        report.checks.push_back(from_report(pinned));
        report.checks.push_back(
            {"sign_convention", Status::pass, "0",
             fmt::format("f(X,Y) = {}sum_{{p+q<N}} ad_(sX)^p omega(X, ad_X^q Y) / (p+q+1)!, omega(X,Y) = s([X,Y]) - "
                         "[s(X),s(Y)], N = {}; the opposite sign agrees on {} of {} samples ({} with f != 0)",
                         kRackCocycleSeriesSign < 0 ? "-" : "+", order, opposite_agrees, pairs.size(), nonzero)});
    });
}

template <Scalar T>
void cmd_quantize(const LeibnizAlgebra& alg, const RunConfig& cfg, RunReport& report) {
    const std::size_t n = alg.dim();
    const ExpMode mode = exp_mode<T>(cfg);
    const double tol = is_exact<T>() ? 0.0 : kRackTol;
    const bool can_exp = !is_exact<T>() || nilpotent(alg);
    Sampler sampler(cfg.seed);
    auto triples = sampler.triples<T>(n, cfg.samples);
    std::span<const std::array<Element<T>, 3>> tspan(triples);

    auto poly_close = [&](const Observable<T>& a, const Observable<T>& b) {
        double r = 0.0;
        const Observable<T> diff = a - b;
        for (const auto& [e, c] : diff.terms()) r = std::max(r, std::fabs(to_double(c)));
        return Comparison{r, is_exact<T>() ? r != 0.0 || !(a == b) : r > 1e-9};
    };

    if (can_exp) {
        guarded(report, "label_rack_axioms", [&] {
            // Labels E_X multiply through quantum_rack_unitary.
            struct LabelRack {
                using Element = ExpLabel<T>;
                const LeibnizAlgebra* alg;
                ExpMode mode;
                Element product(const Element& a, const Element& b) const {
                    return quantum_rack_unitary(*alg, a, b, mode);
                }
                Element unit() const { return {zeros<T>(alg->dim())}; }
                static Comparison compare(const Element& a, const Element& b, double t) {
                    return leibrack::compare(a.x, b.x, t);
                }
            };
            auto labels = map_triples<ExpLabel<T>>(tspan, [](const Element<T>& x) { return ExpLabel<T>{x}; });
            auto ax = check_rack_axioms(LabelRack{&alg, mode}, std::span<const std::array<ExpLabel<T>, 3>>(labels),
                                        kRackTol);
            ViolationReport all("label_rack_axioms");
            all.merge(ax.self_distributivity);
            all.merge(ax.left_injectivity);
            all.merge(ax.pointed);
            report.checks.push_back(from_report(all));
        });

        guarded(report, "quantum_action_law", [&] {
            std::vector<std::array<Element<T>, 2>> labels;
            for (std::size_t s = 0; s < std::min<std::size_t>(triples.size(), 20); ++s)
                labels.push_back({triples[s][0], triples[s][1]});
            std::vector<Observable<T>> observables;
            for (int k = 0; k < 3; ++k) observables.push_back(random_observable<T>(sampler, n, 3));
            report.checks.push_back(from_report(
                check_quantum_action_law(alg, std::span<const std::array<Element<T>, 2>>(labels),
                                         std::span<const Observable<T>>(observables), mode),
                "quantum_action_law"));
        });

        guarded(report, "gutt_vs_quantum_rack", [&] {
            if (!is_lie(alg)) {
                report.checks.push_back(skipped("gutt_vs_quantum_rack", "not a Lie algebra"));
                return;
            }
            BchConfig bcfg;
            ViolationReport r("gutt_vs_quantum_rack");
            const double bound = is_exact<T>() ? 1.0 : 0.25;
            for (std::size_t s = 0; s < triples.size(); ++s) {
                ExpLabel<T> a{scaled(triples[s][0], T(bound))}, b{scaled(triples[s][1], T(bound))};
                auto c = compare(gutt_rack_unitary(alg, a, b, bcfg).x, quantum_rack_unitary(alg, a, b, mode).x,
                                 is_exact<T>() ? 0.0 : kBchFloatTol);
                r.record("sample " + std::to_string(s), c.residual, c.violated);
            }
            report.checks.push_back(from_report(r));
        });

        guarded(report, "generating_function", [&] {
            report.checks.push_back(
                from_report(check_generating_conditions(alg, tspan, mode, kRackTol), "generating_function"));
        });
    } else {
        for (const char* name : {"label_rack_axioms", "quantum_action_law", "gutt_vs_quantum_rack", "generating_function"})
            report.checks.push_back(skipped(name, kNeedsNilpotent));
    }

    guarded(report, "right_leibniz", [&] {
        ViolationReport r("right_leibniz");
        for (std::size_t s = 0; s < 2 * cfg.samples; ++s) {
            auto f = random_observable<T>(sampler, n, 3);
            auto g = random_observable<T>(sampler, n, 3);
            auto h = random_observable<T>(sampler, n, 3);
            bool ok = verify_right_leibniz(alg, f, g, h);
            r.record("sample " + std::to_string(s), 0.0, !ok);
        }
        report.checks.push_back(from_report(r));
    });

    guarded(report, "linear_bracket", [&] {
        ViolationReport r("linear_bracket");
        for (std::size_t s = 0; s < triples.size(); ++s) {
            const auto& a = triples[s][0];
            const auto& b = triples[s][1];
            auto c = poly_close(poisson_bracket(alg, Observable<T>::linear(a), Observable<T>::linear(b)),
                                Observable<T>::linear(bracket(alg, a, b)));
            r.record("sample " + std::to_string(s), c.residual, c.violated);
        }
        report.checks.push_back(from_report(r));
    });

    guarded(report, "zeroth_order_associativity", [&] {
        ViolationReport r("zeroth_order_associativity");
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            auto f = random_observable<T>(sampler, n, 3);
            auto g = random_observable<T>(sampler, n, 3);
            auto h = random_observable<T>(sampler, n, 3);
            auto c = poly_close(zeroth_order_product(zeroth_order_product(f, g), h),
                                zeroth_order_product(f, zeroth_order_product(g, h)));
            r.record("sample " + std::to_string(s), c.residual, c.violated);
        }
        report.checks.push_back(from_report(r));
    });

    guarded(report, "differential_at_zero", [&] {
        ViolationReport r("differential_at_zero");
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            auto f = random_observable<T>(sampler, n, 3);
            auto g = random_observable<T>(sampler, n, 3);
            Vector<T> lhs = (f * g).gradient_at_zero();
            Vector<T> rhs = scaled(g.gradient_at_zero(), f.constant_term()) + scaled(f.gradient_at_zero(), g.constant_term());
            auto c = compare(lhs, rhs, tol == 0.0 ? 0.0 : kRackTol);
            r.record("sample " + std::to_string(s), c.residual, c.violated);
        }
        report.checks.push_back(from_report(r));
    });
}

void cmd_hessian(const LeibnizAlgebra& alg, const RunConfig& cfg, RunReport& report) {
    if (cfg.mode != ScalarMode::exact) throw PreconditionFailed("hessian needs exact xi; drop --mode float");
    require_length(cfg.xi, alg.dim(), "--xi");
    std::vector<Covector<Rational>> xis;
    if (cfg.xi) {
        xis.push_back(*cfg.xi);
    } else {
        Sampler sampler(cfg.seed);
        for (std::size_t s = 0; s < cfg.samples; ++s) xis.push_back(sampler.vector<Rational>(alg.dim()));
    }
    ViolationReport det("det_equals_one"), sig("signature_zero"), crit("critical_point");
    std::string single;
    for (std::size_t s = 0; s < xis.size(); ++s) {
        const std::string where = "xi = " + vector_text(xis[s]);
        auto h = hessian_check(alg, xis[s]);
        det.record(where, std::fabs(Rational(h.det - 1).get_d()), h.det != 1);
        sig.record(where, std::fabs(static_cast<double>(h.signature)), h.signature != 0);
        crit.record(where, 0.0, !h.critical_point_ok);
        if (xis.size() == 1) single = fmt::format("det={}, signature={}", leibrack::to_string(h.det), h.signature);
    }
    for (auto* r : {&det, &sig, &crit}) {
        auto c = from_report(*r);
        if (!single.empty()) c.details = single + "; " + c.details;
        report.checks.push_back(c);
    }
}

void cmd_tangent(const LeibnizAlgebra& alg, const RunConfig& cfg, RunReport& report) {
    if (!(cfg.step > 0.0)) throw PreconditionFailed("--step must be positive");
    report.config.mode = ScalarMode::floating;  // finite differences are float only
    const ExpMode mode = ExpMode::floating(cfg.order.value_or(kDefaultExpOrder));
    RackProduct product = [&](const Vector<double>& x, const Vector<double>& y) { return bass_product(alg, x, y, mode); };
    guarded(report, "structure_constants", [&] {
        auto rec = tangent_leibniz_recover(product, alg.dim(), cfg.step, &alg);
        double err = rec.max_error.value_or(0.0);
        report.checks.push_back({"structure_constants", err < kTangentTol ? Status::pass : Status::fail,
                                 format_residual(err),
                                 fmt::format("max |c_recovered - c| over {} constants, step {}, tolerance {}",
                                             rec.table.size(), cfg.step, kTangentTol)});
    });
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

std::string format_residual(double r) {
    if (r == 0.0) return "0";
    return fmt::format("{:.6e}", r);
}

bool RunReport::ok() const {
    for (const auto& c : checks)
        if (c.status == Status::fail) return false;
    return true;
}

std::string RunReport::to_json() const {
    using json = nlohmann::ordered_json;
    json doc;
    doc["command"] = command;
    doc["algebra_name"] = algebra_name;
    json list = json::array();
    for (const auto& c : checks) {
        json item;
        item["name"] = c.name;
        item["status"] = to_string(c.status);
        item["residual"] = c.residual;
        item["details"] = c.details;
        list.push_back(std::move(item));
    }
    doc["checks"] = std::move(list);
    doc["seed"] = seed;
    json conf;
    conf["mode"] = config.mode == ScalarMode::exact ? "exact" : "float";
    conf["order"] = config.order ? json(*config.order) : json(nullptr);
    conf["samples"] = config.samples;
    conf["step"] = config.step;
    conf["xi"] = config.xi ? json(csv(*config.xi)) : json(nullptr);
    conf["x"] = config.x ? json(csv(*config.x)) : json(nullptr);
    conf["y"] = config.y ? json(csv(*config.y)) : json(nullptr);
    for (const auto& [k, v] : config_extra) conf[k] = v;
    doc["config"] = std::move(conf);
    doc["version"] = kVersion;
    doc["status"] = ok() ? "pass" : "fail";
    return doc.dump(2) + "\n";
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << fmt::format("{} {} (mode {}, seed {})\n", command, algebra_name,
                      config.mode == ScalarMode::exact ? "exact" : "float", seed);
    for (const auto& [k, v] : config_extra) os << fmt::format("  {}: {}\n", k, v);
    for (const auto& c : checks)
        os << fmt::format("  {:<7} {:<34} residual {:<13} {}\n", to_string(c.status), c.name, c.residual, c.details);
    os << (ok() ? "result: pass\n" : "result: fail\n");
    return os.str();
}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"validate", "analyze",        "rack",    "bch",
                                                "cocycle",  "quantize-check", "hessian", "tangent"};
    return names;
}

std::optional<std::string> canonical_command(const std::string& name) {
    if (name == "quantize") return "quantize-check";
    for (const auto& c : commands())
        if (c == name) return c;
    return std::nullopt;
}

RunReport run(const std::string& command, const LeibnizAlgebra& alg, const RunConfig& cfg) {
    auto name = canonical_command(command);
    if (!name) throw PreconditionFailed("unknown command '" + command + "'");
    if (cfg.samples == 0) throw PreconditionFailed("--samples must be positive");
    if (cfg.order && *cfg.order < 1) throw PreconditionFailed("--order must be positive");

    RunReport report;
    report.command = *name;
    report.algebra_name = alg.name();
    report.seed = cfg.seed;
    report.config = cfg;
    const bool exact = cfg.mode == ScalarMode::exact;

    if (*name == "validate")
        cmd_validate(alg, report);
    else if (*name == "analyze")
        cmd_analyze(alg, report);
    else if (*name == "rack")
        exact ? cmd_rack<Rational>(alg, cfg, report) : cmd_rack<double>(alg, cfg, report);
    else if (*name == "bch")
        exact ? cmd_bch<Rational>(alg, cfg, report) : cmd_bch<double>(alg, cfg, report);
    else if (*name == "cocycle")
        exact ? cmd_cocycle<Rational>(alg, cfg, report) : cmd_cocycle<double>(alg, cfg, report);
    else if (*name == "quantize-check")
        exact ? cmd_quantize<Rational>(alg, cfg, report) : cmd_quantize<double>(alg, cfg, report);
    else if (*name == "hessian")
        cmd_hessian(alg, cfg, report);
    else
        cmd_tangent(alg, cfg, report);
    return report;
}

Vector<Rational> parse_vector(const std::string& text) {
    Vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty entry in vector '" + text + "'");
        out.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
    if (out.empty()) throw ParseError("empty vector");
    return out;
}

}  // namespace leibrack::cli
