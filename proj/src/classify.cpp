#include "meixner/classify.hpp"

#include <array>

#include "meixner/ortho.hpp"

namespace meixner {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Hermite: return "I-Hermite";
        case CaseTag::Laguerre: return "II-Laguerre";
        case CaseTag::Charlier: return "III-Charlier";
        case CaseTag::Meixner: return "IV-Meixner";
        case CaseTag::MeixnerPollaczek: return "V-Meixner-Pollaczek";
        case CaseTag::Krawtchouk: return "VI-Krawtchouk";
        case CaseTag::NotOrthogonal: return "NotOrthogonal";
    }
    return "unknown";
}

namespace {

RatSeries quadratic_series(const Rat& c0, const Rat& c1, const Rat& c2, std::size_t order) {
    return RatSeries(std::vector<Rat>{c0, c1, c2}, std::max<std::size_t>(order, 2));
}

bool all_rational(const std::vector<std::pair<std::string, Surd>>& params) {
    for (const auto& [name, v] : params)
        if (!v.is_rational()) return false;
    return true;
}

/// Parameters, scale and shift of the standard family behind the spec.
void recover_parameters(ClassificationResult& r) {
    const RecurrenceSpec& sp = r.spec;
    const Surd lambda(sp.lambda_rec);
    const Surd k2(sp.k2);
    const Surd l1(sp.l1);
    const Surd one(1);
    switch (r.case_tag) {
        case CaseTag::Hermite: {
            r.scale = Surd::sqrt(Rat(-2) * sp.k2);
            r.shift = -l1;
            break;
        }
        case CaseTag::Laguerre: {
            const Surd root = r.roots.alpha;
            const Surd alpha = -k2 / (root * root) - one;
            r.params = {{"alpha", alpha}};
            r.scale = -root;
            r.shift = root * (alpha + one) - l1;
            break;
        }
        case CaseTag::Charlier: {
            const Surd a = -k2 / (lambda * lambda);
            r.params = {{"a", a}};
            r.scale = -lambda;
            r.shift = lambda * a - l1;
            break;
        }
        case CaseTag::Meixner: {
            // both roots share the sign of lambda; the larger modulus gives the scale
            const bool negative = sp.lambda_rec.sign() < 0;
            const Surd big = negative ? r.roots.alpha : r.roots.beta;
            const Surd small = negative ? r.roots.beta : r.roots.alpha;
            const Surd c = small / big;
            const Surd s = -(one - c) * big;
            const Surd beta = -k2 * (one - c) * (one - c) / (c * s * s);
            r.params = {{"beta", beta}, {"c", c}};
            r.scale = s;
            r.shift = s * (-beta * c / (one - c)) - l1;
            break;
        }
        case CaseTag::MeixnerPollaczek: {
            const Surd s = Surd::sqrt(-r.roots.discriminant);
            const Surd lambda_mp = k2 / (Surd(sp.kappa) * Surd(2));
            r.params = {{"lambda", lambda_mp}, {"cot_phi", lambda / s}};
            r.scale = s;
            r.shift = lambda_mp * lambda - l1;
            break;
        }
        case CaseTag::Krawtchouk: {
            const Surd s = Surd::sqrt(r.roots.discriminant);
            const Surd p = r.roots.beta / s;
            const Surd big_n(-sp.k2 / sp.kappa);
            r.params = {{"p", p}, {"N", big_n}};
            r.scale = s;
            r.shift = s * (-p * big_n) - l1;
            break;
        }
        case CaseTag::NotOrthogonal: return;
    }
    if (!all_rational(r.params)) return;
    auto rat = [&r](std::size_t i) { return r.params[i].second.to_rat(); };
    switch (r.case_tag) {
        case CaseTag::Hermite: r.family = FamilyInstance(Hermite{}); break;
        case CaseTag::Laguerre: r.family = FamilyInstance(Laguerre{rat(0)}); break;
        case CaseTag::Charlier: r.family = FamilyInstance(Charlier{rat(0)}); break;
        case CaseTag::Meixner: r.family = FamilyInstance(Meixner{rat(0), rat(1)}); break;
        case CaseTag::MeixnerPollaczek:
            r.family = FamilyInstance(MeixnerPollaczek{rat(0), Angle::from_cot(rat(1))});
            break;
        case CaseTag::Krawtchouk: r.family = FamilyInstance(Krawtchouk{rat(0), rat(1).num().get_si()}); break;
        case CaseTag::NotOrthogonal: break;
    }
}

}  // namespace

ClassificationResult classify(const RecurrenceSpec& spec, std::size_t order) {
    if (spec.k2.is_zero()) throw MathError("degenerate, not orthogonal");
    ClassificationResult r;
    r.spec = spec;
    r.roots = factor_quadratic(spec.lambda_rec, spec.kappa);
    r.favard = favard_check(spec, 2 * order + 2);

    // t'(u) = 1 - lambda t - kappa t^2; f'/f = (l1 + k2 t)/(1 - lambda t - kappa t^2)
    const std::array<Rat, 3> q{Rat(1), -spec.lambda_rec, -spec.kappa};
    const RatSeries t = solve_autonomous<Rat>(q, order);
    const RatSeries numer(std::vector<Rat>{spec.l1, spec.k2}, order);
    const RatSeries f = solve_log_derivative(numer, quadratic_series(Rat(1), -spec.lambda_rec, -spec.kappa, order),
                                             order);
    r.pair = ShefferPair::from_lowering(f, t);

    if (!r.favard.orthogonal()) {
        r.case_tag = CaseTag::NotOrthogonal;
        return r;
    }
    switch (r.roots.tag) {
        case RootTag::BothZero: r.case_tag = CaseTag::Hermite; break;
        case RootTag::OneZero: r.case_tag = CaseTag::Charlier; break;
        case RootTag::EqualNonzero: r.case_tag = CaseTag::Laguerre; break;
        case RootTag::DistinctReal:
            r.case_tag = spec.kappa.sign() < 0 ? CaseTag::Meixner : CaseTag::Krawtchouk;
            break;
        case RootTag::ComplexConjugate: r.case_tag = CaseTag::MeixnerPollaczek; break;
    }
    if (r.case_tag == CaseTag::Krawtchouk && r.favard.kind != FavardKind::Finite) {
        r.case_tag = CaseTag::NotOrthogonal;
        return r;
    }
    recover_parameters(r);
    return r;
}

OperatorForm recover_operator(const RootPair& roots, std::size_t order) {
    OperatorForm out;
    const RatSeries u = RatSeries::variable(order);
    if (roots.tag == RootTag::BothZero) {
        out.formula = "t(D) = D";
        out.series = u;
        return out;
    }
    if (roots.tag == RootTag::EqualNonzero) {
        const Rat a = roots.alpha.to_rat();
        out.formula = "t(D) = D/(1 + (" + a.str() + ") D)";
        out.series = u * reciprocal(RatSeries::constant(Rat(1), order) + u * a);
        return out;
    }
    const Surd& a = roots.alpha;
    const Surd& b = roots.beta;
    out.formula = "t(D) = (E - 1)/((" + a.str() + ") E - (" + b.str() + ")), E = exp((" + (a - b).str() + ") D)";
    const auto su = series_cast<Surd>(u);
    const auto e = exp(su * (a - b));
    const auto one = Series<Surd>::constant(Surd(1), order);
    out.series = rational_series((e - one) / (e * a - one * b));
    return out;
}

// ---------------------------------------------------------------- eigen-equation

std::string family_equation_text(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Hermite: return "y'' - 2x y' + 2n y = 0";
        case FamilyTag::Laguerre: return "x y'' + (alpha+1-x) y' + n y = 0";
        case FamilyTag::Charlier: return "-n y(x) = a y(x+1) - (x+a) y(x) + x y(x-1)";
        case FamilyTag::Meixner: return "n(c-1) y(x) = c(x+beta) y(x+1) - [x + (x+beta)c] y(x) + x y(x-1)";
        case FamilyTag::MeixnerPollaczek:
            return "e^{i phi}(lambda - ix) y(x+i) + 2i[x cos phi - (n+lambda) sin phi] y(x) - e^{-i phi}(lambda + ix) "
                   "y(x-i) = 0";
        case FamilyTag::Krawtchouk:
            return "-n y(x) = p(N-x) y(x+1) - [p(N-x) + x(1-p)] y(x) + x(1-p) y(x-1)";
    }
    return "";
}

bool family_equation_holds(const FamilyInstance& fam, long n, const RatPoly& y) {
    const Rat nn(n);
    const RatPoly x = RatPoly::linear(Rat(0));
    return std::visit(
        [&](const auto& p) -> bool {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Hermite>) {
                const RatPoly d1 = y.derivative();
                return (d1.derivative() - x * d1 * Rat(2) + y * (Rat(2) * nn)).is_zero();
            } else if constexpr (std::is_same_v<T, Laguerre>) {
                const RatPoly d1 = y.derivative();
                const RatPoly coef = RatPoly::constant(p.alpha + Rat(1)) - x;
                return (x * d1.derivative() + coef * d1 + y * nn).is_zero();
            } else if constexpr (std::is_same_v<T, Charlier>) {
                const RatPoly res = y.shifted(Rat(1)) * p.a - (x + RatPoly::constant(p.a)) * y +
                                    x * y.shifted(Rat(-1)) + y * nn;
                return res.is_zero();
            } else if constexpr (std::is_same_v<T, Meixner>) {
                const RatPoly xb = x + RatPoly::constant(p.beta);
                const RatPoly res = xb * y.shifted(Rat(1)) * p.c - (x + xb * p.c) * y + x * y.shifted(Rat(-1)) -
                                    y * (nn * (p.c - Rat(1)));
                return res.is_zero();
            } else if constexpr (std::is_same_v<T, Krawtchouk>) {
                const Rat q = Rat(1) - p.p;
                const RatPoly a = (RatPoly::constant(Rat(p.N)) - x) * p.p;
                const RatPoly res =
                    a * y.shifted(Rat(1)) - (a + x * q) * y + x * y.shifted(Rat(-1)) * q + y * nn;
                return res.is_zero();
            } else {
                using CPoly = Poly<CRat>;
                const CRat i = CRat::i();
                const CRat e = p.phi.exp_i();
                const CRat lam(p.lambda);
                const CPoly cy = poly_cast<CRat>(y);
                const CPoly cx = CPoly::linear(CRat(0));
                const CPoly plus = (CPoly::constant(lam) - cx * i) * e;
                const CPoly mid = (cx * CRat(p.phi.cos_exact()) - CPoly::constant((CRat(nn) + lam) * CRat(p.phi.sin_exact()))) *
                                  (CRat(2) * i);
                const CPoly minus = (CPoly::constant(lam) + cx * i) * e.conj();
                const CPoly res = plus * cy.shifted(i) + mid * cy - minus * cy.shifted(-i);
                return res.is_zero();
            }
        },
        fam.params());
}

EigenEquationReport eigen_equation_check(const ClassificationResult& result, std::size_t n_max) {
    EigenEquationReport rep;
    rep.n_max = n_max;
    const RecurrenceSpec& sp = result.spec;
    const PolySequence seq = expand(result.pair, n_max);
    const RatSeries& t = result.pair.t();
    const RatSeries dt = t.derivative();
    const Rat sum = sp.lambda_rec;  // alpha + beta
    const Rat prod = -sp.kappa;     // alpha beta
    rep.operator_identity_holds = true;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Rat nn(static_cast<long>(n));
        const RatPoly& p = seq[n];
        const RatPoly tp = apply_tD(t, p);
        const RatPoly ttp = apply_tD(t, tp);
        // (n+2) P_n = (x + l1 + (n+1)(alpha+beta)) t(D) P_n + 2 t'(D) P_n + (k2 - n alpha beta) t(D)^2 P_n
        const RatPoly lhs = p * (nn + Rat(2));
        const RatPoly rhs = RatPoly::linear(sp.l1 + (nn + Rat(1)) * sum) * tp + apply_tD(dt, p) * Rat(2) +
                            ttp * (sp.k2 - nn * prod);
        const RatPoly res = lhs - rhs;
        rep.operator_residuals.push_back(res.is_zero() ? "0" : to_string(res));
        if (!res.is_zero()) rep.operator_identity_holds = false;
    }
    if (result.family && result.scale.is_rational() && result.shift.is_rational()) {
        const FamilyInstance& fam = *result.family;
        if (fam.tag() == FamilyTag::MeixnerPollaczek && !fam.as<MeixnerPollaczek>().phi.exact_trig()) return rep;
        rep.family_equation = family_equation_text(fam.tag());
        rep.family_checked = true;
        const Rat s = result.scale.to_rat();
        const Rat x0 = result.shift.to_rat();
        std::size_t top = n_max;
        if (auto big_n = fam.max_degree()) top = std::min<std::size_t>(top, static_cast<std::size_t>(*big_n));
        for (std::size_t n = 0; n <= top; ++n) {
            // P_n(s y + x0) = s^n p_n(y)
            const RatPoly y = seq[n].affine(s, x0);
            if (!family_equation_holds(fam, static_cast<long>(n), y)) rep.family_failures.push_back(n);
        }
    }
    return rep;
}

// ---------------------------------------------------------------- mgf

MgfReport mgf_identity_check(const RecurrenceSpec& spec, const RatSeries& f, const RatSeries& t, std::size_t order) {
    MgfReport rep;
    rep.order = order;
    const MomentFunctional mf = moments_from_recurrence(spec, order);
    rep.moment_side = RatSeries(order);
    Rat fact(1);
    for (std::size_t k = 0; k <= order; ++k) {
        if (k > 0) fact *= Rat(static_cast<long>(k));
        rep.moment_side[k] = mf.moments[k] / fact;
    }
    rep.pair_side = reciprocal(compose(f.truncated(order), t.truncated(order)));
    for (std::size_t k = 0; k <= order; ++k) {
        if (!(rep.moment_side[k] == rep.pair_side[k])) {
            rep.first_difference = k;
            break;
        }
    }
    return rep;
}

MgfReport mgf_identity_check(const ClassificationResult& result, std::size_t order) {
    return mgf_identity_check(result.spec, result.pair.f(), result.pair.t(), order);
}

}  // namespace meixner
