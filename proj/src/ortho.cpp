#include "meixner/ortho.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace meixner {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

// ---------------------------------------------------------------- moments

MomentFunctional moments_from_recurrence(const RecurrenceSpec& spec, std::size_t m) {
    const FavardReport fav = favard_check(spec, m + 1);
    if (fav.kind == FavardKind::NotOrthogonal && fav.first_nonnegative &&
        *fav.first_nonnegative <= static_cast<long>(m)) {
        throw MathError("moments: positivity fails at k_{n+1} with n = " + std::to_string(*fav.first_nonnegative));
    }
    MomentFunctional mf;
    mf.moments.reserve(m + 1);
    // coordinates of x^k in the basis P_0..P_k
    std::vector<Rat> c{Rat(1)};
    mf.moments.push_back(Rat(1));
    for (std::size_t k = 1; k <= m; ++k) {
        // x P_n = P_{n+1} - l_{n+1} P_n - k_{n+1} P_{n-1}
        std::vector<Rat> next(c.size() + 1);
        for (std::size_t n = 0; n < c.size(); ++n) {
            if (c[n].is_zero()) continue;
            next[n + 1] += c[n];
            next[n] -= c[n] * spec.l(n + 1);
            if (n > 0) next[n - 1] -= c[n] * spec.k(n + 1);
        }
        c = std::move(next);
        mf.moments.push_back(c[0]);
    }
    return mf;
}

std::vector<Rat> hankel_determinants(const MomentFunctional& mf, std::size_t max_r) {
    if (mf.moments.size() < 2 * max_r + 1) throw MathError("hankel: not enough moments");
    std::vector<Rat> dets;
    dets.reserve(max_r + 1);
    for (std::size_t r = 0; r <= max_r; ++r) {
        const std::size_t n = r + 1;
        std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = mf.moments[i + j];
        Rat det(1);
        for (std::size_t col = 0; col < n && !det.is_zero(); ++col) {
            std::size_t piv = col;
            while (piv < n && a[piv][col].is_zero()) ++piv;
            if (piv == n) {
                det = Rat(0);
                break;
            }
            if (piv != col) {
                std::swap(a[piv], a[col]);
                det = -det;
            }
            det *= a[col][col];
            for (std::size_t i = col + 1; i < n; ++i) {
                if (a[i][col].is_zero()) continue;
                const Rat f = a[i][col] / a[col][col];
                for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            }
        }
        dets.push_back(det);
    }
    return dets;
}

// ---------------------------------------------------------------- complex gamma

CF64 log_gamma_complex(CF64 z) {
    constexpr double pi = std::numbers::pi;
    if (z.real() <= 0.0 && z.imag() == 0.0 && z.real() == std::floor(z.real())) {
        throw MathError("log_gamma: pole at a nonpositive integer");
    }
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma_complex(1.0 - z);
    }
    static constexpr std::array<double, 9> kCoeff = {
        0.99999999999980993,     676.5203681218851,   -1259.1392167224028,
        771.32342877765313,      -176.61502916214059, 12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    constexpr double g = 7.0;
    z -= 1.0;
    CF64 x = kCoeff[0];
    for (std::size_t i = 1; i < kCoeff.size(); ++i) x += kCoeff[i] / (z + static_cast<double>(i));
    const CF64 t = z + g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// ---------------------------------------------------------------- quadrature

GaussRule quadrature_from_jacobi(const RecurrenceSpec& spec, std::size_t n_points) {
    if (n_points == 0) return {};
    for (std::size_t j = 1; j < n_points; ++j) {
        if (spec.k(j + 1).sign() >= 0) {
            throw MathError("quadrature: k_{n+1} >= 0 at n = " + std::to_string(j));
        }
    }
    Eigen::VectorXd diag(static_cast<Eigen::Index>(n_points));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(n_points > 1 ? n_points - 1 : 0));
    for (std::size_t j = 0; j < n_points; ++j) diag[static_cast<Eigen::Index>(j)] = -spec.l(j + 1).to_double();
    for (std::size_t j = 1; j < n_points; ++j) {
        sub[static_cast<Eigen::Index>(j - 1)] = std::sqrt(-spec.k(j + 1).to_double());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw MathError("quadrature: eigen-decomposition failed");
    GaussRule rule;
    for (std::size_t i = 0; i < n_points; ++i) {
        const auto ii = static_cast<Eigen::Index>(i);
        const double v0 = solver.eigenvectors()(0, ii);
        rule.nodes.push_back(solver.eigenvalues()[ii]);
        rule.weights.push_back(v0 * v0);
    }
    return rule;
}

namespace {

constexpr std::size_t kLegendrePoints = 20;

const GaussRule& legendre_rule() {
    static const GaussRule rule = [] {
        // monic Legendre: P_{n+1} = x P_n - n^2/(4n^2-1) P_{n-1}
        Eigen::VectorXd diag = Eigen::VectorXd::Zero(kLegendrePoints);
        Eigen::VectorXd sub(kLegendrePoints - 1);
        for (std::size_t n = 1; n < kLegendrePoints; ++n) {
            const double nn = static_cast<double>(n);
            sub[static_cast<Eigen::Index>(n - 1)] = nn / std::sqrt(4.0 * nn * nn - 1.0);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        GaussRule r;
        for (std::size_t i = 0; i < kLegendrePoints; ++i) {
            const auto ii = static_cast<Eigen::Index>(i);
            const double v0 = solver.eigenvectors()(0, ii);
            r.nodes.push_back(solver.eigenvalues()[ii]);
            r.weights.push_back(2.0 * v0 * v0);
        }
        return r;
    }();
    return rule;
}

}  // namespace

double integrate(const std::function<double(double)>& g, double a, double b, std::size_t panels, Execution exec) {
    if (panels == 0) return 0.0;
    const GaussRule& gl = legendre_rule();
    const double h = (b - a) / static_cast<double>(panels);
    std::vector<double> partial(panels, 0.0);
    const auto n = static_cast<long>(panels);
#pragma omp parallel for schedule(static) if (exec == Execution::Parallel)
    for (long p = 0; p < n; ++p) {
        const double lo = a + h * static_cast<double>(p);
        double s = 0.0;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * g(lo + 0.5 * h * (gl.nodes[i] + 1.0));
        partial[static_cast<std::size_t>(p)] = 0.5 * h * s;
    }
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

// ---------------------------------------------------------------- discrete sums

namespace {

/// Discrete weight w(x) on x = 0, 1, ... given by w(0) and the exact step
/// w(x+1)/w(x); `step_bound(x)` bounds the step for every y >= x and is
/// nonincreasing.
struct DiscreteModel {
    Rat w0;
    std::function<Rat(long)> step;
    std::function<Rat(long)> step_bound;
    Rat step_limit;
    std::optional<long> last;
};

DiscreteModel discrete_model(const FamilyInstance& fam, WeightPerturbation perturbation) {
    return std::visit(
        [perturbation](const auto& p) -> DiscreteModel {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Charlier>) {
                const Rat a = p.a;
                return {Rat(1), [a](long x) { return a / Rat(x + 1); }, [a](long x) { return a / Rat(x + 1); },
                        Rat(0), std::nullopt};
            } else if constexpr (std::is_same_v<T, Meixner>) {
                const Rat beta = p.beta;
                const Rat c = perturbation == WeightPerturbation::DropMeixnerPower ? Rat(1) : p.c;
                auto step = [beta, c](long x) { return c * (beta + Rat(x)) / Rat(x + 1); };
                auto bound = [beta, c](long x) {
                    const Rat r = (beta + Rat(x)) / Rat(x + 1);
                    return c * std::max(r, Rat(1));
                };
                return {Rat(1), step, bound, c, std::nullopt};
            } else if constexpr (std::is_same_v<T, Krawtchouk>) {
                const Rat odds = p.p / (Rat(1) - p.p);
                const long big_n = p.N;
                auto step = [odds, big_n](long x) { return odds * Rat(big_n - x) / Rat(x + 1); };
                return {(Rat(1) - p.p).pow(big_n), step, step, Rat(0), big_n};
            } else {
                throw MathError("discrete sums need a discrete family");
            }
        },
        fam.params());
}

/// Integer upper bound on the root moduli of p (Fujiwara).
Rat root_bound(const RatPoly& p) {
    const int d = p.degree();
    if (d <= 0) return Rat(0);
    const Rat lead = p.leading().abs();
    long best = 0;
    for (int i = 1; i <= d; ++i) {
        const Rat v = p.coeff(static_cast<std::size_t>(d - i)).abs() / lead;
        if (v.is_zero()) continue;
        auto b = static_cast<long>(std::ceil(std::pow(v.to_double(), 1.0 / i)));
        if (b < 1) b = 1;
        while (Rat(b).pow(i) < v) ++b;
        best = std::max(best, b);
    }
    return Rat(2 * best);
}

struct CertifiedSums {
    long truncation = 0;
    bool finite = false;
    std::vector<Rat> sums;
    std::vector<Rat> tails;
};

/// sum_x w(x) F_a(x) F_b(x) for each requested (a, b), truncated where the
/// ratio-test tail of every entry is below rel_target * min(1, total mass).
CertifiedSums certified_sums(const DiscreteModel& model, const std::vector<RatPoly>& factors,
                             const std::vector<std::pair<std::size_t, std::size_t>>& pairs, const Rat& rel_target,
                             Execution exec) {
    constexpr long kMaxTruncation = 4096;
    if (!model.last && model.step_limit >= Rat(1)) {
        throw MathError("weight series diverges: ratio test limit " + model.step_limit.str() + " >= 1");
    }
    Rat radius(0);
    for (const auto& f : factors) radius = std::max(radius, root_bound(f));
    std::vector<std::vector<Rat>> vals;  // vals[x][i] = F_i(x)
    std::vector<Rat> weights;
    auto push_point = [&](long x) {
        weights.push_back(x == 0 ? model.w0 : weights.back() * model.step(x - 1));
        std::vector<Rat> v;
        v.reserve(factors.size());
        for (const auto& f : factors) v.push_back(f(Rat(x)));
        vals.push_back(std::move(v));
    };

    CertifiedSums out;
    out.tails.assign(pairs.size(), Rat(0));
    if (model.last) {
        for (long x = 0; x <= *model.last; ++x) push_point(x);
        out.truncation = *model.last;
        out.finite = true;
    } else {
        Rat mass(0);
        push_point(0);
        for (long x = 0;; ++x) {
            mass += weights[static_cast<std::size_t>(x)];
            push_point(x + 1);
            const Rat next(x + 1);
            if (!(next > radius)) continue;
            const Rat poly_step = Rat(1) + (next - radius).inverse();
            const Rat target = rel_target * std::min(Rat(1), mass);
            bool ok = true;
            for (std::size_t j = 0; j < pairs.size() && ok; ++j) {
                const int d = factors[pairs[j].first].degree() + factors[pairs[j].second].degree();
                const Rat rho = model.step_bound(x + 1) * poly_step.pow(std::max(d, 0));
                if (!(rho < Rat(1))) {
                    ok = false;
                    break;
                }
                const auto& v = vals[static_cast<std::size_t>(x + 1)];
                const Rat term = (weights[static_cast<std::size_t>(x + 1)] * v[pairs[j].first] * v[pairs[j].second]).abs();
                out.tails[j] = term / (Rat(1) - rho);
                if (out.tails[j] > target) ok = false;
            }
            if (ok) {
                out.truncation = x;
                break;
            }
            if (x >= kMaxTruncation) {
                throw MathError("tail bound not reached by x = " + std::to_string(kMaxTruncation) +
                                "; a larger truncation is required");
            }
        }
    }
    out.sums.assign(pairs.size(), Rat(0));
    const auto npairs = static_cast<long>(pairs.size());
    const std::size_t npts = static_cast<std::size_t>(out.truncation) + 1;
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
    for (long j = 0; j < npairs; ++j) {
        const auto [a, b] = pairs[static_cast<std::size_t>(j)];
        Rat s(0);
        for (std::size_t x = 0; x < npts; ++x) s += weights[x] * vals[x][a] * vals[x][b];
        out.sums[static_cast<std::size_t>(j)] = std::move(s);
    }
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t m = 0; m <= n; ++m)
        for (std::size_t k = m; k <= n; ++k) pairs.emplace_back(m, k);
    return pairs;
}

void fill_from_pairs(GramReport& rep, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                     const std::vector<Rat>& vals) {
    const std::size_t n = rep.n_max + 1;
    rep.entries.assign(n, std::vector<std::string>(n));
    rep.values.assign(n, std::vector<double>(n));
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        const auto [a, b] = pairs[j];
        const std::string s = vals[j].str();
        const double d = vals[j].to_double();
        rep.entries[a][b] = rep.entries[b][a] = s;
        rep.values[a][b] = rep.values[b][a] = d;
    }
}

void summarize(GramReport& rep) {
    const std::size_t n = rep.n_max + 1;
    rep.max_off_diagonal = 0.0;
    rep.min_diagonal = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) {
                rep.min_diagonal = std::min(rep.min_diagonal, rep.values[a][b]);
            } else {
                rep.max_off_diagonal = std::max(rep.max_off_diagonal, std::abs(rep.values[a][b]));
            }
        }
    }
}

/// Relative moments of the Hermite and Laguerre weights: integral x^k w / integral w.
Rat closed_form_moment(const FamilyInstance& fam, std::size_t k) {
    if (fam.tag() == FamilyTag::Hermite) {
        if (k % 2 == 1) return Rat(0);
        Rat v(1);
        for (std::size_t j = 1; j < k; j += 2) v *= Rat(static_cast<long>(j), 2);
        return v;
    }
    return pochhammer(fam.as<Laguerre>().alpha + Rat(1), static_cast<long>(k));
}

std::vector<double> double_recurrence_values(const RecurrenceSpec& spec, std::size_t n_max, double x) {
    std::vector<double> v(n_max + 1);
    v[0] = 1.0;
    if (n_max >= 1) v[1] = x + spec.l(1).to_double();
    for (std::size_t n = 1; n < n_max; ++n) {
        v[n + 1] = (x + spec.l(n + 1).to_double()) * v[n] + spec.k(n + 1).to_double() * v[n - 1];
    }
    return v;
}

double mp_truncation(const MeixnerPollaczek& p) {
    const double phi = p.phi.radians();
    const double slow = std::min(phi, std::numbers::pi - phi);
    return std::min(400.0, 40.0 * (std::numbers::pi / 2.0) / slow);
}

double mp_weight(const MeixnerPollaczek& p, double x) {
    const CF64 lg = log_gamma_complex(CF64(p.lambda.to_double(), x));
    return std::exp((2.0 * p.phi.radians() - std::numbers::pi) * x + 2.0 * lg.real());
}

}  // namespace

// ---------------------------------------------------------------- Gram

GramReport gram_check(const FamilyInstance& fam, std::size_t n_max, Execution exec) {
    GramReport rep;
    rep.family = fam.str();
    if (auto top = fam.max_degree()) n_max = std::min<std::size_t>(n_max, static_cast<std::size_t>(*top));
    rep.n_max = n_max;
    const RecurrenceSpec spec = fam.tag() == FamilyTag::MeixnerPollaczek ? RecurrenceSpec{} : recurrence_of(fam);
    const auto pairs = upper_pairs(n_max);

    switch (fam.tag()) {
        case FamilyTag::Krawtchouk:
        case FamilyTag::Charlier:
        case FamilyTag::Meixner: {
            const PolySequence polys = monic_from_recurrence(spec, n_max);
            const bool finite = fam.tag() == FamilyTag::Krawtchouk;
            const CertifiedSums cs =
                certified_sums(discrete_model(fam, WeightPerturbation::None), polys, pairs, Rat(1, 1000000000000000L), exec);
            rep.method = finite ? "finite-exact-sum" : "certified-truncated-sum";
            rep.exact = true;
            if (!finite) rep.truncation = cs.truncation;
            fill_from_pairs(rep, pairs, cs.sums);
            summarize(rep);
            Rat worst_tail(0);
            bool ok = true;
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                worst_tail = std::max(worst_tail, cs.tails[j]);
                if (pairs[j].first == pairs[j].second) {
                    ok = ok && cs.sums[j].sign() > 0;
                } else if (finite) {
                    ok = ok && cs.sums[j].is_zero();
                } else {
                    ok = ok && (cs.sums[j].abs() + cs.tails[j]) < Rat(1, 1000000000000L);
                }
            }
            rep.tail_bound = worst_tail.to_double();
            rep.off_diagonal_bound = finite ? 0.0 : 1e-12;
            rep.passed = ok;
            return rep;
        }
        case FamilyTag::Hermite:
        case FamilyTag::Laguerre: {
            const PolySequence polys = monic_from_recurrence(spec, n_max);
            std::vector<Rat> nu(2 * n_max + 1);
            for (std::size_t k = 0; k < nu.size(); ++k) nu[k] = closed_form_moment(fam, k);
            std::vector<Rat> vals(pairs.size());
            const auto npairs = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
            for (long j = 0; j < npairs; ++j) {
                const auto [a, b] = pairs[static_cast<std::size_t>(j)];
                const RatPoly prod = polys[a] * polys[b];
                Rat s(0);
                for (std::size_t k = 0; k < prod.coeffs().size(); ++k) s += prod.coeff(k) * nu[k];
                vals[static_cast<std::size_t>(j)] = std::move(s);
            }
            rep.method = "moment-closed-form";
            rep.base_constant = fam.tag() == FamilyTag::Hermite ? "sqrt(pi)" : "Gamma(alpha+1)";
            rep.exact = true;
            fill_from_pairs(rep, pairs, vals);
            summarize(rep);
            bool ok = true;
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                ok = ok && (pairs[j].first == pairs[j].second ? vals[j].sign() > 0 : vals[j].is_zero());
            }
            rep.passed = ok;
            return rep;
        }
        case FamilyTag::MeixnerPollaczek: {
            const auto& p = fam.as<MeixnerPollaczek>();
            const RecurrenceSpec mp = recurrence_of(fam);
            const GaussRule rule = quadrature_from_jacobi(mp, n_max + 1);
            const std::size_t n = n_max + 1;
            std::vector<std::vector<double>> pv(rule.nodes.size());
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) pv[i] = double_recurrence_values(mp, n_max, rule.nodes[i]);
            rep.method = "gauss-jacobi-quadrature";
            rep.exact = false;
            rep.entries.assign(n, std::vector<std::string>(n));
            rep.values.assign(n, std::vector<double>(n));
            const auto npairs = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(static) if (exec == Execution::Parallel)
            for (long j = 0; j < npairs; ++j) {
                const auto [a, b] = pairs[static_cast<std::size_t>(j)];
                double s = 0.0;
                for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * pv[i][a] * pv[i][b];
                rep.values[a][b] = rep.values[b][a] = s;
            }
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) rep.entries[a][b] = format_double(rep.values[a][b]);
            summarize(rep);

            // consistency: direct integration of the closed-form weight
            const double len = mp_truncation(p);
            const auto panels = static_cast<std::size_t>(std::ceil(2.0 * len));
            const double mass = integrate([&](double x) { return mp_weight(p, x); }, -len, len, panels, exec);
            double worst = 0.0;
            for (const auto& [a, b] : pairs) {
                if (a == b) continue;
                const double v = integrate(
                    [&](double x) {
                        const auto vals = double_recurrence_values(mp, n_max, x);
                        return mp_weight(p, x) * vals[a] * vals[b];
                    },
                    -len, len, panels, exec);
                worst = std::max(worst, std::abs(v / mass));
            }
            rep.weight_integral_max_off_diagonal = worst;
            rep.off_diagonal_bound = 1e-8;
            rep.passed = rep.max_off_diagonal < 1e-8 && worst < 1e-8 && rep.min_diagonal > 0.0;
            return rep;
        }
    }
    return rep;
}

// ---------------------------------------------------------------- moment match

MomentMatchReport moment_match(const FamilyInstance& fam, std::size_t m, WeightPerturbation perturbation,
                               double tol) {
    MomentMatchReport rep;
    rep.family = fam.str();
    const MomentFunctional mf = moments_from_recurrence(recurrence_of(fam), m);
    for (const auto& v : mf.moments) rep.recurrence_moments.push_back(v.str());
    rep.matches.assign(m + 1, false);
    rep.weight_moments.assign(m + 1, "");
    auto finish = [&rep] {
        for (std::size_t k = 0; k < rep.matches.size(); ++k) {
            if (!rep.matches[k]) {
                rep.first_mismatch = k;
                break;
            }
        }
    };

    switch (fam.tag()) {
        case FamilyTag::Charlier:
        case FamilyTag::Meixner:
        case FamilyTag::Krawtchouk: {
            std::vector<RatPoly> powers;
            std::vector<std::pair<std::size_t, std::size_t>> pairs;
            for (std::size_t k = 0; k <= m; ++k) {
                std::vector<Rat> c(k + 1);
                c[k] = Rat(1);
                powers.emplace_back(std::move(c));
                pairs.emplace_back(k, 0);
            }
            CertifiedSums cs;
            try {
                cs = certified_sums(discrete_model(fam, perturbation), powers, pairs, Rat(1, 1000000000000000L),
                                    Execution::Parallel);
            } catch (const MathError& e) {
                rep.method = "certified-truncated-sum";
                rep.note = e.what();
                rep.matches[0] = true;  // mu_0 = 1 by normalization
                rep.weight_moments[0] = "1";
                for (std::size_t k = 1; k <= m; ++k) rep.weight_moments[k] = "undefined";
                finish();
                return rep;
            }
            rep.method = cs.finite ? "finite-exact-sum" : "certified-truncated-sum";
            if (!cs.finite) rep.truncation = cs.truncation;
            const Rat& s0 = cs.sums[0];
            const Rat& t0 = cs.tails[0];
            for (std::size_t k = 0; k <= m; ++k) {
                const Rat lo = cs.sums[k] / (s0 + t0);
                const Rat hi = (cs.sums[k] + cs.tails[k]) / s0;
                const Rat& mu = mf.moments[k];
                if (cs.finite) {
                    const Rat nu = cs.sums[k] / s0;
                    rep.weight_moments[k] = nu.str();
                    rep.matches[k] = nu == mu;
                } else {
                    rep.weight_moments[k] = format_double((cs.sums[k] / s0).to_double());
                    rep.matches[k] = lo <= mu && mu <= hi;
                }
            }
            finish();
            return rep;
        }
        case FamilyTag::Hermite:
        case FamilyTag::Laguerre:
        case FamilyTag::MeixnerPollaczek: {
            std::function<double(double, std::size_t, bool)> integral;
            if (fam.tag() == FamilyTag::Hermite) {
                rep.method = "gauss-legendre on [-16, 16]";
                integral = [](double, std::size_t k, bool absolute) {
                    return integrate(
                        [k, absolute](double x) {
                            const double pk = std::pow(absolute ? std::abs(x) : x, static_cast<double>(k));
                            return std::exp(-x * x) * pk;
                        },
                        -16.0, 16.0, 64);
                };
            } else if (fam.tag() == FamilyTag::Laguerre) {
                const double a1 = fam.as<Laguerre>().alpha.to_double() + 1.0;
                const double left = -40.0 / a1;
                const double right = std::log(400.0);
                rep.method = "gauss-legendre in log x";
                integral = [a1, left, right](double, std::size_t k, bool) {
                    // x = e^s: integral x^{alpha+k} e^{-x} dx = integral e^{(alpha+1+k) s - e^s} ds
                    return integrate(
                        [a1, k](double s) { return std::exp((a1 + static_cast<double>(k)) * s - std::exp(s)); },
                        left, right, static_cast<std::size_t>(std::ceil(4.0 * (right - left))));
                };
            } else {
                const auto p = fam.as<MeixnerPollaczek>();
                const double len = mp_truncation(p);
                rep.method = "gauss-legendre on [-L, L]";
                integral = [p, len](double, std::size_t k, bool absolute) {
                    return integrate(
                        [&p, k, absolute](double x) {
                            const double pk = std::pow(absolute ? std::abs(x) : x, static_cast<double>(k));
                            return mp_weight(p, x) * pk;
                        },
                        -len, len, static_cast<std::size_t>(std::ceil(2.0 * len)));
                };
            }
            const double mass = integral(0.0, 0, false);
            for (std::size_t k = 0; k <= m; ++k) {
                const double nu = integral(0.0, k, false) / mass;
                const double scale = std::max(integral(0.0, k, true) / mass, std::abs(mf.moments[k].to_double()));
                rep.weight_moments[k] = format_double(nu);
                rep.matches[k] = std::abs(nu - mf.moments[k].to_double()) <= tol * std::max(scale, 1e-300);
            }
            finish();
            return rep;
        }
    }
    return rep;
}

}  // namespace meixner
