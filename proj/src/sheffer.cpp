#include "meixner/sheffer.hpp"

#include <string>

namespace meixner {

ShefferPair::ShefferPair(RatSeries f, RatSeries u, unsigned mu) : f_(std::move(f)), u_(std::move(u)), mu_(mu) {
    if (!(f_[0] == Rat(1))) throw MathError("sheffer pair: f(0) must be 1");
    if (!u_[0].is_zero()) throw MathError("sheffer pair: u(0) must be 0");
    if (u_.order() < 1 || !(u_[1] == Rat(1))) throw MathError("sheffer pair: u'(0) must be 1");
    t_ = revert(u_);
}

ShefferPair ShefferPair::from_lowering(RatSeries f, RatSeries t, unsigned mu) {
    if (!t[0].is_zero() || t.order() < 1 || !(t[1] == Rat(1))) {
        throw MathError("lowering series must start t(D) = D + ...");
    }
    if (!(f[0] == Rat(1))) throw MathError("sheffer pair: f(0) must be 1");
    ShefferPair p;
    p.f_ = std::move(f);
    p.u_ = revert(t);
    p.t_ = std::move(t);
    p.mu_ = mu;
    return p;
}

ShefferPair ShefferPair::with_f(RatSeries f) const {
    ShefferPair p = *this;
    p.f_ = std::move(f);
    return p;
}

namespace {

// g[k] = f u^k / k!, the x^k part of f(s) e^{x u(s)}.
std::vector<RatSeries> exponential_parts(const ShefferPair& pair, std::size_t n_max) {
    if (pair.order() < n_max) {
        throw MathError("expand: series order " + std::to_string(pair.order()) + " below requested degree " +
                        std::to_string(n_max));
    }
    const RatSeries f = pair.f().truncated(n_max);
    const RatSeries u = pair.u().truncated(n_max);
    std::vector<RatSeries> g;
    g.reserve(n_max + 1);
    g.push_back(f);
    for (std::size_t k = 1; k <= n_max; ++k) {
        RatSeries next = g.back() * u;
        next *= Rat(1, static_cast<long>(k));
        g.push_back(std::move(next));
    }
    return g;
}

RatPoly assemble(const std::vector<RatSeries>& g, std::size_t n) {
    std::vector<Rat> c(n + 1);
    const Rat nfact = factorial(static_cast<long>(n));
    for (std::size_t k = 0; k <= n; ++k) c[k] = nfact * g[k][n];
    return RatPoly(std::move(c));
}

}  // namespace

PolySequence expand(const ShefferPair& pair, std::size_t n_max) {
    const auto g = exponential_parts(pair, n_max);
    PolySequence out(n_max + 1);
    const long count = static_cast<long>(n_max) + 1;
#pragma omp parallel for schedule(dynamic)
    for (long n = 0; n < count; ++n) out[static_cast<std::size_t>(n)] = assemble(g, static_cast<std::size_t>(n));
    return out;
}

PolySequence expand_serial(const ShefferPair& pair, std::size_t n_max) {
    const auto g = exponential_parts(pair, n_max);
    PolySequence out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(assemble(g, n));
    return out;
}

RatPoly apply_tD(const RatSeries& t, const RatPoly& p) {
    if (p.degree() > static_cast<long>(t.order())) {
        throw MathError("apply_tD: series order " + std::to_string(t.order()) + " below polynomial degree " +
                        std::to_string(p.degree()));
    }
    RatPoly acc;
    RatPoly d = p;
    for (std::size_t k = 0; k <= t.order() && !d.is_zero(); ++k) {
        if (!t[k].is_zero()) acc += d * t[k];
        d = d.derivative();
    }
    return acc;
}

std::vector<Rat> basis_coordinates(const PolySequence& basis, const RatPoly& p) {
    if (p.is_zero()) return {};
    const auto deg = static_cast<std::size_t>(p.degree());
    if (basis.size() <= deg) throw MathError("basis does not reach degree " + std::to_string(deg));
    std::vector<Rat> a(deg + 1);
    RatPoly rest = p;
    for (std::size_t n = deg + 1; n-- > 0;) {
        a[n] = rest.coeff(n);
        if (!a[n].is_zero()) rest -= basis[n] * a[n];
    }
    return a;
}

RatPoly lambda_apply(const PolySequence& basis, unsigned mu, const RatPoly& p) {
    const auto a = basis_coordinates(basis, p);
    RatPoly out;
    for (std::size_t n = mu; n < a.size(); ++n) {
        if (a[n].is_zero()) continue;
        out += RatPoly::monomial(n - mu, a[n] * binomial(static_cast<long>(n), mu));
    }
    return out;
}

RatPoly lambda_apply(const ShefferPair& pair, const RatPoly& p) {
    const auto deg = p.is_zero() ? std::size_t{0} : static_cast<std::size_t>(p.degree());
    return lambda_apply(expand(pair, deg), pair.mu(), p);
}

RatPoly lambda_from_f(const ShefferPair& pair, const RatPoly& p) {
    if (p.is_zero()) return {};
    const auto deg = static_cast<std::size_t>(p.degree());
    const auto b = basic_sequence(pair.t(), deg);
    const auto a = basis_coordinates(b, p);
    const RatSeries g = reciprocal(pair.f().truncated(std::min(pair.f().order(), deg)));
    const unsigned mu = pair.mu();
    const Rat mufact = factorial(mu);
    RatPoly out;
    for (std::size_t n = mu; n < a.size(); ++n) {
        if (a[n].is_zero()) continue;
        // Lambda b_n = n!/mu! sum_j g_{n-mu-j} x^j / j!
        const Rat scale = a[n] * factorial(static_cast<long>(n)) / mufact;
        std::vector<Rat> c(n - mu + 1);
        for (std::size_t j = 0; j <= n - mu; ++j) c[j] = scale * g.coeff(n - mu - j) / factorial(static_cast<long>(j));
        out += RatPoly(std::move(c));
    }
    return out;
}

std::optional<std::size_t> CommutationReport::first_failure() const {
    std::optional<std::size_t> first;
    for (auto v : commutation_failures) first = first ? std::min(*first, v) : v;
    for (auto v : action_failures) first = first ? std::min(*first, v) : v;
    return first;
}

CommutationReport verify_commutation(const ShefferPair& pair, const PolySequence& sequence) {
    CommutationReport rep;
    rep.n_max = sequence.empty() ? 0 : sequence.size() - 1;
    const unsigned mu = pair.mu();
    for (std::size_t n = 0; n < sequence.size(); ++n) {
        const RatPoly lp = lambda_from_f(pair, sequence[n]);
        const RatPoly lhs = lp.derivative();
        const RatPoly rhs = lambda_from_f(pair, apply_tD(pair.t(), sequence[n]));
        if (!(lhs == rhs)) rep.commutation_failures.push_back(n);
        const RatPoly expected = n >= mu ? RatPoly::monomial(n - mu, binomial(static_cast<long>(n), mu)) : RatPoly();
        if (!(lp == expected)) rep.action_failures.push_back(n);
    }
    return rep;
}

CommutationReport verify_commutation(const ShefferPair& pair, std::size_t n_max) {
    return verify_commutation(pair, expand(pair, n_max));
}

RatSeries f_from_values(const PolySequence& sequence) {
    std::vector<Rat> c;
    c.reserve(sequence.size());
    for (std::size_t n = 0; n < sequence.size(); ++n) {
        c.push_back(sequence[n].coeff(0) / factorial(static_cast<long>(n)));
    }
    return RatSeries(std::move(c));
}

PolySequence sequence_from_lowering(const RatSeries& t, const RatSeries& f, std::size_t n_max) {
    if (!t[0].is_zero() || t.order() < 1 || !(t[1] == Rat(1))) {
        throw MathError("lowering series must start t(D) = D + ...");
    }
    if (t.order() < n_max) throw MathError("lowering series order below requested degree");
    // tau(D) = t(D)/D, sigma = 1/tau
    std::vector<Rat> tau(t.order());
    for (std::size_t k = 0; k + 1 <= t.order(); ++k) tau[k] = t[k + 1];
    const RatSeries sigma = reciprocal(RatSeries(std::move(tau)));
    PolySequence out;
    out.reserve(n_max + 1);
    out.push_back(RatPoly::constant(f.coeff(0)));
    for (std::size_t n = 1; n <= n_max; ++n) {
        RatPoly q = apply_tD(sigma, out.back()).integral() * Rat(static_cast<long>(n));
        q += RatPoly::constant(f.coeff(n) * factorial(static_cast<long>(n)));
        out.push_back(std::move(q));
    }
    return out;
}

PolySequence basic_sequence(const RatSeries& t, std::size_t n_max) {
    return sequence_from_lowering(t, RatSeries::constant(Rat(1), t.order()), n_max);
}

}  // namespace meixner
