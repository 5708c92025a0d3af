#include "meixner/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "meixner/hypergeometric.hpp"
#include "meixner/ortho.hpp"

namespace meixner {

namespace {

bool rational_sqrt(const Rat& q, Rat& root) {
    if (q.sign() < 0) return false;
    const mpz_class num = q.num();
    const mpz_class den = q.den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_class rn;
    mpz_class rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rat(rn, rd);
    return true;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

// ---------------------------------------------------------------- Angle

Angle Angle::from_cot(const Rat& cot) {
    Angle a;
    a.cot_ = cot;
    a.radians_ = std::atan2(1.0, cot.to_double());
    Rat r;
    if (rational_sqrt(Rat(1) + cot * cot, r)) {
        a.sin_ = r.inverse();
        a.cos_ = cot / r;
    }
    return a;
}

Angle Angle::from_cos_sin(const Rat& cos_phi, const Rat& sin_phi) {
    if (!(cos_phi * cos_phi + sin_phi * sin_phi == Rat(1))) throw MathError("angle: cos^2 + sin^2 != 1");
    if (sin_phi.sign() <= 0) throw MathError("angle must lie in (0, pi)");
    Angle a;
    a.cos_ = cos_phi;
    a.sin_ = sin_phi;
    a.cot_ = cos_phi / sin_phi;
    a.radians_ = std::atan2(sin_phi.to_double(), cos_phi.to_double());
    return a;
}

Angle Angle::from_radians(double phi) {
    if (!(phi > 0.0 && phi < std::numbers::pi)) throw MathError("angle must lie in (0, pi)");
    Angle a;
    a.radians_ = phi;
    return a;
}

const Rat& Angle::cos_exact() const {
    if (!cos_) throw MathError("angle " + str() + " has no exact cosine");
    return *cos_;
}

const Rat& Angle::sin_exact() const {
    if (!sin_) throw MathError("angle " + str() + " has no exact sine");
    return *sin_;
}

CRat Angle::exp_i() const { return {cos_exact(), sin_exact()}; }

std::string Angle::str() const {
    if (cos_) {
        if (cos_->is_zero()) return "pi/2";
        return "cos=" + cos_->str();
    }
    if (cot_) return "cot=" + cot_->str();
    return format_double(radians_);
}

bool operator==(const Angle& a, const Angle& b) {
    if (a.cot_ && b.cot_) return *a.cot_ == *b.cot_;
    if (a.cot_.has_value() != b.cot_.has_value()) return false;
    return a.radians_ == b.radians_;
}

// ---------------------------------------------------------------- FamilyInstance

namespace {

void validate(const FamilyInstance::Params& params) {
    std::visit(
        [](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Laguerre>) {
                if (!(p.alpha > Rat(-1))) throw MathError("laguerre: alpha must exceed -1");
            } else if constexpr (std::is_same_v<T, Charlier>) {
                if (p.a.sign() <= 0) throw MathError("charlier: a must be positive");
            } else if constexpr (std::is_same_v<T, Meixner>) {
                if (p.beta.sign() <= 0) throw MathError("meixner: beta must be positive");
                if (!(p.c > Rat(0) && p.c < Rat(1))) throw MathError("meixner: c must lie in (0, 1)");
            } else if constexpr (std::is_same_v<T, MeixnerPollaczek>) {
                if (p.lambda.sign() <= 0) throw MathError("meixner-pollaczek: lambda must be positive");
                if (!(p.phi.radians() > 0.0 && p.phi.radians() < std::numbers::pi)) {
                    throw MathError("meixner-pollaczek: phi must lie in (0, pi)");
                }
            } else if constexpr (std::is_same_v<T, Krawtchouk>) {
                if (!(p.p > Rat(0) && p.p < Rat(1))) throw MathError("krawtchouk: p must lie in (0, 1)");
                if (p.N < 1) throw MathError("krawtchouk: N must be a positive integer");
            }
        },
        params);
}

}  // namespace

FamilyInstance::FamilyInstance(Params params) : params_(std::move(params)) { validate(params_); }

std::string to_string(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::Hermite: return "hermite";
        case FamilyTag::Laguerre: return "laguerre";
        case FamilyTag::Charlier: return "charlier";
        case FamilyTag::Meixner: return "meixner";
        case FamilyTag::MeixnerPollaczek: return "meixner-pollaczek";
        case FamilyTag::Krawtchouk: return "krawtchouk";
    }
    return "unknown";
}

std::string FamilyInstance::name() const { return to_string(tag()); }

std::string FamilyInstance::str() const {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Hermite>) {
                return "hermite";
            } else if constexpr (std::is_same_v<T, Laguerre>) {
                return "laguerre:alpha=" + p.alpha.str();
            } else if constexpr (std::is_same_v<T, Charlier>) {
                return "charlier:a=" + p.a.str();
            } else if constexpr (std::is_same_v<T, Meixner>) {
                return "meixner:beta=" + p.beta.str() + ",c=" + p.c.str();
            } else if constexpr (std::is_same_v<T, MeixnerPollaczek>) {
                const std::string ang = p.phi.str();
                const bool keyed = ang.find('=') != std::string::npos;
                return "mp:lambda=" + p.lambda.str() + "," + (keyed ? ang : "phi=" + ang);
            } else {
                return "krawtchouk:p=" + p.p.str() + ",N=" + std::to_string(p.N);
            }
        },
        params_);
}

std::optional<long> FamilyInstance::max_degree() const {
    if (const auto* k = std::get_if<Krawtchouk>(&params_)) return k->N;
    return std::nullopt;
}

namespace {

Angle parse_angle(std::string_view v) {
    std::string s(v);
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    if (s == "pi/2") return Angle::half_pi();
    const auto pos = s.find("pi");
    if (pos != std::string::npos) {
        // pi, pi/q, p*pi/q, pi*p/q
        std::string coeff = s;
        coeff.replace(pos, 2, "1");
        coeff.erase(std::remove(coeff.begin(), coeff.end(), '*'), coeff.end());
        // "1/q", "p1/q" (from p*pi/q) or "1p/q" is ambiguous; handle the
        // explicit shapes only
        Rat mult;
        if (s == "pi") {
            mult = Rat(1);
        } else if (s.rfind("pi/", 0) == 0) {
            mult = Rat(1) / Rat::parse(s.substr(3));
        } else if (s.rfind("pi*", 0) == 0) {
            mult = Rat::parse(s.substr(3));
        } else if (pos > 0 && s[pos - 1] == '*') {
            const std::string left = s.substr(0, pos - 1);
            const std::string right = s.substr(pos + 2);
            mult = Rat::parse(left);
            if (!right.empty()) {
                if (right.front() != '/') throw std::invalid_argument("malformed angle '" + s + "'");
                mult /= Rat::parse(right.substr(1));
            }
        } else {
            throw std::invalid_argument("malformed angle '" + s + "'");
        }
        if (mult == Rat(1, 2)) return Angle::half_pi();
        return Angle::from_radians(mult.to_double() * std::numbers::pi);
    }
    return Angle::from_radians(std::stod(s));
}

}  // namespace

FamilyInstance parse_family(std::string_view text) {
    std::string s(text);
    std::string name = s;
    std::map<std::string, std::string> kv;
    if (auto colon = s.find(':'); colon != std::string::npos) {
        name = s.substr(0, colon);
        std::stringstream rest(s.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("malformed family parameter '" + item + "'");
            kv[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    auto need = [&](const std::string& key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw std::invalid_argument("family '" + name + "' needs parameter '" + key + "'");
        return it->second;
    };
    if (name == "hermite") return FamilyInstance(Hermite{});
    if (name == "laguerre") return FamilyInstance(Laguerre{Rat::parse(need("alpha"))});
    if (name == "charlier") return FamilyInstance(Charlier{Rat::parse(need("a"))});
    if (name == "meixner") return FamilyInstance(Meixner{Rat::parse(need("beta")), Rat::parse(need("c"))});
    if (name == "mp" || name == "meixner-pollaczek") {
        const Rat lambda = Rat::parse(need("lambda"));
        if (kv.contains("cot")) return FamilyInstance(MeixnerPollaczek{lambda, Angle::from_cot(Rat::parse(kv["cot"]))});
        if (kv.contains("cos")) {
            const Rat c = Rat::parse(kv["cos"]);
            Rat sn;
            if (!rational_sqrt(Rat(1) - c * c, sn)) {
                throw std::invalid_argument("cos=" + c.str() + " does not give a rational sine");
            }
            return FamilyInstance(MeixnerPollaczek{lambda, Angle::from_cos_sin(c, sn)});
        }
        return FamilyInstance(MeixnerPollaczek{lambda, parse_angle(need("phi"))});
    }
    if (name == "krawtchouk") {
        const Rat big_n = Rat::parse(need("N"));
        if (!big_n.is_integer()) throw std::invalid_argument("krawtchouk: N must be an integer");
        return FamilyInstance(Krawtchouk{Rat::parse(need("p")), big_n.num().get_si()});
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

// ---------------------------------------------------------------- recurrence

RecurrenceSpec recurrence_of(const FamilyInstance& fam) {
    return std::visit(
        [](const auto& p) -> RecurrenceSpec {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Hermite>) {
                return {Rat(0), Rat(-1, 2), Rat(0), Rat(0)};
            } else if constexpr (std::is_same_v<T, Laguerre>) {
                const Rat a1 = p.alpha + Rat(1);
                return {Rat(-2), -a1, Rat(-1), -a1};
            } else if constexpr (std::is_same_v<T, Charlier>) {
                return {Rat(-1), -p.a, Rat(0), -p.a};
            } else if constexpr (std::is_same_v<T, Meixner>) {
                const Rat one_c = Rat(1) - p.c;
                return {-(Rat(1) + p.c) / one_c, -p.beta * p.c / (one_c * one_c), -p.c / (one_c * one_c),
                        -p.beta * p.c / one_c};
            } else if constexpr (std::is_same_v<T, MeixnerPollaczek>) {
                if (!p.phi.cot()) throw MathError("meixner-pollaczek recurrence needs a rational cot(phi)");
                const Rat cot = *p.phi.cot();
                const Rat csc2 = Rat(1) + cot * cot;
                return {cot, -p.lambda * csc2 / Rat(2), -csc2 / Rat(4), p.lambda * cot};
            } else {
                const Rat pq = p.p * (Rat(1) - p.p);
                return {Rat(2) * p.p - Rat(1), -pq * Rat(p.N), pq, -p.p * Rat(p.N)};
            }
        },
        fam.params());
}

// ---------------------------------------------------------------- generating functions

std::optional<Rat> normalization(const FamilyInstance& fam, long n) {
    return std::visit(
        [n](const auto& p) -> std::optional<Rat> {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Hermite>) {
                return (Rat(2).pow(n) * factorial(n)).inverse();
            } else if constexpr (std::is_same_v<T, Laguerre>) {
                return Rat(n % 2 == 0 ? 1 : -1);
            } else if constexpr (std::is_same_v<T, Charlier>) {
                return (-p.a).pow(n) / factorial(n);
            } else if constexpr (std::is_same_v<T, Meixner>) {
                return pochhammer(p.beta, n) / factorial(n) * (p.c / (p.c - Rat(1))).pow(n);
            } else if constexpr (std::is_same_v<T, MeixnerPollaczek>) {
                if (!p.phi.exact_trig()) return std::nullopt;
                return (Rat(2) * p.phi.sin_exact()).pow(-n);
            } else {
                return binomial(p.N, n) * (-p.p).pow(n);
            }
        },
        fam.params());
}

GeneratingFunction generating_function_of(const FamilyInstance& fam, std::size_t order) {
    const RatSeries t = RatSeries::variable(order);
    const RatSeries one = RatSeries::constant(Rat(1), order);
    GeneratingFunction g;
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Hermite>) {
                g.f = exp(t * t * Rat(-1, 4));
                g.u = t;
            } else if constexpr (std::is_same_v<T, Laguerre>) {
                g.f = pow(one + t, -(p.alpha + Rat(1)));
                g.u = t * reciprocal(one + t);
            } else if constexpr (std::is_same_v<T, Charlier>) {
                g.f = exp(t * (-p.a));
                g.u = log(one + t);
            } else if constexpr (std::is_same_v<T, Meixner>) {
                const Rat one_c = Rat(1) - p.c;
                g.f = pow(one + t * (p.c / one_c), -p.beta);
                g.u = log(one + t * one_c.inverse()) - log(one + t * (p.c / one_c));
            } else if constexpr (std::is_same_v<T, MeixnerPollaczek>) {
                if (!p.phi.cot()) throw MathError("meixner-pollaczek generating function needs a rational cot(phi)");
                const Rat cot = *p.phi.cot();
                g.f = pow(one - t * cot + t * t * ((Rat(1) + cot * cot) / Rat(4)), -p.lambda);
                // u = i [log(1 - w t) - log(1 - conj(w) t)],  w = e^{i phi} / (2 sin phi) = (cot + i)/2
                const CRat w(cot / Rat(2), Rat(1, 2));
                const auto ct = series_cast<CRat>(t);
                const auto cone = series_cast<CRat>(one);
                const auto diff = log(cone - ct * w) - log(cone - ct * w.conj());
                g.u = real_series(diff * CRat::i());
            } else {
                const Rat q = Rat(1) - p.p;
                g.f = pow(one - t * p.p, Rat(p.N));
                g.u = log(one + t * q) - log(one - t * p.p);
            }
        },
        fam.params());
    g.cn.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        auto c = normalization(fam, static_cast<long>(n));
        if (!c) {
            g.cn.clear();
            break;
        }
        g.cn.push_back(*c);
    }
    return g;
}

// ---------------------------------------------------------------- evaluation

Rat evaluate(const FamilyInstance& fam, long n, const Rat& x) {
    return std::visit(
        [&](const auto& p) -> Rat {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Hermite>) {
                return hyp::hermite<Rat>(n, x);
            } else if constexpr (std::is_same_v<T, Laguerre>) {
                return hyp::laguerre<Rat>(n, p.alpha, x);
            } else if constexpr (std::is_same_v<T, Charlier>) {
                return hyp::charlier<Rat>(n, p.a, x);
            } else if constexpr (std::is_same_v<T, Meixner>) {
                return hyp::meixner<Rat>(n, p.beta, p.c, x);
            } else if constexpr (std::is_same_v<T, MeixnerPollaczek>) {
                return hyp::meixner_pollaczek_by_recurrence<Rat>(n, p.lambda, p.phi.cos_exact(), p.phi.sin_exact(), x);
            } else {
                if (n > p.N) throw MathError("krawtchouk: degree exceeds N");
                return hyp::krawtchouk<Rat>(n, p.p, p.N, x);
            }
        },
        fam.params());
}

double evaluate(const FamilyInstance& fam, long n, double x) {
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Hermite>) {
                return hyp::hermite<double>(n, x);
            } else if constexpr (std::is_same_v<T, Laguerre>) {
                return hyp::laguerre<double>(n, p.alpha.to_double(), x);
            } else if constexpr (std::is_same_v<T, Charlier>) {
                return hyp::charlier<double>(n, p.a.to_double(), x);
            } else if constexpr (std::is_same_v<T, Meixner>) {
                return hyp::meixner<double>(n, p.beta.to_double(), p.c.to_double(), x);
            } else if constexpr (std::is_same_v<T, MeixnerPollaczek>) {
                const double phi = p.phi.radians();
                return hyp::meixner_pollaczek_by_recurrence<double>(n, p.lambda.to_double(), std::cos(phi),
                                                                    std::sin(phi), x);
            } else {
                if (n > p.N) throw MathError("krawtchouk: degree exceeds N");
                return hyp::krawtchouk<double>(n, p.p.to_double(), p.N, x);
            }
        },
        fam.params());
}

RatPoly standard_monic(const FamilyInstance& fam, long n) {
    const auto cn = normalization(fam, n);
    if (!cn) throw MathError("standard_monic: normalization of " + fam.str() + " is not rational");
    if (cn->is_zero()) throw MathError("standard_monic: degree beyond the family's range");
    // Newton interpolation of p_n through x = 0..n
    const std::size_t m = static_cast<std::size_t>(n) + 1;
    std::vector<Rat> dd(m);
    for (std::size_t i = 0; i < m; ++i) dd[i] = evaluate(fam, n, Rat(static_cast<long>(i)));
    for (std::size_t j = 1; j < m; ++j)
        for (std::size_t i = m - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / Rat(static_cast<long>(j));
    RatPoly poly = RatPoly::constant(dd[m - 1]);
    for (std::size_t i = m - 1; i-- > 0;) {
        poly = poly * RatPoly::linear(Rat(-static_cast<long>(i))) + RatPoly::constant(dd[i]);
    }
    return poly * (factorial(n) * *cn);
}

// ---------------------------------------------------------------- weights

WeightSpec weight_spec(const FamilyInstance& fam) {
    return std::visit(
        [](const auto& p) -> WeightSpec {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Hermite>) {
                return {WeightKind::Continuous, "exp(-x^2)", "(-inf,inf)", std::nullopt, std::nullopt};
            } else if constexpr (std::is_same_v<T, Laguerre>) {
                return {WeightKind::Continuous, "x^alpha exp(-x)", "[0,inf)", std::nullopt, 0.0};
            } else if constexpr (std::is_same_v<T, Charlier>) {
                return {WeightKind::Discrete, "a^x/x!", "{0,1,2,...}", std::nullopt, std::nullopt};
            } else if constexpr (std::is_same_v<T, Meixner>) {
                return {WeightKind::Discrete, "(beta)_x c^x/x!", "{0,1,2,...}", std::nullopt, std::nullopt};
            } else if constexpr (std::is_same_v<T, MeixnerPollaczek>) {
                return {WeightKind::Continuous, "exp((2 phi - pi) x) |Gamma(lambda + i x)|^2", "(-inf,inf)",
                        std::nullopt, std::nullopt};
            } else {
                return {WeightKind::Discrete, "binomial(N,x) p^x (1-p)^(N-x)", "{0,...,N}", p.N, std::nullopt};
            }
        },
        fam.params());
}

Rat discrete_weight(const FamilyInstance& fam, long x) {
    if (x < 0) throw MathError("weight: x outside the support");
    return std::visit(
        [x](const auto& p) -> Rat {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Charlier>) {
                return p.a.pow(x) / factorial(x);
            } else if constexpr (std::is_same_v<T, Meixner>) {
                return pochhammer(p.beta, x) * p.c.pow(x) / factorial(x);
            } else if constexpr (std::is_same_v<T, Krawtchouk>) {
                if (x > p.N) throw MathError("weight: x outside the support");
                return binomial(p.N, x) * p.p.pow(x) * (Rat(1) - p.p).pow(p.N - x);
            } else {
                throw MathError("weight: family has a continuous weight");
            }
        },
        fam.params());
}

double weight_value(const FamilyInstance& fam, double x) {
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, Hermite>) {
                return std::exp(-x * x);
            } else if constexpr (std::is_same_v<T, Laguerre>) {
                if (x < 0.0) throw MathError("weight: x outside the support");
                return std::pow(x, p.alpha.to_double()) * std::exp(-x);
            } else if constexpr (std::is_same_v<T, MeixnerPollaczek>) {
                const CF64 lg = log_gamma_complex(CF64(p.lambda.to_double(), x));
                return std::exp((2.0 * p.phi.radians() - std::numbers::pi) * x + 2.0 * lg.real());
            } else {
                const double r = std::round(x);
                if (r != x) throw MathError("weight: x outside the support");
                return discrete_weight(FamilyInstance(p), static_cast<long>(r)).to_double();
            }
        },
        fam.params());
}

// ---------------------------------------------------------------- identities

IdentityReport identity_krawtchouk_meixner(const Rat& p, long big_n, long n, const Rat& x) {
    if (!(p > Rat(0) && p < Rat(1))) throw MathError("identity: p must lie in (0, 1)");
    if (n < 0 || n > big_n) throw MathError("identity: need 0 <= n <= N");
    const Rat lhs = hyp::krawtchouk_by_recurrence<Rat>(n, p, big_n, x);
    const Rat rhs = hyp::meixner<Rat>(n, Rat(-big_n), p / (p - Rat(1)), x);
    IdentityReport rep;
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.exact = true;
    rep.holds = lhs == rhs;
    rep.abs_error = (lhs - rhs).abs().to_double();
    return rep;
}

IdentityReport identity_mp_meixner(const Rat& lambda, const Angle& phi, long n, const Rat& x) {
    if (lambda.sign() <= 0) throw MathError("identity: lambda must be positive");
    const Rat lhs = hyp::meixner_pollaczek_by_recurrence<Rat>(n, lambda, phi.cos_exact(), phi.sin_exact(), x);
    const CRat e = phi.exp_i();
    const CRat pref = CRat(pochhammer(Rat(2) * lambda, n) / factorial(n)) * e.pow(n);
    const CRat y = CRat(-lambda, -x);  // -lambda - i x
    const CRat rhs = pref * hyp::meixner<CRat>(n, CRat(Rat(2) * lambda), e * e, y);
    IdentityReport rep;
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.exact = true;
    rep.holds = CRat(lhs) == rhs;
    rep.abs_error = std::sqrt((CRat(lhs) - rhs).norm().to_double());
    return rep;
}

IdentityReport identity_mp_meixner(double lambda, double phi, long n, double x, double tol) {
    const double lhs = hyp::meixner_pollaczek_by_recurrence<double>(n, lambda, std::cos(phi), std::sin(phi), x);
    const CF64 e = std::polar(1.0, phi);
    CF64 pref(1.0);
    for (long k = 0; k < n; ++k) pref *= (2.0 * lambda + static_cast<double>(k)) / static_cast<double>(k + 1);
    pref *= std::pow(e, static_cast<double>(n));
    const CF64 rhs = pref * hyp::meixner<CF64>(n, CF64(2.0 * lambda), e * e, CF64(-lambda, -x));
    IdentityReport rep;
    rep.lhs = format_double(lhs);
    rep.rhs = format_double(rhs.real()) + (rhs.imag() < 0 ? "" : "+") + format_double(rhs.imag()) + "i";
    rep.exact = false;
    rep.abs_error = std::abs(CF64(lhs) - rhs);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    rep.holds = rep.abs_error <= tol * scale;
    return rep;
}

// ---------------------------------------------------------------- limits

namespace {

constexpr mp_bitcnt_t kLimitPrecision = 512;

mpf_class to_mpf(const Rat& q) { return mpf_class(q.raw(), kLimitPrecision); }

mpf_class mpf_sqrt(const Rat& q) {
    mpf_class v = to_mpf(q);
    mpf_class r(0, kLimitPrecision);
    mpf_sqrt(r.get_mpf_t(), v.get_mpf_t());
    return r;
}

double exact_error(const Rat& source, const Rat& target) { return (source - target).abs().to_double(); }

double limit_error(LimitEdge edge, long n, const Rat& x, const Rat& eps) {
    const Rat inv_eps = eps.inverse();
    switch (edge) {
        case LimitEdge::MeixnerPollaczekToLaguerre: {
            // lim_{phi->0} P_n^{((alpha+1)/2)}(-x/(2 phi); phi) = L_n^{(alpha)}(x), alpha = 1
            const long double phi = eps.to_long_double();
            const long double xs = x.to_long_double();
            const long double src = hyp::meixner_pollaczek_by_recurrence<long double>(
                n, 1.0L, std::cos(phi), std::sin(phi), -xs / (2.0L * phi));
            const long double tgt = hyp::laguerre<Rat>(n, Rat(1), x).to_long_double();
            return static_cast<double>(std::fabs(src - tgt));
        }
        case LimitEdge::MeixnerToLaguerre: {
            // lim_{c->1} M_n(x/(1-c); alpha+1, c) = L_n^{(alpha)}(x) / L_n^{(alpha)}(0), alpha = 1
            const Rat src = hyp::meixner<Rat>(n, Rat(2), Rat(1) - eps, x / eps);
            const Rat tgt = hyp::laguerre<Rat>(n, Rat(1), x) / hyp::laguerre<Rat>(n, Rat(1), Rat(0));
            return exact_error(src, tgt);
        }
        case LimitEdge::MeixnerToCharlier: {
            // lim_{beta->inf} M_n(x; beta, a/(a+beta)) = C_n(x; a), a = 1, beta = 1/eps
            const Rat beta = inv_eps;
            const Rat src = hyp::meixner<Rat>(n, beta, Rat(1) / (Rat(1) + beta), x);
            return exact_error(src, hyp::charlier<Rat>(n, Rat(1), x));
        }
        case LimitEdge::KrawtchoukToCharlier: {
            // lim_{N->inf} K_n(x; a/N, N) = C_n(x; a), a = 1, N = 1/eps
            const long big_n = inv_eps.num().get_si();
            const Rat src = hyp::krawtchouk<Rat>(n, Rat(1, big_n), big_n, x);
            return exact_error(src, hyp::charlier<Rat>(n, Rat(1), x));
        }
        case LimitEdge::LaguerreToHermite: {
            // lim (2/alpha)^{n/2} L_n^{(alpha)}(sqrt(2 alpha) x + alpha) = (-1)^n H_n(x)/n!, alpha = 1/(2 eps^2)
            const Rat alpha = inv_eps * inv_eps / Rat(2);
            const Rat src = (Rat(2) * eps).pow(n) * hyp::laguerre<Rat>(n, alpha, x * inv_eps + alpha);
            const Rat tgt = Rat(n % 2 == 0 ? 1 : -1) * hyp::hermite<Rat>(n, x) / factorial(n);
            return exact_error(src, tgt);
        }
        case LimitEdge::CharlierToHermite: {
            // lim (2a)^{n/2} C_n(sqrt(2a) x + a; a) = (-1)^n H_n(x), a = 1/(2 eps^2)
            const Rat a = inv_eps * inv_eps / Rat(2);
            const Rat src = inv_eps.pow(n) * hyp::charlier<Rat>(n, a, x * inv_eps + a);
            const Rat tgt = Rat(n % 2 == 0 ? 1 : -1) * hyp::hermite<Rat>(n, x);
            return exact_error(src, tgt);
        }
        case LimitEdge::MeixnerPollaczekToHermite: {
            // lim lambda^{-n/2} P_n^{(lambda)}((x sqrt(lambda) - lambda cos phi)/sin phi; phi) = H_n(x)/n!,
            // lambda = 1/eps^2, cos phi = 3/5, sin phi = 4/5
            const Rat cs(3, 5);
            const Rat sn(4, 5);
            const Rat lambda = inv_eps * inv_eps;
            const Rat arg = (x * inv_eps - lambda * cs) / sn;
            const Rat src = eps.pow(n) * hyp::meixner_pollaczek_by_recurrence<Rat>(n, lambda, cs, sn, arg);
            return exact_error(src, hyp::hermite<Rat>(n, x) / factorial(n));
        }
        case LimitEdge::MeixnerToHermite: {
            // monic Meixner rescaled about its mean: with s = sqrt(2 beta c)/(1-c), m = beta c/(1-c),
            // lim (beta)_n (c/(c-1))^n s^{-n} M_n(m + s x; beta, c) = H_n(x)/2^n, c = 1/2, beta = 1/eps^2
            const Rat c(1, 2);
            const Rat beta = inv_eps * inv_eps;
            const Rat s = Rat(2) * inv_eps;
            const Rat m = beta;
            const Rat pref = pochhammer(beta, n) * (c / (c - Rat(1))).pow(n) / s.pow(n);
            const Rat src = pref * hyp::meixner<Rat>(n, beta, c, m + s * x);
            return exact_error(src, hyp::hermite<Rat>(n, x) / Rat(2).pow(n));
        }
        case LimitEdge::KrawtchoukToHermite: {
            // lim sqrt(binom(N,n)) K_n(pN + x sqrt(2p(1-p)N); p, N)
            //   = (-1)^n H_n(x) / sqrt(2^n n!) ((1-p)/p)^{n/2},  p = 1/2, N = 2/eps^2
            const Rat p(1, 2);
            const long big_n = (Rat(2) * inv_eps * inv_eps).num().get_si();
            const Rat k = hyp::krawtchouk<Rat>(n, p, big_n, p * Rat(big_n) + x * inv_eps);
            const Rat h = Rat(n % 2 == 0 ? 1 : -1) * hyp::hermite<Rat>(n, x);
            // a = sqrt(binom(N,n)) |K|, b = |h| / sqrt(2^n n!); squares are exact
            const Rat a2 = binomial(big_n, n) * k * k;
            const Rat b2 = h * h / (Rat(2).pow(n) * factorial(n));
            const mpf_class sum = mpf_sqrt(a2) + mpf_sqrt(b2);
            if (k.sign() * h.sign() < 0) return sum.get_d();
            if (a2 == b2) return 0.0;
            const mpf_class diff = to_mpf((a2 - b2).abs()) / sum;
            return diff.get_d();
        }
    }
    return 0.0;
}

}  // namespace

std::vector<LimitEdge> all_limit_edges() {
    return {LimitEdge::MeixnerPollaczekToLaguerre, LimitEdge::MeixnerToLaguerre,  LimitEdge::MeixnerToCharlier,
            LimitEdge::KrawtchoukToCharlier,       LimitEdge::LaguerreToHermite,  LimitEdge::CharlierToHermite,
            LimitEdge::MeixnerPollaczekToHermite,  LimitEdge::MeixnerToHermite,   LimitEdge::KrawtchoukToHermite};
}

std::string to_string(LimitEdge edge) {
    switch (edge) {
        case LimitEdge::MeixnerPollaczekToLaguerre: return "mp-laguerre";
        case LimitEdge::MeixnerToLaguerre: return "meixner-laguerre";
        case LimitEdge::MeixnerToCharlier: return "meixner-charlier";
        case LimitEdge::KrawtchoukToCharlier: return "krawtchouk-charlier";
        case LimitEdge::LaguerreToHermite: return "laguerre-hermite";
        case LimitEdge::CharlierToHermite: return "charlier-hermite";
        case LimitEdge::MeixnerPollaczekToHermite: return "mp-hermite";
        case LimitEdge::MeixnerToHermite: return "meixner-hermite";
        case LimitEdge::KrawtchoukToHermite: return "krawtchouk-hermite";
    }
    return "unknown";
}

LimitEdge parse_limit_edge(std::string_view text) {
    for (auto e : all_limit_edges())
        if (to_string(e) == text) return e;
    throw std::invalid_argument("unknown limit edge '" + std::string(text) + "'");
}

std::string limit_formula(LimitEdge edge) {
    switch (edge) {
        case LimitEdge::MeixnerPollaczekToLaguerre:
            return "P_n^{((alpha+1)/2)}(-x/(2 phi); phi) -> L_n^{(alpha)}(x), phi = eps -> 0, alpha = 1";
        case LimitEdge::MeixnerToLaguerre:
            return "M_n(x/(1-c); alpha+1, c) -> L_n^{(alpha)}(x)/L_n^{(alpha)}(0), c = 1 - eps, alpha = 1";
        case LimitEdge::MeixnerToCharlier:
            return "M_n(x; beta, a/(a+beta)) -> C_n(x; a), beta = 1/eps, a = 1";
        case LimitEdge::KrawtchoukToCharlier:
            return "K_n(x; a/N, N) -> C_n(x; a), N = 1/eps, a = 1";
        case LimitEdge::LaguerreToHermite:
            return "(2/alpha)^{n/2} L_n^{(alpha)}(sqrt(2 alpha) x + alpha) -> (-1)^n H_n(x)/n!, alpha = 1/(2 eps^2)";
        case LimitEdge::CharlierToHermite:
            return "(2a)^{n/2} C_n(sqrt(2a) x + a; a) -> (-1)^n H_n(x), a = 1/(2 eps^2)";
        case LimitEdge::MeixnerPollaczekToHermite:
            return "lambda^{-n/2} P_n^{(lambda)}((x sqrt(lambda) - lambda cos phi)/sin phi; phi) -> H_n(x)/n!, "
                   "lambda = 1/eps^2, cos phi = 3/5";
        case LimitEdge::MeixnerToHermite:
            return "(beta)_n (c/(c-1))^n s^{-n} M_n(beta c/(1-c) + s x; beta, c) -> H_n(x)/2^n, "
                   "s = sqrt(2 beta c)/(1-c), beta = 1/eps^2, c = 1/2";
        case LimitEdge::KrawtchoukToHermite:
            return "sqrt(binom(N,n)) K_n(pN + x sqrt(2p(1-p)N); p, N) -> (-1)^n H_n(x) ((1-p)/p)^{n/2} / "
                   "sqrt(2^n n!), N = 2/eps^2, p = 1/2";
    }
    return "";
}

bool LimitRecord::passed(double min_order) const {
    if (exact_zero) return true;
    return monotone && asymptotic_order >= min_order;
}

LimitRecord limit_transition(LimitEdge edge, long n, const Rat& x, int decades) {
    LimitRecord rec;
    rec.edge = edge;
    rec.n = n;
    rec.x = x;
    for (int k = 1; k <= decades; ++k) {
        const Rat eps = Rat(1) / Rat(10).pow(k);
        rec.eps.push_back(eps.to_double());
        rec.error.push_back(limit_error(edge, n, x, eps));
    }
    rec.exact_zero = std::all_of(rec.error.begin(), rec.error.end(), [](double e) { return e == 0.0; });
    rec.monotone = true;
    for (std::size_t k = 0; k + 1 < rec.error.size(); ++k) {
        const double a = rec.error[k];
        const double b = rec.error[k + 1];
        if (a > 0.0 && b > 0.0) {
            rec.order.push_back(std::log10(a / b));
        } else {
            rec.order.push_back(b == 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
        }
        if (!(b < a) && !(a == 0.0 && b == 0.0)) rec.monotone = false;
    }
    rec.asymptotic_order = rec.order.empty() ? 0.0 : rec.order.back();
    if (rec.exact_zero) rec.monotone = true;
    return rec;
}

}  // namespace meixner
