#ifndef MEIXNER_FAMILIES_HPP
#define MEIXNER_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "meixner/recurrence.hpp"
#include "meixner/series.hpp"

namespace meixner {

/// Angle phi in (0, pi). Exact data is kept when available: cot(phi) when
/// rational, and (cos phi, sin phi) when both are rational (Pythagorean
/// angles, including pi/2).
class Angle {
public:
    static Angle from_cot(const Rat& cot);
    static Angle from_cos_sin(const Rat& cos_phi, const Rat& sin_phi);
    static Angle from_radians(double phi);
    static Angle half_pi() { return from_cos_sin(Rat(0), Rat(1)); }

    [[nodiscard]] double radians() const { return radians_; }
    [[nodiscard]] const std::optional<Rat>& cot() const { return cot_; }
    [[nodiscard]] bool exact_trig() const { return cos_.has_value(); }
    [[nodiscard]] const Rat& cos_exact() const;
    [[nodiscard]] const Rat& sin_exact() const;
    /// e^{i phi}, exact; requires exact_trig().
    [[nodiscard]] CRat exp_i() const;
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Angle& a, const Angle& b);

private:
    double radians_ = 0.0;
    std::optional<Rat> cot_;
    std::optional<Rat> cos_;
    std::optional<Rat> sin_;
};

struct Hermite {
    friend bool operator==(const Hermite&, const Hermite&) = default;
};
struct Laguerre {
    Rat alpha;
    friend bool operator==(const Laguerre&, const Laguerre&) = default;
};
struct Charlier {
    Rat a;
    friend bool operator==(const Charlier&, const Charlier&) = default;
};
struct Meixner {
    Rat beta;
    Rat c;
    friend bool operator==(const Meixner&, const Meixner&) = default;
};
struct MeixnerPollaczek {
    Rat lambda;
    Angle phi;
    friend bool operator==(const MeixnerPollaczek&, const MeixnerPollaczek&) = default;
};
struct Krawtchouk {
    Rat p;
    long N = 1;
    friend bool operator==(const Krawtchouk&, const Krawtchouk&) = default;
};

enum class FamilyTag { Hermite, Laguerre, Charlier, Meixner, MeixnerPollaczek, Krawtchouk };

/// One of the six orthogonal Sheffer families with validated parameters.
class FamilyInstance {
public:
    using Params = std::variant<Hermite, Laguerre, Charlier, Meixner, MeixnerPollaczek, Krawtchouk>;

    /// Throws MathError when a parameter is outside the family's range.
    FamilyInstance(Params params);  // NOLINT(google-explicit-constructor)

    [[nodiscard]] const Params& params() const { return params_; }
    [[nodiscard]] FamilyTag tag() const { return static_cast<FamilyTag>(params_.index()); }
    [[nodiscard]] std::string name() const;
    /// e.g. "meixner:beta=3/2,c=1/4"; parse_family() reads it back.
    [[nodiscard]] std::string str() const;
    /// Finite families have polynomials only up to this degree.
    [[nodiscard]] std::optional<long> max_degree() const;

    template <class T>
    [[nodiscard]] const T& as() const {
        return std::get<T>(params_);
    }

    friend bool operator==(const FamilyInstance&, const FamilyInstance&) = default;

private:
    Params params_;
};

std::string to_string(FamilyTag tag);

/// Reads "hermite", "laguerre:alpha=1/2", "charlier:a=2",
/// "meixner:beta=3/2,c=1/4", "mp:lambda=1,phi=pi/2" (also "cot=3/4",
/// "cos=3/5", or a decimal phi), "krawtchouk:p=1/3,N=6".
FamilyInstance parse_family(std::string_view text);

/// Exact (lambda, k2, kappa, l1) of the monic recurrence. The
/// Meixner-Pollaczek family needs a rational cot(phi).
RecurrenceSpec recurrence_of(const FamilyInstance& fam);

/// Closed-form generating function f(t) exp(x u(t)) = sum_n c_n p_n(x) t^n
/// normalized to f(0) = 1, u'(0) = 1; p_n is the standard polynomial, so the
/// monic P_n = n! c_n p_n.
struct GeneratingFunction {
    RatSeries f;
    RatSeries u;
    /// c_0..c_order when exactly rational (empty otherwise).
    std::vector<Rat> cn;
};

GeneratingFunction generating_function_of(const FamilyInstance& fam, std::size_t order);

/// c_n alone; nullopt when not rational (Meixner-Pollaczek with irrational
/// sin phi).
std::optional<Rat> normalization(const FamilyInstance& fam, long n);

/// Standard polynomial p_n(x), exactly. Throws MathError for
/// Meixner-Pollaczek without exact trigonometric values.
Rat evaluate(const FamilyInstance& fam, long n, const Rat& x);
/// Standard polynomial in double precision.
double evaluate(const FamilyInstance& fam, long n, double x);
/// Monic P_n(x) = n! c_n p_n(x), exactly (uses the hypergeometric forms).
RatPoly standard_monic(const FamilyInstance& fam, long n);

// ---------------------------------------------------------------- weights

enum class WeightKind { Continuous, Discrete };

struct WeightSpec {
    WeightKind kind = WeightKind::Continuous;
    std::string density;  // closed form, e.g. "a^x/x!"
    std::string support;  // e.g. "{0,1,2,...}" or "(-inf,inf)"
    /// Discrete support upper end (inclusive) when finite.
    std::optional<long> last_point;
    /// Left end of a continuous support ("-inf" when absent).
    std::optional<double> lower;
};

WeightSpec weight_spec(const FamilyInstance& fam);

/// Discrete weight at integer x, exact. Throws MathError for continuous
/// families or x outside the support.
Rat discrete_weight(const FamilyInstance& fam, long x);
/// Weight density or mass at x in double precision.
double weight_value(const FamilyInstance& fam, double x);

// ---------------------------------------------------------------- identities

struct IdentityReport {
    std::string lhs;
    std::string rhs;
    bool exact = false;
    bool holds = false;
    double abs_error = 0.0;
};

/// K_n(x; p, N) (own recurrence) against M_n(x; -N, p/(p-1)) (2F1), exact.
IdentityReport identity_krawtchouk_meixner(const Rat& p, long big_n, long n, const Rat& x);

/// P_n^{(lambda)}(x; phi) (own recurrence) against
/// (2 lambda)_n / n! e^{i n phi} M_n(-lambda - i x; 2 lambda, e^{2 i phi}).
/// Exact over Gaussian rationals when phi has rational cos and sin.
IdentityReport identity_mp_meixner(const Rat& lambda, const Angle& phi, long n, const Rat& x);
/// Double-precision variant; holds when the relative error is below `tol`.
IdentityReport identity_mp_meixner(double lambda, double phi, long n, double x, double tol = 1e-10);

// ---------------------------------------------------------------- limits

enum class LimitEdge {
    MeixnerPollaczekToLaguerre,
    MeixnerToLaguerre,
    MeixnerToCharlier,
    KrawtchoukToCharlier,
    LaguerreToHermite,
    CharlierToHermite,
    MeixnerPollaczekToHermite,
    MeixnerToHermite,
    KrawtchoukToHermite,
};

std::vector<LimitEdge> all_limit_edges();
std::string to_string(LimitEdge edge);
LimitEdge parse_limit_edge(std::string_view text);
/// The limit formula used for the edge, as documentation text.
std::string limit_formula(LimitEdge edge);

inline constexpr double kLimitMinOrder = 0.95;

struct LimitRecord {
    LimitEdge edge{};
    long n = 0;
    Rat x;
    std::vector<double> eps;
    std::vector<double> error;
    /// log10(error_k / error_{k+1}) for consecutive eps decades.
    std::vector<double> order;
    bool exact_zero = false;    // error identically zero (e.g. n = 0)
    bool monotone = false;      // strictly decreasing (or identically zero)
    double asymptotic_order = 0.0;  // order over the last pair of decades
    /// The measured order of a first-order limit is 1 - O(eps), so the
    /// default threshold leaves a small margin below 1.
    [[nodiscard]] bool passed(double min_order = kLimitMinOrder) const;
};

/// Evaluates the scaled source family against the target at each
/// eps = 10^{-1}, ..., 10^{-decades}.
LimitRecord limit_transition(LimitEdge edge, long n, const Rat& x, int decades = 6);

}  // namespace meixner

#endif  // MEIXNER_FAMILIES_HPP
