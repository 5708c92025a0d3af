#ifndef MEIXNER_CLASSIFY_HPP
#define MEIXNER_CLASSIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meixner/families.hpp"
#include "meixner/recurrence.hpp"
#include "meixner/sheffer.hpp"

namespace meixner {

enum class CaseTag { Hermite, Laguerre, Charlier, Meixner, MeixnerPollaczek, Krawtchouk, NotOrthogonal };

/// "I-Hermite", ..., "VI-Krawtchouk", "NotOrthogonal".
std::string to_string(CaseTag tag);

struct ClassificationResult {
    RecurrenceSpec spec;
    CaseTag case_tag = CaseTag::NotOrthogonal;
    RootPair roots;
    /// (f, u) solved from t'(u) = 1 - lambda t - kappa t^2 and
    /// f'/f = (l1 + k2 t)/(1 - lambda t - kappa t^2).
    ShefferPair pair;
    FavardReport favard;
    /// Standard-family parameters, exact (quadratic surds when irrational).
    std::vector<std::pair<std::string, Surd>> params;
    /// Affine map to the standard family: P_n(x) = s^n p_n((x - shift)/s).
    Surd scale{1};
    Surd shift{0};
    /// Present when every parameter is rational.
    std::optional<FamilyInstance> family;

    /// True when the spec is exactly the standard family's recurrence.
    [[nodiscard]] bool is_standard() const { return family && scale == Surd(1) && shift == Surd(0); }
};

/// Throws MathError("degenerate, not orthogonal") when k2 = 0.
ClassificationResult classify(const RecurrenceSpec& spec, std::size_t order);

/// Lowering series in closed form: t = (E - 1)/(alpha E - beta) with
/// E = e^{(alpha - beta) u}, or u/(1 + alpha u) when alpha = beta.
struct OperatorForm {
    std::string formula;
    RatSeries series;
};

OperatorForm recover_operator(const RootPair& roots, std::size_t order);

struct EigenEquationReport {
    std::size_t n_max = 0;
    /// Residual of n P_n = (x + l1 + (n-1) lambda) t(D) P_n + (k2 + (n-2) kappa) t(D)^2 P_n,
    /// equivalently the (n+2) P_n form with 2 t'(D); "0" when it holds.
    std::vector<std::string> operator_residuals;
    bool operator_identity_holds = false;
    /// Classical second-order equation of the identified family.
    std::string family_equation;
    bool family_checked = false;
    std::vector<std::size_t> family_failures;
    [[nodiscard]] bool passed() const {
        return operator_identity_holds && (!family_checked || family_failures.empty());
    }
};

EigenEquationReport eigen_equation_check(const ClassificationResult& result, std::size_t n_max);

/// The classical equation of a family applied to y = P_n (monic), exactly.
/// Returns the residual as a polynomial (zero when the equation holds).
/// Meixner-Pollaczek needs exact trigonometric values.
std::string family_equation_text(FamilyTag tag);
bool family_equation_holds(const FamilyInstance& fam, long n, const RatPoly& y);

struct MgfReport {
    std::size_t order = 0;
    /// sum_k mu_k u^k / k! from the recurrence moments.
    RatSeries moment_side;
    /// 1 / f(t(u)).
    RatSeries pair_side;
    std::optional<std::size_t> first_difference;
    [[nodiscard]] bool passed() const { return !first_difference.has_value(); }
};

MgfReport mgf_identity_check(const RecurrenceSpec& spec, const RatSeries& f, const RatSeries& t, std::size_t order);
MgfReport mgf_identity_check(const ClassificationResult& result, std::size_t order);

}  // namespace meixner

#endif  // MEIXNER_CLASSIFY_HPP
