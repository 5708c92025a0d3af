#ifndef MEIXNER_ORTHO_HPP
#define MEIXNER_ORTHO_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "meixner/families.hpp"
#include "meixner/recurrence.hpp"
#include "meixner/scalar.hpp"

namespace meixner {

enum class Execution { Serial, Parallel };

enum class MomentSource { FromRecurrence, FromWeight };

/// Orthogonality functional given by its moments, normalized so mu_0 = 1.
struct MomentFunctional {
    std::vector<Rat> moments;
    MomentSource provenance = MomentSource::FromRecurrence;
};

/// Exact moments mu_0..mu_M: x^k is expanded in the P_n basis with the
/// recurrence and mu_k is its P_0 coordinate. Throws MathError naming the
/// first index with k_{n+1} >= 0 when positivity fails before M.
MomentFunctional moments_from_recurrence(const RecurrenceSpec& spec, std::size_t m);

/// det[mu_{i+j}]_{0<=i,j<=r} for r = 0..max_r (needs moments up to 2 max_r).
std::vector<Rat> hankel_determinants(const MomentFunctional& mf, std::size_t max_r);

/// ln Gamma(z) by the Lanczos approximation (g = 7, 9 terms), with the
/// reflection formula for Re z < 1/2. Throws MathError at the poles.
CF64 log_gamma_complex(CF64 z);

/// Gauss rule of the normalized functional (weights sum to 1).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Golub-Welsch: eigen-decomposition of the symmetric Jacobi matrix with
/// diagonal -l_{j+1} and off-diagonal sqrt(-k_{j+1}).
GaussRule quadrature_from_jacobi(const RecurrenceSpec& spec, std::size_t n_points);

/// Composite Gauss-Legendre integral over [a, b] split into equal panels.
/// Panel sums are combined in a fixed order, so the result does not depend
/// on the thread count.
double integrate(const std::function<double(double)>& g, double a, double b, std::size_t panels,
                 Execution exec = Execution::Parallel);

struct GramReport {
    std::string family;
    /// "finite-exact-sum", "moment-closed-form", "certified-truncated-sum",
    /// or "gauss-jacobi-quadrature".
    std::string method;
    /// Gram entries are this constant times the stored values ("1" when the
    /// values are the entries themselves).
    std::string base_constant = "1";
    std::size_t n_max = 0;
    bool exact = false;
    /// Entry strings: exact rationals, or %.17g for numeric methods.
    std::vector<std::vector<std::string>> entries;
    std::vector<std::vector<double>> values;
    /// Truncation point x* of an infinite discrete sum.
    std::optional<long> truncation;
    /// Certified bound on the neglected tail of each entry.
    double tail_bound = 0.0;
    /// Acceptance threshold for off-diagonal magnitudes (0 means exactly 0).
    double off_diagonal_bound = 0.0;
    double max_off_diagonal = 0.0;
    double min_diagonal = 0.0;
    /// Off-diagonal maximum from direct integration of the closed-form
    /// weight (continuous numeric families only).
    std::optional<double> weight_integral_max_off_diagonal;
    bool passed = false;
};

/// <P_m, P_n> for the monic family polynomials, m, n <= n_max (clamped to N
/// for Krawtchouk).
GramReport gram_check(const FamilyInstance& fam, std::size_t n_max, Execution exec = Execution::Parallel);

enum class WeightPerturbation { None, DropMeixnerPower };

struct MomentMatchReport {
    std::string family;
    std::string method;
    std::vector<std::string> recurrence_moments;
    std::vector<std::string> weight_moments;
    std::vector<bool> matches;
    std::optional<std::size_t> first_mismatch;
    std::optional<long> truncation;
    std::string note;
    [[nodiscard]] bool passed() const { return !first_mismatch.has_value(); }
};

/// Moments of the recurrence against moments of the closed-form weight,
/// normalized by the total mass. Discrete weights are compared exactly with
/// certified tail intervals; continuous ones to `tol` relative.
MomentMatchReport moment_match(const FamilyInstance& fam, std::size_t m,
                               WeightPerturbation perturbation = WeightPerturbation::None, double tol = 1e-10);

}  // namespace meixner

#endif  // MEIXNER_ORTHO_HPP
