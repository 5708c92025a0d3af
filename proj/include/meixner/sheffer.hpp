#ifndef MEIXNER_SHEFFER_HPP
#define MEIXNER_SHEFFER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "meixner/poly.hpp"
#include "meixner/series.hpp"

namespace meixner {

/// Generating pair (f, u) of f(s) exp(x u(s)) = sum_n P_n(x) s^n / n!,
/// with the compositional inverse t of u cached and the degree drop mu of
/// the associated operator Lambda.
class ShefferPair {
public:
    /// Placeholder pair of order 0 (f = 1); not a valid Sheffer pair.
    ShefferPair() = default;
    /// Validates f_0 = 1, u_0 = 0, u_1 = 1 and computes t = revert(u).
    ShefferPair(RatSeries f, RatSeries u, unsigned mu = 0);
    /// Builds the pair from a lowering series t (t_0 = 0, t_1 = 1).
    static ShefferPair from_lowering(RatSeries f, RatSeries t, unsigned mu = 0);

    [[nodiscard]] const RatSeries& f() const { return f_; }
    [[nodiscard]] const RatSeries& u() const { return u_; }
    [[nodiscard]] const RatSeries& t() const { return t_; }
    [[nodiscard]] unsigned mu() const { return mu_; }
    [[nodiscard]] std::size_t order() const { return std::min(f_.order(), u_.order()); }

    /// Replaces f without touching u, t; used to build negative controls.
    [[nodiscard]] ShefferPair with_f(RatSeries f) const;

private:
    RatSeries f_;
    RatSeries u_;
    RatSeries t_;
    unsigned mu_ = 0;
};

using PolySequence = std::vector<RatPoly>;

/// Monic P_0..P_{n_max} from the generating function. Throws MathError if
/// the series order is below n_max.
PolySequence expand(const ShefferPair& pair, std::size_t n_max);
/// Serial reference for expand; same output, no threading.
PolySequence expand_serial(const ShefferPair& pair, std::size_t n_max);

/// sum_k t_k D^k P.
RatPoly apply_tD(const RatSeries& t, const RatPoly& p);

/// Lambda realized on the basis {P_n}: P_n -> C(n, mu) x^{n-mu}, zero when
/// n < mu. `basis` must be monic with deg P_n = n and cover deg p.
RatPoly lambda_apply(const PolySequence& basis, unsigned mu, const RatPoly& p);
RatPoly lambda_apply(const ShefferPair& pair, const RatPoly& p);

/// Coordinates of p in a monic triangular basis.
std::vector<Rat> basis_coordinates(const PolySequence& basis, const RatPoly& p);

struct CommutationReport {
    std::size_t n_max = 0;
    /// Degrees n where D Lambda P_n != Lambda t(D) P_n.
    std::vector<std::size_t> commutation_failures;
    /// Degrees n where Lambda P_n != C(n, mu) x^{n-mu}.
    std::vector<std::size_t> action_failures;
    [[nodiscard]] bool passed() const { return commutation_failures.empty() && action_failures.empty(); }
    [[nodiscard]] std::optional<std::size_t> first_failure() const;
};

/// Lambda taken from the pair's f through Lambda e^{x u(s)} = s^mu e^{xs} /
/// (mu! f(s)), applied to the sequence P_0..P_{n_max}; checks both
/// D Lambda = Lambda t(D) and the action on the sequence.
CommutationReport verify_commutation(const ShefferPair& pair, const PolySequence& sequence);
CommutationReport verify_commutation(const ShefferPair& pair, std::size_t n_max);

/// Lambda defined by the pair's f on the power basis (independent of any
/// expanded sequence).
RatPoly lambda_from_f(const ShefferPair& pair, const RatPoly& p);

/// f(s) = sum_n P_n(0) s^n / n!
RatSeries f_from_values(const PolySequence& sequence);

/// Monic sequence with t(D) P_n = n P_{n-1} and P_n(0) = n! f_n, built by
/// integrating P_n = n int_0^x tau(D)^{-1} P_{n-1} where t(D) = D tau(D).
PolySequence sequence_from_lowering(const RatSeries& t, const RatSeries& f, std::size_t n_max);

/// Basic sequence of t(D): the lowering sequence with f = 1.
PolySequence basic_sequence(const RatSeries& t, std::size_t n_max);

}  // namespace meixner

#endif  // MEIXNER_SHEFFER_HPP
