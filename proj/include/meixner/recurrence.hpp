#ifndef MEIXNER_RECURRENCE_HPP
#define MEIXNER_RECURRENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "meixner/poly.hpp"
#include "meixner/sheffer.hpp"

namespace meixner {

/// Coefficients of the monic three-term recurrence
///   P_{n+1}(x) = (x + l_{n+1}) P_n(x) + k_{n+1} P_{n-1}(x),
/// with l_{n+1} = l1 + n lambda and k_{n+1} = n (k2 + (n-1) kappa).
struct RecurrenceSpec {
    Rat lambda_rec;
    Rat k2;
    Rat kappa;
    Rat l1;

    [[nodiscard]] Rat l(std::size_t n_plus_1) const;  // l_{n+1}
    [[nodiscard]] Rat k(std::size_t n_plus_1) const;  // k_{n+1}
    friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;
};

/// P_0..P_{n_max} generated by the recurrence.
PolySequence monic_from_recurrence(const RecurrenceSpec& spec, std::size_t n_max);

enum class FavardKind { InfinitePositive, Finite, NotOrthogonal };

std::string to_string(FavardKind kind);

struct FavardReport {
    FavardKind kind = FavardKind::NotOrthogonal;
    /// For Finite: the last index N with k_{n+1} < 0 for all 1 <= n <= N;
    /// k_{N+2} = 0 is the first vanishing coefficient.
    std::optional<long> terminal_degree;
    /// First n >= 1 where k_{n+1} >= 0 (the positivity failure), if any.
    std::optional<long> first_nonnegative;
    /// k_{n+1} for n = 1..horizon.
    std::vector<Rat> k_values;
    [[nodiscard]] bool orthogonal() const { return kind != FavardKind::NotOrthogonal; }
};

/// Sign analysis of k_{n+1}: all negative (positive-definite functional),
/// negative until a first zero at n = N+1 (finite, Krawtchouk type), or
/// anything else (not orthogonal with respect to a positive measure).
FavardReport favard_check(const RecurrenceSpec& spec, std::size_t horizon);

}  // namespace meixner

#endif  // MEIXNER_RECURRENCE_HPP
