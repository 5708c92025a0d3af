#ifndef MEIXNER_VERIFY_HPP
#define MEIXNER_VERIFY_HPP

// Property suites shared by the command-line `verify` and the acceptance
// runner. Every suite is deterministic: random instances come from a seeded
// engine and parallel reductions are order-fixed.

#include <cstdint>
#include <string>
#include <vector>

#include "meixner/io.hpp"

namespace meixner {

struct VerifyOptions {
    std::size_t n_max = 20;
    /// Series order; 0 means 2 n_max + 2.
    std::size_t order = 0;
    std::size_t commutation_n = 15;
    std::size_t gram_n = 12;
    std::size_t gram_n_mp = 8;
    std::size_t mgf_order = 12;
    std::size_t eigen_n = 10;
    std::size_t moments = 12;
    double tol = 1e-10;
    std::uint64_t seed = 1934;
    [[nodiscard]] std::size_t series_order() const { return order == 0 ? 2 * n_max + 2 : order; }
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    /// Set when a certified bound could not be reached (exit code 3).
    bool bound_failure = false;
    Json detail;
};

struct VerifyReport {
    std::string subject;
    std::vector<SuiteResult> suites;
    [[nodiscard]] bool passed() const;
    [[nodiscard]] bool bound_failure() const;
    [[nodiscard]] Json to_json() const;
};

/// Families and parameters used by `verify --all` and the acceptance runner.
std::vector<FamilyInstance> reference_families();

/// Expansion, lowering, commutation, classification, closed-form operator,
/// moment generating function, Gram, moment match, eigen-equation and
/// hypergeometric-form suites for one family.
VerifyReport verify_family(const FamilyInstance& fam, const VerifyOptions& opt);

/// Krawtchouk-Meixner and Meixner-Pollaczek-Meixner identities at seeded
/// random points.
VerifyReport verify_identities(const VerifyOptions& opt);

/// Every limit edge for n = 0..5 at x in {0, 1/2, 1}, eps = 10^-1..10^-6.
VerifyReport verify_limits(const VerifyOptions& opt);

}  // namespace meixner

#endif  // MEIXNER_VERIFY_HPP
