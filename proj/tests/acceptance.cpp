// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <array>
#include <cstdio>
#include <functional>
#include <limits>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "meixner/verify.hpp"

using namespace meixner;

namespace {

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string run_capture(const std::string& command, int& status) {
    std::string out;
    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    status = ::pclose(pipe);
    return out;
}

/// Per-family suite results keyed by suite name.
class FamilyRuns {
public:
    explicit FamilyRuns(const VerifyOptions& opt) {
        for (const auto& fam : reference_families()) reports_.push_back(verify_family(fam, opt));
    }

    [[nodiscard]] Outcome suite(const std::string& name) const {
        Outcome o{true, ""};
        std::ostringstream failed;
        for (const auto& r : reports_) {
            for (const auto& s : r.suites) {
                if (s.name != name) continue;
                if (!s.passed) {
                    o.passed = false;
                    failed << ' ' << r.subject;
                }
            }
        }
        o.detail = o.passed ? std::to_string(reports_.size()) + " families" : "failed:" + failed.str();
        return o;
    }

    [[nodiscard]] const std::vector<VerifyReport>& reports() const { return reports_; }

private:
    std::vector<VerifyReport> reports_;
};

Outcome orthogonality(const FamilyRuns& runs) {
    Outcome o = runs.suite("gram");
    std::ostringstream d;
    d << o.detail;
    const GramReport kr = gram_check(FamilyInstance(Krawtchouk{Rat(1, 3), 6}), 6);
    bool kr_exact = kr.exact && kr.passed;
    for (std::size_t i = 0; i < kr.entries.size(); ++i)
        for (std::size_t j = 0; j < kr.entries.size(); ++j)
            if (i != j && kr.entries[i][j] != "0") kr_exact = false;
    d << "; krawtchouk exact zeros " << (kr_exact ? "yes" : "no");
    const MomentMatchReport neg =
        moment_match(FamilyInstance(Meixner{Rat(3, 2), Rat(1, 4)}), 12, WeightPerturbation::DropMeixnerPower);
    const bool neg_ok = !neg.passed() && neg.first_mismatch && *neg.first_mismatch == 1;
    d << "; negative control fails at mu_" << (neg.first_mismatch ? std::to_string(*neg.first_mismatch) : "none");
    o.passed = o.passed && kr_exact && neg_ok;
    o.detail = d.str();
    return o;
}

Outcome report_outcome(const VerifyReport& r) {
    Outcome o{r.passed(), ""};
    std::ostringstream d;
    d << r.suites.size() << " suites";
    for (const auto& s : r.suites)
        if (!s.passed) d << "; failed " << s.name;
    o.detail = d.str();
    return o;
}

Outcome limits(const VerifyOptions& opt) {
    Outcome o = report_outcome(verify_limits(opt));
    double lowest = std::numeric_limits<double>::infinity();
    for (LimitEdge e : all_limit_edges())
        for (long n = 0; n <= 5; ++n)
            for (const Rat& x : {Rat(0), Rat(1, 2), Rat(1)}) {
                const LimitRecord r = limit_transition(e, n, x, 6);
                if (!r.exact_zero) lowest = std::min(lowest, r.asymptotic_order);
            }
    std::ostringstream d;
    d << o.detail << "; lowest final-decade order " << lowest << ", accepted above " << kLimitMinOrder;
    o.detail = d.str();
    return o;
}

Outcome determinism() {
    const char* cli = std::getenv("MEIXNER_CLI_PATH");
    if (cli == nullptr) return {false, "MEIXNER_CLI_PATH not set"};
    const std::string cmd = std::string("\"") + cli + "\" verify --all";
    int s1 = 0;
    int s2 = 0;
    const std::string a = run_capture(cmd, s1);
    const std::string b = run_capture(cmd, s2);
    std::ostringstream d;
    d << a.size() << " bytes, exit " << s1 << "/" << s2;
    return {!a.empty() && a == b && s1 == 0 && s2 == 0, d.str()};
}

}  // namespace

int main() {
    VerifyOptions opt;
    const FamilyRuns runs(opt);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"generating function and recurrence agree for n <= 20",
         [&] { return runs.suite("expansion-vs-recurrence"); }},
        {"lowering identity t(D) P_n = n P_{n-1} for n <= 20", [&] { return runs.suite("lowering-identity"); }},
        {"commutation D Lambda = Lambda t(D) on P_0..P_15", [&] { return runs.suite("commutation"); }},
        {"classifier round-trip with f, u through order 42", [&] { return runs.suite("classify-roundtrip"); }},
        {"closed-form operator matches the series solution through order 42",
         [&] { return runs.suite("operator-closed-form"); }},
        {"moment generating function identity through order 12", [&] { return runs.suite("mgf-identity"); }},
        {"orthogonality and the dropped-power negative control", [&] { return orthogonality(runs); }},
        {"Krawtchouk-Meixner and Meixner-Pollaczek-Meixner identities",
         [&] { return report_outcome(verify_identities(opt)); }},
        {"limit transitions converge with order >= 1", [&] { return limits(opt); }},
        {"eigen-equations and the operator identity for n <= 10", [&] { return runs.suite("eigen-equation"); }},
        {"verify --all is byte-identical across runs", [] { return determinism(); }},
    };

    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.passed) ++failures;
        std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << (k + 1) << ": " << criteria[k].first << " ("
                  << o.detail << ")\n";
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
