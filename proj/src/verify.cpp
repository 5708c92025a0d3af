#include "meixner/verify.hpp"

#include <numbers>
#include <random>

namespace meixner {

bool VerifyReport::passed() const {
    for (const auto& s : suites)
        if (!s.passed) return false;
    return true;
}

bool VerifyReport::bound_failure() const {
    for (const auto& s : suites)
        if (s.bound_failure) return true;
    return false;
}

Json VerifyReport::to_json() const {
    Json j;
    j["subject"] = subject;
    Json arr = Json::array();
    for (const auto& s : suites) {
        Json e;
        e["suite"] = s.name;
        e["passed"] = s.passed;
        if (s.bound_failure) e["bound_failure"] = true;
        e["detail"] = s.detail;
        arr.push_back(std::move(e));
    }
    j["suites"] = std::move(arr);
    j["passed"] = passed();
    return j;
}

std::vector<FamilyInstance> reference_families() {
    return {
        FamilyInstance(Hermite{}),
        FamilyInstance(Laguerre{Rat(0)}),
        FamilyInstance(Laguerre{Rat(1, 2)}),
        FamilyInstance(Charlier{Rat(1)}),
        FamilyInstance(Charlier{Rat(2)}),
        FamilyInstance(Meixner{Rat(3, 2), Rat(1, 4)}),
        FamilyInstance(MeixnerPollaczek{Rat(1), Angle::half_pi()}),
        FamilyInstance(Krawtchouk{Rat(1, 3), 6}),
    };
}

namespace {

template <class F>
SuiteResult run_suite(const std::string& name, F&& body) {
    SuiteResult s;
    s.name = name;
    try {
        body(s);
    } catch (const MathError& e) {
        s.passed = false;
        s.bound_failure = true;
        s.detail["error"] = e.what();
    }
    return s;
}

Json index_list(const std::vector<std::size_t>& v) { return Json(v); }

long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rat draw_rat(std::mt19937_64& rng, long num_lo, long num_hi, long den_hi) {
    return Rat(draw(rng, num_lo, num_hi), draw(rng, 1, den_hi));
}

double draw_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

VerifyReport verify_family(const FamilyInstance& fam, const VerifyOptions& opt) {
    VerifyReport rep;
    rep.subject = fam.str();
    const std::size_t order = opt.series_order();
    const std::size_t n_max = opt.n_max;
    const RecurrenceSpec spec = recurrence_of(fam);
    const GeneratingFunction gf = generating_function_of(fam, order);
    const ShefferPair pair(gf.f, gf.u);
    const PolySequence seq = expand(pair, n_max);
    const PolySequence rec = monic_from_recurrence(spec, n_max);

    rep.suites.push_back(run_suite("expansion-vs-recurrence", [&](SuiteResult& s) {
        std::vector<std::size_t> bad;
        for (std::size_t n = 0; n <= n_max; ++n)
            if (!(seq[n] == rec[n])) bad.push_back(n);
        s.passed = bad.empty();
        s.detail["n_max"] = n_max;
        s.detail["mismatched_degrees"] = index_list(bad);
    }));

    rep.suites.push_back(run_suite("lowering-identity", [&](SuiteResult& s) {
        std::vector<std::size_t> bad;
        for (std::size_t n = 0; n <= n_max; ++n) {
            const RatPoly lhs = apply_tD(pair.t(), seq[n]);
            const RatPoly rhs = n == 0 ? RatPoly() : seq[n - 1] * Rat(static_cast<long>(n));
            if (!(lhs == rhs)) bad.push_back(n);
        }
        s.passed = bad.empty();
        s.detail["n_max"] = n_max;
        s.detail["failures"] = index_list(bad);
    }));

    rep.suites.push_back(run_suite("commutation", [&](SuiteResult& s) {
        const PolySequence head(seq.begin(), seq.begin() + static_cast<long>(std::min(opt.commutation_n, n_max) + 1));
        const CommutationReport c = verify_commutation(pair, head);
        s.passed = c.passed();
        s.detail = to_json(c);
    }));

    const ClassificationResult cls = classify(spec, order);
    rep.suites.push_back(run_suite("classify-roundtrip", [&](SuiteResult& s) {
        const bool same_family = cls.family && *cls.family == fam && cls.is_standard();
        const bool same_f = cls.pair.f() == gf.f;
        const bool same_u = cls.pair.u() == gf.u;
        s.passed = same_family && same_f && same_u;
        s.detail["case"] = to_string(cls.case_tag);
        s.detail["recovered"] = cls.family ? Json(cls.family->str()) : Json(nullptr);
        s.detail["f_matches_closed_form"] = same_f;
        s.detail["u_matches_closed_form"] = same_u;
        s.detail["order"] = order;
    }));

    rep.suites.push_back(run_suite("operator-closed-form", [&](SuiteResult& s) {
        const OperatorForm op = recover_operator(cls.roots, order);
        s.passed = op.series == cls.pair.t();
        s.detail["formula"] = op.formula;
        s.detail["order"] = order;
    }));

    rep.suites.push_back(run_suite("mgf-identity", [&](SuiteResult& s) {
        const MgfReport m = mgf_identity_check(cls, opt.mgf_order);
        s.passed = m.passed();
        s.detail = to_json(m);
    }));

    rep.suites.push_back(run_suite("gram", [&](SuiteResult& s) {
        const std::size_t gn = fam.tag() == FamilyTag::MeixnerPollaczek ? opt.gram_n_mp : opt.gram_n;
        const GramReport g = gram_check(fam, gn);
        s.passed = g.passed;
        Json j = to_json(g);
        if (g.method == "certified-truncated-sum") {
            // exact partial sums are very long rationals; keep the summary
            Json diag = Json::array();
            for (std::size_t n = 0; n <= g.n_max; ++n) diag.push_back(g.values[n][n]);
            j.erase("entries");
            j["diagonal"] = diag;
        }
        s.detail = std::move(j);
    }));

    rep.suites.push_back(run_suite("moment-match", [&](SuiteResult& s) {
        const MomentMatchReport m = moment_match(fam, opt.moments, WeightPerturbation::None, opt.tol);
        s.passed = m.passed();
        s.detail = to_json(m);
    }));

    rep.suites.push_back(run_suite("eigen-equation", [&](SuiteResult& s) {
        const EigenEquationReport e = eigen_equation_check(cls, opt.eigen_n);
        s.passed = e.passed() && e.family_checked;
        s.detail = to_json(e);
    }));

    rep.suites.push_back(run_suite("hypergeometric-form", [&](SuiteResult& s) {
        if (!normalization(fam, 0)) {
            s.passed = true;
            s.detail["skipped"] = "normalization not rational";
            return;
        }
        if (fam.tag() == FamilyTag::MeixnerPollaczek && !fam.as<MeixnerPollaczek>().phi.exact_trig()) {
            s.passed = true;
            s.detail["skipped"] = "angle without exact trigonometric values";
            return;
        }
        std::size_t top = std::min<std::size_t>(n_max, 10);
        if (auto big_n = fam.max_degree()) top = std::min<std::size_t>(top, static_cast<std::size_t>(*big_n));
        std::vector<std::size_t> bad;
        for (std::size_t n = 0; n <= top; ++n)
            if (!(standard_monic(fam, static_cast<long>(n)) == seq[n])) bad.push_back(n);
        s.passed = bad.empty();
        s.detail["n_max"] = top;
        s.detail["failures"] = index_list(bad);
    }));
    return rep;
}

VerifyReport verify_identities(const VerifyOptions& opt) {
    VerifyReport rep;
    rep.subject = "identities";
    std::mt19937_64 rng(opt.seed);

    rep.suites.push_back(run_suite("krawtchouk-meixner", [&](SuiteResult& s) {
        Json cases = Json::array();
        bool ok = true;
        for (int trial = 0; trial < 20; ++trial) {
            const long den = draw(rng, 2, 12);
            const Rat p(draw(rng, 1, den - 1), den);
            const long big_n = draw(rng, 1, 12);
            const Rat x = draw_rat(rng, -20, 40, 7);
            std::size_t holds = 0;
            for (long n = 0; n <= big_n; ++n)
                if (identity_krawtchouk_meixner(p, big_n, n, x).holds) ++holds;
            ok = ok && holds == static_cast<std::size_t>(big_n + 1);
            cases.push_back({{"p", p.str()}, {"N", big_n}, {"x", x.str()}, {"degrees_holding", holds}});
        }
        s.passed = ok;
        s.detail["cases"] = std::move(cases);
    }));

    rep.suites.push_back(run_suite("mp-meixner-exact", [&](SuiteResult& s) {
        Json cases = Json::array();
        bool ok = true;
        const Angle phi = Angle::half_pi();
        for (int trial = 0; trial < 10; ++trial) {
            const Rat lambda = draw_rat(rng, 1, 20, 6);
            const Rat x = draw_rat(rng, -20, 20, 5);
            std::size_t holds = 0;
            for (long n = 0; n <= 8; ++n)
                if (identity_mp_meixner(lambda, phi, n, x).holds) ++holds;
            ok = ok && holds == 9;
            cases.push_back({{"lambda", lambda.str()}, {"phi", phi.str()}, {"x", x.str()}, {"degrees_holding", holds}});
        }
        s.passed = ok;
        s.detail["cases"] = std::move(cases);
    }));

    rep.suites.push_back(run_suite("mp-meixner-double", [&](SuiteResult& s) {
        Json cases = Json::array();
        bool ok = true;
        for (int trial = 0; trial < 10; ++trial) {
            const double lambda = 0.25 + 3.0 * draw_unit(rng);
            const double phi = 0.1 + (std::numbers::pi - 0.2) * draw_unit(rng);
            const double x = -4.0 + 8.0 * draw_unit(rng);
            double worst = 0.0;
            bool all = true;
            for (long n = 0; n <= 8; ++n) {
                const IdentityReport r = identity_mp_meixner(lambda, phi, n, x, opt.tol);
                all = all && r.holds;
                const double scale = std::max(1e-300, std::abs(std::stod(r.lhs)));
                worst = std::max(worst, r.abs_error / scale);
            }
            ok = ok && all;
            cases.push_back({{"lambda", lambda}, {"phi", phi}, {"x", x}, {"max_relative_error", worst}, {"holds", all}});
        }
        s.passed = ok;
        s.detail["tolerance"] = opt.tol;
        s.detail["cases"] = std::move(cases);
    }));
    return rep;
}

VerifyReport verify_limits(const VerifyOptions& /*opt*/) {
    VerifyReport rep;
    rep.subject = "limits";
    const std::vector<Rat> xs{Rat(0), Rat(1, 2), Rat(1)};
    for (LimitEdge edge : all_limit_edges()) {
        rep.suites.push_back(run_suite(to_string(edge), [&](SuiteResult& s) {
            Json recs = Json::array();
            bool ok = true;
            for (long n = 0; n <= 5; ++n) {
                for (const Rat& x : xs) {
                    const LimitRecord r = limit_transition(edge, n, x, 6);
                    ok = ok && r.passed();
                    recs.push_back(to_json(r));
                }
            }
            s.passed = ok;
            s.detail["formula"] = limit_formula(edge);
            s.detail["min_order"] = kLimitMinOrder;
            s.detail["records"] = std::move(recs);
        }));
    }
    return rep;
}

}  // namespace meixner
