#include "doctest.h"
#include "meixner/classify.hpp"

using namespace meixner;

namespace {

constexpr std::size_t kOrder = 30;

const Surd* param(const ClassificationResult& r, const std::string& name) {
    for (const auto& [k, v] : r.params)
        if (k == name) return &v;
    return nullptr;
}

RecurrenceSpec affine_image(const RecurrenceSpec& s, const Rat& scale, const Rat& shift) {
    return {s.lambda_rec * scale, s.k2 * scale * scale, s.kappa * scale * scale, s.l1 * scale - shift};
}

}  // namespace

TEST_CASE("Hermite case") {
    const ClassificationResult r = classify({Rat(0), Rat(-1, 2), Rat(0), Rat(0)}, kOrder);
    CHECK(r.case_tag == CaseTag::Hermite);
    CHECK(to_string(r.case_tag) == "I-Hermite");
    const RatSeries t = RatSeries::variable(kOrder);
    CHECK(r.pair.f() == exp(t * t * Rat(-1, 4)));
    CHECK(r.pair.u() == t);
    CHECK(r.is_standard());
}

TEST_CASE("Laguerre case") {
    const ClassificationResult r = classify({Rat(-2), Rat(-1), Rat(-1), Rat(-1)}, kOrder);
    CHECK(r.case_tag == CaseTag::Laguerre);
    CHECK(r.roots.alpha == Surd(-1));
    REQUIRE(r.family);
    CHECK(r.family->as<Laguerre>().alpha == Rat(0));
    CHECK(r.is_standard());
}

TEST_CASE("Charlier case") {
    const ClassificationResult r = classify({Rat(-1), Rat(-2), Rat(0), Rat(-2)}, kOrder);
    CHECK(r.case_tag == CaseTag::Charlier);
    REQUIRE(r.family);
    CHECK(r.family->as<Charlier>().a == Rat(2));
    const RatSeries t = RatSeries::variable(kOrder);
    CHECK(r.pair.f() == exp(t * Rat(-2)));
    CHECK(r.pair.u() == log(RatSeries::constant(Rat(1), kOrder) + t));
}

TEST_CASE("Meixner case") {
    const ClassificationResult r = classify({Rat(-3), Rat(-2), Rat(-2), Rat(0)}, kOrder);
    CHECK(r.case_tag == CaseTag::Meixner);
    REQUIRE(r.family);
    CHECK(r.family->as<Meixner>().beta == Rat(1));
    CHECK(r.family->as<Meixner>().c == Rat(1, 2));
    // alpha = -1/(1-c), beta_root = -c/(1-c)
    CHECK(r.roots.alpha == Surd(-2));
    CHECK(r.roots.beta == Surd(-1));
    CHECK(r.scale == Surd(1));
}

TEST_CASE("Meixner-Pollaczek case") {
    const ClassificationResult r = classify({Rat(0), Rat(-1, 2), Rat(-1, 4), Rat(0)}, kOrder);
    CHECK(r.case_tag == CaseTag::MeixnerPollaczek);
    CHECK(r.roots.tag == RootTag::ComplexConjugate);
    CHECK(r.favard.kind == FavardKind::InfinitePositive);
}

TEST_CASE("Krawtchouk case and termination") {
    const Rat pq = Rat(1, 3) * Rat(2, 3);
    const ClassificationResult r = classify({Rat(-1, 3), -pq * Rat(4), pq, Rat(0)}, kOrder);
    CHECK(r.case_tag == CaseTag::Krawtchouk);
    CHECK(r.favard.kind == FavardKind::Finite);
    REQUIRE(r.favard.terminal_degree);
    CHECK(*r.favard.terminal_degree == 4);
    const Surd* n = param(r, "N");
    REQUIRE(n);
    CHECK(*n == Surd(4));

    const ClassificationResult single = classify({Rat(0), Rat(-1), Rat(1), Rat(0)}, kOrder);
    CHECK(single.case_tag == CaseTag::Krawtchouk);
    REQUIRE(param(single, "N"));
    CHECK(*param(single, "N") == Surd(1));
}

TEST_CASE("non-orthogonal and degenerate specs") {
    CHECK(classify({Rat(0), Rat(-5, 2), Rat(1), Rat(0)}, kOrder).case_tag == CaseTag::NotOrthogonal);
    CHECK(classify({Rat(0), Rat(1, 2), Rat(0), Rat(0)}, kOrder).case_tag == CaseTag::NotOrthogonal);
    CHECK_THROWS_WITH_AS(classify({Rat(1), Rat(0), Rat(-1), Rat(0)}, kOrder), "degenerate, not orthogonal",
                         MathError);
}

TEST_CASE("classification is invariant under affine maps") {
    const std::vector<RecurrenceSpec> specs{
        {Rat(0), Rat(-1, 2), Rat(0), Rat(0)},
        {Rat(-2), Rat(-3, 2), Rat(-1), Rat(-3, 2)},
        {Rat(-1), Rat(-2), Rat(0), Rat(-2)},
        {Rat(-3), Rat(-2), Rat(-2), Rat(-1)},
        {Rat(0), Rat(-1, 2), Rat(-1, 4), Rat(0)},
        {Rat(-1, 3), Rat(-8, 9), Rat(2, 9), Rat(-4, 3)},
    };
    for (const RecurrenceSpec& s : specs) {
        const ClassificationResult base = classify(s, 16);
        for (const Rat& shift : {Rat(0), Rat(5, 2), Rat(-7)}) {
            for (const Rat& scale : {Rat(1), Rat(3), Rat(1, 2)}) {
                const ClassificationResult moved = classify(affine_image(s, scale, shift), 16);
                CHECK(moved.case_tag == base.case_tag);
                if (base.family && moved.family) CHECK(*moved.family == *base.family);
                if (moved.case_tag == CaseTag::MeixnerPollaczek) continue;
                // P_n(x) = s^n p_n((x - x0)/s) with the same standard family
                CHECK((moved.shift - base.shift * Surd(scale)) == Surd(shift));
                CHECK(moved.scale == base.scale * Surd(scale));
            }
        }
    }
}

TEST_CASE("closed-form operator") {
    CHECK(recover_operator(factor_quadratic(Rat(0), Rat(0)), 10).series == RatSeries::variable(10));
    const OperatorForm lag = recover_operator(factor_quadratic(Rat(-2), Rat(-1)), 10);
    for (std::size_t k = 1; k <= 10; ++k) CHECK(lag.series[k] == Rat(1));
    const OperatorForm ch = recover_operator(factor_quadratic(Rat(-1), Rat(0)), 10);
    const RatSeries expected = exp(RatSeries::variable(10)) - RatSeries::constant(Rat(1), 10);
    CHECK(ch.series == expected);
    for (const RecurrenceSpec& s : {RecurrenceSpec{Rat(-3), Rat(-2), Rat(-2), Rat(0)},
                                    RecurrenceSpec{Rat(0), Rat(-1, 2), Rat(-1, 4), Rat(0)},
                                    RecurrenceSpec{Rat(1), Rat(-1), Rat(-1, 8), Rat(0)},
                                    RecurrenceSpec{Rat(-1, 3), Rat(-8, 9), Rat(2, 9), Rat(0)}}) {
        const ClassificationResult r = classify(s, 20);
        CHECK(recover_operator(r.roots, 20).series == r.pair.t());
    }
}

TEST_CASE("eigen-equations") {
    const ClassificationResult h = classify({Rat(0), Rat(-1, 2), Rat(0), Rat(0)}, 24);
    const EigenEquationReport eh = eigen_equation_check(h, 10);
    CHECK(eh.passed());
    CHECK(eh.family_checked);

    const ClassificationResult c = classify({Rat(-1), Rat(-1), Rat(0), Rat(-1)}, 24);
    const EigenEquationReport ec = eigen_equation_check(c, 10);
    CHECK(ec.passed());
    CHECK(ec.family_checked);

    const ClassificationResult m = classify({Rat(-3), Rat(-2), Rat(-2), Rat(-1)}, 20);
    const EigenEquationReport em = eigen_equation_check(m, 8);
    CHECK(em.operator_identity_holds);
    for (const auto& res : em.operator_residuals) CHECK(res == "0");

    const FamilyInstance herm{Hermite{}};
    CHECK(family_equation_holds(herm, 2, RatPoly(std::vector<Rat>{Rat(-1, 2), Rat(0), Rat(1)})));
    CHECK_FALSE(family_equation_holds(herm, 2, RatPoly(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)})));
}

TEST_CASE("moment generating function identity") {
    const ClassificationResult c = classify({Rat(-1), Rat(-3), Rat(0), Rat(-3)}, 16);
    CHECK(mgf_identity_check(c, 6).passed());
    const ClassificationResult h = classify({Rat(0), Rat(-1, 2), Rat(0), Rat(0)}, 16);
    const MgfReport mh = mgf_identity_check(h, 8);
    CHECK(mh.passed());
    CHECK(mh.moment_side[2] == Rat(1, 4));

    RatSeries tampered = h.pair.f();
    tampered[4] += Rat(1, 7);
    const MgfReport bad = mgf_identity_check(h.spec, tampered, h.pair.t(), 8);
    CHECK_FALSE(bad.passed());
    REQUIRE(bad.first_difference);
    CHECK(*bad.first_difference == 4);
}
