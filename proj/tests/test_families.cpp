#include "doctest.h"
#include "meixner/classify.hpp"
#include "meixner/families.hpp"

#include <cmath>
#include <numbers>

using namespace meixner;

TEST_CASE("parsing family strings") {
    CHECK(parse_family("hermite") == FamilyInstance(Hermite{}));
    CHECK(parse_family("meixner:beta=3/2,c=1/4") == FamilyInstance(Meixner{Rat(3, 2), Rat(1, 4)}));
    CHECK(parse_family("krawtchouk:p=1/3,N=6") == FamilyInstance(Krawtchouk{Rat(1, 3), 6}));
    CHECK(parse_family("charlier:a=0.5") == FamilyInstance(Charlier{Rat(1, 2)}));
    const FamilyInstance mp = parse_family("mp:lambda=1,phi=pi/2");
    CHECK(mp.as<MeixnerPollaczek>().phi == Angle::half_pi());
    CHECK(parse_family("meixner-pollaczek:lambda=1,cot=0") == mp);
    CHECK(parse_family("mp:lambda=1,cos=3/5").as<MeixnerPollaczek>().phi == Angle::from_cos_sin(Rat(3, 5), Rat(4, 5)));
    for (const FamilyInstance& f : {FamilyInstance(Laguerre{Rat(1, 2)}), FamilyInstance(Meixner{Rat(3, 2), Rat(1, 4)}),
                                    FamilyInstance(Krawtchouk{Rat(1, 3), 6}), mp})
        CHECK(parse_family(f.str()) == f);

    CHECK_THROWS_AS(parse_family("jacobi:a=1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("charlier"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("charlier:a"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("krawtchouk:p=1/2,N=5/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("charlier:a=-1"), MathError);
    CHECK_THROWS_AS(parse_family("meixner:beta=1,c=2"), MathError);
    CHECK_THROWS_AS(parse_family("krawtchouk:p=1/2,N=0"), MathError);
}

TEST_CASE("recurrences of the standard families") {
    const RecurrenceSpec c = recurrence_of(FamilyInstance(Charlier{Rat(3)}));
    CHECK(c == RecurrenceSpec{Rat(-1), Rat(-3), Rat(0), Rat(-3)});
    CHECK(recurrence_of(FamilyInstance(Hermite{})) == RecurrenceSpec{Rat(0), Rat(-1, 2), Rat(0), Rat(0)});
    const RecurrenceSpec k = recurrence_of(FamilyInstance(Krawtchouk{Rat(1, 3), 4}));
    const Rat pq = Rat(2, 9);
    CHECK(k.k2 == -pq * Rat(4));
    CHECK(k.kappa == pq);
    for (std::size_t n = 1; n <= 5; ++n) {
        const Rat nn(static_cast<long>(n));
        CHECK(k.k(n + 1) == -nn * pq * (Rat(4) - nn + Rat(1)));
    }
}

TEST_CASE("generating-function coefficients") {
    const GeneratingFunction ch = generating_function_of(FamilyInstance(Charlier{Rat(2)}), 8);
    for (long n = 0; n <= 8; ++n) CHECK(ch.cn[n] == Rat(-2).pow(n) / factorial(n));
    const GeneratingFunction me = generating_function_of(FamilyInstance(Meixner{Rat(3, 2), Rat(1, 4)}), 8);
    for (long n = 0; n <= 8; ++n)
        CHECK(me.cn[n] == pochhammer(Rat(3, 2), n) / factorial(n) * (Rat(1, 4) / Rat(-3, 4)).pow(n));
    const GeneratingFunction he = generating_function_of(FamilyInstance(Hermite{}), 8);
    const RatSeries t = RatSeries::variable(8);
    CHECK(he.f == exp(t * t * Rat(-1, 4)));
    CHECK(he.u == t);
}

TEST_CASE("hypergeometric evaluation") {
    const FamilyInstance ch(Charlier{Rat(5, 2)});
    for (long n = 0; n <= 8; ++n) CHECK(evaluate(ch, n, Rat(0)) == Rat(1));
    const Rat beta(3, 2);
    const Rat c(1, 4);
    const Rat x(7, 3);
    CHECK(evaluate(FamilyInstance(Meixner{beta, c}), 1, x) == Rat(1) + x * (Rat(1) - c.inverse()) / beta);
    CHECK(evaluate(FamilyInstance(Krawtchouk{Rat(1, 3), 6}), 1, x) == Rat(1) - x / (Rat(6) * Rat(1, 3)));
    CHECK(std::abs(evaluate(ch, 3, 1.5) - evaluate(ch, 3, Rat(3, 2)).to_double()) < 1e-12);
}

TEST_CASE("standard polynomials match the expansion") {
    for (const FamilyInstance& fam :
         {FamilyInstance(Hermite{}), FamilyInstance(Laguerre{Rat(1, 2)}), FamilyInstance(Charlier{Rat(2)}),
          FamilyInstance(Meixner{Rat(3, 2), Rat(1, 4)}), FamilyInstance(Krawtchouk{Rat(1, 3), 6}),
          FamilyInstance(MeixnerPollaczek{Rat(1), Angle::half_pi()})}) {
        const GeneratingFunction gf = generating_function_of(fam, 20);
        const PolySequence seq = expand(ShefferPair(gf.f, gf.u), 10);
        const PolySequence rec = monic_from_recurrence(recurrence_of(fam), 10);
        long top = 10;
        if (auto big_n = fam.max_degree()) top = std::min(top, *big_n);
        for (long n = 0; n <= top; ++n) {
            CHECK(seq[n] == rec[n]);
            CHECK(standard_monic(fam, n) == seq[n]);
        }
        const ClassificationResult r = classify(recurrence_of(fam), 20);
        REQUIRE(r.family);
        CHECK(*r.family == fam);
        CHECK(r.is_standard());
    }
}

TEST_CASE("weights") {
    CHECK(discrete_weight(FamilyInstance(Charlier{Rat(2)}), 3) == Rat(4, 3));
    CHECK(discrete_weight(FamilyInstance(Krawtchouk{Rat(1, 2), 4}), 2) == Rat(3, 8));
    CHECK(discrete_weight(FamilyInstance(Meixner{Rat(2), Rat(1, 2)}), 2) == Rat(3, 4));
    CHECK_THROWS_AS(discrete_weight(FamilyInstance(Krawtchouk{Rat(1, 2), 4}), 5), MathError);
    CHECK_THROWS_AS(discrete_weight(FamilyInstance(Charlier{Rat(2)}), -1), MathError);
    const FamilyInstance mp(MeixnerPollaczek{Rat(1), Angle::half_pi()});
    CHECK(std::abs(weight_value(mp, 0.0) - 1.0) < 1e-14);
    CHECK(std::abs(weight_value(FamilyInstance(Hermite{}), 0.0) - 1.0) < 1e-14);
}

TEST_CASE("Krawtchouk-Meixner identity") {
    CHECK(identity_krawtchouk_meixner(Rat(1, 3), 5, 0, Rat(2)).holds);
    CHECK(identity_krawtchouk_meixner(Rat(2, 7), 9, 1, Rat(-3, 2)).holds);
    const IdentityReport r = identity_krawtchouk_meixner(Rat(1, 2), 4, 3, Rat(2));
    CHECK(r.holds);
    CHECK(r.exact);
    CHECK(r.lhs == r.rhs);
}

TEST_CASE("Meixner-Pollaczek-Meixner identity") {
    CHECK(identity_mp_meixner(Rat(1), Angle::half_pi(), 0, Rat(1, 2)).holds);
    const IdentityReport exact = identity_mp_meixner(Rat(1), Angle::half_pi(), 2, Rat(1, 2));
    CHECK(exact.holds);
    CHECK(exact.exact);
    const IdentityReport pyth = identity_mp_meixner(Rat(3, 2), Angle::from_cos_sin(Rat(3, 5), Rat(4, 5)), 4, Rat(7, 10));
    CHECK(pyth.holds);
    const IdentityReport num = identity_mp_meixner(1.5, std::numbers::pi / 3, 4, 0.7);
    CHECK(num.holds);
    CHECK(num.abs_error < 1e-10);
}

TEST_CASE("limit transitions") {
    for (LimitEdge e : all_limit_edges()) {
        CHECK(parse_limit_edge(to_string(e)) == e);
        const LimitRecord zero = limit_transition(e, 0, Rat(1, 2), 4);
        CHECK(zero.exact_zero);
        CHECK(zero.passed());
        for (long n = 1; n <= 3; ++n) {
            const LimitRecord r = limit_transition(e, n, Rat(1), 6);
            CHECK_MESSAGE(r.passed(), to_string(e), " n=", n);
            CHECK(r.eps.size() == 6);
        }
    }
    const LimitRecord ch = limit_transition(LimitEdge::CharlierToHermite, 2, Rat(1), 6);
    for (std::size_t k = 1; k < ch.error.size(); ++k) CHECK(ch.error[k] < ch.error[k - 1]);
    CHECK_THROWS_AS(parse_limit_edge("hermite-jacobi"), std::invalid_argument);
}
