#include "doctest.h"
#include "meixner/scalar.hpp"

using namespace meixner;

TEST_CASE("rational parsing") {
    CHECK(Rat::parse("3/4") == Rat(3, 4));
    CHECK(Rat::parse("-6/8") == Rat(-3, 4));
    CHECK(Rat::parse("0.25") == Rat(1, 4));
    CHECK(Rat::parse("-1.5") == Rat(-3, 2));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    try {
        (void)Rat::parse("1/2/3");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("1/2/3") != std::string::npos);
    }
}

TEST_CASE("rational arithmetic and printing") {
    const Rat a(1, 3);
    const Rat b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK_THROWS_AS(a / Rat(0), MathError);
    CHECK(Rat(-2, 3).str() == "-2/3");
    CHECK(Rat(4, 2).str() == "2");
    CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(factorial(6) == Rat(720));
    CHECK(binomial(6, 2) == Rat(15));
    CHECK(binomial(4, 5) == Rat(0));
    CHECK(pochhammer(Rat(3, 2), 3) == Rat(3, 2) * Rat(5, 2) * Rat(7, 2));
}

TEST_CASE("gaussian rationals") {
    const CRat i = CRat::i();
    CHECK(i * i == CRat(-1));
    const CRat z(Rat(3), Rat(4));
    CHECK(z.norm() == Rat(25));
    CHECK(z * z.conj() == CRat(25));
    CHECK(CRat(1) / z == CRat(Rat(3, 25), Rat(-4, 25)));
    CHECK(z.pow(2) == z * z);
}

TEST_CASE("quadratic surds") {
    const Surd r2 = Surd::sqrt(Rat(2));
    CHECK_FALSE(r2.is_rational());
    CHECK((r2 * r2).is_rational());
    CHECK((r2 * r2).to_rat() == Rat(2));
    CHECK(Surd::sqrt(Rat(9, 4)).to_rat() == Rat(3, 2));
    CHECK(Surd::sqrt(Rat(8)) == r2 * Surd(2));
    const Surd x = Surd(1) + r2;
    CHECK(x * x.conj() == Surd(-1));
    CHECK((Surd(1) / x) == r2 - Surd(1));
    CHECK(x.sign() == 1);
    CHECK((Surd(1) - r2).sign() == -1);
    CHECK(std::abs(x.to_double() - (1.0 + std::sqrt(2.0))) < 1e-15);
    const Surd im = Surd::sqrt(Rat(-1));
    CHECK((im * im).to_rat() == Rat(-1));
    CHECK_THROWS_AS(r2 + Surd::sqrt(Rat(3)), MathError);
}

TEST_CASE("factoring 1 - lambda t - kappa t^2") {
    const RootPair hermite = factor_quadratic(Rat(0), Rat(0));
    CHECK(hermite.tag == RootTag::BothZero);

    const RootPair charlier = factor_quadratic(Rat(-1), Rat(0));
    CHECK(charlier.tag == RootTag::OneZero);
    CHECK(charlier.alpha == Surd(-1));
    CHECK(charlier.beta == Surd(0));

    const RootPair laguerre = factor_quadratic(Rat(-2), Rat(-1));
    CHECK(laguerre.tag == RootTag::EqualNonzero);
    CHECK(laguerre.alpha == Surd(-1));

    const RootPair meixner = factor_quadratic(Rat(-3), Rat(-2));
    CHECK(meixner.tag == RootTag::DistinctReal);
    CHECK(meixner.alpha == Surd(-2));
    CHECK(meixner.beta == Surd(-1));
    CHECK((meixner.alpha + meixner.beta).to_rat() == Rat(-3));
    CHECK((meixner.alpha * meixner.beta).to_rat() == Rat(2));

    const RootPair mp = factor_quadratic(Rat(0), Rat(-1, 4));
    CHECK(mp.tag == RootTag::ComplexConjugate);
    CHECK((mp.alpha * mp.beta).to_rat() == Rat(1, 4));

    const RootPair irr = factor_quadratic(Rat(1), Rat(-1, 8));
    CHECK(irr.tag == RootTag::DistinctReal);
    CHECK_FALSE(irr.alpha.is_rational());
    CHECK((irr.alpha + irr.beta).to_rat() == Rat(1));
    CHECK((irr.alpha * irr.beta).to_rat() == Rat(1, 8));
}
