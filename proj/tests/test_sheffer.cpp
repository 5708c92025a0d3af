#include "doctest.h"
#include "meixner/recurrence.hpp"
#include "meixner/sheffer.hpp"

using namespace meixner;

namespace {

constexpr std::size_t kOrder = 24;

RatSeries gaussian_f() {
    const RatSeries t = RatSeries::variable(kOrder);
    return exp(t * t * Rat(-1, 4));
}

ShefferPair hermite_pair() { return ShefferPair(gaussian_f(), RatSeries::variable(kOrder)); }

ShefferPair charlier_pair(const Rat& a) {
    const RatSeries t = RatSeries::variable(kOrder);
    return ShefferPair(exp(t * (-a)), log(RatSeries::constant(Rat(1), kOrder) + t));
}

RatPoly poly(std::initializer_list<Rat> c) { return RatPoly(std::vector<Rat>(c)); }

}  // namespace

TEST_CASE("pair validation") {
    const RatSeries t = RatSeries::variable(6);
    CHECK_THROWS_AS(ShefferPair(RatSeries::constant(Rat(2), 6), t), MathError);
    CHECK_THROWS_AS(ShefferPair(RatSeries::constant(Rat(1), 6), t * Rat(2)), MathError);
    const ShefferPair p = charlier_pair(Rat(1));
    CHECK(compose(p.u(), p.t()) == RatSeries::variable(kOrder));
    const ShefferPair q = ShefferPair::from_lowering(p.f(), p.t());
    CHECK(q.u() == p.u());
}

TEST_CASE("expansion of known generating functions") {
    const ShefferPair power(RatSeries::constant(Rat(1), 8), RatSeries::variable(8));
    const PolySequence xs = expand(power, 6);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(xs[n] == RatPoly::monomial(n));

    const PolySequence h = expand(hermite_pair(), 6);
    CHECK(h[2] == poly({Rat(-1, 2), Rat(0), Rat(1)}));
    CHECK(h[3] == poly({Rat(0), Rat(-3, 2), Rat(0), Rat(1)}));

    const PolySequence c = expand(charlier_pair(Rat(1)), 6);
    CHECK(c[2] == poly({Rat(1), Rat(-3), Rat(1)}));
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(c[n].degree() == static_cast<long>(n));
        CHECK(c[n].leading() == Rat(1));
    }
    CHECK_THROWS_AS(expand(power, 9), MathError);
}

TEST_CASE("parallel and serial expansion agree") {
    const ShefferPair p = charlier_pair(Rat(3, 2));
    CHECK(expand(p, 20) == expand_serial(p, 20));
    const ShefferPair h = hermite_pair();
    CHECK(expand(h, 20) == expand_serial(h, 20));
}

TEST_CASE("lowering operator t(D)") {
    CHECK(apply_tD(RatSeries::variable(6), RatPoly::monomial(3)) == poly({Rat(0), Rat(0), Rat(3)}));
    // forward difference e^D - 1
    const RatSeries delta = exp(RatSeries::variable(8)) - RatSeries::constant(Rat(1), 8);
    CHECK(apply_tD(delta, RatPoly::monomial(2)) == poly({Rat(1), Rat(2)}));
    const RatSeries charlier_t = charlier_pair(Rat(1)).t();
    CHECK(charlier_t.truncated(8) == delta);
    const PolySequence c = expand(charlier_pair(Rat(2)), 8);
    for (std::size_t n = 1; n <= 8; ++n)
        CHECK(apply_tD(charlier_t, c[n]) == c[n - 1] * Rat(static_cast<long>(n)));
}

TEST_CASE("associated operator on the basis") {
    const PolySequence h = expand(hermite_pair(), 6);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(lambda_apply(h, 0, h[n]) == RatPoly::monomial(n));
    CHECK(lambda_apply(h, 0, h[2] + h[0] * Rat(3)) == poly({Rat(3), Rat(0), Rat(1)}));
    CHECK(lambda_apply(h, 2, h[1]).is_zero());
    CHECK(lambda_apply(h, 1, h[3]) == RatPoly::monomial(2, Rat(3)));
    CHECK(lambda_from_f(hermite_pair(), h[4]) == RatPoly::monomial(4));
}

TEST_CASE("commutation theorem and its negative control") {
    CHECK(verify_commutation(hermite_pair(), 10).passed());
    CHECK(verify_commutation(charlier_pair(Rat(2)), 10).passed());

    const ShefferPair good = charlier_pair(Rat(2));
    const PolySequence seq = expand(good, 10);
    RatSeries tampered = good.f();
    tampered[3] += Rat(1);
    const CommutationReport bad = verify_commutation(good.with_f(tampered), seq);
    CHECK_FALSE(bad.passed());
    REQUIRE(bad.first_failure());
    CHECK(*bad.first_failure() == 3);
}

TEST_CASE("values at zero recover f") {
    const PolySequence xs = expand(ShefferPair(RatSeries::constant(Rat(1), 8), RatSeries::variable(8)), 8);
    CHECK(f_from_values(xs) == RatSeries::constant(Rat(1), 8));
    CHECK(f_from_values(expand(hermite_pair(), 12)) == gaussian_f().truncated(12));
    CHECK(f_from_values(expand(charlier_pair(Rat(1)), 12)) == charlier_pair(Rat(1)).f().truncated(12));
}

TEST_CASE("basic sequences") {
    const PolySequence xs = basic_sequence(RatSeries::variable(8), 6);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(xs[n] == RatPoly::monomial(n));

    const RatSeries delta = exp(RatSeries::variable(10)) - RatSeries::constant(Rat(1), 10);
    const PolySequence ff = basic_sequence(delta, 6);
    RatPoly falling = RatPoly::constant(Rat(1));
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(ff[n] == falling);
        falling = falling * RatPoly::linear(Rat(-static_cast<long>(n)));
    }

    const ShefferPair c = charlier_pair(Rat(1, 3));
    CHECK(sequence_from_lowering(c.t(), c.f(), 10) == expand(c, 10));
}
