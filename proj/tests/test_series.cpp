#include "doctest.h"
#include "meixner/series.hpp"

#include <array>
#include <random>

using namespace meixner;

namespace {

RatSeries random_series(std::mt19937_64& rng, std::size_t order, Rat c0, Rat c1) {
    RatSeries s(order);
    s[0] = c0;
    if (order >= 1) s[1] = c1;
    for (std::size_t k = 2; k <= order; ++k) {
        const long num = static_cast<long>(rng() % 11) - 5;
        const long den = static_cast<long>(rng() % 4) + 1;
        s[k] = Rat(num, den);
    }
    return s;
}

// [t^n] of the inverse via Lagrange: n [t^n] inv = [s^{n-1}] (s/u(s))^n
RatSeries lagrange_inverse(const RatSeries& u) {
    const std::size_t n = u.order();
    RatSeries shifted(n - 1);
    for (std::size_t k = 0; k + 1 <= n; ++k) shifted[k] = u[k + 1];
    const RatSeries phi = reciprocal(shifted);
    RatSeries out(n);
    RatSeries power = RatSeries::constant(Rat(1), n - 1);
    for (std::size_t m = 1; m <= n; ++m) {
        power = power * phi;
        out[m] = power[m - 1] / Rat(static_cast<long>(m));
    }
    return out;
}

}  // namespace

TEST_CASE("cauchy product against brute-force convolution") {
    std::mt19937_64 rng(7);
    const RatSeries a = random_series(rng, 9, Rat(2), Rat(-1));
    const RatSeries b = random_series(rng, 9, Rat(1, 3), Rat(5));
    const RatSeries c = a * b;
    for (std::size_t n = 0; n <= 9; ++n) {
        Rat s(0);
        for (std::size_t k = 0; k <= n; ++k) s += a[k] * b[n - k];
        CHECK(c[n] == s);
    }
    CHECK((a * reciprocal(a)) == RatSeries::constant(Rat(1), 9));
}

TEST_CASE("exp and log are inverse") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const RatSeries b = random_series(rng, 12, Rat(0), Rat(1, 2));
        CHECK(log(exp(b)) == b);
        const RatSeries a = random_series(rng, 12, Rat(1), Rat(-3));
        CHECK(exp(log(a)) == a);
    }
    const RatSeries t = RatSeries::variable(6);
    const RatSeries e = exp(t);
    for (std::size_t k = 0; k <= 6; ++k) CHECK(e[k] == factorial(static_cast<long>(k)).inverse());
}

TEST_CASE("power with rational exponent") {
    const RatSeries one_plus_t = RatSeries::constant(Rat(1), 8) + RatSeries::variable(8);
    const RatSeries root = pow(one_plus_t, Rat(1, 2));
    CHECK(root * root == one_plus_t);
    const RatSeries cube = pow(one_plus_t, Rat(3));
    CHECK(cube[2] == Rat(3));
    CHECK(cube[3] == Rat(1));
    CHECK(cube[4] == Rat(0));
}

TEST_CASE("reversion matches Lagrange inversion and composes to the identity") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        const RatSeries u = random_series(rng, 10, Rat(0), Rat(1));
        const RatSeries t = revert(u);
        CHECK(t == lagrange_inverse(u));
        CHECK(compose(u, t) == RatSeries::variable(10));
        CHECK(compose(t, u) == RatSeries::variable(10));
    }
    CHECK_THROWS_AS(revert(RatSeries::constant(Rat(1), 4)), MathError);
    CHECK_THROWS_AS(revert(RatSeries::variable(4) * Rat(2)), MathError);
}

TEST_CASE("log(1+t) reverts to exp(t) - 1") {
    const std::size_t n = 10;
    const RatSeries u = log(RatSeries::constant(Rat(1), n) + RatSeries::variable(n));
    const RatSeries expected = exp(RatSeries::variable(n)) - RatSeries::constant(Rat(1), n);
    CHECK(revert(u) == expected);
}

TEST_CASE("logarithmic-derivative equation") {
    // y'/y = -t/2, y(0) = 1 gives exp(-t^2/4)
    const RatSeries numer(std::vector<Rat>{Rat(0), Rat(-1, 2)}, 10);
    const RatSeries y = solve_log_derivative(numer, RatSeries::constant(Rat(1), 10), 10);
    CHECK(y[2] == Rat(-1, 4));
    CHECK(y[4] == Rat(1, 32));
    CHECK(y[6] == Rat(-1, 384));
    CHECK(y[1] == Rat(0));
    const RatSeries t = RatSeries::variable(10);
    CHECK(y == exp(t * t * Rat(-1, 4)));
}

TEST_CASE("autonomous equation y' = q(y) against Picard iteration") {
    // y' = 1 - y^2 is tanh
    const std::array<Rat, 3> q{Rat(1), Rat(0), Rat(-1)};
    const RatSeries y = solve_autonomous<Rat>(q, 9);
    CHECK(y[1] == Rat(1));
    CHECK(y[3] == Rat(-1, 3));
    CHECK(y[5] == Rat(2, 15));
    CHECK(y[7] == Rat(-17, 315));
    RatSeries picard(9);
    for (int it = 0; it < 10; ++it) {
        picard = (RatSeries::constant(Rat(1), 9) - picard * picard).integral().truncated(9);
    }
    CHECK(picard == y);

    const std::array<Rat, 1> one{Rat(1)};
    CHECK(solve_autonomous<Rat>(one, 5) == RatSeries::variable(5));
}

TEST_CASE("surd and complex series convert back to rational") {
    const Surd r = Surd::sqrt(Rat(3));
    auto s = series_cast<Surd>(RatSeries::variable(6));
    const auto e = exp(s * r) * exp(s * (-r));
    CHECK(rational_series(e) == RatSeries::constant(Rat(1), 6));
    auto c = series_cast<CRat>(RatSeries::variable(6));
    const auto w = exp(c * CRat::i()) + exp(c * (-CRat::i()));
    const RatSeries cosine2 = real_series(w);
    CHECK(cosine2[0] == Rat(2));
    CHECK(cosine2[2] == Rat(-1));
    CHECK(cosine2[4] == Rat(1, 12));
    CHECK_THROWS_AS(real_series(exp(c * CRat::i())), MathError);
}
