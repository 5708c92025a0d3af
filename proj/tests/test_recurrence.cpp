#include "doctest.h"
#include "meixner/recurrence.hpp"

using namespace meixner;

TEST_CASE("recurrence coefficients") {
    const RecurrenceSpec s{Rat(-2), Rat(-1), Rat(-1), Rat(-1)};
    CHECK(s.l(1) == Rat(-1));
    CHECK(s.l(3) == Rat(-5));
    CHECK(s.k(1) == Rat(0));
    CHECK(s.k(2) == Rat(-1));
    CHECK(s.k(3) == Rat(-4));
    const PolySequence p = monic_from_recurrence(s, 3);
    // monic Laguerre with alpha = 0
    CHECK(p[1] == RatPoly(std::vector<Rat>{Rat(-1), Rat(1)}));
    CHECK(p[2] == RatPoly(std::vector<Rat>{Rat(2), Rat(-4), Rat(1)}));
    CHECK(p[3] == RatPoly(std::vector<Rat>{Rat(-6), Rat(18), Rat(-9), Rat(1)}));
}

TEST_CASE("sign analysis of k_{n+1}") {
    const FavardReport charlier = favard_check({Rat(-1), Rat(-2), Rat(0), Rat(-2)}, 50);
    CHECK(charlier.kind == FavardKind::InfinitePositive);
    REQUIRE(charlier.k_values.size() == 50);
    for (std::size_t n = 1; n <= 50; ++n) CHECK(charlier.k_values[n - 1] == Rat(-2 * static_cast<long>(n)));

    const Rat pq = Rat(1, 3) * Rat(2, 3);
    const FavardReport kraw = favard_check({Rat(-1, 3), -pq * Rat(4), pq, Rat(0)}, 20);
    CHECK(kraw.kind == FavardKind::Finite);
    REQUIRE(kraw.terminal_degree);
    CHECK(*kraw.terminal_degree == 4);
    for (std::size_t n = 1; n <= 4; ++n) CHECK(kraw.k_values[n - 1].sign() < 0);
    CHECK(kraw.k_values[4].is_zero());

    const FavardReport flip = favard_check({Rat(0), Rat(-5, 2), Rat(1), Rat(0)}, 20);
    CHECK(flip.kind == FavardKind::NotOrthogonal);
    REQUIRE(flip.first_nonnegative);
    CHECK(*flip.first_nonnegative == 4);

    CHECK(favard_check({Rat(0), Rat(1), Rat(0), Rat(0)}, 10).kind == FavardKind::NotOrthogonal);
    CHECK(favard_check({Rat(0), Rat(0), Rat(0), Rat(0)}, 10).kind == FavardKind::NotOrthogonal);
}
