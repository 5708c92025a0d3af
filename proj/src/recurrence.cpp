#include "meixner/recurrence.hpp"

namespace meixner {

Rat RecurrenceSpec::l(std::size_t n_plus_1) const {
    const long n = static_cast<long>(n_plus_1) - 1;
    return l1 + Rat(n) * lambda_rec;
}

Rat RecurrenceSpec::k(std::size_t n_plus_1) const {
    const long n = static_cast<long>(n_plus_1) - 1;
    return Rat(n) * (k2 + Rat(n - 1) * kappa);
}

PolySequence monic_from_recurrence(const RecurrenceSpec& spec, std::size_t n_max) {
    PolySequence p;
    p.reserve(n_max + 1);
    p.push_back(RatPoly::constant(Rat(1)));
    if (n_max == 0) return p;
    p.push_back(RatPoly::linear(spec.l(1)));
    for (std::size_t n = 1; n < n_max; ++n) {
        RatPoly next = p[n].times_x() + p[n] * spec.l(n + 1);
        next += p[n - 1] * spec.k(n + 1);
        p.push_back(std::move(next));
    }
    return p;
}

std::string to_string(FavardKind kind) {
    switch (kind) {
        case FavardKind::InfinitePositive: return "infinite-positive-definite";
        case FavardKind::Finite: return "finite";
        case FavardKind::NotOrthogonal: return "not-orthogonal";
    }
    return "unknown";
}

FavardReport favard_check(const RecurrenceSpec& spec, std::size_t horizon) {
    FavardReport rep;
    for (std::size_t n = 1; n <= horizon; ++n) rep.k_values.push_back(spec.k(n + 1));

    // k_{n+1} = n (k2 + (n-1) kappa): sign of the linear factor in n.
    if (spec.k2.sign() >= 0) {
        rep.kind = FavardKind::NotOrthogonal;
        rep.first_nonnegative = 1;
        return rep;
    }
    if (spec.kappa.sign() <= 0) {
        rep.kind = FavardKind::InfinitePositive;
        return rep;
    }
    // zero of k2 + (n-1) kappa at n - 1 = -k2/kappa
    const Rat root = -spec.k2 / spec.kappa;
    if (root.is_integer()) {
        const long big_n = root.num().get_si();
        rep.kind = FavardKind::Finite;
        rep.terminal_degree = big_n;
        rep.first_nonnegative = big_n + 1;
        return rep;
    }
    // the linear factor changes sign strictly between integers
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), root.num().get_mpz_t(), root.den().get_mpz_t());
    rep.kind = FavardKind::NotOrthogonal;
    rep.first_nonnegative = fl.get_si() + 2;
    return rep;
}

}  // namespace meixner
