#ifndef MEIXNER_HYPERGEOMETRIC_HPP
#define MEIXNER_HYPERGEOMETRIC_HPP

// Terminating hypergeometric sums and the standard (non-monic) polynomials
// of the six families, generic over the scalar type: Rat, CRat, double,
// long double, std::complex<double>, or mpf_class for the limit studies.
//
// Normalizations follow Koekoek-Lesky-Swarttouw, "Hypergeometric
// orthogonal polynomials and their q-analogues", chapter 9.

namespace meixner::hyp {

/// 2F1(-n, b; c; z) = sum_{k=0}^{n} (-n)_k (b)_k / ((c)_k k!) z^k
template <class K>
K f21(long n, const K& b, const K& c, const K& z) {
    K sum(1);
    K term(1);
    for (long k = 0; k < n; ++k) {
        // term_{k+1} / term_k = (k-n)(b+k) z / ((c+k)(k+1))
        term = term * K(k - n) * (b + K(k)) * z / ((c + K(k)) * K(k + 1));
        sum = sum + term;
    }
    return sum;
}

/// 2F0(-n, b; ; z)
template <class K>
K f20(long n, const K& b, const K& z) {
    K sum(1);
    K term(1);
    for (long k = 0; k < n; ++k) {
        term = term * K(k - n) * (b + K(k)) * z / K(k + 1);
        sum = sum + term;
    }
    return sum;
}

/// 1F1(-n; c; z)
template <class K>
K f11(long n, const K& c, const K& z) {
    K sum(1);
    K term(1);
    for (long k = 0; k < n; ++k) {
        term = term * K(k - n) * z / ((c + K(k)) * K(k + 1));
        sum = sum + term;
    }
    return sum;
}

/// Physicists' Hermite H_n(x) via H_{n+1} = 2x H_n - 2n H_{n-1}.
template <class K>
K hermite(long n, const K& x) {
    K prev(0);
    K cur(1);
    for (long k = 0; k < n; ++k) {
        K next = K(2) * x * cur - K(2 * k) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// L_n^{(alpha)}(x) = (alpha+1)_n / n! 1F1(-n; alpha+1; x)
template <class K>
K laguerre(long n, const K& alpha, const K& x) {
    K pref(1);
    for (long k = 0; k < n; ++k) pref = pref * (alpha + K(k + 1)) / K(k + 1);
    return pref * f11<K>(n, alpha + K(1), x);
}

/// C_n(x; a) = 2F0(-n, -x; ; -1/a)
template <class K>
K charlier(long n, const K& a, const K& x) {
    return f20<K>(n, K(-x), K(-(K(1) / a)));
}

/// M_n(x; beta, c) = 2F1(-n, -x; beta; 1 - 1/c)
template <class K>
K meixner(long n, const K& beta, const K& c, const K& x) {
    return f21<K>(n, K(-x), beta, K(K(1) - K(1) / c));
}

/// K_n(x; p, N) = 2F1(-n, -x; -N; 1/p), n <= N
template <class K>
K krawtchouk(long n, const K& p, long big_n, const K& x) {
    return f21<K>(n, K(-x), K(-big_n), K(K(1) / p));
}

/// K_n(x; p, N) from its own three-term recurrence
///   -x K_n = p(N-n) K_{n+1} - [p(N-n) + n(1-p)] K_n + n(1-p) K_{n-1},
/// valid for n <= N.
template <class K>
K krawtchouk_by_recurrence(long n, const K& p, long big_n, const K& x) {
    K prev(0);
    K cur(1);
    const K q = K(1) - p;
    for (long k = 0; k < n; ++k) {
        const K a = p * K(big_n - k);
        K next = ((a + K(k) * q - x) * cur - K(k) * q * prev) / a;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Meixner-Pollaczek P_n^{(lambda)}(x; phi) from
///   (n+1) P_{n+1} - 2[x sin phi + (n+lambda) cos phi] P_n + (n+2 lambda-1) P_{n-1} = 0.
template <class K>
K meixner_pollaczek_by_recurrence(long n, const K& lambda, const K& cos_phi, const K& sin_phi, const K& x) {
    K prev(0);
    K cur(1);
    for (long k = 0; k < n; ++k) {
        K next = (K(2) * (x * sin_phi + (K(k) + lambda) * cos_phi) * cur - (K(k) + K(2) * lambda - K(1)) * prev) /
                 K(k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Meixner-Pollaczek through its hypergeometric form
///   (2 lambda)_n / n! e^{i n phi} 2F1(-n, lambda + i x; 2 lambda; 1 - e^{-2 i phi}),
/// for complex scalar types; `e_iphi` is e^{i phi} and `i_unit` the imaginary unit.
template <class C>
C meixner_pollaczek_hyp(long n, const C& lambda, const C& e_iphi, const C& x, const C& i_unit) {
    C pref(1);
    for (long k = 0; k < n; ++k) pref = pref * (C(2) * lambda + C(k)) / C(k + 1);
    C en(1);
    for (long k = 0; k < n; ++k) en = en * e_iphi;
    const C z = C(1) - C(1) / (e_iphi * e_iphi);
    return pref * en * f21<C>(n, C(lambda + i_unit * x), C(C(2) * lambda), z);
}

}  // namespace meixner::hyp

#endif  // MEIXNER_HYPERGEOMETRIC_HPP
