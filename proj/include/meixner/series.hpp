#ifndef MEIXNER_SERIES_HPP
#define MEIXNER_SERIES_HPP

// Truncated formal power series over an exact field K (Rat, CRat or Surd).
// A series of order N stores c_0..c_N; binary operations between series of
// different orders truncate to the smaller order.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "meixner/scalar.hpp"

namespace meixner {

template <class K>
class Series {
public:
    Series() : c_(1) {}
    /// Zero series of the given order.
    explicit Series(std::size_t order) : c_(order + 1) {}
    /// Series from explicit coefficients; the order is coeffs.size() - 1,
    /// or `order` when given (padding with zeros / truncating).
    explicit Series(std::vector<K> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.resize(1);
    }
    Series(std::vector<K> coeffs, std::size_t order) : c_(std::move(coeffs)) { c_.resize(order + 1); }

    static Series constant(const K& v, std::size_t order) {
        Series s(order);
        s.c_[0] = v;
        return s;
    }
    /// The series t (identity under composition).
    static Series variable(std::size_t order) {
        Series s(order);
        if (order >= 1) s.c_[1] = K(1);
        return s;
    }

    [[nodiscard]] std::size_t order() const { return c_.size() - 1; }
    [[nodiscard]] const K& operator[](std::size_t k) const { return c_[k]; }
    K& operator[](std::size_t k) { return c_[k]; }
    /// Coefficient of t^k, zero beyond the stored order.
    [[nodiscard]] K coeff(std::size_t k) const { return k < c_.size() ? c_[k] : K(0); }
    [[nodiscard]] std::span<const K> coeffs() const { return c_; }

    [[nodiscard]] Series truncated(std::size_t order) const {
        return Series(std::vector<K>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1)),
                      order);
    }

    Series& operator+=(const Series& o) {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    Series& operator-=(const Series& o) {
        c_.resize(std::min(c_.size(), o.c_.size()));
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Series& operator*=(const K& v) {
        for (auto& x : c_) x *= v;
        return *this;
    }

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Series operator*(Series a, const K& v) { return a *= v; }
    friend Series operator*(const K& v, Series a) { return a *= v; }

    /// Cauchy product through min(order(a), order(b)).
    friend Series operator*(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.order(), b.order());
        Series r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (is_zero(b.c_[j])) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

    /// Formal derivative; the order drops by one (order 0 stays order 0).
    [[nodiscard]] Series derivative() const {
        if (order() == 0) return Series(0);
        Series r(order() - 1);
        for (std::size_t k = 1; k <= order(); ++k) r.c_[k - 1] = c_[k] * K(static_cast<long>(k));
        return r;
    }
    /// Antiderivative with zero constant term; the order rises by one.
    [[nodiscard]] Series integral() const {
        Series r(order() + 1);
        for (std::size_t k = 0; k <= order(); ++k) r.c_[k + 1] = c_[k] / K(static_cast<long>(k + 1));
        return r;
    }

    /// First index where the two series differ, or npos when they agree
    /// through the smaller order.
    [[nodiscard]] std::size_t first_difference(const Series& o) const {
        const std::size_t n = std::min(order(), o.order());
        for (std::size_t k = 0; k <= n; ++k)
            if (!(c_[k] == o.c_[k])) return k;
        return npos;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<K> c_;
};

/// Multiplicative inverse; requires an invertible constant term.
template <class K>
Series<K> reciprocal(const Series<K>& a) {
    if (is_zero(a[0])) throw MathError("series reciprocal: zero constant term");
    const std::size_t n = a.order();
    Series<K> r(n);
    const K inv0 = K(1) / a[0];
    r[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        K acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            if (is_zero(a[j])) continue;
            acc += a[j] * r[k - j];
        }
        r[k] = -acc * inv0;
    }
    return r;
}

template <class K>
Series<K> operator/(const Series<K>& a, const Series<K>& b) {
    return a * reciprocal(b);
}

/// outer(inner(s)); inner must have zero constant term. Horner scheme.
template <class K>
Series<K> compose(const Series<K>& outer, const Series<K>& inner) {
    if (!is_zero(inner[0])) throw MathError("compose: inner series has a nonzero constant term");
    const std::size_t n = std::min(outer.order(), inner.order());
    Series<K> r = Series<K>::constant(outer[n], n);
    for (std::size_t k = n; k-- > 0;) {
        r = r * inner;
        r[0] += outer[k];
    }
    return r;
}

/// Compositional inverse t of u: u(t(s)) = s = t(u(s)). Requires u_0 = 0
/// and u_1 = 1. Coefficients are fixed one at a time from
/// t_k = -sum_{j>=2} u_j [s^k] t^j, keeping the table of powers of t.
template <class K>
Series<K> revert(const Series<K>& u) {
    if (!is_zero(u[0])) throw MathError("revert: nonzero constant term");
    const std::size_t n = u.order();
    if (n == 0) return Series<K>(0);
    if (!(u[1] == K(1))) throw MathError("revert: linear coefficient must be 1");
    // pw[j][m] = [s^m] t^j for j >= 1
    std::vector<std::vector<K>> pw(n + 1, std::vector<K>(n + 1));
    Series<K> t(n);
    t[1] = K(1);
    pw[1][1] = K(1);
    for (std::size_t k = 1; k <= n; ++k) {
        // powers j >= 2 at index k only involve t_1..t_{k-1}
        for (std::size_t j = 2; j <= k; ++j) {
            K acc(0);
            for (std::size_t m = 1; m + (j - 1) <= k; ++m) {
                if (is_zero(t[m]) || is_zero(pw[j - 1][k - m])) continue;
                acc += t[m] * pw[j - 1][k - m];
            }
            pw[j][k] = acc;
        }
        if (k >= 2) {
            K acc(0);
            for (std::size_t j = 2; j <= k; ++j) {
                if (is_zero(u[j])) continue;
                acc += u[j] * pw[j][k];
            }
            t[k] = -acc;
            pw[1][k] = t[k];
        }
    }
    return t;
}

/// exp(a) for a_0 = 0, via y' = a' y.
template <class K>
Series<K> exp(const Series<K>& a) {
    if (!is_zero(a[0])) throw MathError("exp: nonzero constant term");
    const std::size_t n = a.order();
    Series<K> y(n);
    y[0] = K(1);
    for (std::size_t m = 1; m <= n; ++m) {
        K acc(0);
        for (std::size_t k = 1; k <= m; ++k) {
            if (is_zero(a[k])) continue;
            acc += K(static_cast<long>(k)) * a[k] * y[m - k];
        }
        y[m] = acc / K(static_cast<long>(m));
    }
    return y;
}

/// log(a) for a_0 = 1.
template <class K>
Series<K> log(const Series<K>& a) {
    if (!(a[0] == K(1))) throw MathError("log: constant term must be 1");
    const std::size_t n = a.order();
    if (n == 0) return Series<K>(0);
    Series<K> q = a.derivative() * reciprocal(a.truncated(n - 1));
    return q.integral();
}

/// a^r for a_0 = 1 and any exponent r in K, via a y' = r a' y.
template <class K>
Series<K> pow(const Series<K>& a, const K& r) {
    if (!(a[0] == K(1))) throw MathError("pow: constant term must be 1");
    const std::size_t n = a.order();
    Series<K> y(n);
    y[0] = K(1);
    for (std::size_t m = 1; m <= n; ++m) {
        K acc(0);
        for (std::size_t k = 1; k <= m; ++k) {
            if (is_zero(a[k])) continue;
            // ((r+1)k - m) a_k y_{m-k}
            acc += ((r + K(1)) * K(static_cast<long>(k)) - K(static_cast<long>(m))) * a[k] * y[m - k];
        }
        y[m] = acc / K(static_cast<long>(m));
    }
    return y;
}

/// Solves y'/y = numer/denom with y(0) = 1 through `order`. denom must have
/// constant term 1.
template <class K>
Series<K> solve_log_derivative(const Series<K>& numer, const Series<K>& denom, std::size_t order) {
    if (!(denom[0] == K(1))) throw MathError("solve_log_derivative: denominator constant term must be 1");
    if (order == 0) return Series<K>::constant(K(1), 0);
    const Series<K> ratio = numer.truncated(order - 1) * reciprocal(denom.truncated(order - 1));
    return exp(ratio.integral());
}

/// Solves the autonomous equation y' = Q(y), y(0) = 0, with
/// Q(y) = q_0 + q_1 y + q_2 y^2 + ... given by its coefficients.
/// Coefficient recursion: y_{m+1} = [t^m] Q(y) / (m+1).
template <class K>
Series<K> solve_autonomous(std::span<const K> q, std::size_t order) {
    Series<K> y(order);
    if (order == 0) return y;
    const std::size_t deg = q.empty() ? 0 : q.size() - 1;
    // pw[j][m] = [t^m] y^j
    std::vector<std::vector<K>> pw(deg + 1, std::vector<K>(order + 1));
    pw[0][0] = K(1);
    for (std::size_t m = 0; m < order; ++m) {
        // powers at index m need y_0..y_m, all known now
        for (std::size_t j = 1; j <= deg; ++j) {
            K acc(0);
            for (std::size_t i = 0; i <= m; ++i) {
                if (is_zero(y[i]) || is_zero(pw[j - 1][m - i])) continue;
                acc += y[i] * pw[j - 1][m - i];
            }
            pw[j][m] = acc;
        }
        K rhs(0);
        for (std::size_t j = 0; j <= deg; ++j) {
            if (is_zero(q[j])) continue;
            rhs += q[j] * pw[j][m];
        }
        y[m + 1] = rhs / K(static_cast<long>(m + 1));
    }
    return y;
}

/// Embeds a rational series into a larger field.
template <class To, class From>
Series<To> series_cast(const Series<From>& s) {
    std::vector<To> c;
    c.reserve(s.order() + 1);
    for (const auto& v : s.coeffs()) c.emplace_back(v);
    return Series<To>(std::move(c));
}

using RatSeries = Series<Rat>;

/// Real parts of a complex series, checking the imaginary parts vanish.
RatSeries real_series(const Series<CRat>& s);
/// Rational parts of a surd series, checking the surd parts vanish.
RatSeries rational_series(const Series<Surd>& s);

}  // namespace meixner

#endif  // MEIXNER_SERIES_HPP
