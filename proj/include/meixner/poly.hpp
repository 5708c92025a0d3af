#ifndef MEIXNER_POLY_HPP
#define MEIXNER_POLY_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "meixner/scalar.hpp"

namespace meixner {

/// Dense univariate polynomial, coefficient of x^k at index k. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients and
/// degree -1.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly constant(const K& v) { return Poly(std::vector<K>{v}); }
    static Poly monomial(std::size_t k, const K& v = K(1)) {
        std::vector<K> c(k + 1);
        c[k] = v;
        return Poly(std::move(c));
    }
    /// x + shift
    static Poly linear(const K& shift) { return Poly(std::vector<K>{shift, K(1)}); }

    [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_monic() const { return !c_.empty() && c_.back() == K(1); }
    [[nodiscard]] K coeff(std::size_t k) const { return k < c_.size() ? c_[k] : K(0); }
    [[nodiscard]] const K& leading() const { return c_.back(); }
    [[nodiscard]] std::span<const K> coeffs() const { return c_; }

    [[nodiscard]] K operator()(const K& x) const {
        K acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const K& v) {
        for (auto& x : c_) x *= v;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Poly operator*(Poly a, const K& v) { return a *= v; }
    friend Poly operator*(const K& v, Poly a) { return a *= v; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (meixner::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    [[nodiscard]] Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<K> c(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * K(static_cast<long>(k));
        return Poly(std::move(c));
    }
    /// Antiderivative vanishing at 0.
    [[nodiscard]] Poly integral() const {
        if (c_.empty()) return Poly();
        std::vector<K> c(c_.size() + 1);
        for (std::size_t k = 0; k < c_.size(); ++k) c[k + 1] = c_[k] / K(static_cast<long>(k + 1));
        return Poly(std::move(c));
    }
    /// x * P(x)
    [[nodiscard]] Poly times_x() const {
        if (c_.empty()) return Poly();
        std::vector<K> c(c_.size() + 1);
        for (std::size_t k = 0; k < c_.size(); ++k) c[k + 1] = c_[k];
        return Poly(std::move(c));
    }
    /// P(x + h), by repeated synthetic division.
    [[nodiscard]] Poly shifted(const K& h) const {
        std::vector<K> c = c_;
        const std::size_t n = c.size();
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t k = n - 1; k > i; --k) c[k - 1] += h * c[k];
        return Poly(std::move(c));
    }
    /// P(s x + h)
    [[nodiscard]] Poly affine(const K& s, const K& h) const {
        std::vector<K> c = c_;
        K sk(1);
        for (auto& v : c) {
            v *= sk;
            sk *= s;
        }
        return Poly(std::move(c)).shifted(h / s);
    }

private:
    void trim() {
        while (!c_.empty() && meixner::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

template <class To, class From>
Poly<To> poly_cast(const Poly<From>& p) {
    std::vector<To> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return Poly<To>(std::move(c));
}

using RatPoly = Poly<Rat>;

/// Human-readable form, e.g. "x^2 - 3*x + 1".
std::string to_string(const RatPoly& p);

}  // namespace meixner

#endif  // MEIXNER_POLY_HPP
