#ifndef MEIXNER_SCALAR_HPP
#define MEIXNER_SCALAR_HPP

#include <complex>
#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace meixner {

/// Raised when an exact operation has no value (division by zero, a pole,
/// a series precondition violated). The message names the operation.
class MathError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

using CF64 = std::complex<double>;

/// Exact rational in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;
    template <std::integral T>
    Rat(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rat(long num, long den);
    explicit Rat(const mpz_class& z) : q_(z) {}
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p", "-p/q", or a finite decimal such as "0.25". Throws
    /// std::invalid_argument naming the token on malformed input.
    static Rat parse(std::string_view text);

    [[nodiscard]] mpz_class num() const { return q_.get_num(); }
    [[nodiscard]] mpz_class den() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }
    [[nodiscard]] double to_double() const;  // correctly rounded when num, den < 2^53
    [[nodiscard]] long double to_long_double() const;
    [[nodiscard]] std::string str() const;  // "p/q", "/q" dropped when q = 1

    [[nodiscard]] Rat pow(long exponent) const;
    [[nodiscard]] Rat abs() const;
    [[nodiscard]] Rat inverse() const;

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { Rat r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// n! and binomial coefficients as exact rationals.
Rat factorial(long n);
Rat binomial(long n, long k);
/// Rising factorial (a)_n = a (a+1) ... (a+n-1).
Rat pochhammer(const Rat& a, long n);

/// Gaussian rational re + i im.
class CRat {
public:
    CRat() = default;
    CRat(const Rat& re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    template <std::integral T>
    CRat(T re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    CRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static CRat i() { return {Rat(0), Rat(1)}; }

    [[nodiscard]] const Rat& re() const { return re_; }
    [[nodiscard]] const Rat& im() const { return im_; }
    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const { return im_.is_zero(); }
    [[nodiscard]] CRat conj() const { return {re_, -im_}; }
    /// |z|^2, always real.
    [[nodiscard]] Rat norm() const { return re_ * re_ + im_ * im_; }
    [[nodiscard]] CF64 to_cf64() const { return {re_.to_double(), im_.to_double()}; }
    [[nodiscard]] CRat pow(long exponent) const;
    [[nodiscard]] std::string str() const;

    CRat& operator+=(const CRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    CRat& operator-=(const CRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    CRat& operator*=(const CRat& o);
    CRat& operator/=(const CRat& o);

    friend CRat operator+(CRat a, const CRat& b) { return a += b; }
    friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
    friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
    friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
    friend CRat operator-(const CRat& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const CRat& a, const CRat& b) = default;

private:
    Rat re_;
    Rat im_;
};

std::ostream& operator<<(std::ostream& os, const CRat& z);

/// Element a + b*sqrt(d) of the quadratic field Q(sqrt d), d a squarefree
/// integer (negative d gives imaginary quadratic fields). A pure rational
/// carries d = 0 and combines with any field. Mixing two different fields
/// throws MathError.
class Surd {
public:
    Surd() = default;
    Surd(const Rat& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    template <std::integral T>
    Surd(T a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    Surd(Rat a, Rat b, mpz_class d);

    /// sqrt(q) for rational q, reduced so the radicand is squarefree
    /// (for radicands whose square factors exceed the trial-division bound
    /// the radicand may keep a large square factor).
    static Surd sqrt(const Rat& q);

    [[nodiscard]] const Rat& rational_part() const { return a_; }
    [[nodiscard]] const Rat& surd_part() const { return b_; }
    [[nodiscard]] const mpz_class& radicand() const { return d_; }
    [[nodiscard]] bool is_rational() const { return b_.is_zero(); }
    [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    /// Exact sign for real fields (d > 0 or rational); throws for d < 0.
    [[nodiscard]] int sign() const;
    [[nodiscard]] Surd conj() const;  // a - b sqrt(d)
    [[nodiscard]] Rat norm() const;   // a^2 - b^2 d
    [[nodiscard]] double to_double() const;
    [[nodiscard]] CF64 to_cf64() const;
    [[nodiscard]] std::string str() const;
    /// Rational value; throws MathError if the surd part is nonzero.
    [[nodiscard]] Rat to_rat() const;

    Surd& operator+=(const Surd& o);
    Surd& operator-=(const Surd& o);
    Surd& operator*=(const Surd& o);
    Surd& operator/=(const Surd& o);

    friend Surd operator+(Surd a, const Surd& b) { return a += b; }
    friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
    friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
    friend Surd operator/(Surd a, const Surd& b) { return a /= b; }
    friend Surd operator-(const Surd& a) { Surd r = a; r.a_ = -r.a_; r.b_ = -r.b_; return r; }
    friend bool operator==(const Surd& a, const Surd& b);

private:
    void join_field(const Surd& o);
    void normalize();

    Rat a_;
    Rat b_;
    mpz_class d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Surd& s);

inline bool is_zero(const Rat& v) { return v.is_zero(); }
inline bool is_zero(const CRat& v) { return v.is_zero(); }
inline bool is_zero(const Surd& v) { return v.is_zero(); }

enum class RootTag { BothZero, OneZero, EqualNonzero, DistinctReal, ComplexConjugate };

std::string to_string(RootTag tag);

/// Roots of 1 - lambda t - kappa t^2 = (1 - alpha t)(1 - beta t), so that
/// alpha + beta = lambda and alpha beta = -kappa. Convention:
/// alpha = (lambda - sqrt(disc))/2, beta = (lambda + sqrt(disc))/2 with
/// disc = lambda^2 + 4 kappa and the principal square root. For a single
/// zero root, alpha is the nonzero one.
struct RootPair {
    Surd alpha;
    Surd beta;
    Rat discriminant;
    RootTag tag = RootTag::BothZero;
};

RootPair factor_quadratic(const Rat& lambda, const Rat& kappa);

}  // namespace meixner

#endif  // MEIXNER_SCALAR_HPP
