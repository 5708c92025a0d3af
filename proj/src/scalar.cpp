#include "meixner/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace meixner {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    std::string_view body = s;
    bool neg = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        neg = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    mpz_class z(std::string(body), 10);
    return neg ? mpz_class(-z) : z;
}

}  // namespace

Rat::Rat(long num, long den) {
    if (den == 0) throw MathError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw MathError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

double Rat::to_double() const {
    const mpz_class& n = q_.get_num();
    const mpz_class& d = q_.get_den();
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 53 && mpz_sizeinbase(d.get_mpz_t(), 2) <= 53) return n.get_d() / d.get_d();
    return q_.get_d();
}

Rat Rat::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(s.substr(0, slash), text);
        mpz_class den = parse_integer(s.substr(slash + 1), text);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return {num, den};
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip.front() == '-';
        if (!ip.empty() && (ip.front() == '-' || ip.front() == '+')) ip.remove_prefix(1);
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        }
        mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip), 10);
        mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(std::string(fp), 10);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        mpz_class num = whole * scale + frac;
        if (neg) num = -num;
        return {num, scale};
    }
    return Rat(parse_integer(s, text));
}

long double Rat::to_long_double() const {
    mpf_class f(q_, 128);
    // mpf has no long double export; split into a double head and tail.
    const double head = f.get_d();
    mpf_class rest = f - mpf_class(head, 128);
    return static_cast<long double>(head) + static_cast<long double>(rest.get_d());
}

std::string Rat::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat Rat::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    Rat r;
    mpz_pow_ui(r.q_.get_num_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(r.q_.get_den_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return r;
}

Rat Rat::abs() const {
    Rat r;
    r.q_ = ::abs(q_);
    return r;
}

Rat Rat::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    Rat r;
    mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw MathError("division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat factorial(long n) {
    if (n < 0) throw MathError("factorial of negative integer");
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return Rat(z);
}

Rat binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Rat(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(z);
}

Rat pochhammer(const Rat& a, long n) {
    Rat r(1);
    for (long j = 0; j < n; ++j) r *= a + Rat(j);
    return r;
}

CRat& CRat::operator*=(const CRat& o) {
    Rat re = re_ * o.re_ - im_ * o.im_;
    Rat im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

CRat& CRat::operator/=(const CRat& o) {
    const Rat n = o.norm();
    if (n.is_zero()) throw MathError("complex division by zero");
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
}

CRat CRat::pow(long exponent) const {
    if (exponent < 0) return CRat(1) / pow(-exponent);
    CRat r(1);
    CRat b = *this;
    for (unsigned long e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
        if ((e & 1U) != 0) r *= b;
        b *= b;
    }
    return r;
}

std::string CRat::str() const {
    if (im_.is_zero()) return re_.str();
    std::ostringstream os;
    if (!re_.is_zero()) os << re_ << (im_.sign() > 0 ? "+" : "");
    os << im_ << "i";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CRat& z) { return os << z.str(); }

// ---------------------------------------------------------------- Surd

namespace {

/// Writes |n| = m^2 * r with r squarefree as far as trial division by
/// primes below `bound` can tell; a remaining perfect square is absorbed.
void split_square(const mpz_class& n, mpz_class& m, mpz_class& r) {
    mpz_class rest = abs(n);
    m = 1;
    r = 1;
    constexpr unsigned long bound = 100000;
    for (unsigned long p = 2; p < bound; p += (p == 2 ? 1 : 2)) {
        if (rest == 1) break;
        mpz_class pp = mpz_class(p) * p;
        if (pp > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
            rest /= p;
            if (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
                rest /= p;
                m *= p;
            } else {
                r *= p;
            }
        }
    }
    if (rest != 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
            m *= root;
        } else {
            r *= rest;
        }
    }
}

}  // namespace

Surd::Surd(Rat a, Rat b, mpz_class d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (d_ == 0 && !b_.is_zero()) throw MathError("surd with zero radicand");
    normalize();
}

Surd Surd::sqrt(const Rat& q) {
    if (q.is_zero()) return Surd();
    // sqrt(p/r) = sqrt(p r) / r
    const mpz_class pr = q.num() * q.den();
    mpz_class m;
    mpz_class sf;
    split_square(pr, m, sf);
    if (q.sign() < 0) sf = -sf;
    Rat coeff(m, q.den());
    if (sf == 1) return Surd(coeff);
    return Surd(Rat(0), coeff, sf);
}

void Surd::normalize() {
    if (b_.is_zero()) {
        d_ = 0;
        return;
    }
    if (d_ > 0 && mpz_perfect_square_p(d_.get_mpz_t()) != 0) {
        mpz_class root;
        mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
        a_ += b_ * Rat(root);
        b_ = Rat(0);
        d_ = 0;
    }
}

void Surd::join_field(const Surd& o) {
    if (o.d_ == 0) return;
    if (d_ == 0) {
        d_ = o.d_;
        return;
    }
    if (d_ != o.d_) {
        throw MathError("surds from different quadratic fields: sqrt(" + d_.get_str() + ") vs sqrt(" +
                        o.d_.get_str() + ")");
    }
}

Surd& Surd::operator+=(const Surd& o) {
    join_field(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Surd& Surd::operator-=(const Surd& o) {
    join_field(o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

Surd& Surd::operator*=(const Surd& o) {
    join_field(o);
    Rat a = a_ * o.a_;
    if (!b_.is_zero() && !o.b_.is_zero()) a += b_ * o.b_ * Rat(d_);
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    normalize();
    return *this;
}

Surd& Surd::operator/=(const Surd& o) {
    if (o.is_zero()) throw MathError("division by zero surd");
    join_field(o);
    const Rat n = o.norm();
    *this *= o.conj();
    a_ /= n;
    b_ /= n;
    normalize();
    return *this;
}

bool operator==(const Surd& x, const Surd& y) {
    if (x.b_.is_zero() && y.b_.is_zero()) return x.a_ == y.a_;
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
}

Surd Surd::conj() const {
    Surd r = *this;
    r.b_ = -r.b_;
    return r;
}

Rat Surd::norm() const {
    if (b_.is_zero()) return a_ * a_;
    return a_ * a_ - b_ * b_ * Rat(d_);
}

int Surd::sign() const {
    if (b_.is_zero()) return a_.sign();
    if (d_ < 0) throw MathError("sign of a non-real surd");
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 d
    const Rat diff = a_ * a_ - b_ * b_ * Rat(d_);
    return diff.sign() > 0 ? sa : (diff.sign() < 0 ? sb : 0);
}

double Surd::to_double() const {
    if (b_.is_zero()) return a_.to_double();
    if (d_ < 0) throw MathError("real value of a non-real surd");
    mpf_class root(d_, 256);
    root = ::sqrt(root);
    mpf_class v = mpf_class(a_.raw(), 256) + mpf_class(b_.raw(), 256) * root;
    return v.get_d();
}

CF64 Surd::to_cf64() const {
    if (b_.is_zero() || d_ > 0) return {to_double(), 0.0};
    mpf_class root(-d_, 256);
    root = ::sqrt(root);
    mpf_class im = mpf_class(b_.raw(), 256) * root;
    return {a_.to_double(), im.get_d()};
}

std::string Surd::str() const {
    if (b_.is_zero()) return a_.str();
    std::ostringstream os;
    if (!a_.is_zero()) os << a_ << (b_.sign() > 0 ? "+" : "");
    os << b_ << "*sqrt(" << d_.get_str() << ")";
    return os.str();
}

Rat Surd::to_rat() const {
    if (!b_.is_zero()) throw MathError("value " + str() + " is not rational");
    return a_;
}

std::ostream& operator<<(std::ostream& os, const Surd& s) { return os << s.str(); }

// ---------------------------------------------------------------- roots

std::string to_string(RootTag tag) {
    switch (tag) {
        case RootTag::BothZero: return "both-zero";
        case RootTag::OneZero: return "one-zero";
        case RootTag::EqualNonzero: return "equal-nonzero";
        case RootTag::DistinctReal: return "distinct-real";
        case RootTag::ComplexConjugate: return "complex-conjugate";
    }
    return "unknown";
}

RootPair factor_quadratic(const Rat& lambda, const Rat& kappa) {
    RootPair out;
    out.discriminant = lambda * lambda + Rat(4) * kappa;
    if (lambda.is_zero() && kappa.is_zero()) {
        out.tag = RootTag::BothZero;
        return out;
    }
    if (kappa.is_zero()) {
        out.tag = RootTag::OneZero;
        out.alpha = Surd(lambda);
        out.beta = Surd(0);
        return out;
    }
    const Rat half(1, 2);
    if (out.discriminant.is_zero()) {
        out.tag = RootTag::EqualNonzero;
        out.alpha = Surd(lambda * half);
        out.beta = out.alpha;
        return out;
    }
    const Surd root = Surd::sqrt(out.discriminant);
    out.alpha = (Surd(lambda) - root) * Surd(half);
    out.beta = (Surd(lambda) + root) * Surd(half);
    out.tag = out.discriminant.sign() > 0 ? RootTag::DistinctReal : RootTag::ComplexConjugate;
    return out;
}

}  // namespace meixner
