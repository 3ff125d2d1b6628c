#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfcole {

// Arbitrary-precision rational number.  Always stored canonically: numerator
// and denominator coprime, denominator strictly positive, zero as 0/1.
class Rational {
public:
    Rational() : v_(0) {}

    Rational(long n) : v_(n) {}

    Rational(long n, long d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    explicit Rational(const mpz_class& n) : v_(n) {}

    // Parses "p" or "p/q" with optional leading '-' on either part.
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        mpz_class num, den;
        try {
            if (slash == std::string::npos) {
                num = mpz_class(s);
                den = 1;
            } else {
                num = mpz_class(s.substr(0, slash));
                den = mpz_class(s.substr(slash + 1));
            }
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rational: malformed literal '" + s + "'");
        }
        if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        Rational r;
        r.v_ = mpq_class(num) / mpq_class(den);
        r.v_.canonicalize();
        return r;
    }

    static Rational factorial(unsigned long n) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), n);
        return Rational(f);
    }

    static Rational binomial(unsigned long n, unsigned long k) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n, k);
        return Rational(b);
    }

    Rational operator+(const Rational& o) const { return wrap(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return wrap(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return wrap(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        return wrap(v_ / o.v_);
    }
    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational inverse() const {
        if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
        return wrap(1 / v_);
    }

    Rational pow(unsigned e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
        Rational r;
        r.v_ = mpq_class(n) / mpq_class(d);
        r.v_.canonicalize();
        return r;
    }

    Rational abs() const { return wrap(::abs(v_)); }

    std::string numerator_string() const { return v_.get_num().get_str(); }
    std::string denominator_string() const { return v_.get_den().get_str(); }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string to_string() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    // Nearest binary64 (round-to-nearest, ties-to-even).
    double to_double() const {
        mpfr_t t;
        mpfr_init2(t, 53);
        mpfr_set_q(t, v_.get_mpq_t(), MPFR_RNDN);
        double d = mpfr_get_d(t, MPFR_RNDN);
        mpfr_clear(t);
        return d;
    }

    // Exact rational value of a binary64 (every finite double is a dyadic rational).
    static Rational from_double_exact(double d) {
        mpq_class q;
        mpq_set_d(q.get_mpq_t(), d);
        Rational r;
        r.v_ = q;
        return r;
    }

    const mpq_class& raw() const { return v_; }

private:
    static Rational wrap(const mpq_class& q) {
        Rational r;
        r.v_ = q;
        return r;
    }

    mpq_class v_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

}  // namespace hopfcole
