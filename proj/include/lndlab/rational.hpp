#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "lndlab/errors.hpp"

namespace lndlab {

// Exact rational number, always reduced, denominator > 0, zero is 0/1.
// Thin value wrapper around GMP's mpq_class so the rest of the library
// never touches GMP directly.
class Rational {
  public:
    Rational() : value_(0) {}
    Rational(long n) : value_(n) {}  // NOLINT: implicit by design
    Rational(long n, long d) {
        if (d == 0) throw ZeroDivision();
        value_ = mpq_class(n, d);
        value_.canonicalize();
    }
    explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }
    Rational(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw ZeroDivision();
        value_ = mpq_class(n, d);
        value_.canonicalize();
    }

    static Rational from_decimal_string(const std::string& digits) {
        return Rational(mpq_class(digits, 10));
    }

    const mpz_class& num() const { return value_.get_num(); }
    const mpz_class& den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ZeroDivision();
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    Rational abs() const { return Rational(mpq_class(::abs(value_))); }
    Rational inverse() const {
        if (is_zero()) throw ZeroDivision();
        return Rational(mpq_class(1) / value_);
    }
    Rational pow(unsigned long e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), value_.get_num().get_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), value_.get_den().get_mpz_t(), e);
        return Rational(n, d);
    }

    // "-3/2", "7"; denominator 1 is elided.
    std::string to_string() const { return value_.get_str(); }

  private:
    mpq_class value_;
};

}  // namespace lndlab
