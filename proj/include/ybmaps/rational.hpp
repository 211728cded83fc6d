#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ybmaps/errors.hpp"

namespace ybmaps {

/// Arbitrary-precision rational, always stored reduced with positive denominator.
/// Thin wrapper over GMP's mpq_class that turns division by zero into a thrown
/// DivisionByZero instead of a hardware fault, and exposes the bit size of the
/// representation so callers can monitor coefficient growth.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}  // NOLINT: int literals convert implicitly in formulas
    Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT
    Rational(long num, long den) {
        if (den == 0) throw DivisionByZero();
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p", "-p" or "p/q". Throws Error on malformed input, DivisionByZero on q=0.
    static Rational parse(std::string_view text);

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.q_ == 0) throw DivisionByZero();
        return wrap(a.q_ / b.q_);
    }
    Rational operator-() const { return wrap(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    bool is_zero() const { return q_ == 0; }
    int sign() const { return sgn(q_); }
    Rational abs() const { return wrap(::abs(q_)); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    /// Bits of |numerator| plus bits of denominator; a growth gauge for long
    /// exact computations.
    std::size_t bit_size() const {
        return mpz_sizeinbase(q_.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
    }

    double to_double() const { return q_.get_d(); }
    long double to_real() const { return static_cast<long double>(q_.get_d()); }

    std::string str() const {
        if (q_.get_den() == 1) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    // mpq arithmetic keeps canonical form when the operands are canonical.
    static Rational wrap(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        return r;
    }
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ybmaps
