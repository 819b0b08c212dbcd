#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "svf/errors.hpp"

namespace svf {

// Exact arbitrary-precision rational, always in canonical form:
// denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1. Immutable in
// spirit: every operation returns a fresh canonical value. The text form
// is "n" or "n/d" in decimal; integers never print a "/1".
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}  // NOLINT: implicit by design
  Rational(int n) : q_(n) {}   // NOLINT
  Rational(long n, long d);

  // Grammar: optional sign, decimal digits, optionally "/" and nonzero
  // decimal digits. Anything else is an InputError naming the token.
  static Rational parse(std::string_view text);

  std::string str() const;

  // Decimal rendering with `digits` places after the point, rounded half
  // away from zero. Exact up to the requested precision.
  std::string decimal(int digits) const;

  double to_double() const { return q_.get_d(); }

  bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }

  // max(bit length of numerator, bit length of denominator)
  std::size_t bit_size() const;

  Rational operator-() const;
  Rational inverse() const;  // EvalError on zero
  Rational pow(unsigned long k) const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // EvalError on zero divisor

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x);

 private:
  explicit Rational(mpq_class q);

  void note_bits() const;

  mpq_class q_;
};

// Peak bit-size watcher for benchmark instrumentation. While an instance
// is alive on a thread, every Rational produced by an arithmetic op or a
// parse on that thread updates its running maximum.
class BitWatch {
 public:
  BitWatch();
  ~BitWatch();
  BitWatch(const BitWatch&) = delete;
  BitWatch& operator=(const BitWatch&) = delete;

  std::size_t max_bits() const { return max_; }
  void note(std::size_t bits) {
    if (bits > max_) max_ = bits;
  }

  static BitWatch* active();

 private:
  std::size_t max_ = 0;
  BitWatch* prev_;
};

}  // namespace svf
