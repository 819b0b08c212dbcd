#include "svf/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace svf {

namespace {

thread_local BitWatch* g_watch = nullptr;

std::size_t mpq_bits(const mpq_class& q) {
  return std::max(mpz_sizeinbase(q.get_num_mpz_t(), 2),
                  mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

[[noreturn]] void bad_token(std::string_view text, const char* why) {
  throw InputError(std::string("invalid rational '") + std::string(text) +
                   "': " + why);
}

}  // namespace

BitWatch::BitWatch() : prev_(g_watch) { g_watch = this; }
BitWatch::~BitWatch() { g_watch = prev_; }
BitWatch* BitWatch::active() { return g_watch; }

void Rational::note_bits() const {
  if (BitWatch* w = g_watch) w->note(mpq_bits(q_));
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { note_bits(); }

Rational::Rational(long n, long d) {
  if (d == 0) throw pole_error("zero denominator", "rational construction");
  q_ = mpq_class(n, d);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t i = 0;
  const std::size_t len = text.size();
  bool negative = false;
  if (i < len && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  const std::size_t num_begin = i;
  while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) bad_token(text, "expected decimal digits");
  const std::size_t num_end = i;

  mpz_class num(std::string(text.substr(num_begin, num_end - num_begin)), 10);
  if (negative) num = -num;

  mpq_class q;
  if (i < len) {
    if (text[i] != '/') bad_token(text, "unexpected character");
    const std::size_t den_begin = ++i;
    while (i < len && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin) bad_token(text, "expected digits after '/'");
    if (i != len) bad_token(text, "trailing characters");
    mpz_class den(std::string(text.substr(den_begin, i - den_begin)), 10);
    if (den == 0) bad_token(text, "zero denominator");
    q = mpq_class(num, den);
    q.canonicalize();
  } else {
    q = mpq_class(num);
  }
  return Rational(std::move(q));
}

std::string Rational::str() const { return q_.get_str(); }

std::string Rational::decimal(int digits) const {
  if (digits < 0) digits = 0;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = abs(mpz_class(q_.get_num()));
  const mpz_class& den = q_.get_den();
  mpz_class scaled = num * pow10;
  mpz_class quot, rem;
  mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(),
              den.get_mpz_t());
  if (2 * rem >= den) quot += 1;

  std::string s = quot.get_str();
  std::string out;
  if (sign() < 0 && quot != 0) out += '-';
  if (digits == 0) {
    out += s;
    return out;
  }
  if (s.size() <= static_cast<std::size_t>(digits))
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  out += s.substr(0, s.size() - digits);
  out += '.';
  out += s.substr(s.size() - digits);
  return out;
}

std::size_t Rational::bit_size() const { return mpq_bits(q_); }

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational Rational::inverse() const {
  if (is_zero()) throw pole_error("division by zero", "inverse");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::pow(unsigned long k) const {
  mpq_class r(1);
  mpq_class base = q_;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return Rational(std::move(r));
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  note_bits();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  note_bits();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  note_bits();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw pole_error("division by zero", "rational division");
  q_ /= o.q_;
  note_bits();
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.str();
}

}  // namespace svf
