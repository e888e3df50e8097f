#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace strateq {

/// Exact rational scalar backed by GMP.
///
/// Values are always held in canonical form: denominator > 0 and
/// gcd(|numerator|, denominator) == 1. Every operation is exact; there is
/// no rounding anywhere. Instances are immutable in spirit (the library
/// never mutates shared values) and safe to read from multiple threads.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long value) : q_(value) {}  // NOLINT: integers embed implicitly
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Parses "p/q", a plain integer, or a finite base-10 decimal ("0.25"
  /// becomes exactly 1/4). Throws std::invalid_argument on malformed input
  /// and std::domain_error on a zero denominator.
  static Rational from_text(std::string_view token);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Rational inverse() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws std::domain_error on /0

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  double to_double() const { return q_.get_d(); }

  /// "n" for integers, "n/d" otherwise. Round-trips through from_text().
  std::string str() const;
  /// Always "n/d", even for integers ("2" renders as "2/1").
  std::string fraction_str() const;

  /// Process-wide multiplication counter, used to check the O(mn)
  /// arithmetic bound in tests. Counts operator* / operator*= only.
  static std::uint64_t mul_count();
  static void reset_mul_count();

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace strateq
