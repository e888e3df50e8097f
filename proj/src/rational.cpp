#include "strateq/rational.hpp"

#include <atomic>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace strateq {

namespace {

std::atomic<std::uint64_t> g_mul_count{0};

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Accepts an optional leading sign followed by digits only.
bool is_signed_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return all_digits(s);
}

[[noreturn]] void malformed(std::string_view token) {
  throw std::invalid_argument("malformed rational token: '" + std::string(token) + "'");
}

// mpz_set_str rejects a leading '+'.
mpz_class mpz_from(std::string_view digits) {
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  return mpz_class(std::string(digits), 10);
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) {
  if (q_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q_.canonicalize();
}

Rational Rational::from_text(std::string_view token) {
  std::string_view body = token;
  if (body.empty()) malformed(token);

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!is_signed_integer(num) || !is_signed_integer(den)) malformed(token);
    mpz_class n = mpz_from(num);
    mpz_class d = mpz_from(den);
    if (d == 0) throw std::domain_error("rational token with zero denominator: '" +
                                        std::string(token) + "'");
    mpq_class q(n);
    q /= mpq_class(d);
    return Rational(std::move(q));
  }

  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '+' || whole.front() == '-')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if (!all_digits(whole) || !all_digits(frac)) malformed(token);
    mpz_class scaled(std::string(whole) + std::string(frac), 10);
    if (negative) scaled = -scaled;
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, frac.size());
    mpq_class q(scaled);
    q /= mpq_class(pow10);
    return Rational(std::move(q));
  }

  if (!is_signed_integer(body)) malformed(token);
  return Rational(mpq_class(mpz_from(body)));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(r));
}

Rational Rational::operator-() const {
  mpq_class r;
  mpq_neg(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(r));
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  g_mul_count.fetch_add(1, std::memory_order_relaxed);
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  q_ /= rhs.q_;
  return *this;
}

std::string Rational::str() const {
  return is_integer() ? q_.get_num().get_str() : q_.get_str();
}

std::string Rational::fraction_str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::uint64_t Rational::mul_count() { return g_mul_count.load(std::memory_order_relaxed); }

void Rational::reset_mul_count() { g_mul_count.store(0, std::memory_order_relaxed); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace strateq
