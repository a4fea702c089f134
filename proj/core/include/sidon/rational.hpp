#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sidon/errors.hpp"

namespace sidon {

/**
 * Exact rational scalar.
 *
 * Canonical form is maintained at all times: denominator >= 1,
 * gcd(|numerator|, denominator) = 1, zero stored as 0/1. Equality,
 * ordering and hashing are exact; nothing here rounds through
 * floating point.
 */
class Rational {
 public:
  Rational() : q_() {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  explicit Rational(const mpz_class& n) : q_(n) {}

  // Throws ZeroDenominator when den = 0.
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

  // Accepts "p" or "p/q" with an optional leading minus sign; rejects
  // empty input, a zero denominator, and anything else.
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return mpz_class(mpq_numref(q_.get_mpq_t())); }
  mpz_class denominator() const { return mpz_class(mpq_denref(q_.get_mpq_t())); }

  bool is_zero() const { return mpq_sgn(q_.get_mpq_t()) == 0; }
  bool is_integer() const {
    return mpz_cmp_ui(mpq_denref(q_.get_mpq_t()), 1) == 0;
  }
  int sign() const { return mpq_sgn(q_.get_mpq_t()); }

  // Largest integer <= value.
  mpz_class floor() const;

  Rational abs() const;

  std::string str() const;

  Rational operator-() const;
  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  // Throws ZeroDenominator on division by zero.
  Rational operator/(const Rational& rhs) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept;

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace sidon

template <>
struct std::hash<sidon::Rational> {
  std::size_t operator()(const sidon::Rational& r) const noexcept {
    return r.hash();
  }
};
