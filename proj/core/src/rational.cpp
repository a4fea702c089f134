#include "sidon/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace sidon {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::size_t hash_mpz(mpz_srcptr z, std::size_t seed) {
  std::size_t h = seed ^ static_cast<std::size_t>(mpz_sgn(z) + 2);
  const std::size_t limbs = mpz_size(z);
  for (std::size_t i = 0; i < limbs; ++i) {
    const auto limb = static_cast<std::size_t>(mpz_getlimbn(z, i));
    h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_() {
  if (den == 0) {
    throw Error(Errc::ZeroDenominator, "rational with zero denominator");
  }
  q_ = mpq_class(num);
  q_ /= mpq_class(den);  // mpq division canonicalizes
}

Rational Rational::parse(std::string_view text) {
  // trim surrounding whitespace
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    throw Error(Errc::ParseError, "empty rational");
  }

  bool negative = false;
  std::string_view body = text;
  if (body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }

  std::string_view num_part = body;
  std::string_view den_part;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = body.substr(0, slash);
    den_part = body.substr(slash + 1);
    if (!all_digits(den_part)) {
      throw Error(Errc::ParseError,
                  "bad denominator in \"" + std::string(text) + "\"");
    }
  }
  if (!all_digits(num_part)) {
    throw Error(Errc::ParseError, "bad rational \"" + std::string(text) + "\"");
  }

  mpz_class num(std::string(num_part), 10);
  if (negative) num = -num;
  if (den_part.empty()) {
    return Rational(num);
  }
  mpz_class den(std::string(den_part), 10);
  if (den == 0) {
    throw Error(Errc::ParseError,
                "zero denominator in \"" + std::string(text) + "\"");
  }
  return Rational(num, den);
}

mpz_class Rational::floor() const {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), mpq_numref(q_.get_mpq_t()),
             mpq_denref(q_.get_mpq_t()));
  return out;
}

Rational Rational::abs() const {
  mpq_class out;
  mpq_abs(out.get_mpq_t(), q_.get_mpq_t());
  return Rational(std::move(out));
}

std::string Rational::str() const { return q_.get_str(); }

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational Rational::operator+(const Rational& rhs) const {
  return Rational(mpq_class(q_ + rhs.q_));
}
Rational Rational::operator-(const Rational& rhs) const {
  return Rational(mpq_class(q_ - rhs.q_));
}
Rational Rational::operator*(const Rational& rhs) const {
  return Rational(mpq_class(q_ * rhs.q_));
}
Rational Rational::operator/(const Rational& rhs) const {
  if (rhs.is_zero()) {
    throw Error(Errc::ZeroDenominator, "division by zero");
  }
  return Rational(mpq_class(q_ / rhs.q_));
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
  q_ *= rhs.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(Errc::ZeroDenominator, "division by zero");
  }
  q_ /= rhs.q_;
  return *this;
}

std::size_t Rational::hash() const noexcept {
  std::size_t h = hash_mpz(mpq_numref(q_.get_mpq_t()), 0x51ed270b7a0fd3e1ULL);
  return hash_mpz(mpq_denref(q_.get_mpq_t()), h);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ParseError: return "parse_error";
    case Errc::EmptyCoefficientList: return "empty_coefficient_list";
    case Errc::ZeroDenominator: return "zero_denominator";
    case Errc::InvalidArgument: return "invalid_argument";
    case Errc::ZeroCoefficient: return "zero_coefficient";
    case Errc::EmptySubset: return "empty_subset";
    case Errc::ElementAlreadyPresent: return "element_already_present";
    case Errc::PreconditionNotSidon: return "precondition_not_sidon";
    case Errc::PropertyNViolated: return "property_n_violated";
    case Errc::NotPrime: return "not_prime";
    case Errc::NonPositiveTolerance: return "non_positive_tolerance";
    case Errc::NonIntegerCoefficients: return "non_integer_coefficients";
    case Errc::NonIntegerElements: return "non_integer_elements";
    case Errc::StreamExhausted: return "stream_exhausted";
    case Errc::NegativeThreshold: return "negative_threshold";
    case Errc::FormTooLarge: return "form_too_large";
    case Errc::BudgetExceeded: return "budget_exceeded";
    case Errc::CapExceeded: return "cap_exceeded";
    case Errc::InternalError: return "internal_error";
  }
  return "unknown_error";
}

}  // namespace sidon
