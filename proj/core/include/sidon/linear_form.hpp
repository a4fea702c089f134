#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sidon/rational.hpp"

namespace sidon {

// Subset of the coefficient positions {1,...,h} as a bitmask; bit i
// selects position i+1. Bits at or beyond h must be clear.
using IndexSubset = std::uint32_t;

// Hard cap for every operation that enumerates all 2^h index subsets.
inline constexpr std::size_t kDefaultArityLimit = 30;

struct ObstructionWitness {
  IndexSubset lhs = 0;
  IndexSubset rhs = 0;
  Rational sum;  // shared subset sum
};

/**
 * Linear form c_1 x_1 + ... + c_h x_h with exact rational coefficients.
 *
 * Construction accepts zero or repeated coefficients; such forms simply
 * fail has_property_n(). Instances are immutable.
 */
class LinearForm {
 public:
  // Throws EmptyCoefficientList when given no coefficients.
  explicit LinearForm(std::vector<Rational> coeffs);

  // Parses comma-separated rationals, e.g. "1,2,-3/4".
  static LinearForm parse(std::string_view text);

  std::size_t arity() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& coeff(std::size_t i) const { return coeffs_[i]; }

  // Mask selecting all of {1,...,h}. Throws FormTooLarge when the
  // arity exceeds the subset-mask width.
  IndexSubset full_mask() const;

  // Sum of the coefficients selected by the mask; 0 for the empty mask.
  Rational subset_sum(IndexSubset subset) const;

  // True iff all 2^h index-subset sums are pairwise distinct, which is
  // equivalent to the nonexistence of two disjoint index subsets, not
  // both empty, with equal coefficient sums. Throws FormTooLarge when
  // h exceeds the enumeration limit.
  bool has_property_n(std::size_t arity_limit = kDefaultArityLimit) const;

  // When has_property_n() is false, returns the obstruction: two
  // disjoint index subsets, not both empty, with equal sums. Among all
  // such pairs the lexicographically smallest (by bitmask value, small
  // side first) is returned. Returns nothing for property-N forms.
  std::optional<ObstructionWitness> witness_obstruction(
      std::size_t arity_limit = kDefaultArityLimit) const;

  // Equivalent form with coprime integer coefficients: multiplies by the
  // lcm of the denominators and divides by the gcd of the resulting
  // integers. Throws ZeroCoefficient if any coefficient is zero.
  LinearForm normalized() const;

  // Form restricted to the coefficients selected by the (nonempty) mask,
  // in increasing position order. Throws EmptySubset for the empty mask.
  LinearForm contraction(IndexSubset subset) const;

  bool all_integer() const;

  // C = sum of |c_i|.
  Rational abs_sum() const;

  // Canonical comma-separated representation; doubles as the identity
  // fingerprint a SidonSet stores.
  std::string text() const;

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace sidon
