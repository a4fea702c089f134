#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sidon/sidon_set.hpp"

namespace sidon {

// Number of elements with |a| <= t. Throws NegativeThreshold.
std::size_t counting_function(std::span<const Rational> a, const Rational& t);

// Exact radicand 2*floor(C*t) + 1 with C the sum of |c_i|; the h-th root
// of this bounds the counting function of an integer Sidon set.
mpz_class growth_radicand(const LinearForm& form, const Rational& t);

// (2*floor(C*t) + 1)^(1/h) as a display double; pass/fail comparisons use
// the exact radicand instead.
double growth_upper_bound(const LinearForm& form, const Rational& t);

struct GrowthSample {
  Rational t;
  std::size_t count = 0;
  mpz_class radicand;        // exact comparison value
  double upper = 0.0;        // display only
  bool pass = false;         // count^h <= radicand, exact integers
  mpz_class lower_witness;   // largest k with greedy_bound(k) <= t, 0 if none
};

struct GrowthReport {
  std::vector<GrowthSample> samples;
  bool all_pass = true;
};

// Evaluates count^h <= 2*floor(C*t)+1 at each threshold for a verified
// Sidon set of integers under an integer-coefficient form. Violations are
// recorded in the report, never dropped.
GrowthReport check_growth(const LinearForm& form, const SidonSet& a,
                          std::span<const Rational> ts);

struct DistinctSumsResult {
  std::size_t g = 0;                   // largest achievable size
  std::vector<std::uint32_t> witness;  // lexicographically smallest witness
};

// Largest subset of {1,...,n} whose subset sums are pairwise distinct,
// with the lexicographically smallest maximum witness. Exponential
// search; refuses beyond the cap (CapExceeded).
DistinctSumsResult g_of_n(std::uint32_t n, std::uint32_t cap = 20);

// Heuristic sanity corridor log2(n) - 2 <= g <= log2(n) + 3, evaluated
// exactly; informational only.
bool moser_corridor(std::uint32_t n, std::size_t g);

}  // namespace sidon
