#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sidon/sidon_set.hpp"

namespace sidon {

// Targets b_k to approximate and per-step tolerances e_k (usual absolute
// value). Sequences must cover at least `count` steps.
struct PerturbationSpec {
  std::vector<Rational> targets;
  std::vector<Rational> tolerances;
  std::size_t count = 0;
};

// Integer targets with a prime sequence: step k must land within e_k of
// b_k in every p_j-adic absolute value for j <= k.
struct PadicSpec {
  std::vector<mpz_class> targets;
  std::vector<mpz_class> primes;
  std::vector<Rational> tolerances;
  std::size_t count = 0;
};

struct PadicValue {
  mpz_class value;
  std::optional<unsigned long> valuation;  // nullopt for 0 (infinite)
  Rational abs;
};

bool is_prime(const mpz_class& p);

// Exact exponent of p dividing x; nullopt for x = 0. Throws NotPrime.
std::optional<unsigned long> padic_valuation(const mpz_class& x,
                                             const mpz_class& p);

// p^{-v_p(x)}, and 0 for x = 0. Throws NotPrime.
Rational padic_abs(const mpz_class& x, const mpz_class& p);

PadicValue padic_value(const mpz_class& x, const mpz_class& p);

/**
 * Sidon set of distinct rationals with |a_k - b_k| < e_k for every step.
 * a_1 = b_1; later steps keep a_k = b_k whenever b_k avoids the current
 * forbidden set and prior elements, and otherwise move to b_k + 2^-m for
 * the smallest m that stays below both e_k and the distance to the
 * nearest excluded point.
 */
SidonSet perturb_rational(const LinearForm& form, const PerturbationSpec& spec,
                          std::uint64_t max_tuples = kDefaultTupleBudget);

/**
 * Strictly increasing Sidon set of positive integers with
 * |a_k - b_k|_{p_j} < e_k for all j <= k. Step k adds the smallest
 * admissible positive multiple of M = prod of the first k (distinct)
 * primes raised to the least power that beats e_k.
 */
SidonSet perturb_padic(const LinearForm& form, const PadicSpec& spec,
                       std::uint64_t max_tuples = kDefaultTupleBudget);

}  // namespace sidon
