#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "sidon/sidon_set.hpp"

namespace sidon {

// Exact step ceiling 4^h * k^(2h-1) + k for the greedy construction.
mpz_class greedy_bound(const LinearForm& form, const mpz_class& k);

/**
 * Greedy Sidon set of `count` positive integers: starts at `first` and
 * repeatedly appends the smallest integer above the last element whose
 * addition keeps the set Sidon (screened against the forbidden set).
 * Requires property N and integer coefficients. With first = 1 every
 * step is checked against greedy_bound.
 */
SidonSet greedy_integer_sidon(const LinearForm& form, std::size_t count,
                              const mpz_class& first = 1,
                              std::uint64_t max_tuples = kDefaultTupleBudget);

// Continues a greedy construction from an already-verified seed of
// strictly increasing positive integers until `count` elements.
SidonSet greedy_extend(const LinearForm& form, SidonSet seed, std::size_t count,
                       std::uint64_t max_tuples = kDefaultTupleBudget);

// Pull-based candidate source; nullopt ends the stream.
using CandidateStream = std::function<std::optional<Rational>()>;

// First candidate, in stream order, whose addition keeps `a` Sidon.
// Members of `a` are skipped. Throws StreamExhausted when a finite
// stream ends without a valid candidate.
Rational extend_in_stream(const LinearForm& form, const SidonSet& a,
                          const CandidateStream& next,
                          std::uint64_t max_tuples = kDefaultTupleBudget);
Rational extend_in_stream(const LinearForm& form, const SidonSet& a,
                          std::span<const Rational> candidates,
                          std::uint64_t max_tuples = kDefaultTupleBudget);

}  // namespace sidon
