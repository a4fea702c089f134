#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sidon/linear_form.hpp"
#include "sidon/rational.hpp"

namespace sidon {

// Enumeration ceiling, counted in tuples (equivalently, candidate
// equations) predicted before any work starts.
inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;

/**
 * Finite ordered set of distinct scalars together with the fingerprint
 * of the form it was verified against. `verified` records that the set
 * passed (or was built through) a Sidon check for that form; extension
 * routines require it so they can rely on the one-element criterion.
 */
class SidonSet {
 public:
  // Throws ElementAlreadyPresent on duplicate elements.
  SidonSet(const LinearForm& form, std::vector<Rational> elements,
           bool verified);

  static SidonSet empty_set(const LinearForm& form);

  const std::vector<Rational>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool contains(const Rational& x) const { return lookup_.contains(x); }
  bool verified() const { return verified_; }
  const std::string& form_fingerprint() const { return fingerprint_; }

  // Appends an element whose extension validity the caller has already
  // established; keeps the verified flag. Throws ElementAlreadyPresent.
  void append_extension(Rational b);

 private:
  std::vector<Rational> elems_;
  std::unordered_set<Rational> lookup_;
  std::string fingerprint_;
  bool verified_;
};

// Tuple of positions into an element list.
using TupleIndices = std::vector<std::uint32_t>;

/**
 * Exact map from each attained form value to every h-tuple attaining it.
 * Tuples are stored as indices into `elements` in the enumeration
 * (lexicographic) order. The image of the empty set is {0}, attained by
 * the empty tuple.
 */
struct PhiImage {
  std::size_t arity = 0;
  std::vector<Rational> elements;
  std::unordered_map<Rational, std::vector<TupleIndices>> buckets;

  std::size_t distinct_values() const { return buckets.size(); }
  std::size_t tuple_count() const;
  // Attained values in ascending order.
  std::vector<Rational> sorted_values() const;
};

// Two distinct h-tuples of elements with the same form value.
struct CollisionWitness {
  std::vector<Rational> lhs;
  std::vector<Rational> rhs;
  Rational value;
};

struct SidonCheck {
  bool sidon = false;
  std::optional<CollisionWitness> witness;
};

// Full image of the form over a^h. Throws BudgetExceeded (with the
// required tuple count) when |a|^h exceeds the budget, and
// ElementAlreadyPresent on duplicate elements.
PhiImage phi_image(const LinearForm& form, std::span<const Rational> a,
                   std::uint64_t max_tuples = kDefaultTupleBudget);

// The set of values of the contraction to `subset` over `a`, translated
// by s(subset^c) * b; sorted ascending. The empty subset (and the empty
// set) contribute the single value s({1..h}) * b resp. s(subset^c) * b.
std::vector<Rational> phi_translate(const LinearForm& form,
                                    std::span<const Rational> a,
                                    IndexSubset subset, const Rational& b,
                                    std::uint64_t max_tuples = kDefaultTupleBudget);

// Decides the Sidon property by enumerating all |a|^h tuples; on failure
// carries the lexicographically first collision.
SidonCheck is_sidon_bruteforce(const LinearForm& form,
                               std::span<const Rational> a,
                               std::uint64_t max_tuples = kDefaultTupleBudget);

// Decides whether appending b keeps the set Sidon, by checking that the
// 2^h translated contraction images at b are pairwise disjoint. Requires
// a verified set (PreconditionNotSidon) and b outside it
// (ElementAlreadyPresent).
bool is_extension_sidon(const LinearForm& form, const SidonSet& a,
                        const Rational& b,
                        std::uint64_t max_tuples = kDefaultTupleBudget);

// The exact finite set of scalars b at which some pair of translated
// contraction images meets, i.e. the b for which a ∪ {b} fails to be
// Sidon (for Sidon a, b outside a ∪ result, the extension is Sidon).
// Solves one linear equation per pair of distinct subsets and value
// assignment. Sorted ascending. Requires property N (PropertyNViolated).
std::vector<Rational> forbidden_values(const LinearForm& form,
                                       std::span<const Rational> a,
                                       std::uint64_t max_tuples = kDefaultTupleBudget);

// JSON export: object keyed by the attained value (ascending), each an
// array of tuples of element values, all as decimal-rational strings.
std::string phi_image_json(const PhiImage& image);

}  // namespace sidon
