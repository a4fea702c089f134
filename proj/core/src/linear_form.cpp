#include "sidon/linear_form.hpp"

#include <bit>
#include <cctype>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace sidon {

namespace {

void check_arity_limit(std::size_t h, std::size_t arity_limit) {
  const std::size_t limit = std::min(arity_limit, kDefaultArityLimit);
  if (h > limit) {
    throw Error(Errc::FormTooLarge,
                "arity " + std::to_string(h) + " exceeds enumeration limit " +
                    std::to_string(limit));
  }
}

}  // namespace

LinearForm::LinearForm(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(Errc::EmptyCoefficientList, "linear form needs h >= 1");
  }
}

LinearForm LinearForm::parse(std::string_view text) {
  // trim; an all-blank string is an empty coefficient list
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    throw Error(Errc::EmptyCoefficientList, "empty coefficient list");
  }
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view field =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
    coeffs.push_back(Rational::parse(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return LinearForm(std::move(coeffs));
}

IndexSubset LinearForm::full_mask() const {
  if (arity() > kDefaultArityLimit) {
    throw Error(Errc::FormTooLarge,
                "arity " + std::to_string(arity()) + " exceeds subset-mask limit");
  }
  return static_cast<IndexSubset>((1u << arity()) - 1u);
}

Rational LinearForm::subset_sum(IndexSubset subset) const {
  if (arity() < 32 && (subset >> arity()) != 0) {
    throw Error(Errc::InvalidArgument, "subset mask has bits beyond the arity");
  }
  Rational sum;
  for (IndexSubset rest = subset; rest != 0; rest &= rest - 1) {
    sum += coeffs_[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return sum;
}

bool LinearForm::has_property_n(std::size_t arity_limit) const {
  const std::size_t h = arity();
  check_arity_limit(h, arity_limit);

  // Gray-code walk: one coefficient add or subtract per subset.
  std::unordered_set<Rational> seen;
  seen.reserve(std::size_t{2} << h);
  Rational sum;  // s(empty) = 0
  seen.insert(sum);
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << h); ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    const std::uint64_t gray = step ^ (step >> 1);
    const bool entering = ((gray >> bit) & 1u) != 0;
    if (entering) {
      sum += coeffs_[bit];
    } else {
      sum -= coeffs_[bit];
    }
    if (!seen.insert(sum).second) {
      return false;
    }
  }
  return true;
}

std::optional<ObstructionWitness> LinearForm::witness_obstruction(
    std::size_t arity_limit) const {
  const std::size_t h = arity();
  check_arity_limit(h, arity_limit);

  // Group subsets by sum; masks enter each group in ascending order.
  std::unordered_map<Rational, std::vector<IndexSubset>> groups;
  groups.reserve(std::size_t{2} << h);
  bool any_collision = false;
  {
    std::vector<Rational> sums(std::size_t{1} << h);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << h); ++mask) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(mask));
      sums[mask] = sums[mask & (mask - 1)] + coeffs_[bit];
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h); ++mask) {
      auto& bucket = groups[sums[mask]];
      if (!bucket.empty()) any_collision = true;
      bucket.push_back(static_cast<IndexSubset>(mask));
    }
  }
  if (!any_collision) {
    return std::nullopt;
  }

  // Disjoint pairs with equal sums are exactly the colliding pairs after
  // removal of their intersection; scanning first components in ascending
  // mask order yields the lexicographically smallest pair.
  for (std::uint64_t m1 = 0; m1 < (std::uint64_t{1} << h); ++m1) {
    const auto mask1 = static_cast<IndexSubset>(m1);
    const auto it = groups.find(subset_sum(mask1));
    if (it == groups.end()) continue;
    for (const IndexSubset mask2 : it->second) {
      if (mask2 > mask1 && (mask2 & mask1) == 0) {
        return ObstructionWitness{mask1, mask2, subset_sum(mask1)};
      }
    }
  }
  return std::nullopt;  // unreachable: a collision implies a disjoint pair
}

LinearForm LinearForm::normalized() const {
  mpz_class lcm_den(1);
  for (const Rational& c : coeffs_) {
    if (c.is_zero()) {
      throw Error(Errc::ZeroCoefficient, "cannot normalize a zero coefficient");
    }
    mpz_class den = c.denominator();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<mpz_class> scaled;
  scaled.reserve(coeffs_.size());
  mpz_class gcd_all(0);
  for (const Rational& c : coeffs_) {
    mpz_class v = c.numerator() * (lcm_den / c.denominator());
    mpz_gcd(gcd_all.get_mpz_t(), gcd_all.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(std::move(v));
  }
  std::vector<Rational> out;
  out.reserve(scaled.size());
  for (const mpz_class& v : scaled) {
    out.emplace_back(mpz_class(v / gcd_all));
  }
  return LinearForm(std::move(out));
}

LinearForm LinearForm::contraction(IndexSubset subset) const {
  if (subset == 0) {
    throw Error(Errc::EmptySubset, "contraction of the empty subset");
  }
  if (arity() < 32 && (subset >> arity()) != 0) {
    throw Error(Errc::InvalidArgument, "subset mask has bits beyond the arity");
  }
  std::vector<Rational> out;
  for (IndexSubset rest = subset; rest != 0; rest &= rest - 1) {
    out.push_back(coeffs_[static_cast<std::size_t>(std::countr_zero(rest))]);
  }
  return LinearForm(std::move(out));
}

bool LinearForm::all_integer() const {
  for (const Rational& c : coeffs_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

Rational LinearForm::abs_sum() const {
  Rational sum;
  for (const Rational& c : coeffs_) {
    sum += c.abs();
  }
  return sum;
}

std::string LinearForm::text() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ',';
    out += coeffs_[i].str();
  }
  return out;
}

}  // namespace sidon
