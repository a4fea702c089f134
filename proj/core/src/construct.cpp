#include "sidon/construct.hpp"

#include <algorithm>

namespace sidon {

namespace {

void check_greedy_form(const LinearForm& form) {
  if (!form.all_integer()) {
    throw Error(Errc::NonIntegerCoefficients,
                "greedy construction needs integer coefficients; normalize first");
  }
  if (!form.has_property_n()) {
    throw Error(Errc::PropertyNViolated,
                "form " + form.text() + " does not have property N");
  }
}

SidonSet greedy_loop(const LinearForm& form, SidonSet set, std::size_t count,
                     std::uint64_t max_tuples, bool enforce_bound) {
  while (set.size() < count) {
    const std::vector<Rational> forbidden =
        forbidden_values(form, set.elements(), max_tuples);
    mpz_class candidate = set.elements().back().numerator() + 1;
    while (std::binary_search(forbidden.begin(), forbidden.end(),
                              Rational(candidate))) {
      ++candidate;
    }
    if (enforce_bound) {
      const mpz_class bound = greedy_bound(form, mpz_class(set.size()));
      if (candidate > bound) {
        throw Error(Errc::InternalError,
                    "greedy step " + std::to_string(set.size()) +
                        " exceeded its growth bound");
      }
    }
    set.append_extension(Rational(candidate));
  }
  return set;
}

}  // namespace

mpz_class greedy_bound(const LinearForm& form, const mpz_class& k) {
  if (k < 1) {
    throw Error(Errc::InvalidArgument, "greedy bound needs k >= 1");
  }
  const std::size_t h = form.arity();
  mpz_class four_h;
  mpz_ui_pow_ui(four_h.get_mpz_t(), 4, static_cast<unsigned long>(h));
  mpz_class k_pow;
  mpz_pow_ui(k_pow.get_mpz_t(), k.get_mpz_t(),
             static_cast<unsigned long>(2 * h - 1));
  return four_h * k_pow + k;
}

SidonSet greedy_integer_sidon(const LinearForm& form, std::size_t count,
                              const mpz_class& first, std::uint64_t max_tuples) {
  if (count < 1) {
    throw Error(Errc::InvalidArgument, "greedy construction needs count >= 1");
  }
  if (first < 1) {
    throw Error(Errc::InvalidArgument, "first element must be a positive integer");
  }
  check_greedy_form(form);
  SidonSet set(form, {Rational(first)}, true);  // one-element sets are Sidon
  return greedy_loop(form, std::move(set), count, max_tuples, first == 1);
}

SidonSet greedy_extend(const LinearForm& form, SidonSet seed, std::size_t count,
                       std::uint64_t max_tuples) {
  check_greedy_form(form);
  if (!seed.verified()) {
    throw Error(Errc::PreconditionNotSidon, "seed set has not been verified Sidon");
  }
  if (seed.size() == 0) {
    throw Error(Errc::InvalidArgument, "seed set must be nonempty");
  }
  const auto& elems = seed.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!elems[i].is_integer() || elems[i].sign() <= 0 ||
        (i > 0 && !(elems[i - 1] < elems[i]))) {
      throw Error(Errc::InvalidArgument,
                  "seed must be strictly increasing positive integers");
    }
  }
  return greedy_loop(form, std::move(seed), count, max_tuples, false);
}

Rational extend_in_stream(const LinearForm& form, const SidonSet& a,
                          const CandidateStream& next, std::uint64_t max_tuples) {
  while (auto candidate = next()) {
    if (a.contains(*candidate)) continue;
    if (is_extension_sidon(form, a, *candidate, max_tuples)) {
      return *candidate;
    }
  }
  throw Error(Errc::StreamExhausted, "no valid candidate in stream");
}

Rational extend_in_stream(const LinearForm& form, const SidonSet& a,
                          std::span<const Rational> candidates,
                          std::uint64_t max_tuples) {
  std::size_t cursor = 0;
  return extend_in_stream(
      form, a,
      [&]() -> std::optional<Rational> {
        if (cursor == candidates.size()) return std::nullopt;
        return candidates[cursor++];
      },
      max_tuples);
}

}  // namespace sidon
