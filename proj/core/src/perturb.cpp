#include "sidon/perturb.hpp"

#include <algorithm>
#include <set>

namespace sidon {

namespace {

void check_property_n(const LinearForm& form) {
  if (!form.has_property_n()) {
    throw Error(Errc::PropertyNViolated,
                "form " + form.text() + " does not have property N");
  }
}

void check_tolerances(const std::vector<Rational>& tolerances,
                      std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (tolerances[i].sign() <= 0) {
      throw Error(Errc::NonPositiveTolerance,
                  "tolerance " + tolerances[i].str() + " at step " +
                      std::to_string(i + 1) + " is not positive");
    }
  }
}

void check_spec_lengths(std::size_t count, std::size_t targets,
                        std::size_t tolerances) {
  if (count < 1) {
    throw Error(Errc::InvalidArgument, "perturbation needs count >= 1");
  }
  if (targets < count || tolerances < count) {
    throw Error(Errc::InvalidArgument,
                "target/tolerance sequences shorter than count");
  }
}

bool in_sorted(const std::vector<Rational>& sorted, const Rational& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

bool is_prime(const mpz_class& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) > 0;
}

std::optional<unsigned long> padic_valuation(const mpz_class& x,
                                             const mpz_class& p) {
  if (!is_prime(p)) {
    throw Error(Errc::NotPrime, p.get_str() + " is not prime");
  }
  if (x == 0) return std::nullopt;
  mpz_class reduced;
  const auto v = mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return static_cast<unsigned long>(v);
}

Rational padic_abs(const mpz_class& x, const mpz_class& p) {
  const auto v = padic_valuation(x, p);
  if (!v) return Rational(0);
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), *v);
  return Rational(mpz_class(1), power);
}

PadicValue padic_value(const mpz_class& x, const mpz_class& p) {
  return PadicValue{x, padic_valuation(x, p), padic_abs(x, p)};
}

SidonSet perturb_rational(const LinearForm& form, const PerturbationSpec& spec,
                          std::uint64_t max_tuples) {
  check_spec_lengths(spec.count, spec.targets.size(), spec.tolerances.size());
  check_tolerances(spec.tolerances, spec.count);
  check_property_n(form);

  SidonSet out = SidonSet::empty_set(form);
  for (std::size_t k = 1; k <= spec.count; ++k) {
    const Rational& target = spec.targets[k - 1];
    const Rational& eps = spec.tolerances[k - 1];
    if (k == 1) {
      out.append_extension(target);  // one-element sets are Sidon
      continue;
    }
    const std::vector<Rational> forbidden =
        forbidden_values(form, out.elements(), max_tuples);
    const bool excluded = in_sorted(forbidden, target) || out.contains(target);
    if (!excluded) {
      out.append_extension(target);
      continue;
    }
    // Distance from the target to the nearest other excluded point; any
    // strictly smaller positive offset escapes the whole exclusion set.
    std::optional<Rational> delta;
    const auto consider = [&](const Rational& x) {
      if (x == target) return;
      Rational d = (x - target).abs();
      if (!delta || d < *delta) delta = std::move(d);
    };
    for (const Rational& x : forbidden) consider(x);
    for (const Rational& x : out.elements()) consider(x);
    const Rational cap = delta ? std::min(*delta, eps) : std::min(Rational(1), eps);
    Rational step(1);  // 2^0
    while (!(step < cap)) {
      step /= Rational(2);
    }
    out.append_extension(target + step);
  }
  return out;
}

SidonSet perturb_padic(const LinearForm& form, const PadicSpec& spec,
                       std::uint64_t max_tuples) {
  check_spec_lengths(spec.count, spec.targets.size(), spec.tolerances.size());
  if (spec.primes.size() < spec.count) {
    throw Error(Errc::InvalidArgument, "prime sequence shorter than count");
  }
  check_tolerances(spec.tolerances, spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    if (!is_prime(spec.primes[i])) {
      throw Error(Errc::NotPrime, spec.primes[i].get_str() + " is not prime");
    }
  }
  check_property_n(form);

  SidonSet out = SidonSet::empty_set(form);
  mpz_class last(0);
  std::set<mpz_class> prime_pool;
  for (std::size_t k = 1; k <= spec.count; ++k) {
    const mpz_class& target = spec.targets[k - 1];
    const Rational& eps = spec.tolerances[k - 1];
    prime_pool.insert(spec.primes[k - 1]);

    // Smallest e with q^-e < eps for the smallest prime in play; the
    // modulus then beats eps in every p-adic absolute value at once.
    const mpz_class& q = *prime_pool.begin();
    const Rational inv_q(mpz_class(1), q);
    Rational value(1);
    unsigned long e = 0;
    while (!(value < eps)) {
      value *= inv_q;
      ++e;
    }
    mpz_class modulus(1);
    for (const mpz_class& p : prime_pool) {
      mpz_class power;
      mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e);
      modulus *= power;
    }

    const std::vector<Rational> forbidden =
        forbidden_values(form, out.elements(), max_tuples);
    // Smallest positive r with target + r * modulus above the previous
    // element and outside the forbidden set.
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), mpz_class(last - target).get_mpz_t(),
               modulus.get_mpz_t());
    r += 1;
    if (r < 1) r = 1;
    mpz_class candidate = target + r * modulus;
    while (in_sorted(forbidden, Rational(candidate))) {
      candidate += modulus;
    }
    out.append_extension(Rational(candidate));
    last = candidate;
  }
  return out;
}

}  // namespace sidon
