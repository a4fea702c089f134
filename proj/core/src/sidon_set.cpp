#include "sidon/sidon_set.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace sidon {

namespace {

void check_distinct(std::span<const Rational> a) {
  std::unordered_set<Rational> seen;
  seen.reserve(a.size() * 2);
  for (const Rational& x : a) {
    if (!seen.insert(x).second) {
      throw Error(Errc::ElementAlreadyPresent,
                  "duplicate element " + x.str() + " in set");
    }
  }
}

mpz_class pow_count(std::size_t base, std::size_t exp) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return out;
}

void check_budget(const mpz_class& required, std::uint64_t max_tuples) {
  if (mpz_cmp_ui(required.get_mpz_t(), static_cast<unsigned long>(max_tuples)) > 0) {
    throw Error(Errc::BudgetExceeded,
                "enumeration needs " + required.get_str() +
                    " tuples, budget is " + std::to_string(max_tuples));
  }
}

std::size_t reserve_hint(const mpz_class& required) {
  constexpr std::size_t kCap = std::size_t{1} << 20;
  if (mpz_cmp_ui(required.get_mpz_t(), kCap) > 0) return kCap;
  return static_cast<std::size_t>(required.get_ui());
}

// Enumerates every assignment of elements of `a` to the positions of
// `pos_coeffs` in lexicographic order (leftmost position most
// significant), maintaining the running linear-form value incrementally.
// fn(value, indices) returns false to stop early. Zero positions yield
// the single empty assignment with value 0; an empty `a` with positions
// yields nothing (callers apply the {0}-image convention themselves).
template <typename Fn>
void enumerate_tuples(const std::vector<Rational>& pos_coeffs,
                      std::span<const Rational> a, Fn&& fn) {
  const std::size_t depth = pos_coeffs.size();
  std::vector<std::uint32_t> idx(depth, 0);
  if (depth == 0) {
    fn(Rational(), idx);
    return;
  }
  if (a.empty()) return;

  std::vector<std::vector<Rational>> products(depth);
  for (std::size_t p = 0; p < depth; ++p) {
    products[p].reserve(a.size());
    for (const Rational& x : a) {
      products[p].push_back(pos_coeffs[p] * x);
    }
  }

  std::vector<Rational> partial(depth + 1);
  for (std::size_t p = 0; p < depth; ++p) {
    partial[p + 1] = partial[p] + products[p][0];
  }
  while (true) {
    if (!fn(partial[depth], idx)) return;
    std::size_t p = depth;
    while (p > 0 && idx[p - 1] + 1 == a.size()) {
      idx[p - 1] = 0;
      --p;
    }
    if (p == 0) return;
    ++idx[p - 1];
    for (std::size_t e = p - 1; e < depth; ++e) {
      partial[e + 1] = partial[e] + products[e][idx[e]];
    }
  }
}

}  // namespace

SidonSet::SidonSet(const LinearForm& form, std::vector<Rational> elements,
                   bool verified)
    : elems_(std::move(elements)),
      fingerprint_(form.text()),
      verified_(verified) {
  lookup_.reserve(elems_.size() * 2);
  for (const Rational& x : elems_) {
    if (!lookup_.insert(x).second) {
      throw Error(Errc::ElementAlreadyPresent,
                  "duplicate element " + x.str() + " in set");
    }
  }
}

SidonSet SidonSet::empty_set(const LinearForm& form) {
  return SidonSet(form, {}, true);
}

void SidonSet::append_extension(Rational b) {
  if (!lookup_.insert(b).second) {
    throw Error(Errc::ElementAlreadyPresent,
                "element " + b.str() + " already present");
  }
  elems_.push_back(std::move(b));
}

std::size_t PhiImage::tuple_count() const {
  std::size_t n = 0;
  for (const auto& [value, tuples] : buckets) {
    n += tuples.size();
  }
  return n;
}

std::vector<Rational> PhiImage::sorted_values() const {
  std::vector<Rational> out;
  out.reserve(buckets.size());
  for (const auto& [value, tuples] : buckets) {
    out.push_back(value);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PhiImage phi_image(const LinearForm& form, std::span<const Rational> a,
                   std::uint64_t max_tuples) {
  check_distinct(a);
  PhiImage image;
  image.arity = form.arity();
  image.elements.assign(a.begin(), a.end());
  if (a.empty()) {
    image.buckets[Rational()].push_back({});
    return image;
  }
  const mpz_class required = pow_count(a.size(), form.arity());
  check_budget(required, max_tuples);
  image.buckets.reserve(reserve_hint(required));
  enumerate_tuples(form.coeffs(), a,
                   [&](const Rational& v, const TupleIndices& idx) {
                     image.buckets[v].push_back(idx);
                     return true;
                   });
  return image;
}

std::vector<Rational> phi_translate(const LinearForm& form,
                                    std::span<const Rational> a,
                                    IndexSubset subset, const Rational& b,
                                    std::uint64_t max_tuples) {
  check_distinct(a);
  const IndexSubset full = form.full_mask();
  if ((subset & ~full) != 0) {
    throw Error(Errc::InvalidArgument, "subset mask has bits beyond the arity");
  }
  const Rational shift = form.subset_sum(full ^ subset) * b;
  if (subset == 0 || a.empty()) {
    return {shift};
  }
  check_budget(pow_count(a.size(), std::popcount(subset)), max_tuples);
  const LinearForm sub = form.contraction(subset);
  std::unordered_set<Rational> values;
  enumerate_tuples(sub.coeffs(), a,
                   [&](const Rational& v, const TupleIndices&) {
                     values.insert(v + shift);
                     return true;
                   });
  std::vector<Rational> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  return out;
}

SidonCheck is_sidon_bruteforce(const LinearForm& form,
                               std::span<const Rational> a,
                               std::uint64_t max_tuples) {
  check_distinct(a);
  if (a.size() <= 1) {
    return {true, std::nullopt};  // one-element sets (and the empty set)
  }
  const mpz_class required = pow_count(a.size(), form.arity());
  check_budget(required, max_tuples);

  std::unordered_map<Rational, TupleIndices> first;
  first.reserve(reserve_hint(required));
  SidonCheck out{true, std::nullopt};
  enumerate_tuples(form.coeffs(), a,
                   [&](const Rational& v, const TupleIndices& idx) {
                     auto [it, inserted] = first.try_emplace(v, idx);
                     if (inserted) return true;
                     CollisionWitness w;
                     w.value = v;
                     w.lhs.reserve(idx.size());
                     w.rhs.reserve(idx.size());
                     for (std::uint32_t i : it->second) w.lhs.push_back(a[i]);
                     for (std::uint32_t i : idx) w.rhs.push_back(a[i]);
                     out.sidon = false;
                     out.witness = std::move(w);
                     return false;  // lexicographically first collision
                   });
  return out;
}

bool is_extension_sidon(const LinearForm& form, const SidonSet& a,
                        const Rational& b, std::uint64_t max_tuples) {
  if (!a.verified()) {
    throw Error(Errc::PreconditionNotSidon,
                "base set has not been verified Sidon");
  }
  if (a.contains(b)) {
    throw Error(Errc::ElementAlreadyPresent,
                "element " + b.str() + " already present");
  }
  const IndexSubset full = form.full_mask();
  const mpz_class required = a.size() == 0
                                 ? pow_count(2, form.arity())
                                 : pow_count(a.size() + 1, form.arity());
  check_budget(required, max_tuples);

  // One shared map: a value seen under two different subsets means two
  // translated images intersect.
  std::unordered_map<Rational, IndexSubset> owner;
  owner.reserve(reserve_hint(required));
  const std::span<const Rational> elems(a.elements());
  for (IndexSubset subset = 0;; ++subset) {
    const Rational shift = form.subset_sum(full ^ subset) * b;
    bool disjoint = true;
    const auto insert = [&](const Rational& v) {
      auto [it, inserted] = owner.try_emplace(v, subset);
      if (!inserted && it->second != subset) disjoint = false;
      return disjoint;
    };
    if (subset == 0 || elems.empty()) {
      insert(shift);
    } else {
      const LinearForm sub = form.contraction(subset);
      enumerate_tuples(sub.coeffs(), elems,
                       [&](const Rational& v, const TupleIndices&) {
                         return insert(v + shift);
                       });
    }
    if (!disjoint) return false;
    if (subset == full) break;
  }
  return true;
}

std::vector<Rational> forbidden_values(const LinearForm& form,
                                       std::span<const Rational> a,
                                       std::uint64_t max_tuples) {
  check_distinct(a);
  if (!form.has_property_n()) {
    throw Error(Errc::PropertyNViolated,
                "form " + form.text() + " does not have property N");
  }
  const IndexSubset full = form.full_mask();
  const std::size_t h = form.arity();
  const std::size_t k = a.size();

  // Ordered pairs of distinct subsets, one equation per pair of attained
  // contraction values: sum_J k^|J| squared minus the diagonal.
  mpz_class predicted;
  if (k == 0) {
    predicted = pow_count(2, 2 * h) - pow_count(2, h);
  } else {
    predicted = pow_count(k + 1, 2 * h) - pow_count(k * k + 1, h);
  }
  check_budget(predicted, max_tuples);

  // Distinct contraction values per subset; {0} for the empty subset.
  std::vector<std::vector<Rational>> values(static_cast<std::size_t>(full) + 1);
  values[0] = {Rational()};
  for (IndexSubset subset = 1;; ++subset) {
    if (k == 0) {
      values[subset] = {Rational()};
    } else {
      const LinearForm sub = form.contraction(subset);
      std::unordered_set<Rational> distinct;
      enumerate_tuples(sub.coeffs(), a,
                       [&](const Rational& v, const TupleIndices&) {
                         distinct.insert(v);
                         return true;
                       });
      values[subset].assign(distinct.begin(), distinct.end());
    }
    if (subset == full) break;
  }

  std::vector<Rational> comp_sum(static_cast<std::size_t>(full) + 1);
  for (IndexSubset subset = 0;; ++subset) {
    comp_sum[subset] = form.subset_sum(full ^ subset);
    if (subset == full) break;
  }

  std::unordered_set<Rational> out;
  out.reserve(reserve_hint(predicted));
  for (IndexSubset j1 = 0;; ++j1) {
    for (IndexSubset j2 = 0;; ++j2) {
      if (j1 != j2) {
        const Rational c = comp_sum[j2] - comp_sum[j1];  // nonzero: property N
        for (const Rational& v1 : values[j1]) {
          for (const Rational& v2 : values[j2]) {
            out.insert((v1 - v2) / c);
          }
        }
      }
      if (j2 == full) break;
    }
    if (j1 == full) break;
  }
  std::vector<Rational> sorted(out.begin(), out.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

std::string phi_image_json(const PhiImage& image) {
  std::string out = "{";
  bool first_key = true;
  for (const Rational& v : image.sorted_values()) {
    if (!first_key) out += ',';
    first_key = false;
    out += '"';
    out += v.str();
    out += "\":[";
    bool first_tuple = true;
    for (const TupleIndices& tuple : image.buckets.at(v)) {
      if (!first_tuple) out += ',';
      first_tuple = false;
      out += '[';
      bool first_element = true;
      for (std::uint32_t i : tuple) {
        if (!first_element) out += ',';
        first_element = false;
        out += '"';
        out += image.elements[i].str();
        out += '"';
      }
      out += ']';
    }
    out += ']';
  }
  out += '}';
  return out;
}

}  // namespace sidon
