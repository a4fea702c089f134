#include "sidon/analysis.hpp"

#include <cmath>
#include <cstdint>

#include "sidon/construct.hpp"

namespace sidon {

namespace {

// Subset-sum occupancy as a fixed bit plane; sums of subsets of
// {1,...,n} never exceed n(n+1)/2, so a handful of words suffices.
class SumBits {
 public:
  explicit SumBits(std::size_t max_sum) : words_((max_sum >> 6) + 1, 0) {
    words_[0] = 1;  // empty subset
  }

  // True iff shifting the occupied sums by `e` collides with them, i.e.
  // adding element e would duplicate a subset sum.
  bool collides(std::uint32_t e) const {
    const std::size_t word_shift = e >> 6;
    const std::size_t bit_shift = e & 63;
    for (std::size_t i = 0; i + word_shift < words_.size(); ++i) {
      std::uint64_t shifted = words_[i] << bit_shift;
      if (bit_shift != 0 && i > 0) {
        shifted |= words_[i - 1] >> (64 - bit_shift);
      }
      if ((words_[i + word_shift] & shifted) != 0) return true;
    }
    return false;
  }

  void add(std::uint32_t e) {
    for (std::size_t i = words_.size(); i-- > 0;) {
      const std::size_t word_shift = e >> 6;
      const std::size_t bit_shift = e & 63;
      if (i < word_shift) break;
      std::uint64_t shifted = words_[i - word_shift] << bit_shift;
      if (bit_shift != 0 && i > word_shift) {
        shifted |= words_[i - word_shift - 1] >> (64 - bit_shift);
      }
      words_[i] |= shifted;
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct GSearch {
  std::uint32_t n = 0;
  std::size_t best = 0;
  std::vector<std::uint32_t> best_witness;
  std::vector<std::uint32_t> current;

  // Depth-first over elements in increasing order, include before
  // exclude: the first subset reaching a new best size is the
  // lexicographically smallest of that size.
  void visit(std::uint32_t next, SumBits bits) {
    if (current.size() > best) {
      best = current.size();
      best_witness = current;
    }
    if (next > n) return;
    if (current.size() + (n - next + 1) <= best) return;  // cannot beat best
    if (!bits.collides(next)) {
      SumBits with = bits;
      with.add(next);
      current.push_back(next);
      visit(next + 1, std::move(with));
      current.pop_back();
    }
    visit(next + 1, std::move(bits));
  }
};

}  // namespace

std::size_t counting_function(std::span<const Rational> a, const Rational& t) {
  if (t.sign() < 0) {
    throw Error(Errc::NegativeThreshold,
                "threshold " + t.str() + " is negative");
  }
  std::size_t count = 0;
  for (const Rational& x : a) {
    if (!(t < x.abs())) ++count;
  }
  return count;
}

mpz_class growth_radicand(const LinearForm& form, const Rational& t) {
  if (t.sign() < 0) {
    throw Error(Errc::NegativeThreshold,
                "threshold " + t.str() + " is negative");
  }
  return 2 * (form.abs_sum() * t).floor() + 1;
}

double growth_upper_bound(const LinearForm& form, const Rational& t) {
  const mpz_class radicand = growth_radicand(form, t);
  const double base = radicand.get_d();
  if (form.arity() == 1) return base;
  return std::pow(base, 1.0 / static_cast<double>(form.arity()));
}

GrowthReport check_growth(const LinearForm& form, const SidonSet& a,
                          std::span<const Rational> ts) {
  if (!a.verified()) {
    throw Error(Errc::PreconditionNotSidon,
                "set has not been verified Sidon");
  }
  if (!form.all_integer()) {
    throw Error(Errc::NonIntegerCoefficients,
                "growth bound needs integer coefficients");
  }
  for (const Rational& x : a.elements()) {
    if (!x.is_integer()) {
      throw Error(Errc::NonIntegerElements,
                  "growth bound needs integer elements, got " + x.str());
    }
  }

  GrowthReport report;
  report.samples.reserve(ts.size());
  for (const Rational& t : ts) {
    GrowthSample sample;
    sample.t = t;
    sample.count = counting_function(a.elements(), t);
    sample.radicand = growth_radicand(form, t);
    sample.upper = growth_upper_bound(form, t);
    mpz_class count_pow;
    mpz_ui_pow_ui(count_pow.get_mpz_t(),
                  static_cast<unsigned long>(sample.count),
                  static_cast<unsigned long>(form.arity()));
    sample.pass = count_pow <= sample.radicand;

    sample.lower_witness = 0;
    const mpz_class t_floor = t.floor();
    for (mpz_class k = 1; greedy_bound(form, k) <= t_floor; ++k) {
      sample.lower_witness = k;
    }

    report.all_pass = report.all_pass && sample.pass;
    report.samples.push_back(std::move(sample));
  }
  return report;
}

DistinctSumsResult g_of_n(std::uint32_t n, std::uint32_t cap) {
  if (n < 1) {
    throw Error(Errc::InvalidArgument, "g(n) needs n >= 1");
  }
  if (n > cap) {
    throw Error(Errc::CapExceeded,
                "n = " + std::to_string(n) + " exceeds the search cap " +
                    std::to_string(cap));
  }
  GSearch search;
  search.n = n;
  search.visit(1, SumBits(static_cast<std::size_t>(n) * (n + 1) / 2));
  return DistinctSumsResult{search.best, std::move(search.best_witness)};
}

bool moser_corridor(std::uint32_t n, std::size_t g) {
  // log2(n) - 2 <= g  <=>  n <= 2^(g+2);   g <= log2(n) + 3  <=>  2^g <= 8n
  if (g + 2 >= 63 || g >= 63) return true;  // corridor trivially wide
  const std::uint64_t lhs = std::uint64_t{1} << (g + 2);
  const std::uint64_t rhs = std::uint64_t{1} << g;
  return n <= lhs && rhs <= std::uint64_t{8} * n;
}

}  // namespace sidon
