#include <benchmark/benchmark.h>

#include "sidon/analysis.hpp"
#include "sidon/construct.hpp"

using sidon::LinearForm;
using sidon::Rational;

namespace {

LinearForm powers_of_two(std::size_t h) {
  std::vector<Rational> coeffs;
  mpz_class c(1);
  for (std::size_t i = 0; i < h; ++i) {
    coeffs.emplace_back(c);
    c *= 2;
  }
  return LinearForm(std::move(coeffs));
}

void BM_PropertyN(benchmark::State& state) {
  const LinearForm form = powers_of_two(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(form.has_property_n());
  }
}
BENCHMARK(BM_PropertyN)->Arg(12)->Arg(16)->Arg(20);

void BM_BruteForceVerify(benchmark::State& state) {
  const LinearForm form = LinearForm::parse("1,2");
  const auto set = greedy_integer_sidon(form, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_sidon_bruteforce(form, set.elements()).sidon);
  }
}
BENCHMARK(BM_BruteForceVerify)->Arg(16)->Arg(64)->Arg(256);

void BM_ForbiddenValues(benchmark::State& state) {
  const LinearForm form = LinearForm::parse("1,2");
  const auto set = greedy_integer_sidon(form, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(forbidden_values(form, set.elements()));
  }
}
BENCHMARK(BM_ForbiddenValues)->Arg(8)->Arg(16)->Arg(32);

void BM_GreedyConstruct(benchmark::State& state) {
  const LinearForm form = LinearForm::parse("1,2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        greedy_integer_sidon(form, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_GreedyConstruct)->Arg(8)->Arg(16)->Arg(24);

void BM_GofN(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sidon::g_of_n(static_cast<std::uint32_t>(state.range(0))));
  }
}
BENCHMARK(BM_GofN)->Arg(12)->Arg(16)->Arg(18);

}  // namespace

BENCHMARK_MAIN();
