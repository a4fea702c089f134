// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every numeric check is exact; runtime ceilings are enforced as stated.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sidon/analysis.hpp"
#include "sidon/construct.hpp"
#include "sidon/perturb.hpp"

using sidon::LinearForm;
using sidon::Rational;
using sidon::SidonSet;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& out, const std::string& detail) {
  out.pass = false;
  if (out.detail.empty()) out.detail = detail;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_shell(const std::string& command) {
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {};
  std::string out;
  char buffer[4096];
  std::size_t n = 0;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    out.append(buffer, n);
  }
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& content) {
  static int counter = 0;
  const std::string path = "/tmp/sidon_acceptance_" + std::to_string(getpid()) +
                           "_" + std::to_string(counter++) + ".txt";
  std::ofstream(path) << content;
  return path;
}

// ---- generated sets shared across criteria (memoized) ----

struct GreedyRun {
  const char* form_text;
  std::size_t length;
};

constexpr GreedyRun kGreedyRuns[] = {{"1,2", 50}, {"1,2,4", 12}, {"2,3", 50}};

struct Generated {
  LinearForm form;
  SidonSet set;
};

const std::vector<Generated>& cached_greedy_sets() {
  static const std::vector<Generated> sets = [] {
    std::vector<Generated> out;
    for (const auto& run : kGreedyRuns) {
      const LinearForm form = LinearForm::parse(run.form_text);
      out.push_back({form, greedy_integer_sidon(form, run.length)});
    }
    return out;
  }();
  return sets;
}

std::vector<sidon::PadicSpec> padic_specs() {
  const long prime_list[] = {2, 3, 5, 7, 11, 13};
  std::mt19937_64 rng(555);
  std::uniform_int_distribution<long> pick(-50, 50);
  std::vector<sidon::PadicSpec> specs;
  for (int trial = 0; trial < 12; ++trial) {
    sidon::PadicSpec spec;
    spec.count = 6;
    for (int k = 0; k < 6; ++k) {
      spec.primes.emplace_back(prime_list[k]);
      spec.tolerances.emplace_back(mpz_class(1), mpz_class(prime_list[k]));
      long target = 0;
      if (trial == 1) target = k + 1;
      if (trial >= 2) target = pick(rng);
      spec.targets.emplace_back(target);
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

const std::vector<Generated>& cached_padic_sets() {
  static const std::vector<Generated> sets = [] {
    const LinearForm form = LinearForm::parse("1,2");
    std::vector<Generated> out;
    for (const auto& spec : padic_specs()) {
      out.push_back({form, perturb_padic(form, spec)});
    }
    return out;
  }();
  return sets;
}

// ---- instance generator shared by criteria 2 and 3 ----

struct Instance {
  LinearForm form;
  std::vector<Rational> elements;
};

Instance random_sidon_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> arity(1, 3);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_int_distribution<int> pick(-5, 5);
  while (true) {
    const LinearForm form = testutil::random_property_n_form(rng, arity(rng));
    std::vector<Rational> elems;
    const int n = size(rng);
    while (static_cast<int>(elems.size()) < n) {
      const Rational x(pick(rng));
      if (std::find(elems.begin(), elems.end(), x) == elems.end()) {
        elems.push_back(x);
      }
    }
    if (is_sidon_bruteforce(form, elems).sidon) {
      return Instance{form, std::move(elems)};
    }
  }
}

// ---- criteria ----

Outcome criterion_property_n_oracle() {
  Outcome out;
  const Rational pool[] = {Rational(-3),    Rational(-2), Rational(-1),
                           Rational(1),     Rational(2),  Rational(3),
                           Rational(1, 2),  Rational(-1, 2)};
  std::size_t forms = 0;
  for (int h = 1; h <= 4; ++h) {
    std::vector<std::size_t> idx(h, 0);
    while (true) {
      std::vector<Rational> coeffs;
      for (int i = 0; i < h; ++i) coeffs.push_back(pool[idx[i]]);
      const LinearForm form(std::move(coeffs));
      ++forms;
      if (form.has_property_n() != testutil::oracle_property_n(form)) {
        fail(out, "disagreement on " + form.text());
      }
      int p = h - 1;
      while (p >= 0 && idx[p] + 1 == 8) idx[p--] = 0;
      if (p < 0) break;
      ++idx[p];
    }
  }
  if (forms < 4096) fail(out, "only " + std::to_string(forms) + " forms");
  out.detail = std::to_string(forms) + " forms";
  return out;
}

Outcome criterion_extension_equivalence() {
  Outcome out;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick_b(-20, 20);
  int instances = 0;
  while (instances < 1000) {
    const Instance inst = random_sidon_instance(rng);
    const Rational b(pick_b(rng));
    if (std::find(inst.elements.begin(), inst.elements.end(), b) !=
        inst.elements.end()) {
      continue;
    }
    const SidonSet a(inst.form, inst.elements, true);
    auto extended = inst.elements;
    extended.push_back(b);
    const bool via_translates = is_extension_sidon(inst.form, a, b);
    const bool via_bruteforce = is_sidon_bruteforce(inst.form, extended).sidon;
    if (via_translates != via_bruteforce) {
      fail(out, "disagreement: form " + inst.form.text() + ", b = " + b.str());
    }
    ++instances;
  }
  out.detail = std::to_string(instances) + " instances";
  return out;
}

Outcome criterion_forbidden_exactness() {
  Outcome out;
  std::mt19937_64 rng(4096);
  int instances = 0;
  while (instances < 1000) {
    const Instance inst = random_sidon_instance(rng);
    const SidonSet a(inst.form, inst.elements, true);
    const auto forb = forbidden_values(inst.form, inst.elements);
    for (long bval = -20; bval <= 20; ++bval) {
      const Rational b(bval);
      if (std::find(inst.elements.begin(), inst.elements.end(), b) !=
          inst.elements.end()) {
        continue;
      }
      const bool listed = std::binary_search(forb.begin(), forb.end(), b);
      const bool fails_extension = !is_extension_sidon(inst.form, a, b);
      if (listed != fails_extension) {
        fail(out, "mismatch at form " + inst.form.text() + ", b = " + b.str());
      }
    }
    ++instances;
  }
  out.detail = std::to_string(instances) + " instances, b in [-20,20]";
  return out;
}

Outcome criterion_greedy_bound() {
  Outcome out;
  for (const auto& gen : cached_greedy_sets()) {
    const auto& elems = gen.set.elements();
    for (std::size_t k = 1; k < elems.size(); ++k) {
      if (!(elems[k - 1] < elems[k])) fail(out, "not increasing");
      if (elems[k].numerator() >
          greedy_bound(gen.form, mpz_class(static_cast<long>(k)))) {
        fail(out, "bound violated at k = " + std::to_string(k) + " for " +
                      gen.form.text());
      }
    }
  }
  out.detail = "lengths 50, 12, 50 for forms 1,2 | 1,2,4 | 2,3";
  return out;
}

Outcome criterion_greedy_validity() {
  Outcome out;
  for (const auto& gen : cached_greedy_sets()) {
    const auto& elems = gen.set.elements();
    for (std::size_t n = 1; n <= std::min<std::size_t>(8, elems.size()); ++n) {
      const std::vector<Rational> prefix(elems.begin(), elems.begin() + n);
      if (!is_sidon_bruteforce(gen.form, prefix).sidon) {
        fail(out, "brute-force failure at prefix " + std::to_string(n));
      }
    }
    SidonSet fold = SidonSet::empty_set(gen.form);
    for (const Rational& e : elems) {
      if (!is_extension_sidon(gen.form, fold, e)) {
        fail(out, "incremental failure at " + e.str());
        break;
      }
      fold.append_extension(e);
    }
  }
  out.detail = "prefixes <= 8 brute force, full runs incremental";
  return out;
}

Outcome criterion_counting_bound() {
  Outcome out;
  std::vector<const Generated*> all;
  for (const auto& gen : cached_greedy_sets()) all.push_back(&gen);
  for (const auto& gen : cached_padic_sets()) all.push_back(&gen);
  std::size_t samples = 0;
  for (const Generated* gen : all) {
    std::vector<Rational> ts;
    for (long t : {1, 10, 100, 1000}) ts.emplace_back(t);
    const auto report = sidon::check_growth(gen->form, gen->set, ts);
    for (const auto& sample : report.samples) {
      ++samples;
      mpz_class count_pow;
      mpz_ui_pow_ui(count_pow.get_mpz_t(),
                    static_cast<unsigned long>(sample.count),
                    static_cast<unsigned long>(gen->form.arity()));
      if (!(count_pow <= sample.radicand) || !sample.pass) {
        fail(out,
             "violation at t = " + sample.t.str() + " for " + gen->form.text());
      }
    }
    if (!report.all_pass) fail(out, "report flags a violation");
  }
  out.detail = std::to_string(all.size()) + " sets x 4 thresholds (" +
               std::to_string(samples) + " samples)";
  return out;
}

Outcome criterion_rational_perturbation() {
  Outcome out;
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 6);
  const LinearForm form = LinearForm::parse("1,2");
  for (int trial = 0; trial < 100; ++trial) {
    sidon::PerturbationSpec spec;
    spec.count = 8;
    for (unsigned k = 1; k <= 8; ++k) {
      spec.targets.emplace_back(num(rng), den(rng));
      mpz_class d;
      mpz_ui_pow_ui(d.get_mpz_t(), 2, k);
      spec.tolerances.emplace_back(mpz_class(1), d);
    }
    const SidonSet set = perturb_rational(form, spec);
    for (std::size_t k = 0; k < 8; ++k) {
      if (!((set.elements()[k] - spec.targets[k]).abs() < spec.tolerances[k])) {
        fail(out, "tolerance violated at k = " + std::to_string(k + 1));
      }
    }
    if (!is_sidon_bruteforce(form, set.elements()).sidon) {
      fail(out, "output not Sidon on trial " + std::to_string(trial));
    }
  }
  out.detail = "100 random target sequences, eps_k = 2^-k";
  return out;
}

Outcome criterion_padic_perturbation() {
  Outcome out;
  const auto specs = padic_specs();
  const auto& sets = cached_padic_sets();
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& spec = specs[i];
    const auto& a = sets[i].set.elements();
    if (a.size() != 6) fail(out, "wrong length");
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!a[k].is_integer() || a[k].sign() <= 0) {
        fail(out, "not a positive integer");
      }
      if (k > 0 && !(a[k - 1] < a[k])) fail(out, "not strictly increasing");
      const mpz_class diff = a[k].numerator() - spec.targets[k];
      for (std::size_t j = 0; j <= k; ++j) {
        if (!(sidon::padic_abs(diff, spec.primes[j]) < spec.tolerances[k])) {
          fail(out, "p-adic tolerance violated at k = " +
                        std::to_string(k + 1) + ", j = " + std::to_string(j + 1));
        }
      }
    }
    if (!is_sidon_bruteforce(sets[i].form, a).sidon) {
      fail(out, "output not Sidon");
    }
  }
  out.detail = "primes (2,3,5,7,11,13), eps_k = 1/p_k, 12 target sequences";
  return out;
}

Outcome criterion_g_table() {
  Outcome out;
  // frozen from the exhaustive-subset oracle run before the build
  const std::size_t frozen[] = {1, 2, 2, 3, 3, 3, 4, 4};
  for (std::uint32_t n = 1; n <= 8; ++n) {
    const std::size_t direct = testutil::oracle_g_of_n(n);
    if (direct != frozen[n - 1]) {
      fail(out, "oracle drift at n = " + std::to_string(n));
    }
    if (sidon::g_of_n(n).g != frozen[n - 1]) {
      fail(out,
           "g(" + std::to_string(n) + ") != " + std::to_string(frozen[n - 1]));
    }
  }
  std::size_t prev = 0;
  for (std::uint32_t n = 1; n <= 18; ++n) {
    const auto result = sidon::g_of_n(n);
    if (result.g < prev) fail(out, "g not nondecreasing at " + std::to_string(n));
    prev = result.g;
  }
  out.detail = "g(1..8) = (1,2,2,3,3,3,4,4); nondecreasing to n = 18";
  return out;
}

Outcome criterion_cli_determinism() {
  Outcome out;
  const std::string bin = SIDON_CLI_BIN;
  const std::string set_file = write_temp("1\n2\n5\n6\n17\n");
  const std::string bad_file = write_temp("1\n2\n3\n");
  const std::string targets_file = write_temp("1\n1\n1\n");
  const std::string seed_file = write_temp("1\n2\n5\n");
  const std::vector<std::string> commands = {
      bin + " check-n --form 1,2,4 --json",
      bin + " check-n --form 1,1 --json",
      bin + " check-n --form 1,1",
      bin + " verify --form 1,2 --set " + set_file + " --json",
      bin + " verify --form 1,2 --set " + set_file + " --mode incremental --json",
      bin + " verify --form 1,2 --set " + bad_file + " --json",
      bin + " greedy --form 1,2 --count 12 --json",
      bin + " greedy --form 2,3 --count 12 --json",
      bin + " greedy --form 1,2 --count 8 --seed-file " + seed_file + " --json",
      bin + " greedy --form 1,2 --count 8",
      bin + " perturb --form 1,2 --targets " + targets_file +
          " --eps 1/2,1/4,1/8 --json",
      "printf '0\\n-7\\n12\\n' | " + bin +
          " perturb --form 1,2 --padic --primes 2,3,5 --targets - --eps " +
          "1/2,1/3,1/5 --json",
      bin + " growth --form 1,2 --set " + set_file + " --ts 5,10,100 --json",
      bin + " gn --n 12 --json",
      bin + " gn --n 12",
      bin + " phi-image --form 1,2 --set " + seed_file,
  };
  for (const std::string& command : commands) {
    const CliResult first = run_shell(command + " 2>&1");
    const CliResult second = run_shell(command + " 2>&1");
    if (first.exit_code != second.exit_code || first.out != second.out) {
      fail(out, "nondeterministic: " + command);
    }
    if (first.exit_code < 0) fail(out, "failed to run: " + command);
  }
  out.detail = std::to_string(commands.size()) + " commands, two runs each";
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0 = no stated ceiling
    std::function<Outcome()> run;
  };

  const std::vector<Criterion> criteria = {
      {1, "property-N oracle equivalence (h <= 4 sweep)", 10.0,
       criterion_property_n_oracle},
      {2, "extension check equals brute force (1000 random instances)", 30.0,
       criterion_extension_equivalence},
      {3, "forbidden-set exactness (1000 random instances)", 30.0,
       criterion_forbidden_exactness},
      {4, "greedy growth bound, exact at every step", 60.0,
       criterion_greedy_bound},
      {5, "greedy Sidon validity (brute force + incremental)", 60.0,
       criterion_greedy_validity},
      {6, "counting bound on generated integer sets", 0.0,
       criterion_counting_bound},
      {7, "archimedean perturbation contract", 60.0,
       criterion_rational_perturbation},
      {8, "p-adic perturbation contract", 30.0, criterion_padic_perturbation},
      {9, "g(n) table against the exhaustive oracle", 120.0, criterion_g_table},
      {10, "byte-identical CLI output across runs", 0.0,
       criterion_cli_determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (criterion.limit_seconds > 0 && seconds > criterion.limit_seconds) {
      outcome.pass = false;
      outcome.detail += (outcome.detail.empty() ? "" : "; ");
      outcome.detail += "over the " +
                        std::to_string(static_cast<int>(criterion.limit_seconds)) +
                        "s ceiling";
    }
    char line[512];
    std::snprintf(line, sizeof line, "[%s] criterion %2d: %s (%.2fs%s%s)",
                  outcome.pass ? "PASS" : "FAIL", criterion.id, criterion.title,
                  seconds, outcome.detail.empty() ? "" : "; ",
                  outcome.detail.c_str());
    std::cout << line << std::endl;
    if (!outcome.pass) ++failures;
  }

  if (failures == 0) {
    std::cout << "all criteria passed" << std::endl;
  }
  return failures;
}
