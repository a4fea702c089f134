// Command-line front end: property-N checks, Sidon verification, greedy
// and perturbed constructions, growth reports, and the distinct-subset-sum
// maximum g(n). All numeric payloads are exact decimal-rational strings;
// exit codes: 0 success, 1 domain failure, 2 usage/parse error, 3 budget.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sidon/analysis.hpp"
#include "sidon/construct.hpp"
#include "sidon/io.hpp"
#include "sidon/perturb.hpp"

using nlohmann::ordered_json;
using sidon::Errc;
using sidon::Error;
using sidon::LinearForm;
using sidon::Rational;
using sidon::SidonSet;

namespace {

struct Options {
  std::uint64_t max_tuples = sidon::kDefaultTupleBudget;
  bool json = false;
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ParseError:
    case Errc::EmptyCoefficientList:
    case Errc::ZeroDenominator:
    case Errc::InvalidArgument:
      return 2;
    case Errc::BudgetExceeded:
    case Errc::FormTooLarge:
    case Errc::CapExceeded:
      return 3;
    default:
      return 1;
  }
}

template <typename Fn>
int run_guarded(const Options& opts, const char* command, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (opts.json) {
      ordered_json payload;
      payload["ok"] = false;
      payload["command"] = command;
      payload["reason"] = sidon::errc_name(e.code());
      payload["message"] = e.what();
      std::cout << payload.dump() << "\n";
    } else {
      std::cout << command << ": error: " << e.what() << " ["
                << sidon::errc_name(e.code()) << "]\n";
    }
    return exit_code_for(e.code());
  }
}

std::vector<Rational> read_set(const std::string& path) {
  if (path == "-") {
    return sidon::read_scalar_lines(std::cin);
  }
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::InvalidArgument, "cannot open " + path);
  }
  return sidon::read_scalar_lines(in);
}

std::vector<int> mask_indices(sidon::IndexSubset mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i + 1);
  }
  return out;
}

ordered_json strings(const std::vector<Rational>& values) {
  ordered_json out = ordered_json::array();
  for (const Rational& v : values) out.push_back(v.str());
  return out;
}

ordered_json witness_json(const sidon::CollisionWitness& w) {
  ordered_json out;
  out["lhs"] = strings(w.lhs);
  out["rhs"] = strings(w.rhs);
  out["value"] = w.value.str();
  return out;
}

std::string join(const std::vector<Rational>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

// Folds the elements through the one-element extension check; returns the
// position (0-based) of the first offending element, the verified set
// otherwise.
struct FoldResult {
  SidonSet set;
  std::optional<std::size_t> offending;
};

FoldResult fold_verify(const LinearForm& form,
                       const std::vector<Rational>& elems,
                       std::uint64_t max_tuples) {
  FoldResult result{SidonSet::empty_set(form), std::nullopt};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!is_extension_sidon(form, result.set, elems[i], max_tuples)) {
      result.offending = i;
      return result;
    }
    result.set.append_extension(elems[i]);
  }
  return result;
}

int cmd_check_n(const Options& opts, const std::string& form_text) {
  return run_guarded(opts, "check-n", [&] {
    const LinearForm form = LinearForm::parse(form_text);
    const auto witness = form.witness_obstruction();
    const bool ok = !witness.has_value();
    if (opts.json) {
      ordered_json payload;
      payload["ok"] = ok;
      payload["command"] = "check-n";
      payload["form"] = form.text();
      payload["property_n"] = ok;
      if (witness) {
        payload["reason"] = "property_n_failed";
        payload["witness"]["i1"] = mask_indices(witness->lhs);
        payload["witness"]["i2"] = mask_indices(witness->rhs);
        payload["witness"]["subset_sum"] = witness->sum.str();
      }
      std::cout << payload.dump() << "\n";
    } else {
      std::cout << "form: " << form.text() << "\n";
      std::cout << "property N: " << (ok ? "yes" : "no") << "\n";
      if (witness) {
        const auto i1 = mask_indices(witness->lhs);
        const auto i2 = mask_indices(witness->rhs);
        std::cout << "witness: I1 = {";
        for (std::size_t i = 0; i < i1.size(); ++i) {
          std::cout << (i ? "," : "") << i1[i];
        }
        std::cout << "}, I2 = {";
        for (std::size_t i = 0; i < i2.size(); ++i) {
          std::cout << (i ? "," : "") << i2[i];
        }
        std::cout << "}, shared subset sum = " << witness->sum.str() << "\n";
      }
    }
    return ok ? 0 : 1;
  });
}

int cmd_verify(const Options& opts, const std::string& form_text,
               const std::string& set_path, const std::string& mode) {
  return run_guarded(opts, "verify", [&] {
    const LinearForm form = LinearForm::parse(form_text);
    const std::vector<Rational> elems = read_set(set_path);
    ordered_json payload;
    payload["ok"] = true;
    payload["command"] = "verify";
    payload["mode"] = mode;
    payload["form"] = form.text();
    payload["count"] = elems.size();
    bool ok = true;
    std::optional<sidon::CollisionWitness> brute_witness;
    std::optional<std::size_t> offending;
    if (mode == "brute") {
      auto check = is_sidon_bruteforce(form, elems, opts.max_tuples);
      ok = check.sidon;
      if (!ok) {
        payload["reason"] = "not_sidon";
        payload["witness"] = witness_json(*check.witness);
        brute_witness = std::move(check.witness);
      }
    } else {
      const auto fold = fold_verify(form, elems, opts.max_tuples);
      ok = !fold.offending.has_value();
      if (!ok) {
        offending = fold.offending;
        payload["reason"] = "not_sidon";
        payload["offending_index"] = *fold.offending + 1;
        payload["offending_element"] = elems[*fold.offending].str();
      }
    }
    payload["ok"] = ok;
    if (opts.json) {
      std::cout << payload.dump() << "\n";
    } else {
      std::cout << "set of " << elems.size() << " elements: "
                << (ok ? "Sidon" : "not Sidon") << " for " << form.text()
                << " (" << mode << ")\n";
      if (brute_witness) {
        std::cout << "collision: (" << join(brute_witness->lhs, ",") << ") and ("
                  << join(brute_witness->rhs, ",") << ") both map to "
                  << brute_witness->value.str() << "\n";
      }
      if (offending) {
        std::cout << "first offending element: " << elems[*offending].str()
                  << "\n";
      }
    }
    return ok ? 0 : 1;
  });
}

int cmd_greedy(const Options& opts, const std::string& form_text,
               std::size_t count, const std::string& first_text,
               const std::string& seed_path) {
  return run_guarded(opts, "greedy", [&] {
    const LinearForm form = LinearForm::parse(form_text);
    SidonSet set = SidonSet::empty_set(form);
    if (!seed_path.empty()) {
      const std::vector<Rational> seed = read_set(seed_path);
      const auto fold = fold_verify(form, seed, opts.max_tuples);
      if (fold.offending) {
        if (opts.json) {
          ordered_json payload;
          payload["ok"] = false;
          payload["command"] = "greedy";
          payload["reason"] = "precondition_not_sidon";
          payload["offending_element"] = seed[*fold.offending].str();
          std::cout << payload.dump() << "\n";
        } else {
          std::cout << "seed is not Sidon at element "
                    << seed[*fold.offending].str() << "\n";
        }
        return 1;
      }
      set = greedy_extend(form, fold.set, count, opts.max_tuples);
    } else {
      const Rational first = Rational::parse(first_text);
      if (!first.is_integer()) {
        throw Error(Errc::InvalidArgument, "--first must be a positive integer");
      }
      set = greedy_integer_sidon(form, count, first.numerator(), opts.max_tuples);
    }

    ordered_json bounds = ordered_json::array();
    for (std::size_t k = 1; k < set.size(); ++k) {
      bounds.push_back(greedy_bound(form, mpz_class(static_cast<long>(k))).get_str());
    }
    if (opts.json) {
      ordered_json payload;
      payload["ok"] = true;
      payload["command"] = "greedy";
      payload["form"] = form.text();
      payload["count"] = set.size();
      payload["elements"] = strings(set.elements());
      payload["bounds"] = bounds;
      std::cout << payload.dump() << "\n";
    } else {
      std::cout << join(set.elements(), " ") << "\n";
    }
    return 0;
  });
}

int cmd_perturb(const Options& opts, const std::string& form_text,
                const std::string& targets_path, const std::string& eps_csv,
                bool padic, const std::string& primes_csv) {
  return run_guarded(opts, "perturb", [&] {
    const LinearForm form = LinearForm::parse(form_text);
    const std::vector<Rational> targets = read_set(targets_path);
    const std::vector<Rational> eps = sidon::parse_rational_csv(eps_csv);
    const std::size_t count = targets.size();
    if (count == 0) {
      throw Error(Errc::InvalidArgument, "no targets given");
    }
    if (eps.size() < count) {
      throw Error(Errc::InvalidArgument,
                  "need at least as many tolerances as targets");
    }

    ordered_json payload;
    payload["ok"] = true;
    payload["command"] = "perturb";
    payload["mode"] = padic ? "padic" : "rational";
    payload["form"] = form.text();
    payload["count"] = count;
    ordered_json steps = ordered_json::array();
    std::vector<Rational> elements;

    if (padic) {
      sidon::PadicSpec spec;
      spec.count = count;
      spec.tolerances = eps;
      for (const Rational& t : targets) {
        if (!t.is_integer()) {
          throw Error(Errc::InvalidArgument,
                      "p-adic targets must be integers, got " + t.str());
        }
        spec.targets.push_back(t.numerator());
      }
      for (const Rational& p : sidon::parse_rational_csv(primes_csv)) {
        if (!p.is_integer()) {
          throw Error(Errc::InvalidArgument, "primes must be integers");
        }
        spec.primes.push_back(p.numerator());
      }
      if (spec.primes.size() < count) {
        throw Error(Errc::InvalidArgument,
                    "need at least as many primes as targets");
      }
      const SidonSet out = perturb_padic(form, spec, opts.max_tuples);
      elements = out.elements();
      for (std::size_t k = 0; k < count; ++k) {
        const mpz_class diff = elements[k].numerator() - spec.targets[k];
        Rational achieved(0);
        for (std::size_t j = 0; j <= k; ++j) {
          achieved = std::max(achieved, sidon::padic_abs(diff, spec.primes[j]));
        }
        ordered_json step;
        step["k"] = k + 1;
        step["target"] = spec.targets[k].get_str();
        step["element"] = elements[k].str();
        step["achieved_error"] = achieved.str();
        step["tolerance"] = eps[k].str();
        steps.push_back(std::move(step));
      }
    } else {
      sidon::PerturbationSpec spec;
      spec.count = count;
      spec.targets = targets;
      spec.tolerances = eps;
      const SidonSet out = perturb_rational(form, spec, opts.max_tuples);
      elements = out.elements();
      for (std::size_t k = 0; k < count; ++k) {
        ordered_json step;
        step["k"] = k + 1;
        step["target"] = targets[k].str();
        step["element"] = elements[k].str();
        step["achieved_error"] = (elements[k] - targets[k]).abs().str();
        step["tolerance"] = eps[k].str();
        steps.push_back(std::move(step));
      }
    }
    payload["steps"] = std::move(steps);
    payload["elements"] = strings(elements);
    if (opts.json) {
      std::cout << payload.dump() << "\n";
    } else {
      std::cout << join(elements, " ") << "\n";
    }
    return 0;
  });
}

int cmd_growth(const Options& opts, const std::string& form_text,
               const std::string& set_path, const std::string& ts_csv) {
  return run_guarded(opts, "growth", [&] {
    const LinearForm form = LinearForm::parse(form_text);
    const std::vector<Rational> elems = read_set(set_path);
    const std::vector<Rational> ts = sidon::parse_rational_csv(ts_csv);

    const auto fold = fold_verify(form, elems, opts.max_tuples);
    if (fold.offending) {
      if (opts.json) {
        ordered_json payload;
        payload["ok"] = false;
        payload["command"] = "growth";
        payload["reason"] = "precondition_not_sidon";
        payload["offending_element"] = elems[*fold.offending].str();
        std::cout << payload.dump() << "\n";
      } else {
        std::cout << "set is not Sidon at element "
                  << elems[*fold.offending].str() << "\n";
      }
      return 1;
    }

    const auto report = sidon::check_growth(form, fold.set, ts);
    ordered_json payload;
    payload["ok"] = report.all_pass;
    payload["command"] = "growth";
    payload["form"] = form.text();
    payload["h"] = form.arity();
    payload["C"] = form.abs_sum().str();
    if (!report.all_pass) payload["reason"] = "growth_bound_violated";
    ordered_json samples = ordered_json::array();
    for (const auto& s : report.samples) {
      ordered_json sample;
      sample["t"] = s.t.str();
      sample["count"] = s.count;
      sample["radicand"] = s.radicand.get_str();
      sample["upper"] = s.upper;
      sample["pass"] = s.pass;
      sample["lower_witness"] = s.lower_witness.get_str();
      samples.push_back(std::move(sample));
    }
    payload["samples"] = std::move(samples);
    payload["all_pass"] = report.all_pass;
    if (opts.json) {
      std::cout << payload.dump() << "\n";
    } else {
      for (const auto& s : report.samples) {
        std::cout << "t = " << s.t.str() << ": count " << s.count
                  << ", bound " << s.upper << " (radicand " << s.radicand.get_str()
                  << "), " << (s.pass ? "pass" : "FAIL") << "\n";
      }
      std::cout << (report.all_pass ? "all samples pass" : "violations found")
                << "\n";
    }
    return report.all_pass ? 0 : 1;
  });
}

int cmd_gn(const Options& opts, std::uint32_t n, std::uint32_t cap) {
  return run_guarded(opts, "gn", [&] {
    const auto result = sidon::g_of_n(n, cap);
    const bool within = sidon::moser_corridor(n, result.g);
    if (opts.json) {
      ordered_json payload;
      payload["g"] = result.g;
      payload["witness"] = result.witness;
      payload["n"] = n;
      payload["ok"] = true;
      payload["corridor"]["heuristic"] = true;
      payload["corridor"]["within"] = within;
      std::cout << payload.dump() << "\n";
    } else {
      std::cout << "g(" << n << ") = " << result.g << ", witness {";
      for (std::size_t i = 0; i < result.witness.size(); ++i) {
        std::cout << (i ? "," : "") << result.witness[i];
      }
      std::cout << "}\n";
      std::cout << "corridor check (heuristic): "
                << (within ? "within" : "OUTSIDE") << "\n";
    }
    return 0;
  });
}

int cmd_phi_image(const Options& opts, const std::string& form_text,
                  const std::string& set_path) {
  return run_guarded(opts, "phi-image", [&] {
    const LinearForm form = LinearForm::parse(form_text);
    const std::vector<Rational> elems = read_set(set_path);
    const auto image = phi_image(form, elems, opts.max_tuples);
    std::cout << phi_image_json(image) << "\n";
    return 0;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sidon sets for linear forms with exact rational arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--max-tuples", opts.max_tuples,
                 "enumeration budget in predicted tuples")
      ->envname("SIDON_MAX_TUPLES");
  app.add_flag("--json", opts.json, "emit JSON instead of aligned text");

  std::string form_text;
  std::string set_path;
  std::string mode = "brute";
  std::string first_text = "1";
  std::string seed_path;
  std::string targets_path;
  std::string eps_csv;
  std::string primes_csv;
  std::string ts_csv;
  bool padic = false;
  std::size_t count = 0;
  std::uint32_t n = 0;
  std::uint32_t cap = 20;

  auto* check_n = app.add_subcommand("check-n", "decide property N");
  check_n->add_option("--form", form_text, "coefficients, e.g. \"1,2,-3/4\"")
      ->required();

  auto* verify = app.add_subcommand("verify", "verify a set is Sidon");
  verify->add_option("--form", form_text)->required();
  verify->add_option("--set", set_path, "file with one element per line, or -")
      ->required();
  verify->add_option("--mode", mode, "brute or incremental")
      ->check(CLI::IsMember({"brute", "incremental"}));

  auto* greedy = app.add_subcommand("greedy", "greedy integer Sidon set");
  greedy->add_option("--form", form_text)->required();
  greedy->add_option("--count", count, "number of elements")->required();
  greedy->add_option("--first", first_text, "first element (default 1)");
  greedy->add_option("--seed-file", seed_path, "resume from a stored prefix");

  auto* perturb = app.add_subcommand("perturb", "perturb targets into a Sidon set");
  perturb->add_option("--form", form_text)->required();
  perturb->add_option("--targets", targets_path, "targets file or -")->required();
  perturb->add_option("--eps", eps_csv, "comma-separated tolerances")->required();
  perturb->add_flag("--padic", padic, "p-adic mode");
  perturb->add_option("--primes", primes_csv, "comma-separated primes (p-adic)");

  auto* growth = app.add_subcommand("growth", "counting-function bound report");
  growth->add_option("--form", form_text)->required();
  growth->add_option("--set", set_path)->required();
  growth->add_option("--ts", ts_csv, "comma-separated thresholds")->required();

  auto* gn = app.add_subcommand("gn", "largest distinct-subset-sum subset of {1..n}");
  gn->add_option("--n", n)->required();
  gn->add_option("--cap", cap, "search cap (default 20)");

  auto* phi = app.add_subcommand("phi-image", "export the form image of a set");
  phi->add_option("--form", form_text)->required();
  phi->add_option("--set", set_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (check_n->parsed()) return cmd_check_n(opts, form_text);
  if (verify->parsed()) return cmd_verify(opts, form_text, set_path, mode);
  if (greedy->parsed()) {
    return cmd_greedy(opts, form_text, count, first_text, seed_path);
  }
  if (perturb->parsed()) {
    if (padic && primes_csv.empty()) {
      std::cout << "perturb: --padic needs --primes\n";
      return 2;
    }
    return cmd_perturb(opts, form_text, targets_path, eps_csv, padic, primes_csv);
  }
  if (growth->parsed()) return cmd_growth(opts, form_text, set_path, ts_csv);
  if (gn->parsed()) return cmd_gn(opts, n, cap);
  if (phi->parsed()) return cmd_phi_image(opts, form_text, set_path);
  return 2;
}
