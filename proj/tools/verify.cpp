// Command-line harness: run verification suites, evaluate single functions, list identities.
//
//   verify verify <suite> [--format text|json-lines] [--jobs N] [--config FILE] [grid flags]
//   verify eval <gegenbauer|jacobi|hermite|racah|phi|wilson> <args...>
//   verify list
//
// Exit status: 0 all pass, 1 some check failed, 2 usage/configuration/precision error.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dualadd/dualadd.hpp"

namespace {

using namespace dualadd;

// Flag name -> config key. Values are kept as strings and applied after the config file.
const std::vector<std::pair<std::string, std::string>> kGridFlags{
    {"--alphas", "alphas"},
    {"--l-max", "l_max"},
    {"--m-max", "m_max"},
    {"--classical-n-max", "classical_n_max"},
    {"--hermite-l-max", "hermite_l_max"},
    {"--biorthogonality-max", "biorthogonality_max"},
    {"--limit-l-max", "limit_l_max"},
    {"--alpha-powers", "alpha_powers"},
    {"--integral-tolerance", "integral_tolerance"},
    {"--pointwise-tolerance", "pointwise_tolerance"},
    {"--series-tolerance", "series_tolerance"},
    {"--t-max", "t_max"},
    {"--truncation-budget", "truncation_budget"},
};

struct Flags {
  std::string config_path;
  std::map<std::string, std::string> values;  // config key -> flag value
  std::vector<CLI::Option*> options;
  std::vector<std::string> keys;
};

void add_shared_flags(CLI::App& app, Flags& f, bool grid) {
  app.add_option("--config", f.config_path, "key = value configuration file (flags override it)");
  auto add = [&](const std::string& flag, const std::string& key, const std::string& help) {
    f.keys.push_back(key);
    f.options.push_back(app.add_option(flag, f.values[key], help));
  };
  add("--precision-digits", "precision_digits", "working precision in decimal digits (default 60)");
  if (!grid) return;
  add("--format", "format", "text or json-lines");
  add("--jobs", "jobs", "worker threads (default: available parallelism)");
  for (const auto& [flag, key] : kGridFlags) add(flag, key, "grid setting " + key);
  f.keys.push_back("timing");
  f.options.push_back(app.add_flag("--timing", "record wall time per check in elapsed (breaks byte-identical output)"));
}

Config build_config(const Flags& f) {
  Config cfg;
  if (!f.config_path.empty()) apply_config_file(cfg, f.config_path);
  for (std::size_t i = 0; i < f.options.size(); ++i) {
    if (f.options[i]->count() == 0) continue;
    if (f.keys[i] == "timing")
      cfg.timing = true;
    else
      apply_setting(cfg, f.keys[i], f.values.at(f.keys[i]));
  }
  validate_config(cfg);
  return cfg;
}

std::string complex_str(const BigComplex& z, int digits) {
  if (z.im.is_zero()) return z.re.str(digits);
  const bool neg = z.im.sign() < 0;
  return z.re.str(digits) + (neg ? " - " : " + ") + abs(z.im).str(digits) + "i";
}

unsigned to_index(const std::string& s, const char* what) {
  const Rational r = Rational::parse(s);
  if (!r.is_integer() || r.sign() < 0) throw DomainError(std::string(what) + " must be a nonnegative integer");
  return static_cast<unsigned>(r.numerator().get_ui());
}

void require_arity(const std::vector<std::string>& args, std::size_t n, const std::string& usage) {
  if (args.size() != n) throw ConfigError("expected " + std::to_string(n) + " arguments: " + usage);
}

std::string evaluate(const std::string& fn, const std::vector<std::string>& args, const Config& cfg) {
  PrecisionScope scope(cfg.precision_digits);
  const int shown = cfg.precision_digits;
  if (fn == "gegenbauer") {
    require_arity(args, 2, "gegenbauer <n> <alpha>");
    return gegenbauer_r(to_index(args[0], "n"), Rational::parse(args[1])).str();
  }
  if (fn == "jacobi") {
    require_arity(args, 3, "jacobi <n> <alpha> <beta>");
    return jacobi_r(to_index(args[0], "n"), Rational::parse(args[1]), Rational::parse(args[2])).str();
  }
  if (fn == "hermite") {
    require_arity(args, 1, "hermite <n>");
    return hermite(to_index(args[0], "n")).str();
  }
  if (fn == "racah") {
    require_arity(args, 6, "racah <n> <x> <alpha> <beta> <gamma> <delta>");
    const Rational gamma = Rational::parse(args[4]);
    const Rational N = -gamma - 1;
    if (!N.is_integer() || N.sign() <= 0) throw DomainError("gamma must be -N-1 for a positive integer N");
    const auto sys = RacahSystem::with_gamma(Rational::parse(args[2]), Rational::parse(args[3]), gamma,
                                             Rational::parse(args[5]), static_cast<unsigned>(N.numerator().get_ui()));
    return racah_eval(to_index(args[0], "n"), to_index(args[1], "x"), sys).str();
  }
  if (fn == "phi") {
    require_arity(args, 4, "phi <lambda> <alpha> <beta> <t>");
    return complex_str(phi(BigComplex(BigFloat::parse(args[0])), Rational::parse(args[1]),
                           Rational::parse(args[2]), BigFloat::parse(args[3])),
                       shown);
  }
  if (fn == "wilson") {
    require_arity(args, 5, "wilson <n> <x^2> <lambda> <mu> <alpha>");
    const WilsonParams p(BigFloat::parse(args[2]), BigFloat::parse(args[3]), Rational::parse(args[4]));
    return wilson_poly(to_index(args[0], "n"), BigFloat::parse(args[1]), p).str(shown);
  }
  throw ConfigError("unknown function '" + fn + "' (gegenbauer, jacobi, hermite, racah, phi, wilson)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and high-precision verification of Gegenbauer dual addition identities"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  verify->add_option("suite", suite, "dual-addition | classical-addition | racah | hermite | continuous | all")
      ->required();
  Flags vflags;
  add_shared_flags(*verify, vflags, true);

  auto* eval = app.add_subcommand("eval", "evaluate one function and print the value");
  std::string fn;
  std::vector<std::string> fn_args;
  eval->add_option("function", fn, "gegenbauer | jacobi | hermite | racah | phi | wilson")->required();
  eval->add_option("args", fn_args, "function arguments (rationals as p/q)");
  eval->allow_extras(false);
  eval->positionals_at_end(true);
  Flags eflags;
  add_shared_flags(*eval, eflags, false);

  auto* list = app.add_subcommand("list", "list identity ids");

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

  try {
    if (*list) {
      std::size_t w = 0;
      for (const auto& info : identity_catalog()) w = std::max(w, info.id.size());
      for (const auto& info : identity_catalog()) {
        std::string id(info.id);
        id.resize(w, ' ');
        std::cout << id << "  " << info.suite << "  " << info.description << '\n';
      }
      return 0;
    }
    if (*eval) {
      const Config cfg = build_config(eflags);
      std::cout << evaluate(fn, fn_args, cfg) << '\n';
      return 0;
    }
    const Config cfg = build_config(vflags);
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      std::cerr << "unknown suite '" << suite << "'\n\n" << verify->help();
      return 2;
    }
    const auto reports = run_suite(suite, cfg);
    emit_reports(std::cout, reports, parse_format(cfg.format));
    for (const auto& r : reports)
      if (r.status == Status::error)
        std::cerr << "error: " << r.identity_id << " " << parameters_str(r.parameters) << ": " << r.note << '\n';
    return exit_status(reports);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
