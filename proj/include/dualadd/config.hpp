#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "dualadd/bigfloat.hpp"
#include "dualadd/errors.hpp"
#include "dualadd/rational.hpp"

namespace dualadd {

/// Grid and precision settings shared by all suites.
///
/// File format: one `key = value` per line, `#` starts a comment, blank lines ignored.
/// Keys use underscores (l_max); the matching flags use dashes (--l-max). Flags win.
/// Tolerances left unset follow the working precision P:
///   pointwise 10^-(P-10), integral 10^-floor(25P/60), series 10^-floor(P/3), oracle 10^-(P-5)
/// which gives 1e-50, 1e-25, 1e-20, 1e-55 at the default P = 60.
struct Config {
  std::vector<Rational> alphas{Rational(0), Rational(1, 2), Rational(1), Rational(7, 3)};
  unsigned l_max = 8;
  unsigned m_max = 8;
  unsigned classical_n_max = 12;    // constructor cross-checks and orthogonality
  unsigned hermite_l_max = 12;      // exact Hermite identities
  unsigned biorthogonality_max = 20;
  unsigned limit_l_max = 4;         // index bound for the large-alpha limits
  std::vector<int> alpha_powers{4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
  int precision_digits = 60;
  std::optional<std::string> integral_tolerance, pointwise_tolerance, series_tolerance;
  std::string t_max = "0.2";
  unsigned truncation_budget = 60;
  unsigned jobs = default_jobs();
  bool timing = false;
  std::string format = "text";

  static unsigned default_jobs() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
  }

  // Tolerances as BigFloat at the calling thread's working precision.
  BigFloat pointwise_tol() const { return tol(pointwise_tolerance, -(precision_digits - 10)); }
  BigFloat integral_tol() const { return tol(integral_tolerance, -(25 * precision_digits / 60)); }
  BigFloat series_tol() const { return tol(series_tolerance, -(precision_digits / 3)); }
  BigFloat oracle_tol() const { return pow10(-(precision_digits - 5)); }
  BigFloat t_max_value() const { return BigFloat::parse(t_max); }

 private:
  static BigFloat tol(const std::optional<std::string>& s, long auto_exponent) {
    return s ? BigFloat::parse(*s) : pow10(auto_exponent);
  }
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(trim(s.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline long parse_integer(std::string_view key, const std::string& v) {
  try {
    const Rational r = Rational::parse(v);
    if (!r.is_integer()) throw DomainError("not an integer");
    return r.numerator().get_si();
  } catch (const DomainError&) {
    throw ConfigError(std::string(key) + ": expected an integer, got '" + v + "'");
  }
}

inline unsigned parse_count(std::string_view key, const std::string& v, long lo, long hi) {
  const long n = parse_integer(key, v);
  if (n < lo || n > hi)
    throw ConfigError(std::string(key) + ": " + v + " outside [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  return static_cast<unsigned>(n);
}

inline std::string parse_positive_decimal(std::string_view key, const std::string& v) {
  try {
    PrecisionScope scope(30);
    if (BigFloat::parse(v).sign() <= 0) throw DomainError("not positive");
  } catch (const DomainError&) {
    throw ConfigError(std::string(key) + ": expected a positive decimal number, got '" + v + "'");
  }
  return v;
}

// "4..16" or "4,5,6"
inline std::vector<int> parse_powers(std::string_view key, const std::string& v) {
  std::vector<int> out;
  if (const auto dots = v.find(".."); dots != std::string::npos) {
    const long lo = parse_integer(key, trim(v.substr(0, dots)));
    const long hi = parse_integer(key, trim(v.substr(dots + 2)));
    for (long s = lo; s <= hi; ++s) out.push_back(static_cast<int>(s));
  } else {
    for (const auto& item : split_list(v)) out.push_back(static_cast<int>(parse_integer(key, item)));
  }
  if (out.size() < 2) throw ConfigError(std::string(key) + ": need at least two powers");
  for (std::size_t i = 0; i + 1 < out.size(); ++i)
    if (out[i] >= out[i + 1]) throw ConfigError(std::string(key) + ": powers must increase");
  for (int s : out)
    if (s < 0 || s > 64) throw ConfigError(std::string(key) + ": powers must lie in [0, 64]");
  return out;
}

inline bool parse_bool(std::string_view key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError(std::string(key) + ": expected true or false, got '" + v + "'");
}

}  // namespace detail

/// Sets one key. Accepts both `l_max` and `l-max` spellings.
inline void apply_setting(Config& c, std::string key, const std::string& value) {
  for (auto& ch : key)
    if (ch == '-') ch = '_';
  using namespace detail;
  if (key == "alphas") {
    std::vector<Rational> as;
    for (const auto& item : split_list(value)) {
      try {
        as.push_back(Rational::parse(item));
      } catch (const DomainError&) {
        throw ConfigError("alphas: malformed rational '" + item + "'");
      }
      if (as.back() <= Rational(-1, 2)) throw ConfigError("alphas: every alpha must exceed -1/2");
    }
    c.alphas = std::move(as);
  } else if (key == "l_max") {
    c.l_max = parse_count(key, value, 0, 40);
  } else if (key == "m_max") {
    c.m_max = parse_count(key, value, 0, 40);
  } else if (key == "classical_n_max") {
    c.classical_n_max = parse_count(key, value, 0, 60);
  } else if (key == "hermite_l_max") {
    c.hermite_l_max = parse_count(key, value, 0, 60);
  } else if (key == "biorthogonality_max") {
    c.biorthogonality_max = parse_count(key, value, 0, 200);
  } else if (key == "limit_l_max") {
    c.limit_l_max = parse_count(key, value, 0, 12);
  } else if (key == "alpha_powers") {
    c.alpha_powers = parse_powers(key, value);
  } else if (key == "precision_digits") {
    c.precision_digits = static_cast<int>(parse_count(key, value, 20, 2000));
  } else if (key == "integral_tolerance") {
    c.integral_tolerance = parse_positive_decimal(key, value);
  } else if (key == "pointwise_tolerance") {
    c.pointwise_tolerance = parse_positive_decimal(key, value);
  } else if (key == "series_tolerance") {
    c.series_tolerance = parse_positive_decimal(key, value);
  } else if (key == "t_max") {
    c.t_max = parse_positive_decimal(key, value);
  } else if (key == "truncation_budget") {
    c.truncation_budget = parse_count(key, value, 2, 10000);
  } else if (key == "jobs") {
    c.jobs = parse_count(key, value, 1, 1024);
  } else if (key == "timing") {
    c.timing = parse_bool(key, value);
  } else if (key == "format") {
    if (value != "text" && value != "json-lines")
      throw ConfigError("format: expected text or json-lines, got '" + value + "'");
    c.format = value;
  } else {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

inline void apply_config_text(Config& c, std::string_view text, std::string_view origin = "config") {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = detail::trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(std::string(origin) + ":" + std::to_string(lineno) + ": expected key = value");
    try {
      apply_setting(c, detail::trim(t.substr(0, eq)), detail::trim(t.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError(std::string(origin) + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

inline void apply_config_file(Config& c, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  apply_config_text(c, ss.str(), path);
}

/// Explicit tolerances tighter than the working precision can deliver are rejected.
inline void validate_config(const Config& c) {
  if (c.alphas.empty()) throw ConfigError("alphas: need at least one value");
  PrecisionScope scope(c.precision_digits);
  const BigFloat floor = pow10(-(c.precision_digits - 5));
  auto check = [&](const std::optional<std::string>& s, const char* key) {
    if (s && BigFloat::parse(*s) < floor)
      throw ConfigError(std::string(key) + " " + *s + " is below what " +
                        std::to_string(c.precision_digits) + " digits can resolve");
  };
  check(c.integral_tolerance, "integral_tolerance");
  check(c.pointwise_tolerance, "pointwise_tolerance");
  check(c.series_tolerance, "series_tolerance");
}

}  // namespace dualadd
