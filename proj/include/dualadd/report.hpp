#pragma once

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dualadd/bigfloat.hpp"
#include "dualadd/errors.hpp"
#include "dualadd/rational.hpp"
#include "dualadd/surd_poly.hpp"
#include "dualadd/unipoly.hpp"

namespace dualadd {

enum class Mode { exact, numeric };
enum class Status { pass, fail, error };

inline std::string_view mode_name(Mode m) { return m == Mode::exact ? "exact" : "numeric"; }

inline std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "?";
}

/// Ordered key/value pairs; insertion order is the display order.
using Parameters = std::vector<std::pair<std::string, std::string>>;

struct VerificationReport {
  std::string identity_id;
  Parameters parameters;
  Mode mode = Mode::exact;
  std::string residual = "0";
  Status status = Status::pass;
  double elapsed = 0.0;  // milliseconds
  std::string note;      // diagnostics, text output and stderr only
};

// --- constructors ---------------------------------------------------------------------

inline VerificationReport make_report(std::string id, Parameters params, Mode mode, std::string residual,
                                      Status status) {
  VerificationReport r;
  r.identity_id = std::move(id);
  r.parameters = std::move(params);
  r.mode = mode;
  r.residual = std::move(residual);
  r.status = status;
  return r;
}

inline VerificationReport exact_report(std::string id, Parameters params, const Rational& residual) {
  VerificationReport r = make_report(std::move(id), std::move(params), Mode::exact, residual.str(),
                       residual.is_zero() ? Status::pass : Status::fail);
  return r;
}

/// Polynomial residuals report their largest coefficient magnitude.
inline VerificationReport exact_report(std::string id, Parameters params, const UniPoly& residual) {
  return exact_report(std::move(id), std::move(params), residual.max_abs_coeff());
}

inline VerificationReport exact_report(std::string id, Parameters params, const SurdPoly& residual) {
  return exact_report(std::move(id), std::move(params), residual.max_abs_coeff());
}

/// Residual text for numeric values: "0" or six significant digits.
inline std::string format_residual(const BigFloat& v) { return v.is_zero() ? "0" : v.str(6); }

inline VerificationReport numeric_report(std::string id, Parameters params, const BigFloat& residual,
                                         const BigFloat& tolerance) {
  VerificationReport r = make_report(std::move(id), std::move(params), Mode::numeric, format_residual(residual),
                       residual <= tolerance ? Status::pass : Status::fail);
  return r;
}

/// Expected-discrepancy check: passes when the known erratum is reproduced.
inline VerificationReport pinned_report(std::string id, Parameters params, Mode mode,
                                        std::string observed, bool reproduced) {
  VerificationReport r = make_report(std::move(id), std::move(params), mode, std::move(observed),
                       reproduced ? Status::pass : Status::fail);
  r.note = reproduced ? "expected discrepancy reproduced" : "expected discrepancy NOT reproduced";
  return r;
}

inline VerificationReport error_report(std::string id, Parameters params, Mode mode, std::string what) {
  VerificationReport r = make_report(std::move(id), std::move(params), mode, "nan", Status::error);
  r.note = std::move(what);
  return r;
}

// --- ordering --------------------------------------------------------------------------

namespace detail {

inline std::optional<Rational> try_rational(const std::string& s) {
  try {
    return Rational::parse(s);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

// Numeric order when both values are rationals, so l=10 sorts after l=9.
inline int compare_values(const std::string& a, const std::string& b) {
  if (a == b) return 0;
  const auto ra = try_rational(a), rb = try_rational(b);
  if (ra && rb && *ra != *rb) return *ra < *rb ? -1 : 1;
  return a < b ? -1 : 1;
}

inline int compare_parameters(const Parameters& a, const Parameters& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first ? -1 : 1;
    if (int c = compare_values(a[i].second, b[i].second); c != 0) return c;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

}  // namespace detail

inline bool report_less(const VerificationReport& a, const VerificationReport& b) {
  if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
  return detail::compare_parameters(a.parameters, b.parameters) < 0;
}

inline void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), report_less);
}

// --- emission --------------------------------------------------------------------------

enum class ReportFormat { text, json_lines };

inline ReportFormat parse_format(std::string_view s) {
  if (s == "text") return ReportFormat::text;
  if (s == "json-lines") return ReportFormat::json_lines;
  throw ConfigError("unknown format '" + std::string(s) + "' (expected text or json-lines)");
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  nlohmann::ordered_json j;
  j["identity_id"] = r.identity_id;
  j["parameters"] = std::move(params);
  j["mode"] = mode_name(r.mode);
  j["residual"] = r.residual;
  j["status"] = status_name(r.status);
  j["elapsed"] = r.elapsed;
  return j;
}

inline std::string parameters_str(const Parameters& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ' ';
    out += k + '=' + v;
  }
  return out;
}

inline void emit_reports(std::ostream& os, const std::vector<VerificationReport>& reports,
                         ReportFormat format) {
  if (format == ReportFormat::json_lines) {
    for (const auto& r : reports) os << to_json(r).dump() << '\n';
    return;
  }
  std::size_t w_id = 0, w_res = 0;
  for (const auto& r : reports) {
    w_id = std::max(w_id, r.identity_id.size());
    w_res = std::max(w_res, r.residual.size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  for (const auto& r : reports) {
    std::string line = pad(r.identity_id, w_id) + "  " + pad(std::string(status_name(r.status)), 5) +
                       "  " + pad(std::string(mode_name(r.mode)), 7) + "  " + pad(r.residual, w_res) +
                       "  " + parameters_str(r.parameters);
    if (r.elapsed > 0) line += "  [" + std::to_string(r.elapsed) + " ms]";
    if (!r.note.empty()) line += "  # " + r.note;
    os << line << '\n';
  }
}

/// 0 if everything passed, 1 if anything failed, 2 if anything errored.
inline int exit_status(const std::vector<VerificationReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.status == Status::error) return 2;
    if (r.status == Status::fail) code = 1;
  }
  return code;
}

}  // namespace dualadd
