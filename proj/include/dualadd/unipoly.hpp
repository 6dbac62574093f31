#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dualadd/rational.hpp"

namespace dualadd {

/// Dense univariate polynomial over Rational, coefficients in ascending degree.
/// The coefficient vector never ends in a zero, so the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }
  static UniPoly monomial(unsigned degree, const Rational& c = Rational(1)) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
  }
  static UniPoly x() { return monomial(1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational operator()(const Rational& at) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Largest |coefficient|; 0 for the zero polynomial.
  Rational max_abs_coeff() const {
    Rational m;
    for (const auto& c : c_)
      if (c.abs() > m) m = c.abs();
    return m;
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  UniPoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly pow(unsigned e) const {
    UniPoly r = constant(1), base = *this;
    while (e) {
      if (e & 1U) r *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return r;
  }

  /// p(x) -> p(-x).
  UniPoly reflected() const {
    UniPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  /// Degree-ascending coefficient list, e.g. "-1/2, 0, 3/2"; "0" for the zero polynomial.
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ", ";
      out += c_[i].str();
    }
    return out;
  }

  std::vector<std::string> serialize() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.str());
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

}  // namespace dualadd
