#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dualadd/rational.hpp"
#include "dualadd/unipoly.hpp"

namespace dualadd {

/// x^x y^y t^t u^u v^v with u, v in {0, 1} after reduction.
struct Monomial {
  unsigned x = 0, y = 0, t = 0;
  unsigned u = 0, v = 0;

  unsigned total_degree() const { return x + y + t + u + v; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string str() const {
    std::string out;
    auto put = [&](char name, unsigned e) {
      if (e == 0) return;
      if (!out.empty()) out += '*';
      out += name;
      if (e > 1) out += '^' + std::to_string(e);
    };
    put('x', x);
    put('y', y);
    put('t', t);
    put('u', u);
    put('v', v);
    return out.empty() ? "1" : out;
  }
};

/// Graded lexicographic order in (x, y, t, u, v).
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return std::tie(a.x, a.y, a.t, a.u, a.v) < std::tie(b.x, b.y, b.t, b.u, b.v);
  }
};

/// Exact values for the surd-ring variables. u and v must satisfy
/// u^2 = 1 - x^2 and v^2 = 1 - y^2 whenever both members of a pair are bound.
struct SurdBindings {
  std::optional<Rational> x, y, t, u, v;
};

/// Element of Q[x, y, t, u, v] / (u^2 - 1 + x^2, v^2 - 1 + y^2) in canonical form:
/// a map from reduced monomials (u, v exponents in {0, 1}) to nonzero coefficients.
class SurdPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  SurdPoly() = default;

  static SurdPoly constant(const Rational& c) {
    SurdPoly p;
    p.add_term(Monomial{}, c);
    return p;
  }
  static SurdPoly monomial(const Monomial& m, const Rational& c = Rational(1)) {
    SurdPoly p;
    p.add_term(m, c);
    return p;
  }
  static SurdPoly var_x() { return monomial(Monomial{.x = 1}); }
  static SurdPoly var_y() { return monomial(Monomial{.y = 1}); }
  static SurdPoly var_t() { return monomial(Monomial{.t = 1}); }
  static SurdPoly var_u() { return monomial(Monomial{.u = 1}); }
  static SurdPoly var_v() { return monomial(Monomial{.v = 1}); }

  enum class Var { x, y, t };

  /// Embeds a univariate polynomial in the chosen variable.
  static SurdPoly from_uni(const UniPoly& p, Var var) {
    SurdPoly r;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
      Monomial m;
      auto e = static_cast<unsigned>(k);
      switch (var) {
        case Var::x: m.x = e; break;
        case Var::y: m.y = e; break;
        case Var::t: m.t = e; break;
      }
      r.add_term(m, p.coefficients()[k]);
    }
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const SurdPoly&, const SurdPoly&) = default;

  SurdPoly operator-() const {
    SurdPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  SurdPoly& operator+=(const SurdPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SurdPoly& operator-=(const SurdPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  SurdPoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend SurdPoly operator+(SurdPoly a, const SurdPoly& b) { return a += b; }
  friend SurdPoly operator-(SurdPoly a, const SurdPoly& b) { return a -= b; }
  friend SurdPoly operator*(SurdPoly a, const Rational& s) { return a *= s; }
  friend SurdPoly operator*(const Rational& s, SurdPoly a) { return a *= s; }

  friend SurdPoly operator*(const SurdPoly& a, const SurdPoly& b) {
    SurdPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m{ma.x + mb.x, ma.y + mb.y, ma.t + mb.t, ma.u + mb.u, ma.v + mb.v};
        r.add_reduced(m, ca * cb);
      }
    return r;
  }
  SurdPoly& operator*=(const SurdPoly& o) { return *this = *this * o; }

  SurdPoly pow(unsigned e) const {
    SurdPoly r = constant(1), base = *this;
    while (e) {
      if (e & 1U) r *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return r;
  }

  /// Replaces t by a rational value.
  SurdPoly substitute_t(const Rational& value) const {
    SurdPoly r;
    for (const auto& [m, c] : terms_) {
      Monomial k = m;
      k.t = 0;
      r.add_term(k, c * dualadd::pow(value, m.t));
    }
    return r;
  }

  /// Integrates out t against a measure given by its moments: t^k -> moment(k).
  template <class MomentFn>
  SurdPoly integrate_t(MomentFn&& moment) const {
    SurdPoly r;
    for (const auto& [m, c] : terms_) {
      Rational mk = moment(m.t);
      if (mk.is_zero()) continue;
      Monomial k = m;
      k.t = 0;
      r.add_term(k, c * mk);
    }
    return r;
  }

  /// Substitutes y -> x and v -> u (the diagonal x = y), re-reducing u^2.
  SurdPoly diagonal() const {
    SurdPoly r;
    for (const auto& [m, c] : terms_) r.add_reduced(Monomial{m.x + m.y, 0, m.t, m.u + m.v, 0}, c);
    return r;
  }

  /// Exact evaluation. Throws RelationViolationError if a bound (x,u) or (y,v)
  /// pair violates its quotient relation, DomainError if a used variable is unbound.
  Rational evaluate(const SurdBindings& b) const {
    auto check = [](const std::optional<Rational>& base, const std::optional<Rational>& root,
                    const char* what) {
      if (base && root && (*root) * (*root) != Rational(1) - (*base) * (*base))
        throw RelationViolationError(std::string("binding violates ") + what);
    };
    check(b.x, b.u, "u^2 = 1 - x^2");
    check(b.y, b.v, "v^2 = 1 - y^2");
    auto val = [](const std::optional<Rational>& var, unsigned e, char name) {
      if (e == 0) return Rational(1);
      if (!var) throw DomainError(std::string("unbound surd variable '") + name + "'");
      return dualadd::pow(*var, e);
    };
    Rational acc;
    for (const auto& [m, c] : terms_)
      acc += c * val(b.x, m.x, 'x') * val(b.y, m.y, 'y') * val(b.t, m.t, 't') *
             val(b.u, m.u, 'u') * val(b.v, m.v, 'v');
    return acc;
  }

  /// The polynomial as a univariate polynomial in x, if it only involves x.
  std::optional<UniPoly> as_uni_x() const {
    std::vector<Rational> c;
    for (const auto& [m, coeff] : terms_) {
      if (m.y || m.t || m.u || m.v) return std::nullopt;
      if (c.size() <= m.x) c.resize(m.x + 1);
      c[m.x] = coeff;
    }
    return UniPoly(std::move(c));
  }

  /// Largest |coefficient|; 0 for the zero element.
  Rational max_abs_coeff() const {
    Rational best;
    for (const auto& [m, c] : terms_)
      if (c.abs() > best) best = c.abs();
    return best;
  }

  /// (monomial, "p/q") pairs in graded-lex order.
  std::vector<std::pair<std::string, std::string>> serialize() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m.str(), c.str());
    return out;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += "(" + c.str() + ")";
      if (m.total_degree()) out += "*" + m.str();
    }
    return out;
  }

 private:
  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Applies u^2 -> 1 - x^2 and v^2 -> 1 - y^2 until exponents are at most 1.
  void add_reduced(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.u >= 2) {
      Monomial a = m, b = m;
      a.u -= 2;
      b.u -= 2;
      b.x += 2;
      add_reduced(a, c);
      add_reduced(b, -c);
      return;
    }
    if (m.v >= 2) {
      Monomial a = m, b = m;
      a.v -= 2;
      b.v -= 2;
      b.y += 2;
      add_reduced(a, c);
      add_reduced(b, -c);
      return;
    }
    add_term(m, c);
  }

  Terms terms_;
};

inline SurdPoly surd_mul(const SurdPoly& p, const SurdPoly& q) { return p * q; }

inline Rational surd_substitute(const SurdPoly& p, const SurdBindings& b) { return p.evaluate(b); }

/// p(arg) by Horner's rule in the surd ring.
inline SurdPoly compose(const UniPoly& p, const SurdPoly& arg) {
  SurdPoly acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * arg + SurdPoly::constant(*it);
  return acc;
}

/// Rational point on the unit circle: x = (1-s^2)/(1+s^2), u = 2s/(1+s^2).
struct PythagoreanPoint {
  Rational x, u;
};

inline PythagoreanPoint pythagorean_point(const Rational& s) {
  Rational d = Rational(1) + s * s;
  return {(Rational(1) - s * s) / d, Rational(2) * s / d};
}

}  // namespace dualadd
