#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tlfactor/quadratic.hpp"
#include "tlfactor/rational.hpp"

namespace tlf {

/// Monomial in the loop parameters: sorted (color, exponent) pairs, all
/// exponents positive. The empty vector is the constant monomial.
using Monomial = std::vector<std::pair<char, int>>;

/// Polynomial in the loop parameters delta_c with rational coefficients.
/// All diagrammatic identities are checked at this exact level; numbers only
/// appear when a polynomial is evaluated at a concrete delta assignment.
class LoopPoly {
 public:
  LoopPoly() = default;
  LoopPoly(const Rational& c) {
    if (!c.is_zero()) terms_[Monomial{}] = c;
  }
  static LoopPoly one() { return LoopPoly(Rational(1)); }

  /// The loop variable delta_c itself.
  static LoopPoly delta(char color, int power = 1) {
    LoopPoly p;
    if (power == 0) return one();
    p.terms_[Monomial{{color, power}}] = Rational(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend LoopPoly operator+(const LoopPoly& p, const LoopPoly& q) {
    LoopPoly r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
  }
  friend LoopPoly operator-(const LoopPoly& p, const LoopPoly& q) {
    LoopPoly r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
    return r;
  }
  friend LoopPoly operator*(const LoopPoly& p, const LoopPoly& q) {
    LoopPoly r;
    for (const auto& [m1, c1] : p.terms_)
      for (const auto& [m2, c2] : q.terms_)
        r.add_term(mul_monomials(m1, m2), c1 * c2);
    return r;
  }
  LoopPoly& operator+=(const LoopPoly& o) { return *this = *this + o; }
  LoopPoly& operator-=(const LoopPoly& o) { return *this = *this - o; }
  LoopPoly& operator*=(const LoopPoly& o) { return *this = *this * o; }

  friend bool operator==(const LoopPoly& p, const LoopPoly& q) {
    return p.terms_ == q.terms_;
  }
  friend bool operator!=(const LoopPoly& p, const LoopPoly& q) {
    return !(p == q);
  }

  /// Multiply by delta_color^power in place.
  void mul_delta(char color, int power = 1) {
    if (power == 0 || terms_.empty()) return;
    std::map<Monomial, Rational> out;
    for (const auto& [m, c] : terms_)
      out[mul_monomials(m, Monomial{{color, power}})] = c;
    terms_ = std::move(out);
  }

  template <class Scalar, class Assign>
  Scalar evaluate(const Assign& delta) const {
    Scalar total(0);
    for (const auto& [m, c] : terms_) {
      Scalar t(c.num());
      t = t / Scalar(c.den());
      for (const auto& [color, exp] : m)
        for (int i = 0; i < exp; ++i) t = t * delta.at(color);
      total = total + t;
    }
    return total;
  }

  double eval(const std::map<char, double>& delta) const {
    return evaluate<double>(delta);
  }
  Quad eval_exact(const std::map<char, Quad>& delta) const {
    return evaluate<Quad>(delta);
  }

  /// Deterministic rendering, e.g. "1+2*d_c+d_c*d_d^2".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      std::string mono;
      for (const auto& [color, exp] : m) {
        if (!mono.empty()) mono += "*";
        mono += std::string("d_") + color;
        if (exp > 1) mono += "^" + std::to_string(exp);
      }
      std::string term;
      if (mono.empty()) {
        term = c.to_string();
      } else if (c.is_one()) {
        term = mono;
      } else if (c == Rational(-1)) {
        term = "-" + mono;
      } else {
        term = c.to_string() + "*" + mono;
      }
      if (!s.empty() && term[0] != '-') s += "+";
      s += term;
    }
    return s;
  }

 private:
  static Monomial mul_monomials(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        r.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        r.push_back(b[j++]);
      } else {
        r.emplace_back(a[i].first, a[i].second + b[j].second);
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::map<Monomial, Rational> terms_;
};

}  // namespace tlf
