#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "tlfactor/rational.hpp"

namespace tlf {

/// Element a + b*sqrt(d) of a real quadratic field Q(sqrt(d)), d square-free.
/// d == 0 marks a plain rational (b is then zero by invariant). Mixing two
/// distinct nonzero radicands is not representable and throws.
class Quad {
 public:
  Quad() : a_(0), b_(0), d_(0) {}
  Quad(long long n) : a_(n), b_(0), d_(0) {}
  Quad(const Rational& a) : a_(a), b_(0), d_(0) {}
  Quad(const Rational& a, const Rational& b, long long d) : a_(a), b_(b), d_(d) {
    if (b_.is_zero()) d_ = 0;
    if (d_ == 0 && !b_.is_zero())
      throw std::domain_error("sqrt coefficient without radicand");
    if (d_ < 0) throw std::domain_error("negative radicand");
  }

  static Quad sqrt_of(long long d) { return Quad(Rational(0), Rational(1), d); }

  const Rational& rat_part() const { return a_; }
  const Rational& irr_part() const { return b_; }
  long long radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  double to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(double(d_));
  }

  /// Sign of a + b*sqrt(d), computed exactly.
  int sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b*sqrt(d) have opposite signs: compare a^2 against b^2*d.
    Rational a2 = a_ * a_;
    Rational b2d = b_ * b_ * Rational(d_);
    if (a2 == b2d) return 0;
    return (a2 > b2d) ? sa : sb;
  }

  Quad operator-() const { return Quad(-a_, -b_, d_); }

  friend Quad operator+(const Quad& x, const Quad& y) {
    long long d = join(x, y);
    return Quad(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend Quad operator-(const Quad& x, const Quad& y) { return x + (-y); }
  friend Quad operator*(const Quad& x, const Quad& y) {
    long long d = join(x, y);
    return Quad(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d),
                x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  friend Quad operator/(const Quad& x, const Quad& y) {
    long long d = join(x, y);
    // Multiply by the conjugate of y.
    Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
    if (norm.is_zero()) {
      if (y.is_zero()) throw std::domain_error("division by zero");
      throw std::domain_error("division by zero-norm element");
    }
    Quad num = x * Quad(y.a_, -y.b_, d);
    return Quad(num.a_ / norm, num.b_ / norm, num.d_ == 0 ? d : num.d_);
  }

  Quad& operator+=(const Quad& o) { return *this = *this + o; }
  Quad& operator-=(const Quad& o) { return *this = *this - o; }
  Quad& operator*=(const Quad& o) { return *this = *this * o; }
  Quad& operator/=(const Quad& o) { return *this = *this / o; }

  friend bool operator==(const Quad& x, const Quad& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
  friend bool operator<(const Quad& x, const Quad& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator<=(const Quad& x, const Quad& y) {
    return (x - y).sign() <= 0;
  }
  friend bool operator>(const Quad& x, const Quad& y) { return y < x; }
  friend bool operator>=(const Quad& x, const Quad& y) { return y <= x; }

  /// Renders e.g. "3/2", "1+2*sqrt(5)", "-1/2+1/2*sqrt(5)".
  std::string to_string() const {
    if (b_.is_zero()) return a_.to_string();
    std::string s;
    if (!a_.is_zero()) s = a_.to_string();
    if (b_.sign() > 0 && !s.empty()) s += "+";
    if (b_ == Rational(-1))
      s += "-";
    else if (!b_.is_one())
      s += b_.to_string() + "*";
    s += "sqrt(" + std::to_string(d_) + ")";
    return s;
  }

  /// Parses expressions over integers, '/', '*', '+', '-', parentheses and
  /// sqrt(n), e.g. "(1+sqrt(5))/2". Returns nullopt on malformed input.
  static std::optional<Quad> parse(const std::string& text);

 private:
  static long long join(const Quad& x, const Quad& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
    throw std::domain_error("mixed quadratic fields: sqrt(" +
                            std::to_string(x.d_) + ") vs sqrt(" +
                            std::to_string(y.d_) + ")");
  }

  Rational a_, b_;
  long long d_;
};

}  // namespace tlf
