#include "tlfactor/quadratic.hpp"

#include <cctype>

namespace tlf {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  bool ok = true;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Quad expr() {
    Quad v = term();
    for (;;) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  Quad term() {
    Quad v = factor();
    for (;;) {
      if (eat('*'))
        v *= factor();
      else if (eat('/')) {
        Quad w = factor();
        if (!ok) return v;
        if (w.is_zero()) {
          ok = false;
          return v;
        }
        v /= w;
      } else
        return v;
    }
  }

  Quad factor() {
    skip();
    if (eat('-')) return -factor();
    if (eat('(')) {
      Quad v = expr();
      if (!eat(')')) ok = false;
      return v;
    }
    if (s.compare(pos, 4, "sqrt") == 0) {
      pos += 4;
      if (!eat('(')) {
        ok = false;
        return Quad();
      }
      long long d = integer();
      if (!eat(')') || d < 0) {
        ok = false;
        return Quad();
      }
      // Pull out square factors so the radicand is canonical.
      long long sq = 1;
      for (long long p = 2; p * p <= d; ++p) {
        while (d % (p * p) == 0) {
          d /= p * p;
          sq *= p;
        }
      }
      if (d == 1) return Quad(Rational(sq));
      return Quad(Rational(0), Rational(sq), d);
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      return Quad(Rational(integer()));
    ok = false;
    return Quad();
  }

  long long integer() {
    skip();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) {
      ok = false;
      return 0;
    }
    return std::stoll(s.substr(start, pos - start));
  }
};

}  // namespace

std::optional<Quad> Quad::parse(const std::string& text) {
  Parser p{text};
  try {
    Quad v = p.expr();
    p.skip();
    if (!p.ok || p.pos != text.size()) return std::nullopt;
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace tlf
