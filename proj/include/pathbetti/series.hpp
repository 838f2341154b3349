#pragma once

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bigint.hpp"

namespace pathbetti {

// Componentwise truncation box for four-variable power series.
struct SeriesCaps {
  int x, y, z, w;

  SeriesCaps(int x_, int y_, int z_, int w_) : x(x_), y(y_), z(z_), w(w_) {
    if (x < 0 || y < 0 || z < 0 || w < 0)
      throw std::invalid_argument("series caps must be >= 0");
  }

  bool contains(const std::array<int, 4>& e) const {
    return e[0] >= 0 && e[1] >= 0 && e[2] >= 0 && e[3] >= 0 && e[0] <= x &&
           e[1] <= y && e[2] <= z && e[3] <= w;
  }

  bool operator==(const SeriesCaps&) const = default;
};

// Truncated formal power series in Z[[x, y, z, w]]: only exponents inside
// the cap box are tracked, and arithmetic silently drops anything that
// falls outside.  Exponents are never negative, so truncation commutes
// with + and *: the boxed coefficients of a product depend only on the
// boxed coefficients of the factors.
class TruncatedSeries {
public:
  explicit TruncatedSeries(SeriesCaps caps) : caps_(caps) {}

  static TruncatedSeries constant(SeriesCaps caps, const BigInt& v) {
    TruncatedSeries s(caps);
    s.add_term({0, 0, 0, 0}, v);
    return s;
  }

  const SeriesCaps& caps() const { return caps_; }

  // Add coef * x^e0 y^e1 z^e2 w^e3; terms beyond the caps are dropped.
  TruncatedSeries& add_term(const std::array<int, 4>& e, const BigInt& coef) {
    if (coef == 0 || !caps_.contains(e)) return *this;
    BigInt& slot = terms_[e];
    slot += coef;
    if (slot == 0) terms_.erase(e);
    return *this;
  }

  // Coefficient lookup; asking outside the cap box is an error because
  // the series carries no information there.
  BigInt coefficient(const std::array<int, 4>& e) const {
    if (!caps_.contains(e))
      throw std::out_of_range("coefficient outside truncation box");
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  const std::map<std::array<int, 4>, BigInt>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_caps(b);
    TruncatedSeries r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_caps(b);
    TruncatedSeries r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_caps(b);
    TruncatedSeries r(a.caps_);
    for (const auto& [e, c] : a.terms_)
      for (const auto& [f, d] : b.terms_)
        r.add_term({e[0] + f[0], e[1] + f[1], e[2] + f[2], e[3] + f[3]}, c * d);
    return r;
  }

  // Multiplicative inverse; requires constant term 1.  With f = 1 - h
  // the inverse is the geometric series sum of h^k, which terminates
  // inside the box because h has no constant term.
  TruncatedSeries inverse() const {
    if (coefficient({0, 0, 0, 0}) != 1)
      throw std::invalid_argument("inverse needs constant term 1");
    TruncatedSeries h = constant(caps_, 1) - *this; // no constant term
    TruncatedSeries acc = constant(caps_, 1);
    TruncatedSeries pw = constant(caps_, 1);
    int steps = caps_.x + caps_.y + caps_.z + caps_.w;
    for (int k = 0; k < steps; ++k) {
      pw = pw * h;
      if (pw.is_zero()) break;
      acc = acc + pw;
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      BigInt a = abs(c);
      bool bare = e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0;
      if (a != 1 || bare) os << a;
      static const char* names[4] = {"x", "y", "z", "w"};
      bool star = a != 1;
      for (int v = 0; v < 4; ++v) {
        if (e[v] == 0) continue;
        if (star) os << "*";
        os << names[v];
        if (e[v] > 1) os << "^" << e[v];
        star = true;
      }
      first = false;
    }
    return os.str();
  }

private:
  void same_caps(const TruncatedSeries& o) const {
    if (!(caps_ == o.caps_))
      throw std::invalid_argument("series have different truncation boxes");
  }

  SeriesCaps caps_;
  std::map<std::array<int, 4>, BigInt> terms_;
};

} // namespace pathbetti
