#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathbetti {

// Monomial in a fixed polynomial ring k[x_1..x_N], stored as an exponent
// vector.  Variables are 1-based in the text form, 0-based in the API.
class Monomial {
public:
  explicit Monomial(int ambient) : exps_(check_ambient(ambient), 0) {}

  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw std::invalid_argument("monomial exponent must be >= 0");
  }

  // x_{index} with a 1-based index.
  static Monomial variable(int ambient, int index) {
    Monomial u(ambient);
    if (index < 1 || index > ambient)
      throw std::out_of_range("variable index out of range");
    u.exps_[index - 1] = 1;
    return u;
  }

  int ambient() const { return static_cast<int>(exps_.size()); }

  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  int exponent(int var0) const { return exps_.at(var0); } // 0-based

  const std::vector<int>& exponents() const { return exps_; }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }

  bool divides(const Monomial& v) const {
    same_ring(v);
    for (size_t k = 0; k < exps_.size(); ++k)
      if (exps_[k] > v.exps_[k]) return false;
    return true;
  }

  Monomial operator*(const Monomial& v) const {
    same_ring(v);
    Monomial r = *this;
    for (size_t k = 0; k < exps_.size(); ++k) r.exps_[k] += v.exps_[k];
    return r;
  }

  Monomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("monomial power must be >= 0");
    Monomial r(ambient());
    for (size_t k = 0; k < exps_.size(); ++k) r.exps_[k] = exps_[k] * e;
    return r;
  }

  // this / v, defined only when v divides this.
  Monomial exact_quotient(const Monomial& v) const {
    if (!v.divides(*this))
      throw std::invalid_argument("exact_quotient: not divisible");
    Monomial r = *this;
    for (size_t k = 0; k < exps_.size(); ++k) r.exps_[k] -= v.exps_[k];
    return r;
  }

  // this / gcd(this, v); always defined.
  Monomial quotient_by_gcd(const Monomial& v) const {
    same_ring(v);
    Monomial r = *this;
    for (size_t k = 0; k < exps_.size(); ++k)
      r.exps_[k] -= std::min(exps_[k], v.exps_[k]);
    return r;
  }

  static Monomial lcm(const Monomial& u, const Monomial& v) {
    u.same_ring(v);
    Monomial r = u;
    for (size_t k = 0; k < r.exps_.size(); ++k)
      r.exps_[k] = std::max(u.exps_[k], v.exps_[k]);
    return r;
  }

  static Monomial gcd(const Monomial& u, const Monomial& v) {
    u.same_ring(v);
    Monomial r = u;
    for (size_t k = 0; k < r.exps_.size(); ++k)
      r.exps_[k] = std::min(u.exps_[k], v.exps_[k]);
    return r;
  }

  // 0-based indices of variables with positive exponent.
  std::vector<int> support() const {
    std::vector<int> s;
    for (size_t k = 0; k < exps_.size(); ++k)
      if (exps_[k] > 0) s.push_back(static_cast<int>(k));
    return s;
  }

  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
  }

  // "x1^2*x3" style; the unit monomial prints as "1".
  std::string to_string() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < exps_.size(); ++k) {
      if (exps_[k] == 0) continue;
      if (!first) os << '*';
      os << 'x' << (k + 1);
      if (exps_[k] > 1) os << '^' << exps_[k];
      first = false;
    }
    return os.str();
  }

  // Lexicographic order on exponent vectors.
  auto operator<=>(const Monomial&) const = default;

private:
  static int check_ambient(int n) {
    if (n < 0) throw std::invalid_argument("ambient dimension must be >= 0");
    return n;
  }
  void same_ring(const Monomial& v) const {
    if (exps_.size() != v.exps_.size())
      throw std::invalid_argument("monomials live in different rings");
  }

  std::vector<int> exps_;
};

} // namespace pathbetti
