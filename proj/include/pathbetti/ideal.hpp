#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace pathbetti {

// Monomial ideal held by its unique minimal generating set, kept in a
// canonical order (descending lexicographic on exponent vectors, so the
// path generators f_1, f_2, ... appear in index order) and equal ideals
// compare equal structurally.  The zero ideal has no generators; the
// unit ideal is generated by 1.
class MonomialIdeal {
public:
  explicit MonomialIdeal(int ambient) : ambient_(check_ambient(ambient)) {}

  MonomialIdeal(int ambient, std::vector<Monomial> gens)
      : ambient_(check_ambient(ambient)) {
    for (const auto& g : gens)
      if (g.ambient() != ambient_)
        throw std::invalid_argument("generator in wrong ring");
    gens_ = minimalize(std::move(gens));
  }

  static MonomialIdeal zero(int ambient) { return MonomialIdeal(ambient); }

  static MonomialIdeal unit(int ambient) {
    return MonomialIdeal(ambient, {Monomial(ambient)});
  }

  int ambient() const { return ambient_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& u) const {
    if (u.ambient() != ambient_)
      throw std::invalid_argument("monomial in wrong ring");
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(u); });
  }

  // Union of the generators' supports, 0-based.
  std::vector<int> support() const {
    std::set<int> s;
    for (const auto& g : gens_)
      for (int v : g.support()) s.insert(v);
    return {s.begin(), s.end()};
  }

  bool operator==(const MonomialIdeal& o) const {
    return ambient_ == o.ambient_ && gens_ == o.gens_;
  }

  friend MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    a.same_ring(b);
    std::vector<Monomial> g = a.gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return MonomialIdeal(a.ambient_, std::move(g));
  }

  friend MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    a.same_ring(b);
    std::vector<Monomial> g;
    g.reserve(a.gens_.size() * b.gens_.size());
    for (const auto& u : a.gens_)
      for (const auto& v : b.gens_) g.push_back(u * v);
    return MonomialIdeal(a.ambient_, std::move(g));
  }

  // I^t; power(I, 0) is the unit ideal (even for I = 0).
  friend MonomialIdeal power(const MonomialIdeal& a, int t) {
    if (t < 0) throw std::invalid_argument("ideal power must be >= 0");
    MonomialIdeal r = unit(a.ambient_);
    for (int k = 0; k < t; ++k) r = product(r, a);
    return r;
  }

  // I : f = (g / gcd(g, f) : g generator of I).
  friend MonomialIdeal colon(const MonomialIdeal& a, const Monomial& f) {
    if (f.ambient() != a.ambient_)
      throw std::invalid_argument("monomial in wrong ring");
    std::vector<Monomial> g;
    g.reserve(a.gens_.size());
    for (const auto& u : a.gens_) g.push_back(u.quotient_by_gcd(f));
    return MonomialIdeal(a.ambient_, std::move(g));
  }

  friend MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    a.same_ring(b);
    std::vector<Monomial> g;
    g.reserve(a.gens_.size() * b.gens_.size());
    for (const auto& u : a.gens_)
      for (const auto& v : b.gens_) g.push_back(Monomial::lcm(u, v));
    return MonomialIdeal(a.ambient_, std::move(g));
  }

  // f * I.
  friend MonomialIdeal multiply(const MonomialIdeal& a, const Monomial& f) {
    if (f.ambient() != a.ambient_)
      throw std::invalid_argument("monomial in wrong ring");
    std::vector<Monomial> g;
    g.reserve(a.gens_.size());
    for (const auto& u : a.gens_) g.push_back(u * f);
    return MonomialIdeal(a.ambient_, std::move(g));
  }

  // "x1*x2, x2*x3"; the zero ideal prints as "0".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t k = 0; k < gens_.size(); ++k) {
      if (k) os << ", ";
      os << gens_[k].to_string();
    }
    return os.str();
  }

private:
  static int check_ambient(int n) {
    if (n < 0) throw std::invalid_argument("ambient dimension must be >= 0");
    return n;
  }
  void same_ring(const MonomialIdeal& o) const {
    if (ambient_ != o.ambient_)
      throw std::invalid_argument("ideals live in different rings");
  }

  static bool deg_lex_less(const Monomial& u, const Monomial& v) {
    if (u.degree() != v.degree()) return u.degree() < v.degree();
    return u < v;
  }

  static std::vector<Monomial> minimalize(std::vector<Monomial> g) {
    // Prune in degree order so any divisor is seen before its multiples;
    // distinct monomials of equal degree cannot divide one another, so
    // only the strictly-lower-degree prefix needs checking.  Store in
    // canonical (descending lexicographic) order.
    std::sort(g.begin(), g.end(), deg_lex_less);
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<Monomial> out;
    size_t lower = 0;
    int last_deg = -1;
    for (const auto& u : g) {
      if (u.degree() != last_deg) {
        lower = out.size();
        last_deg = u.degree();
      }
      bool redundant =
          std::any_of(out.begin(), out.begin() + lower,
                      [&](const Monomial& v) { return v.divides(u); });
      if (!redundant) out.push_back(u);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& u, const Monomial& v) {
      return v < u;
    });
    return out;
  }

  int ambient_;
  std::vector<Monomial> gens_;
};

} // namespace pathbetti
