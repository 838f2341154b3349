#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "ideal.hpp"
#include "monomial.hpp"

namespace pathbetti {

// Parameter triple for the path-ideal family: the ideal generated by the
// n+1 monomials x_i x_{i+1} .. x_{i+m-1} (i = 1..n+1) in k[x_1..x_{n+m}],
// raised to the power t.
struct PathParams {
  int n;
  int m;
  int t;

  PathParams(int n_, int m_, int t_) : n(n_), m(m_), t(t_) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (t < 0) throw std::invalid_argument("t must be >= 0");
  }

  int ambient() const { return n + m; }

  bool operator==(const PathParams&) const = default;
};

// f_i = x_i x_{i+1} .. x_{i+m-1}, valid for 1 <= i <= n+1.
// The ambient ring defaults to k[x_1..x_{n+m}] but may be enlarged.
inline Monomial path_generator(int n, int m, int i, int ambient = -1) {
  if (m < 2) throw std::invalid_argument("m must be >= 2");
  if (i < 1 || i > n + 1) throw std::out_of_range("generator index out of range");
  if (ambient < 0) ambient = n + m;
  if (ambient < i + m - 1) throw std::invalid_argument("ambient ring too small");
  std::vector<int> e(ambient, 0);
  for (int k = i; k < i + m; ++k) e[k - 1] = 1;
  return Monomial(std::move(e));
}

// (f_1, .., f_{n+1}); for n < 0 this is the zero ideal (the empty family).
inline MonomialIdeal path_ideal(int n, int m, int ambient = -1) {
  if (m < 2) throw std::invalid_argument("m must be >= 2");
  if (ambient < 0) ambient = (n < 0 ? m : n + m);
  if (n < 0) return MonomialIdeal::zero(ambient);
  std::vector<Monomial> g;
  g.reserve(n + 1);
  for (int i = 1; i <= n + 1; ++i) g.push_back(path_generator(n, m, i, ambient));
  return MonomialIdeal(ambient, std::move(g));
}

// g_i = f_i / x_n, defined for the generators divisible by x_n,
// i.e. max(1, n-m+1) <= i <= n.  Requires n >= 1.
inline Monomial reduced_generator(int n, int m, int i, int ambient = -1) {
  if (n < 1) throw std::invalid_argument("reduced generators need n >= 1");
  if (i < std::max(1, n - m + 1) || i > n)
    throw std::out_of_range("generator not divisible by x_n");
  if (ambient < 0) ambient = n + m;
  return path_generator(n, m, i, ambient)
      .exact_quotient(Monomial::variable(ambient, n));
}

// The ideal (g_{n-m+1}, .., g_n) of reduced generators (indices clipped
// at 1), so that (f_1, .., f_n) = (f_1, .., f_{n-m}) + x_n * B.
inline MonomialIdeal reduced_tail_ideal(int n, int m, int ambient = -1) {
  if (n < 1) throw std::invalid_argument("reduced tail ideal needs n >= 1");
  if (ambient < 0) ambient = n + m;
  std::vector<Monomial> g;
  for (int i = std::max(1, n - m + 1); i <= n; ++i)
    g.push_back(reduced_generator(n, m, i, ambient));
  return MonomialIdeal(ambient, std::move(g));
}

} // namespace pathbetti
