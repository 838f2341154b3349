#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "betti_table.hpp"
#include "bigint.hpp"
#include "errors.hpp"
#include "ideal.hpp"

namespace pathbetti {

// Z-linear combination of the polynomials z |-> binom(z + N - 1 - shift, N - 1),
// evaluated as genuine polynomials in z (numerator product over (N-1)!),
// not with the truncating binomial.  This is the Hilbert polynomial of a
// quotient by an ideal with the given Betti table.
class BinomialCombination {
public:
  BinomialCombination(int ambient, std::vector<std::pair<BigInt, int>> terms)
      : ambient_(ambient) {
    if (ambient < 1) throw std::invalid_argument("ambient dimension must be >= 1");
    std::map<int, BigInt> merged;
    for (auto& [c, shift] : terms) merged[shift] += c;
    for (auto& [shift, c] : merged)
      if (c != 0) terms_.emplace_back(c, shift);
  }

  int ambient() const { return ambient_; }

  // (coefficient, shift) pairs, sorted by shift, zero coefficients dropped.
  const std::vector<std::pair<BigInt, int>>& terms() const { return terms_; }

  BigInt evaluate(long long z) const {
    BigInt r = 0;
    for (const auto& [c, shift] : terms_)
      r += c * falling_product(z + ambient_ - 1 - shift, ambient_ - 1);
    return r;
  }

  // "3*C(z+1,3) - 2*C(z,3)" with C(a,k) the degree-k binomial polynomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [c, shift] : terms_) {
      BigInt a = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (a != 1) os << a << "*";
      long long off = ambient_ - 1 - shift;
      os << "C(z";
      if (off > 0) os << "+" << off;
      if (off < 0) os << off;
      os << "," << ambient_ - 1 << ")";
      first = false;
    }
    return os.str();
  }

private:
  // binom(a, k) as a polynomial in a: a(a-1)..(a-k+1) / k!.
  static BigInt falling_product(long long a, int k) {
    BigInt num = 1;
    for (int r = 0; r < k; ++r) num *= BigInt(a) - r;
    BigInt den = 1;
    for (int r = 2; r <= k; ++r) den *= r;
    return num / den; // exact: k consecutive integers
  }

  int ambient_;
  std::vector<std::pair<BigInt, int>> terms_;
};

// Hilbert polynomial of the ideal itself (as a module) from its Betti
// table, over a ring with `ambient` variables:
// sum over entries of (-1)^i * beta_{i,j} * C(z+N-1-j, N-1).
inline BinomialCombination hilbert_polynomial_from_betti(const BettiTable& tbl,
                                                         int ambient) {
  std::vector<std::pair<BigInt, int>> terms;
  for (const auto& [k, v] : tbl.entries())
    terms.emplace_back(k.first % 2 == 0 ? v : -v, k.second);
  return BinomialCombination(ambient, std::move(terms));
}

namespace detail {

// Number of degree-d monomials NOT in I, by inclusion-exclusion over
// generator subsets, organized as a DFS on (next generator, current lcm)
// with memoization.  `nodes` counts visited states against the budget.
inline BigInt count_outside(const MonomialIdeal& I, int d, long long budget,
                            long long& nodes) {
  struct Frame {
    int idx;
    Monomial lcm;
    bool operator<(const Frame& o) const {
      if (idx != o.idx) return idx < o.idx;
      return lcm < o.lcm;
    }
  };
  const auto& gens = I.generators();
  int N = I.ambient();
  std::map<Frame, BigInt> memo;

  // F(idx, L) = sum over subsets S of generators idx.. of
  // (-1)^|S| * #(degree-d monomials divisible by lcm(L, S)).
  auto rec = [&](auto&& self, int idx, const Monomial& L) -> BigInt {
    if (L.degree() > d) return 0;
    if (idx == static_cast<int>(gens.size()))
      return binom(d - L.degree() + N - 1, N - 1);
    Frame f{idx, L};
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    if (++nodes > budget) throw WorkBudgetExceeded("inclusion-exclusion budget");
    BigInt v = self(self, idx + 1, L) - self(self, idx + 1, Monomial::lcm(L, gens[idx]));
    memo.emplace(std::move(f), v);
    return v;
  };
  return rec(rec, 0, Monomial(N));
}

} // namespace detail

// Hilbert function of the ideal: the number of degree-d monomials
// lying in I, counted exactly (total minus the count outside).
inline BigInt hilbert_function(const MonomialIdeal& I, int d,
                               long long budget = 10'000'000) {
  if (d < 0) return 0;
  if (I.is_zero()) return 0;
  int N = I.ambient();
  if (N == 0) return d == 0 ? 1 : 0; // unit ideal in the trivial ring
  BigInt total = binom(d + N - 1, N - 1);
  if (I.is_unit()) return total;
  long long nodes = 0;
  return total - detail::count_outside(I, d, budget, nodes);
}

// Same count by direct enumeration of the degree-d monomials; a slow
// second route used to cross-check the inclusion-exclusion one.
inline BigInt hilbert_function_by_enumeration(const MonomialIdeal& I, int d,
                                              long long budget = 10'000'000) {
  if (d < 0) return 0;
  if (I.is_zero()) return 0;
  int N = I.ambient();
  if (N == 0) return d == 0 ? 1 : 0; // unit ideal in the trivial ring
  long long visited = 0;
  BigInt count = 0;
  std::vector<int> e(N, 0);
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (++visited > budget) throw WorkBudgetExceeded("enumeration budget");
    if (var == N - 1) {
      e[var] = rem;
      if (I.contains(Monomial(e))) ++count;
      e[var] = 0;
      return;
    }
    for (int k = 0; k <= rem; ++k) {
      e[var] = k;
      self(self, var + 1, rem - k);
    }
    e[var] = 0;
  };
  rec(rec, 0, d);
  return count;
}

} // namespace pathbetti
