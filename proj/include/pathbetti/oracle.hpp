#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "betti_table.hpp"
#include "bigint.hpp"
#include "errors.hpp"
#include "ideal.hpp"

namespace pathbetti {

// Arithmetic in the field with p elements, p a (small) prime.
class PrimeField {
public:
  explicit PrimeField(long long p) : p_(p) {
    if (p < 2) throw std::invalid_argument("characteristic must be a prime");
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("characteristic must be a prime");
  }

  long long characteristic() const { return p_; }
  long long reduce(long long a) const { return ((a % p_) + p_) % p_; }
  long long add(long long a, long long b) const { return (a + b) % p_; }
  long long sub(long long a, long long b) const { return (a - b + p_) % p_; }
  long long mul(long long a, long long b) const { return (a * b) % p_; }

  long long inverse(long long a) const {
    a = reduce(a);
    if (a == 0) throw std::invalid_argument("inverse of zero");
    // Fermat: a^(p-2) mod p.
    long long r = 1, base = a, e = p_ - 2;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

private:
  long long p_;
};

// Abstract simplicial complex on vertices 0..V-1.  Faces are sorted
// vertex lists, grouped by dimension; the empty face has dimension -1.
// The void complex (no faces at all, not even the empty one) is distinct
// from the complex whose only face is the empty face.
class SimplicialComplex {
public:
  explicit SimplicialComplex(int vertex_count)
      : vcount_(vertex_count), by_dim_(vertex_count + 1) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be >= 0");
  }

  static SimplicialComplex void_complex(int vertex_count) {
    return SimplicialComplex(vertex_count);
  }

  int vertex_count() const { return vcount_; }

  bool is_void() const {
    return std::all_of(by_dim_.begin(), by_dim_.end(),
                       [](const auto& fs) { return fs.empty(); });
  }

  // dim of the complex; -2 for the void complex, -1 for {empty face}.
  int dimension() const {
    for (int d = vcount_ - 1; d >= -1; --d)
      if (!faces_of_dimension(d).empty()) return d;
    return -2;
  }

  // d ranges over -1 .. vertex_count-1.
  const std::vector<std::vector<int>>& faces_of_dimension(int d) const {
    if (d < -1 || d >= vcount_)
      throw std::out_of_range("dimension out of range");
    return by_dim_[d + 1];
  }

  // face must be sorted, duplicate-free, with vertices in range.
  void add_face(const std::vector<int>& face) {
    for (size_t k = 0; k < face.size(); ++k) {
      if (face[k] < 0 || face[k] >= vcount_)
        throw std::invalid_argument("vertex out of range");
      if (k > 0 && face[k] <= face[k - 1])
        throw std::invalid_argument("face must be strictly sorted");
    }
    int d = static_cast<int>(face.size()) - 1;
    auto& fs = by_dim_[d + 1];
    if (std::find(fs.begin(), fs.end(), face) == fs.end()) fs.push_back(face);
  }

  bool is_downward_closed() const {
    for (int d = 0; d < vcount_; ++d)
      for (const auto& f : by_dim_[d + 1])
        for (size_t r = 0; r < f.size(); ++r) {
          std::vector<int> sub = f;
          sub.erase(sub.begin() + r);
          const auto& lower = by_dim_[d];
          if (std::find(lower.begin(), lower.end(), sub) == lower.end())
            return false;
        }
    return true;
  }

private:
  int vcount_;
  std::vector<std::vector<std::vector<int>>> by_dim_; // index d+1
};

// Upper Koszul complex of I at the multidegree alpha: the complex on the
// support of alpha whose faces are the squarefree tau <= alpha with
// x^(alpha-tau) in I.  Void exactly when x^alpha is not in I.
inline SimplicialComplex upper_koszul(const MonomialIdeal& I, const Monomial& alpha) {
  if (alpha.ambient() != I.ambient())
    throw std::invalid_argument("monomial in wrong ring");
  std::vector<int> supp = alpha.support();
  int s = static_cast<int>(supp.size());
  if (s > 25) throw WorkBudgetExceeded("multidegree support too large");
  SimplicialComplex K(s);
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    std::vector<int> tau_exp(alpha.ambient(), 0);
    std::vector<int> face;
    for (int v = 0; v < s; ++v)
      if (mask & (1u << v)) {
        tau_exp[supp[v]] = 1;
        face.push_back(v);
      }
    if (I.contains(alpha.exact_quotient(Monomial(std::move(tau_exp)))))
      K.add_face(face);
  }
  return K;
}

namespace detail {

inline long long rank_mod_p(std::vector<std::vector<long long>> M, const PrimeField& F) {
  if (M.empty()) return 0;
  size_t rows = M.size(), cols = M[0].size();
  long long rank = 0;
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < rows; ++c) {
    size_t piv = pr;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[pr], M[piv]);
    long long inv = F.inverse(M[pr][c]);
    for (size_t cc = c; cc < cols; ++cc) M[pr][cc] = F.mul(M[pr][cc], inv);
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || M[r][c] == 0) continue;
      long long f = M[r][c];
      for (size_t cc = c; cc < cols; ++cc)
        M[r][cc] = F.sub(M[r][cc], F.mul(f, M[pr][cc]));
    }
    ++pr;
    ++rank;
  }
  return rank;
}

} // namespace detail

// Dimensions of the reduced homology of C over F, as a vector indexed by
// d+1 for d = -1 .. vertex_count-1 (so entry [0] is the rank in
// dimension -1).  The void complex has no homology at all.
inline std::vector<long long> reduced_homology_ranks(const SimplicialComplex& C,
                                                     const PrimeField& F) {
  int V = C.vertex_count();
  std::vector<long long> out(V + 1, 0);
  if (C.is_void()) return out;

  // boundary_rank[d+1] = rank of the boundary map from d-faces to
  // (d-1)-faces; the map out of the empty face is zero.
  std::vector<long long> brank(V + 2, 0);
  for (int d = 0; d < V; ++d) {
    const auto& high = C.faces_of_dimension(d);
    const auto& low = C.faces_of_dimension(d - 1);
    if (high.empty() || low.empty()) continue;
    std::map<std::vector<int>, size_t> low_index;
    for (size_t r = 0; r < low.size(); ++r) low_index[low[r]] = r;
    std::vector<std::vector<long long>> M(low.size(),
                                          std::vector<long long>(high.size(), 0));
    for (size_t col = 0; col < high.size(); ++col) {
      const auto& f = high[col];
      long long sign = 1;
      for (size_t r = 0; r < f.size(); ++r) {
        std::vector<int> sub = f;
        sub.erase(sub.begin() + r);
        M[low_index.at(sub)][col] = F.reduce(sign);
        sign = -sign;
      }
    }
    brank[d + 1] = detail::rank_mod_p(std::move(M), F);
  }
  for (int d = -1; d < V; ++d) {
    long long faces = static_cast<long long>(C.faces_of_dimension(d).size());
    out[d + 1] = faces - brank[d + 1] - brank[d + 2];
  }
  return out;
}

// Graded Betti numbers of a monomial ideal by direct homology of its
// upper Koszul complexes over F: beta_{i,alpha} is the rank in dimension
// i-1 at multidegree alpha, and the table collects these by total degree.
// Enumerates all alpha below the lcm of the generators; throws
// WorkBudgetExceeded if that box has more than `budget` points.
inline BettiTable betti_table_oracle(const MonomialIdeal& I, const PrimeField& F,
                                     long long budget = 10'000'000) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("oracle needs a proper nonzero ideal");
  int N = I.ambient();
  Monomial L(N);
  for (const auto& g : I.generators()) L = Monomial::lcm(L, g);

  BigInt box = 1;
  for (int v = 0; v < N; ++v) box *= L.exponent(v) + 1;
  if (box > budget) throw WorkBudgetExceeded("multidegree box exceeds budget");

  BettiTable tbl("oracle");
  std::vector<int> a(N, 0);
  while (true) {
    Monomial alpha(a);
    if (I.contains(alpha)) {
      auto ranks = reduced_homology_ranks(upper_koszul(I, alpha), F);
      for (size_t idx = 0; idx < ranks.size(); ++idx)
        if (ranks[idx] > 0)
          tbl.add(static_cast<int>(idx), alpha.degree(), BigInt(ranks[idx]));
    }
    int v = 0;
    while (v < N && a[v] == L.exponent(v)) a[v++] = 0;
    if (v == N) break;
    ++a[v];
  }
  return tbl;
}

// Report for the additivity check below.
struct SplittingReport {
  bool holds = false;
  BettiTable left;   // table of P
  BettiTable right;  // table of I, plus table of J, plus shifted table of their intersection
};

// Checks beta_{i,j}(P) = beta_{i,j}(I) + beta_{i,j}(J) + beta_{i-1,j}(I cap J)
// with all four tables computed by the homology oracle.  P must equal I + J.
inline SplittingReport betti_splitting_check(const MonomialIdeal& P,
                                             const MonomialIdeal& I,
                                             const MonomialIdeal& J,
                                             const PrimeField& F,
                                             long long budget = 10'000'000) {
  if (!(P == sum(I, J)))
    throw std::invalid_argument("splitting check needs P = I + J");
  SplittingReport rep;
  rep.left = betti_table_oracle(P, F, budget);
  rep.right = betti_table_oracle(I, F, budget);
  BettiTable jt = betti_table_oracle(J, F, budget);
  for (const auto& [k, v] : jt.entries()) rep.right.add(k.first, k.second, v);
  BettiTable xt = betti_table_oracle(intersect(I, J), F, budget);
  for (const auto& [k, v] : xt.entries()) rep.right.add(k.first + 1, k.second, v);
  rep.right.label = "sum of parts";
  rep.holds = rep.left == rep.right;
  return rep;
}

// Multiplying an ideal by a variable shifts every Betti number up one
// internal degree and changes nothing else.
inline bool shift_check(const MonomialIdeal& I, int var_index, const PrimeField& F,
                        long long budget = 10'000'000) {
  Monomial xv = Monomial::variable(I.ambient(), var_index);
  BettiTable base = betti_table_oracle(I, F, budget);
  BettiTable shifted = betti_table_oracle(multiply(I, xv), F, budget);
  BettiTable expect;
  for (const auto& [k, v] : base.entries()) expect.add(k.first, k.second + 1, v);
  return shifted == expect;
}

} // namespace pathbetti
