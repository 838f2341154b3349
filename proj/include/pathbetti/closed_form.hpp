#pragma once

#include <algorithm>
#include <stdexcept>

#include "betti_table.hpp"
#include "bigint.hpp"
#include "path_family.hpp"

namespace pathbetti {

// Closed-form engine.  Every graded Betti number of the t-th power of a
// path ideal (t >= 1) sits in internal degree j = i + tm + (m-1)*ell for
// a unique strand index ell >= 0, and on that strand the value is a
// product of three binomials.

// Value in homological degree i on strand ell.
inline BigInt betti_at_strand(int n, int m, int t, int i, int ell) {
  return binom(t + ell - 1, ell) * binom(n - ell * m, i - ell) *
         binom(n + t - ell * m - i + ell, t - i + 2 * ell);
}

// beta_{i,j} of the t-th power; degrees off every strand give 0.
inline BigInt betti(const PathParams& p, int i, int j) {
  if (p.t < 1) throw std::invalid_argument("betti: power must be >= 1");
  if (i < 0) return 0;
  int k = j - i - p.t * p.m;
  if (k < 0 || k % (p.m - 1) != 0) return 0;
  int ell = k / (p.m - 1);
  if (ell > i) return 0;
  return betti_at_strand(p.n, p.m, p.t, i, ell);
}

// Specialization to the ideal itself (t = 1): the middle binomial times
// binom(n+1-ell*m-i+ell, 2*ell+1-i).
inline BigInt betti_first_power(int n, int m, int i, int ell) {
  return binom(n - ell * m, i - ell) *
         binom(n + 1 - ell * m - i + ell, 2 * ell + 1 - i);
}

// Strand ell = 0 (j = i + tm): binom(n, i) * binom(n+t-i, t-i).
inline BigInt linear_strand(int n, int m, int t, int i) {
  (void)m;
  return binom(n, i) * binom(n + t - i, t - i);
}

// All nonzero entries.  The scan ranges are forced by the three factors:
// binom(n-ell*m, i-ell) needs ell*m <= n and ell <= i <= ell + (n-ell*m),
// and binom(n+t-ell*m-i+ell, t-i+2*ell) needs i <= t + 2*ell; the first
// also caps ell at floor(n/(m+1)) once combined with the third.
inline BettiTable betti_table(const PathParams& p) {
  if (p.t < 1) throw std::invalid_argument("betti_table: power must be >= 1");
  BettiTable tbl(p);
  tbl.label = "closed";
  for (int ell = 0; ell <= p.n / (p.m + 1); ++ell) {
    int hi = std::min(ell + (p.n - ell * p.m), p.t + 2 * ell);
    for (int i = ell; i <= hi; ++i) {
      BigInt v = betti_at_strand(p.n, p.m, p.t, i, ell);
      if (v != 0) tbl.add(i, i + p.t * p.m + (p.m - 1) * ell, v);
    }
  }
  return tbl;
}

// Castelnuovo-Mumford regularity of the t-th power.
inline int regularity(const PathParams& p) {
  if (p.t < 1) throw std::invalid_argument("regularity: power must be >= 1");
  return p.t * p.m + (p.m - 1) * (p.n / (p.m + 1));
}

// Projective dimension of the t-th power, closed form.
inline int projdim(const PathParams& p) {
  if (p.t < 1) throw std::invalid_argument("projdim: power must be >= 1");
  long long q = p.n - p.t + 1;
  long long v = p.t - 1 + floor_div(q, p.m + 1) + ceil_div(q, p.m + 1);
  return static_cast<int>(std::min<long long>(p.n, v));
}

// Projective dimension as a direct scan over strands:
// max over ell of min(t + 2*ell, n - (m-1)*ell).
inline int projdim_scan(const PathParams& p) {
  if (p.t < 1) throw std::invalid_argument("projdim_scan: power must be >= 1");
  int best = 0;
  for (int ell = 0; ell <= p.n / (p.m + 1); ++ell)
    best = std::max(best,
                    std::min(p.t + 2 * ell, p.n - (p.m - 1) * ell));
  return best;
}

} // namespace pathbetti
