#pragma once

#include "betti_table.hpp"
#include "path_family.hpp"
#include "series.hpp"

namespace pathbetti {

// Generating-function engine.  The four-variable series
//
//   Psi = (1 - x*U) / ((1 - x) * (1 - x*U - y*(1 + x*z))),
//   U   = 1 + x^m * z * w^(m-1) * (1 + z),
//
// collects every graded Betti number of every power at once:
// [x^n y^t z^i w^k] Psi is the Betti number in homological degree i at
// offset k above the linear strand of the t-th power, for the path ideal
// on n+1 generators.

namespace detail {

// 1 - x*U = 1 - x - x^(m+1) z w^(m-1) - x^(m+1) z^2 w^(m-1).
inline TruncatedSeries psi_numerator(int m, const SeriesCaps& caps) {
  TruncatedSeries n = TruncatedSeries::constant(caps, 1);
  n.add_term({1, 0, 0, 0}, -1);
  n.add_term({m + 1, 0, 1, m - 1}, -1);
  n.add_term({m + 1, 0, 2, m - 1}, -1);
  return n;
}

// (1 - x) * (1 - x*U - y - x*y*z).
inline TruncatedSeries psi_denominator(int m, const SeriesCaps& caps) {
  TruncatedSeries inner = psi_numerator(m, caps);
  inner.add_term({0, 1, 0, 0}, -1);
  inner.add_term({1, 1, 1, 0}, -1);
  TruncatedSeries one_minus_x = TruncatedSeries::constant(caps, 1);
  one_minus_x.add_term({1, 0, 0, 0}, -1);
  return one_minus_x * inner;
}

} // namespace detail

inline TruncatedSeries build_psi(int m, const SeriesCaps& caps) {
  if (m < 2) throw std::invalid_argument("m must be >= 2");
  return detail::psi_numerator(m, caps) * detail::psi_denominator(m, caps).inverse();
}

// Residual of the functional equation
//   (1 - x*U - y*(1 + x*z)) * Psi - (1 - x*U) / (1 - x),
// zero on the whole cap box exactly when Psi satisfies it there.
inline TruncatedSeries psi_functional_residual(int m, const TruncatedSeries& psi) {
  const SeriesCaps& caps = psi.caps();
  TruncatedSeries inner = detail::psi_numerator(m, caps);
  inner.add_term({0, 1, 0, 0}, -1);
  inner.add_term({1, 1, 1, 0}, -1);
  TruncatedSeries one_minus_x = TruncatedSeries::constant(caps, 1);
  one_minus_x.add_term({1, 0, 0, 0}, -1);
  return inner * psi - detail::psi_numerator(m, caps) * one_minus_x.inverse();
}

// Division round-trip: denominator * Psi - numerator.  Truncation
// commutes with the product, so a zero residual certifies the defining
// relation on the whole cap box.
inline TruncatedSeries psi_division_residual(int m, const TruncatedSeries& psi) {
  return detail::psi_denominator(m, psi.caps()) * psi -
         detail::psi_numerator(m, psi.caps());
}

// Cap box guaranteed to contain every nonzero coefficient at (n, t).
// Expanding the denominator geometrically, each term is a product of
// factors x, y, x*y*z, x^(m+1)*z*w^(m-1), x^(m+1)*z^2*w^(m-1) (times the
// numerator, whose terms have the same shape), so a w-degree of k costs
// x-degree (m+1)*k/(m-1) and the z-degree is at most t plus twice the
// number of w-factors.
inline SeriesCaps series_caps_for(const PathParams& p) {
  int blocks = p.n / (p.m + 1);
  return SeriesCaps(p.n, p.t, p.t + 2 * blocks, (p.m - 1) * blocks);
}

// Full Betti table read off from coefficients of Psi.
inline BettiTable betti_table_from_series(const TruncatedSeries& psi,
                                          const PathParams& p) {
  if (p.t < 1) throw std::invalid_argument("betti_table: power must be >= 1");
  SeriesCaps need = series_caps_for(p);
  const SeriesCaps& have = psi.caps();
  if (have.x < need.x || have.y < need.y || have.z < need.z || have.w < need.w)
    throw std::invalid_argument("series truncation box too small for table");
  BettiTable tbl(p);
  tbl.label = "series";
  for (int i = 0; i <= need.z; ++i)
    for (int k = 0; k <= need.w; ++k) {
      BigInt v = psi.coefficient({p.n, p.t, i, k});
      if (v != 0) tbl.add(i, i + p.t * p.m + k, v);
    }
  return tbl;
}

inline BettiTable betti_table_via_series(const PathParams& p) {
  return betti_table_from_series(build_psi(p.m, series_caps_for(p)), p);
}

} // namespace pathbetti
