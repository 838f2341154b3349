#pragma once

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "betti_table.hpp"
#include "bigint.hpp"
#include "path_family.hpp"

namespace pathbetti {

// Recursive engine.  The graded Betti numbers of powers of path ideals
// satisfy a five-term recurrence; this cache evaluates it with
// memoization, entirely independently of the closed-form engine.
//
// Internally everything is computed through the strand-shifted counts
// c(n, t, i, k) with k = j - i - t*m, which satisfy
//   c(n,t,i,k) = c(n,t-1,i,k) + c(n-1,t,i,k) + c(n-1,t-1,i-1,k)
//              + c(n-m-1,t,i-1,k-m+1) + c(n-m-1,t,i-2,k-m+1)
// for t >= 1, with c(n,0,i,k) = [i == 0][k == 0] for n >= 0 and value 0
// whenever any argument is negative.  Each recursive child strictly
// decreases n + t, so the recursion depth is at most n + t.
class RecursionCache {
public:
  explicit RecursionCache(int m) : m_(m) {
    if (m < 2) throw std::invalid_argument("m must be >= 2");
  }

  int m() const { return m_; }

  // c(n, t, i, k): Betti number in homological degree i, at offset k
  // above the linear strand of the t-th power.
  BigInt shifted_betti(int n, int t, int i, int k) {
    std::lock_guard<std::mutex> lock(mu_);
    return c(n, t, i, k);
  }

  // beta_{i,j} of the t-th power of the path ideal on n+1 generators.
  BigInt power_betti(int n, int t, int i, int j) {
    int k = j - i - t * m_;
    if (k < 0) return 0;
    return shifted_betti(n, t, i, k);
  }

  // beta_{i,j} of J^s * I^t, where I is the path ideal on n+1 generators
  // and J the subideal on the first n of them.
  BigInt product_betti(int n, int s, int t, int i, int j) {
    if (n < 0 || s < 0 || t < 0 || i < 0 || j < 0) return 0;
    if (s == 0) return power_betti(n, t, i, j);
    if (t == 0) return power_betti(n - 1, s, i, j);
    int jr = j - t * m_;
    BigInt r = product_betti(n, s + 1, t - 1, i, j);
    r += product_betti(n - 1, 0, s, i, jr);
    r += product_betti(n - 1, 0, s, i - 1, jr - 1);
    r += product_betti(n - m_ - 1, 0, s + 1, i - 1, jr);
    r += product_betti(n - m_ - 1, 0, s + 1, i - 2, jr - 1);
    return r;
  }

  // Five-term recurrence one power up, as a checkable identity:
  //   b(n,t+1,i,j+m) = b(n,t,i,j) + b(n-1,t+1,i,j+m)
  //                  + b(n-1,t,i-1,j-1) + b(n-m-1,t+1,i-1,j)
  //                  + b(n-m-1,t+1,i-2,j-1).
  bool power_recurrence_holds(int n, int t, int i, int j) {
    BigInt lhs = power_betti(n, t + 1, i, j + m_);
    BigInt rhs = power_betti(n, t, i, j) + power_betti(n - 1, t + 1, i, j + m_) +
                 power_betti(n - 1, t, i - 1, j - 1) +
                 power_betti(n - m_ - 1, t + 1, i - 1, j) +
                 power_betti(n - m_ - 1, t + 1, i - 2, j - 1);
    return lhs == rhs;
  }

  // Full table of the t-th power.  The scan bounds come from the
  // recurrence alone: dropping i by one costs either one unit of t or
  // (jointly with a k-drop of m-1) m+1 units of n, so nonzero entries
  // have i <= t + 2*floor(n/(m+1)) and k = (m-1)*ell with
  // ell <= floor(n/(m+1)).
  BettiTable betti_table(int n, int t) {
    if (n < 0 || t < 1)
      throw std::invalid_argument("betti_table: need n >= 0 and t >= 1");
    BettiTable tbl(PathParams(n, m_, t));
    tbl.label = "recursion";
    int ell_max = n / (m_ + 1);
    for (int ell = 0; ell <= ell_max; ++ell)
      for (int i = 0; i <= t + 2 * ell_max; ++i) {
        BigInt v = shifted_betti(n, t, i, (m_ - 1) * ell);
        if (v != 0) tbl.add(i, i + t * m_ + (m_ - 1) * ell, v);
      }
    return tbl;
  }

private:
  using Key = std::array<int, 4>;

  // Caller holds the lock.
  BigInt c(int n, int t, int i, int k) {
    if (n < 0 || t < 0 || i < 0 || k < 0) return 0;
    if (t == 0) return (i == 0 && k == 0) ? 1 : 0;
    Key key{n, t, i, k};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    BigInt v = c(n, t - 1, i, k) + c(n - 1, t, i, k) + c(n - 1, t - 1, i - 1, k) +
               c(n - m_ - 1, t, i - 1, k - m_ + 1) +
               c(n - m_ - 1, t, i - 2, k - m_ + 1);
    memo_.emplace(key, v);
    return v;
  }

  int m_;
  std::mutex mu_;
  std::map<Key, BigInt> memo_;
};

} // namespace pathbetti
