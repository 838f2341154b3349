#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "bigint.hpp"
#include "path_family.hpp"

namespace pathbetti {

// Sparse table of graded Betti numbers: (homological degree i, internal
// degree j) -> multiplicity.  Only nonzero entries are stored, so two
// tables with the same nonzero entries compare equal regardless of how
// they were produced.
class BettiTable {
public:
  using Key = std::pair<int, int>;

  BettiTable() = default;
  explicit BettiTable(PathParams p) : params(p) {}
  explicit BettiTable(std::string lbl) : label(std::move(lbl)) {}

  // Accumulate v into entry (i, j).  Zero results are dropped.
  void add(int i, int j, const BigInt& v) {
    if (v == 0) return;
    BigInt& slot = entries_[{i, j}];
    slot += v;
    if (slot == 0) {
      entries_.erase({i, j});
    } else if (slot < 0) {
      throw std::invalid_argument("betti table entry went negative");
    }
  }

  // Entry at (i, j); absent entries read as 0.
  BigInt value(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? BigInt(0) : it->second;
  }

  const std::map<Key, BigInt>& entries() const { return entries_; }

  bool empty() const { return entries_.empty(); }

  int max_homological_degree() const {
    int r = 0;
    for (const auto& [k, v] : entries_) r = std::max(r, k.first);
    return r;
  }

  // max over entries of j - i.
  int max_regularity() const {
    int r = 0;
    for (const auto& [k, v] : entries_) r = std::max(r, k.second - k.first);
    return r;
  }

  BigInt total() const {
    BigInt s = 0;
    for (const auto& [k, v] : entries_) s += v;
    return s;
  }

  // Equality compares the entries only; params/label are descriptive.
  bool operator==(const BettiTable& o) const { return entries_ == o.entries_; }

  std::optional<PathParams> params;
  std::string label;

private:
  std::map<Key, BigInt> entries_;
};

} // namespace pathbetti
