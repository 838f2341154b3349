#pragma once

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "betti_table.hpp"
#include "bigint.hpp"

namespace pathbetti {

// Betti-table serialization.  Values travel as decimal strings so no
// entry is ever squeezed through a machine integer.

inline nlohmann::json to_json(const BettiTable& tbl) {
  nlohmann::json j;
  if (tbl.params) {
    j["n"] = tbl.params->n;
    j["m"] = tbl.params->m;
    j["t"] = tbl.params->t;
  } else if (!tbl.label.empty()) {
    j["label"] = tbl.label;
  }
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [k, v] : tbl.entries()) {
    nlohmann::json e;
    e["i"] = k.first;
    e["j"] = k.second;
    e["value"] = v.str();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

inline BettiTable from_json(const nlohmann::json& j) {
  BettiTable tbl;
  if (j.contains("n") && j.contains("m") && j.contains("t"))
    tbl.params = PathParams(j.at("n").get<int>(), j.at("m").get<int>(),
                            j.at("t").get<int>());
  if (j.contains("label")) tbl.label = j.at("label").get<std::string>();
  for (const auto& e : j.at("entries")) {
    const auto& raw = e.at("value");
    BigInt v = raw.is_string() ? BigInt(raw.get<std::string>())
                               : BigInt(raw.get<long long>());
    tbl.add(e.at("i").get<int>(), e.at("j").get<int>(), v);
  }
  return tbl;
}

inline std::string to_csv(const BettiTable& tbl) {
  std::ostringstream os;
  os << "i,j,value\n";
  for (const auto& [k, v] : tbl.entries())
    os << k.first << ',' << k.second << ',' << v.str() << '\n';
  return os.str();
}

// Classic Betti diagram: columns are homological degrees, rows are
// j - i, with a leading total row and "." for absent entries.
inline std::string to_diagram(const BettiTable& tbl) {
  if (tbl.empty()) return "empty table\n";
  int imax = 0, rmin = 1 << 30, rmax = -(1 << 30);
  for (const auto& [k, v] : tbl.entries()) {
    imax = std::max(imax, k.first);
    rmin = std::min(rmin, k.second - k.first);
    rmax = std::max(rmax, k.second - k.first);
  }

  std::vector<BigInt> totals(imax + 1, 0);
  for (const auto& [k, v] : tbl.entries()) totals[k.first] += v;

  auto cell = [&](int i, int r) -> std::string {
    BigInt v = tbl.value(i, r + i);
    return v == 0 ? "." : v.str();
  };

  std::vector<size_t> width(imax + 1);
  for (int i = 0; i <= imax; ++i) {
    width[i] = std::to_string(i).size();
    width[i] = std::max(width[i], totals[i].str().size());
    for (int r = rmin; r <= rmax; ++r)
      width[i] = std::max(width[i], cell(i, r).size());
  }
  size_t lw = std::string("total:").size();
  for (int r = rmin; r <= rmax; ++r)
    lw = std::max(lw, std::to_string(r).size() + 1);

  std::ostringstream os;
  auto row = [&](const std::string& lbl, auto text) {
    os << std::setw(static_cast<int>(lw)) << lbl;
    for (int i = 0; i <= imax; ++i)
      os << ' ' << std::setw(static_cast<int>(width[i])) << text(i);
    os << '\n';
  };
  row("", [](int i) { return std::to_string(i); });
  row("total:", [&](int i) { return totals[i].str(); });
  for (int r = rmin; r <= rmax; ++r)
    row(std::to_string(r) + ":", [&](int i) { return cell(i, r); });
  return os.str();
}

} // namespace pathbetti
