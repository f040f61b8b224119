#pragma once

// The magic number of a trinity, computed several independent ways.

#include <array>
#include <map>
#include <optional>
#include <string>

#include "trinkit/hypertrees.hpp"
#include "trinkit/trees.hpp"
#include "trinkit/trinity.hpp"

namespace trinkit {

struct MagicReport {
  // Indexed violet, emerald, red.
  std::array<BigInt, 3> det;
  std::array<std::optional<BigInt>, 3> enumerated;
  std::array<std::string, 3> enum_status;  // "ok" or the reason a slot is empty
  std::map<std::string, std::optional<long long>> hypertrees;
  std::string hypertree_status = "ok";
  bool agree = false;

  const BigInt& value() const { return det[0]; }
};

inline const std::array<Colour, 3>& dual_colours() {
  static const std::array<Colour, 3> c{Colour::violet, Colour::emerald, Colour::red};
  return c;
}

/// Fills every slot it can within `cap`; slots over the cap stay empty and do
/// not count against agreement.
inline MagicReport magic_number(const Trinity& t, long long cap = kDefaultCap) {
  MagicReport r;
  for (std::size_t i = 0; i < 3; ++i) {
    const DirectedDual& d = directed_dual(t, dual_colours()[i]);
    const std::string root = d.min_vertex();
    r.det[i] = count_arborescences(d, root);
    try {
      long long count = 0;
      for_each_arborescence(d, root, [&](const Arborescence&) { ++count; }, cap);
      r.enumerated[i] = BigInt(count);
      r.enum_status[i] = "ok";
    } catch (const CapExceeded& e) {
      r.enum_status[i] = e.what();
    }
  }
  for (const auto& key : hypergraph_keys()) r.hypertrees[key] = std::nullopt;
  try {
    for (const auto& [key, set] : enumerate_all_hypertrees(t, cap))
      r.hypertrees[key] = static_cast<long long>(set.count());
  } catch (const CapExceeded& e) {
    r.hypertree_status = e.what();
  }
  r.agree = true;
  for (std::size_t i = 0; i < 3; ++i) {
    if (r.det[i] != r.det[0]) r.agree = false;
    if (r.enumerated[i] && *r.enumerated[i] != r.det[0]) r.agree = false;
  }
  for (const auto& [key, count] : r.hypertrees)
    if (count && BigInt(*count) != r.det[0]) r.agree = false;
  return r;
}

}  // namespace trinkit
