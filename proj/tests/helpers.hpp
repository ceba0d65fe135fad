#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "stanley/bits.hpp"
#include "stanley/ideal.hpp"
#include "stanley/poset.hpp"

namespace testing {

inline stanley::Mask S(std::initializer_list<int> vars) {
  stanley::Mask m = 0;
  for (int v : vars) m |= stanley::bit_of(v);
  return m;
}

inline stanley::MonomialIdeal maximal(int n) {
  std::vector<stanley::Mask> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(stanley::bit_of(i));
  return stanley::MonomialIdeal::from_masks(n, gens);
}

inline stanley::IntervalPartition part(int n, std::vector<std::pair<stanley::Mask, stanley::Mask>> ivs) {
  stanley::IntervalPartition p = stanley::IntervalPartition::squarefree(n, {});
  for (auto [lo, hi] : ivs) p.intervals.push_back({lo, hi, ""});
  return p;
}

inline std::vector<std::pair<stanley::Mask, stanley::Mask>> sorted_pairs(
    const stanley::IntervalPartition& p) {
  std::vector<std::pair<stanley::Mask, stanley::Mask>> out;
  for (const auto& iv : p.intervals) out.emplace_back(iv.lo, iv.hi);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testing
