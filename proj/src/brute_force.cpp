// Exhaustive oracle for tiny posets. Deliberately written against plain
// exponent vectors: no Box codes, no kernels, no solver state.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "stanley/search.hpp"

namespace stanley {

namespace {

using Point = std::vector<std::uint32_t>;

bool leq(const Point& a, const Point& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) return false;
  }
  return true;
}

class PartitionEnumerator {
 public:
  PartitionEnumerator(std::vector<Point> elements, const Point& g)
      : elems_(std::move(elements)), memo_(std::size_t{1} << elems_.size(), kUnknown) {
    const std::size_t m = elems_.size();
    full_ = (std::uint32_t{1} << m) - 1;
    members_.assign(m, std::vector<std::uint32_t>(m, 0));
    top_rank_.assign(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      int r = 0;
      for (std::size_t t = 0; t < g.size(); ++t) r += elems_[j][t] == g[t];
      top_rank_[j] = r;
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (!leq(elems_[i], elems_[j])) continue;
        std::uint32_t set = 0;
        for (std::size_t t = 0; t < m; ++t) {
          if (leq(elems_[i], elems_[t]) && leq(elems_[t], elems_[j])) {
            set |= std::uint32_t{1} << t;
          }
        }
        // [e_i, e_j] must lie entirely inside P to be an interval of P.
        std::uint64_t box_points = 1;
        for (std::size_t t = 0; t < g.size(); ++t) {
          box_points *= elems_[j][t] - elems_[i][t] + 1ull;
        }
        if (box_points == static_cast<std::uint64_t>(std::popcount(set))) {
          members_[i][j] = set;
        }
      }
    }
    infinity_ = static_cast<int>(g.size()) + 1;
  }

  int best() { return value(0); }

 private:
  static constexpr std::int8_t kUnknown = -2;

  // Max over all partitions of the uncovered remainder of min top rank.
  int value(std::uint32_t covered) {
    if (covered == full_) return infinity_;
    auto& slot = memo_[covered];
    if (slot != kUnknown) return slot;
    // Elements are sorted by degree, so the first uncovered one is minimal
    // among the uncovered and must be the bottom of its interval.
    const auto u = static_cast<std::size_t>(std::countr_one(covered));
    int best = -1;
    for (std::size_t j = 0; j < elems_.size(); ++j) {
      const std::uint32_t set = members_[u][j];
      if (set == 0 || (set & covered) != 0) continue;
      best = std::max(best, std::min(top_rank_[j], value(covered | set)));
    }
    slot = static_cast<std::int8_t>(best);
    return best;
  }

  std::vector<Point> elems_;
  std::vector<std::int8_t> memo_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<int> top_rank_;
  std::uint32_t full_ = 0;
  int infinity_ = 0;
};

}  // namespace

int brute_force_sdepth(const MonomialIdeal& ideal, const std::optional<Exponent>& g_opt) {
  const auto n = static_cast<std::size_t>(ideal.n());
  Point g(n, 0);
  if (g_opt) {
    g = g_opt->coords();
  } else if (ideal.squarefree()) {
    g.assign(n, 1);
  } else {
    for (const auto& v : ideal.generators()) {
      for (std::size_t j = 0; j < n; ++j) g[j] = std::max(g[j], v[j]);
    }
  }
  if (g.size() != n) throw PreconditionError("g has the wrong length");

  std::vector<Point> elems;
  Point cur(n, 0);
  while (true) {
    for (const auto& v : ideal.generators()) {
      if (leq(v.coords(), cur)) {
        elems.push_back(cur);
        if (elems.size() > kBruteForceMaxElements) {
          throw LimitError("brute-force oracle limited to 18 poset elements");
        }
        break;
      }
    }
    std::size_t j = 0;
    for (; j < n; ++j) {
      if (cur[j] < g[j]) {
        ++cur[j];
        break;
      }
      cur[j] = 0;
    }
    if (j == n) break;
  }
  if (elems.empty()) throw PreconditionError("the zero ideal has no Stanley depth");

  std::stable_sort(elems.begin(), elems.end(), [](const Point& a, const Point& b) {
    std::uint64_t da = 0, db = 0;
    for (auto x : a) da += x;
    for (auto x : b) db += x;
    return da < db;
  });
  return PartitionEnumerator(std::move(elems), g).best();
}

}  // namespace stanley
