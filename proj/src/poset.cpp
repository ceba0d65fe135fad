#include "stanley/poset.hpp"

#include <algorithm>
#include <limits>

#include "stanley/error.hpp"
#include "stanley/kernels.hpp"

namespace stanley {

Box::Box(Exponent g) : g_(std::move(g)) {
  strides_.resize(g_.size());
  volume_ = 1;
  for (std::size_t j = 0; j < g_.size(); ++j) {
    strides_[j] = volume_;
    const std::uint64_t radix = std::uint64_t{g_[j]} + 1;
    if (volume_ > std::numeric_limits<std::uint64_t>::max() / radix) {
      throw LimitError("box [0,g] has more than 2^64 points");
    }
    volume_ *= radix;
    squarefree_ = squarefree_ && g_[j] == 1;
  }
}

Box Box::unit_cube(int n) {
  if (n < 0 || n > kMaxSquarefreeVariables) {
    throw LimitError("squarefree boxes need 0 <= n <= 63");
  }
  return Box(Exponent(std::vector<std::uint32_t>(static_cast<std::size_t>(n), 1)));
}

Code Box::encode(const Exponent& c) const {
  if (c.size() != g_.size()) throw PreconditionError("exponent length != n");
  Code code = 0;
  for (std::size_t j = 0; j < g_.size(); ++j) {
    if (c[j] > g_[j]) throw PreconditionError("exponent exceeds g");
    code += c[j] * strides_[j];
  }
  return code;
}

Exponent Box::decode(Code code) const {
  Exponent e(g_.size());
  for (std::size_t j = 0; j < g_.size(); ++j) {
    e[j] = coord(code, static_cast<int>(j));
  }
  return e;
}

bool Box::leq(Code a, Code b) const {
  if (squarefree_) return is_subset(a, b);
  for (int j = 0; j < n(); ++j) {
    if (coord(a, j) > coord(b, j)) return false;
  }
  return true;
}

Code Box::meet(Code a, Code b) const {
  if (squarefree_) return a & b;
  Code out = 0;
  for (int j = 0; j < n(); ++j) {
    out += std::min(coord(a, j), coord(b, j)) * strides_[j];
  }
  return out;
}

Code Box::join(Code a, Code b) const {
  if (squarefree_) return a | b;
  Code out = 0;
  for (int j = 0; j < n(); ++j) {
    out += std::max(coord(a, j), coord(b, j)) * strides_[j];
  }
  return out;
}

int Box::rho(Code d) const {
  if (squarefree_) return popcount(d);
  int r = 0;
  for (int j = 0; j < n(); ++j) r += coord(d, j) == g_[j];
  return r;
}

std::uint64_t Box::degree(Code c) const {
  if (squarefree_) return static_cast<std::uint64_t>(popcount(c));
  std::uint64_t d = 0;
  for (int j = 0; j < n(); ++j) d += coord(c, j);
  return d;
}

std::uint64_t Box::interval_size(Code lo, Code hi) const {
  if (squarefree_) return std::uint64_t{1} << popcount(hi & ~lo);
  std::uint64_t size = 1;
  for (int j = 0; j < n(); ++j) size *= coord(hi, j) - coord(lo, j) + 1ull;
  return size;
}

bool Box::for_each_in(Code lo, Code hi,
                      const std::function<bool(Code)>& f) const {
  if (squarefree_) {
    const Mask free = hi & ~lo;
    Mask t = 0;
    do {
      if (!f(lo | t)) return false;
      t = (t - free) & free;
    } while (t != 0);
    return true;
  }
  std::vector<std::uint32_t> cur(g_.size());
  for (int j = 0; j < n(); ++j) cur[j] = coord(lo, j);
  Code code = lo;
  while (true) {
    if (!f(code)) return false;
    int j = 0;
    for (; j < n(); ++j) {
      if (cur[j] < coord(hi, j)) {
        ++cur[j];
        code += strides_[j];
        break;
      }
      code -= (cur[j] - coord(lo, j)) * strides_[j];
      cur[j] = coord(lo, j);
    }
    if (j == n()) return true;
  }
}

int rho(const Exponent& d, const Exponent& g) {
  if (d.size() != g.size()) throw PreconditionError("length mismatch");
  int r = 0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] > g[j]) throw PreconditionError("d exceeds g");
    r += d[j] == g[j];
  }
  return r;
}

bool same_intervals(const IntervalPartition& a, const IntervalPartition& b) {
  if (!(a.box == b.box) || a.intervals.size() != b.intervals.size()) {
    return false;
  }
  auto key = [](const IntervalPartition& p) {
    std::vector<std::pair<Code, Code>> v;
    for (const auto& iv : p.intervals) v.emplace_back(iv.lo, iv.hi);
    std::sort(v.begin(), v.end());
    return v;
  };
  return key(a) == key(b);
}

CharacteristicPoset build_poset(const MonomialIdeal& ideal,
                                const std::optional<Exponent>& g,
                                std::uint64_t cap) {
  const int n = ideal.n();
  Exponent bound;
  if (g) {
    if (g->size() != static_cast<std::size_t>(n)) {
      throw PreconditionError("g has the wrong length");
    }
    if (!ideal.lcm().divides(*g)) {
      throw PreconditionError("g is below the lcm exponent of the generators");
    }
    bound = *g;
  } else if (ideal.squarefree()) {
    bound = Exponent(std::vector<std::uint32_t>(static_cast<std::size_t>(n), 1));
  } else {
    bound = ideal.lcm();
  }

  CharacteristicPoset P;
  P.ideal_ = ideal;
  P.box_ = Box(std::move(bound));
  const auto volume = P.box_.volume();
  if (volume > cap) {
    throw LimitError("poset box has " + std::to_string(volume) +
                     " points, above the enumeration cap " +
                     std::to_string(cap));
  }
  P.member_.assign((volume + 63) / 64, 0);

  if (ideal.is_zero()) return P;

  if (P.box_.squarefree()) {
    const auto gens = ideal.masks();
    kernels::active().upset_membership(gens, 0, P.member_);
    if (volume % 64 != 0) P.member_.back() &= (std::uint64_t{1} << (volume % 64)) - 1;
  } else {
    const auto& box = P.box_;
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(n), 0);
    for (Code code = 0; code < volume; ++code) {
      for (const auto& v : ideal.generators()) {
        bool divides = true;
        for (int j = 0; j < n && divides; ++j) divides = v[j] <= cur[j];
        if (divides) {
          P.member_[code >> 6] |= std::uint64_t{1} << (code & 63);
          break;
        }
      }
      for (int j = 0; j < n; ++j) {
        if (cur[j] < box.g()[j]) {
          ++cur[j];
          break;
        }
        cur[j] = 0;
      }
    }
  }
  for (std::size_t w = 0; w < P.member_.size(); ++w) {
    for (std::uint64_t bits = P.member_[w]; bits != 0; bits &= bits - 1) {
      P.elements_.push_back(w * 64 + static_cast<Code>(std::countr_zero(bits)));
    }
  }
  return P;
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::gap: return "gap";
    case ViolationKind::out_of_poset: return "out-of-poset";
  }
  return "?";
}

Verification verify_partition(const CharacteristicPoset& poset,
                              const IntervalPartition& part) {
  const Box& box = poset.box();
  if (!(part.box == box)) {
    throw PreconditionError("partition and poset live in different boxes");
  }
  const auto& ivs = part.intervals;
  std::uint64_t covered = 0;
  for (const auto& iv : ivs) {
    if (!box.contains_code(iv.lo) || !box.contains_code(iv.hi) ||
        !box.leq(iv.lo, iv.hi) || !poset.contains(iv.lo)) {
      return {Violation{ViolationKind::out_of_poset, iv.lo}};
    }
    covered += box.interval_size(iv.lo, iv.hi);
  }

  if (box.squarefree()) {
    std::vector<Mask> los(ivs.size()), his(ivs.size());
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      los[i] = ivs[i].lo;
      his[i] = ivs[i].hi;
    }
    const auto& k = kernels::active();
    for (std::size_t i = 0; i + 1 < ivs.size(); ++i) {
      const std::span<const Mask> rest_lo(los.data() + i + 1, los.size() - i - 1);
      const std::span<const Mask> rest_hi(his.data() + i + 1, his.size() - i - 1);
      const auto hit = k.first_intersecting(los[i], his[i], rest_lo, rest_hi);
      if (hit != rest_lo.size()) {
        return {Violation{ViolationKind::overlap, los[i] | rest_lo[hit]}};
      }
    }
  } else {
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      for (std::size_t j = i + 1; j < ivs.size(); ++j) {
        const Code lo = box.join(ivs[i].lo, ivs[j].lo);
        if (box.leq(lo, box.meet(ivs[i].hi, ivs[j].hi))) {
          return {Violation{ViolationKind::overlap, lo}};
        }
      }
    }
  }

  if (covered == poset.size()) return {};
  // Disjoint and inside P but short: locate an uncovered element.
  std::vector<std::uint64_t> marks((box.volume() + 63) / 64, 0);
  for (const auto& iv : ivs) {
    box.for_each_in(iv.lo, iv.hi, [&](Code c) {
      marks[c >> 6] |= std::uint64_t{1} << (c & 63);
      return true;
    });
  }
  for (Code c : poset.elements()) {
    if (!((marks[c >> 6] >> (c & 63)) & 1)) {
      return {Violation{ViolationKind::gap, c}};
    }
  }
  throw VerificationError("interval count mismatch without a gap witness");
}

int min_rho(const IntervalPartition& part) {
  int best = part.n();
  for (const auto& iv : part.intervals) best = std::min(best, part.box.rho(iv.hi));
  return best;
}

int partition_sdepth(const CharacteristicPoset& poset,
                     const IntervalPartition& part) {
  const auto v = verify_partition(poset, part);
  if (!v.ok()) {
    throw PreconditionError(std::string("partition does not verify: ") +
                            to_string(v.violation->kind));
  }
  if (part.intervals.empty()) {
    throw PreconditionError("empty partition (zero ideal) has no Stanley depth");
  }
  return min_rho(part);
}

bool is_upper_discrete(const IntervalPartition& part, int k) {
  if (!part.box.squarefree()) {
    throw PreconditionError("upper-discreteness is defined for squarefree posets");
  }
  for (const auto& iv : part.intervals) {
    const int top = popcount(iv.hi);
    if (top < k) return false;
    if (top > k && iv.lo != iv.hi) return false;
  }
  return true;
}

std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo,
                          std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % range;
}

IntervalPartition random_partition(const CharacteristicPoset& poset,
                                   std::mt19937_64& rng) {
  const Box& box = poset.box();
  std::vector<std::uint64_t> covered((box.volume() + 63) / 64, 0);
  auto is_covered = [&](Code c) { return (covered[c >> 6] >> (c & 63)) & 1; };
  const Code top = box.volume() - 1;

  IntervalPartition part{box, {}};
  std::vector<Code> candidates;
  // Code order is a linear extension of <=, so the first uncovered element
  // is always the bottom of its interval.
  for (Code u : poset.elements()) {
    if (is_covered(u)) continue;
    candidates.clear();
    box.for_each_in(u, top, [&](Code d) {
      const bool free = box.for_each_in(u, d, [&](Code c) { return !is_covered(c); });
      if (free) candidates.push_back(d);
      return true;
    });
    const Code d = candidates[uniform_int(rng, 0, candidates.size() - 1)];
    box.for_each_in(u, d, [&](Code c) {
      covered[c >> 6] |= std::uint64_t{1} << (c & 63);
      return true;
    });
    part.intervals.push_back({u, d, "random"});
  }
  return part;
}

}  // namespace stanley
