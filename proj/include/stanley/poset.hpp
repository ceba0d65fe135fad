#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stanley/bits.hpp"
#include "stanley/ideal.hpp"

namespace stanley {

/// Mixed-radix code of an exponent vector inside the box [0, g]. When
/// g = (1,...,1) the code is exactly the subset mask.
using Code = std::uint64_t;

/// The box [0, g] with its mixed-radix encoding.
class Box {
 public:
  Box() = default;
  explicit Box(Exponent g);
  static Box unit_cube(int n);

  int n() const { return static_cast<int>(g_.size()); }
  const Exponent& g() const { return g_; }
  bool squarefree() const { return squarefree_; }
  /// prod (g_j + 1); fits in 64 bits by construction.
  std::uint64_t volume() const { return volume_; }

  Code encode(const Exponent& c) const;
  Exponent decode(Code code) const;
  std::uint32_t coord(Code code, int j) const {
    return static_cast<std::uint32_t>((code / strides_[j]) % (g_[j] + 1ull));
  }
  bool contains_code(Code code) const { return code < volume_; }

  bool leq(Code a, Code b) const;
  Code meet(Code a, Code b) const;
  Code join(Code a, Code b) const;
  /// Number of coordinates where d saturates g; popcount when squarefree.
  int rho(Code d) const;
  /// Total degree |c|; popcount when squarefree.
  std::uint64_t degree(Code c) const;
  /// Number of lattice points in [lo, hi].
  std::uint64_t interval_size(Code lo, Code hi) const;
  /// Calls f(code) for every point of [lo, hi]. Stops early if f returns false.
  bool for_each_in(Code lo, Code hi, const std::function<bool(Code)>& f) const;

  bool operator==(const Box& o) const { return g_ == o.g_; }

 private:
  Exponent g_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t volume_ = 1;
  bool squarefree_ = true;
};

int rho(const Exponent& d, const Exponent& g);

struct Interval {
  Code lo = 0;
  Code hi = 0;
  /// Provenance only; never affects semantics.
  std::string rule;

  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

/// Intervals claimed to partition a characteristic poset living in `box`.
struct IntervalPartition {
  Box box;
  std::vector<Interval> intervals;

  int n() const { return box.n(); }
  static IntervalPartition squarefree(int n, std::vector<Interval> intervals) {
    return {Box::unit_cube(n), std::move(intervals)};
  }
};

/// Same multiset of intervals, ignoring order and labels.
bool same_intervals(const IntervalPartition& a, const IntervalPartition& b);

/// Enumeration cap for build_poset (number of lattice points in the box).
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// P_I^g = { c <= g : v_i | x^c for some i }, enumerated.
class CharacteristicPoset {
 public:
  const MonomialIdeal& ideal() const { return ideal_; }
  const Box& box() const { return box_; }
  int n() const { return box_.n(); }
  bool squarefree() const { return box_.squarefree(); }
  /// Element codes in increasing order.
  const std::vector<Code>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Code code) const {
    return code < box_.volume() && ((member_[code >> 6] >> (code & 63)) & 1);
  }

 private:
  friend CharacteristicPoset build_poset(const MonomialIdeal&,
                                         const std::optional<Exponent>&,
                                         std::uint64_t);
  MonomialIdeal ideal_ = MonomialIdeal::zero(0);
  Box box_;
  std::vector<Code> elements_;
  std::vector<std::uint64_t> member_;
};

/// Default g is the lcm exponent, or (1,...,1) for squarefree ideals.
CharacteristicPoset build_poset(const MonomialIdeal& ideal,
                                const std::optional<Exponent>& g = std::nullopt,
                                std::uint64_t cap = kDefaultEnumerationCap);

enum class ViolationKind { overlap, gap, out_of_poset };

const char* to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Code witness = 0;
};

/// Outcome of verify_partition: ok() or a violation with a witness element.
struct Verification {
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
  explicit operator bool() const { return ok(); }
};

/// Checks that every interval lies in P, intervals are pairwise disjoint,
/// and together they cover P.
Verification verify_partition(const CharacteristicPoset& poset,
                              const IntervalPartition& part);

/// min over intervals of rho(hi), without verifying. Empty partitions give
/// the box dimension.
int min_rho(const IntervalPartition& part);

/// Stanley depth of the decomposition induced by a verified partition.
/// Throws PreconditionError if the partition does not verify or is empty.
int partition_sdepth(const CharacteristicPoset& poset,
                     const IntervalPartition& part);

/// Degree-k upper-discreteness: rho(hi) >= k everywhere, and lo == hi
/// whenever rho(hi) > k. Squarefree partitions only; does not verify.
bool is_upper_discrete(const IntervalPartition& part, int k);

/// A uniformly-driven random partition of P: repeatedly take the first
/// uncovered element and a random admissible top. Always verifies.
IntervalPartition random_partition(const CharacteristicPoset& poset,
                                   std::mt19937_64& rng);

/// Uniform integer in [lo, hi] from raw mt19937_64 output (rejection
/// sampling), identical on every platform.
std::uint64_t uniform_int(std::mt19937_64& rng, std::uint64_t lo,
                          std::uint64_t hi);

}  // namespace stanley
