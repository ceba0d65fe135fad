#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stanley/bits.hpp"

namespace stanley {

/// Exponent vector c in N^n; x^c = prod x_i^c(i).
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t n) : coords_(n, 0) {}
  Exponent(std::initializer_list<std::uint32_t> coords) : coords_(coords) {}
  explicit Exponent(std::vector<std::uint32_t> coords)
      : coords_(std::move(coords)) {}

  static Exponent from_mask(Mask m, int n);

  std::size_t size() const { return coords_.size(); }
  std::uint32_t operator[](std::size_t j) const { return coords_[j]; }
  std::uint32_t& operator[](std::size_t j) { return coords_[j]; }
  const std::vector<std::uint32_t>& coords() const { return coords_; }

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const Exponent& other) const;
  bool is_zero() const;
  bool is_squarefree() const;
  std::uint64_t degree() const;
  /// Support as a mask; requires size() <= 63.
  Mask support() const;
  /// Squarefree exponent as a mask; requires is_squarefree().
  Mask to_mask() const;

  auto operator<=>(const Exponent&) const = default;
  bool operator==(const Exponent&) const = default;

 private:
  std::vector<std::uint32_t> coords_;
};

/// Minimal elements under divisibility, deduplicated, lexicographic order.
std::vector<Exponent> minimalize(std::vector<Exponent> gens);

enum class UnitPolicy { reject, allow };

/// A monomial ideal given by its minimal generators in K[x_1..x_n].
/// The zero ideal (no generators) is representable but only produced by
/// `MonomialIdeal::zero`; parsing rejects it.
class MonomialIdeal {
 public:
  static MonomialIdeal from_generators(int n, std::vector<Exponent> gens,
                                       UnitPolicy unit = UnitPolicy::reject);
  static MonomialIdeal from_masks(int n, std::span<const Mask> gens,
                                  UnitPolicy unit = UnitPolicy::reject);
  static MonomialIdeal zero(int n);

  int n() const { return n_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<Exponent>& generators() const { return gens_; }
  bool squarefree() const { return squarefree_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_zero(); }

  /// Generator supports (exact masks when squarefree). Requires n <= 63.
  std::vector<Mask> masks() const;
  /// Exponent of lcm(v_1..v_m).
  Exponent lcm() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  MonomialIdeal(int n, std::vector<Exponent> gens);

  int n_ = 0;
  std::vector<Exponent> gens_;
  bool squarefree_ = true;
};

/// Accepts the compact form `n=3; x1*x2, x2^2*x3` or the JSON form
/// `{"n": 3, "generators": [[1,1,0], [0,2,1]]}`. The monomial 1 is written
/// `1` and is a ParseError unless `unit` allows it.
MonomialIdeal parse_ideal(std::string_view text, UnitPolicy unit = UnitPolicy::reject);

std::string to_compact(const MonomialIdeal& ideal);
std::string to_json(const MonomialIdeal& ideal);

/// Generators' supports pairwise disjoint.
bool is_complete_intersection(const MonomialIdeal& ideal);

/// Clamp exponents to 0/1 and minimalize.
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Number of generators whose support contains a variable. `owner` is the
/// 0-based generator index for type-1 variables and -1 otherwise.
struct VariableType {
  int type = 0;
  int owner = -1;
  bool operator==(const VariableType&) const = default;
};

/// One record per variable x_1..x_n (index 0 is x_1). Uses supports, so for
/// non-squarefree ideals this classifies the radical.
std::vector<VariableType> classify_variables(const MonomialIdeal& ideal);

}  // namespace stanley
