#pragma once

#include <cstdint>
#include <optional>

#include "stanley/error.hpp"
#include "stanley/ideal.hpp"
#include "stanley/poset.hpp"

namespace stanley {

enum class SearchStrategy {
  /// Squarefree posets use upper-discrete search (tops of size exactly k,
  /// rank > k left as singletons); general-g posets use `generic`.
  automatic,
  /// Tops with rho >= k, largest rho first, on every element.
  generic,
};

struct SearchConfig {
  std::uint64_t node_budget = 100'000'000;
  SearchStrategy strategy = SearchStrategy::automatic;
  /// Split the root branching across threads. The decision is the same as
  /// the sequential run; the witness may differ.
  bool parallel = false;
  unsigned threads = 0;  // 0 = hardware concurrency
};

enum class SearchStatus { found, not_found, budget_exceeded };

struct SearchOutcome {
  SearchStatus status = SearchStatus::not_found;
  std::optional<IntervalPartition> witness;
  std::uint64_t nodes = 0;
};

/// Decides whether P has a partition with min rho(hi) >= k, by exhaustive
/// backtracking. A found witness is verified before it is returned.
SearchOutcome has_partition_min_rho(const CharacteristicPoset& poset, int k,
                                    const SearchConfig& cfg = {});

struct StanleyDepth {
  int value = 0;
  IntervalPartition witness;
  std::uint64_t nodes = 0;
};

/// Thrown by sdepth_exact when a decision runs out of budget. The true value
/// lies in [lower, upper].
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(int lower, int upper)
      : Error("budget", "search budget exhausted; sdepth in [" +
                            std::to_string(lower) + ", " +
                            std::to_string(upper) + "]"),
        lower_(lower),
        upper_(upper) {}
  int lower() const { return lower_; }
  int upper() const { return upper_; }

 private:
  int lower_;
  int upper_;
};

/// Largest k with a partition of min rho >= k, scanning k = n, n-1, ...
StanleyDepth sdepth_exact(const CharacteristicPoset& poset,
                          const SearchConfig& cfg = {});
StanleyDepth sdepth_exact(const MonomialIdeal& ideal,
                          const SearchConfig& cfg = {},
                          const std::optional<Exponent>& g = std::nullopt);

/// Largest poset the brute-force oracle accepts.
inline constexpr std::size_t kBruteForceMaxElements = 18;

/// Independent oracle: maximizes min rho over every interval partition of P
/// (memoized over covered sets, no bound-based pruning). Enumerates P
/// itself; shares no code with the solver or the poset module.
int brute_force_sdepth(const MonomialIdeal& ideal,
                       const std::optional<Exponent>& g = std::nullopt);

}  // namespace stanley
