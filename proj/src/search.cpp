#include "stanley/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

namespace stanley {

namespace {

struct BudgetHit {};
struct Cancelled {};

/// Node accounting shared by the engines. In parallel mode several engines
/// draw from one atomic pool; `stop` cancels siblings once one succeeds.
class NodeMeter {
 public:
  NodeMeter(std::uint64_t budget, std::atomic<std::uint64_t>* shared,
            const std::atomic<bool>* stop)
      : budget_(budget), shared_(shared), stop_(stop) {}

  void tick() {
    ++local_;
    if (shared_ == nullptr) {
      if (local_ > budget_) throw BudgetHit{};
      return;
    }
    if ((local_ & 1023) == 0) {
      if (shared_->fetch_add(1024) + 1024 > budget_) throw BudgetHit{};
      if (stop_->load(std::memory_order_relaxed)) throw Cancelled{};
    }
  }
  std::uint64_t local() const { return local_; }

 private:
  std::uint64_t budget_;
  std::atomic<std::uint64_t>* shared_;
  const std::atomic<bool>* stop_;
  std::uint64_t local_ = 0;
};

class Bitmap {
 public:
  explicit Bitmap(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}
  bool test(Code c) const { return (words_[c >> 6] >> (c & 63)) & 1; }
  void set(Code c) { words_[c >> 6] |= std::uint64_t{1} << (c & 63); }
  void reset(Code c) { words_[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }

 private:
  std::vector<std::uint64_t> words_;
};

// Squarefree search restricted to upper-discrete partitions of degree k:
// every element of rank < k lies in an interval whose top has rank exactly
// k, and everything left over is a singleton. A partition with min rho >= k
// exists iff one of this shape does.
class UpperDiscreteEngine {
 public:
  UpperDiscreteEngine(const CharacteristicPoset& poset, int k)
      : poset_(poset), n_(poset.n()), k_(k), covered_(poset.box().volume()),
        uncovered_at_(static_cast<std::size_t>(k) + 1, 0) {
    for (Code c : poset.elements()) {
      const int r = popcount(c);
      if (r < k_) pending_.push_back(c);
      if (r <= k_) ++uncovered_at_[r];
    }
    std::stable_sort(pending_.begin(), pending_.end(), [](Code a, Code b) {
      return popcount(a) < popcount(b);
    });
    binom_.assign(static_cast<std::size_t>(k_) + 1,
                  std::vector<std::int64_t>(static_cast<std::size_t>(k_) + 1, 0));
    for (int a = 0; a <= k_; ++a) {
      binom_[a][0] = 1;
      for (int b = 1; b <= a; ++b) {
        binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
      }
    }
  }

  /// Candidate tops for the first pending element, in search order.
  std::vector<Mask> root_candidates() {
    const std::size_t pos = first_uncovered(0);
    if (pos == pending_.size()) return {};
    return candidates(pending_[pos]);
  }

  bool solve(NodeMeter& meter) { return dfs(0, meter); }

  /// Solve with the first pending element's interval fixed to [u, d].
  bool solve_from(Mask d, NodeMeter& meter) {
    const std::size_t pos = first_uncovered(0);
    const Mask u = pending_[pos];
    place(u, d);
    return dfs(pos + 1, meter);
  }

  IntervalPartition witness() const {
    IntervalPartition part{poset_.box(), {}};
    for (const auto& [lo, hi] : chosen_) part.intervals.push_back({lo, hi, "search"});
    for (Code c : poset_.elements()) {
      if (!covered_.test(c)) part.intervals.push_back({c, c, "search"});
    }
    return part;
  }

  bool pending_empty() const { return first_uncovered(0) == pending_.size(); }

 private:
  std::size_t first_uncovered(std::size_t pos) const {
    while (pos < pending_.size() && covered_.test(pending_[pos])) ++pos;
    return pos;
  }

  Mask free_directions(Mask w) const {
    Mask f = 0;
    for (Mask rest = full_mask(n_) & ~w; rest != 0; rest &= rest - 1) {
      const Mask b = rest & (~rest + 1);
      if (!covered_.test(w | b)) f |= b;
    }
    return f;
  }

  // New intervals starting at level i cover C(k-i, l-i) elements of level l,
  // so the number starting at each level is forced by the uncovered counts.
  bool counts_feasible() const {
    std::int64_t tops_needed = 0;
    std::vector<std::int64_t> starts(static_cast<std::size_t>(k_), 0);
    for (int l = 0; l < k_; ++l) {
      std::int64_t x = uncovered_at_[l];
      for (int i = 0; i < l; ++i) x -= starts[i] * binom_[k_ - i][l - i];
      if (x < 0) return false;
      starts[l] = x;
      tops_needed += x;
    }
    return tops_needed <= uncovered_at_[k_];
  }

  bool every_pending_has_room(std::size_t pos) const {
    for (std::size_t i = pos; i < pending_.size(); ++i) {
      const Mask w = pending_[i];
      if (covered_.test(w)) continue;
      if (popcount(w) + popcount(free_directions(w)) < k_) return false;
    }
    return true;
  }

  std::vector<Mask> candidates(Mask u) const {
    std::vector<Mask> out;
    const Mask free = free_directions(u);
    const int need = k_ - popcount(u);
    const int avail = popcount(free);
    if (need > avail) return out;
    const Mask limit = Mask{1} << avail;
    for (Mask combo = (Mask{1} << need) - 1; combo < limit;
         combo = next_same_popcount(combo)) {
      const Mask s = deposit_bits(combo, free);
      bool clear = true;
      for (Mask t = s; t != 0 && clear; t = (t - 1) & s) clear = !covered_.test(u | t);
      if (clear) out.push_back(u | s);
      if (need == 0) break;
    }
    return out;
  }

  void place(Mask u, Mask d) {
    const Mask s = d & ~u;
    Mask t = 0;
    do {
      covered_.set(u | t);
      --uncovered_at_[popcount(u | t)];
      t = (t - s) & s;
    } while (t != 0);
    chosen_.emplace_back(u, d);
  }

  void unplace() {
    const auto [u, d] = chosen_.back();
    chosen_.pop_back();
    const Mask s = d & ~u;
    Mask t = 0;
    do {
      covered_.reset(u | t);
      ++uncovered_at_[popcount(u | t)];
      t = (t - s) & s;
    } while (t != 0);
  }

  bool dfs(std::size_t pos, NodeMeter& meter) {
    meter.tick();
    pos = first_uncovered(pos);
    if (pos == pending_.size()) return true;
    if (!counts_feasible() || !every_pending_has_room(pos)) return false;
    const Mask u = pending_[pos];
    for (Mask d : candidates(u)) {
      place(u, d);
      if (dfs(pos + 1, meter)) return true;
      unplace();
    }
    return false;
  }

  const CharacteristicPoset& poset_;
  int n_;
  int k_;
  Bitmap covered_;
  std::vector<std::int64_t> uncovered_at_;
  std::vector<Code> pending_;
  std::vector<std::vector<std::int64_t>> binom_;
  std::vector<std::pair<Mask, Mask>> chosen_;
};

// Works for any box: every element must be covered, tops need rho >= k and
// are tried in decreasing rho, then increasing code.
class GenericEngine {
 public:
  GenericEngine(const CharacteristicPoset& poset, int k)
      : poset_(poset), box_(poset.box()), k_(k), covered_(box_.volume()),
        order_(poset.elements()) {
    std::stable_sort(order_.begin(), order_.end(), [&](Code a, Code b) {
      return box_.degree(a) < box_.degree(b);
    });
  }

  std::vector<Code> root_candidates() {
    const std::size_t pos = first_uncovered(0);
    if (pos == order_.size()) return {};
    return candidates(order_[pos]);
  }

  bool solve(NodeMeter& meter) { return dfs(0, meter); }

  bool solve_from(Code d, NodeMeter& meter) {
    const std::size_t pos = first_uncovered(0);
    place(order_[pos], d);
    return dfs(pos + 1, meter);
  }

  IntervalPartition witness() const {
    IntervalPartition part{box_, {}};
    for (const auto& [lo, hi] : chosen_) part.intervals.push_back({lo, hi, "search"});
    return part;
  }

  bool pending_empty() const { return first_uncovered(0) == order_.size(); }

 private:
  std::size_t first_uncovered(std::size_t pos) const {
    while (pos < order_.size() && covered_.test(order_[pos])) ++pos;
    return pos;
  }

  bool interval_clear(Code lo, Code hi) const {
    return box_.for_each_in(lo, hi, [&](Code c) { return !covered_.test(c); });
  }

  std::vector<Code> candidates(Code u) const {
    std::vector<Code> out;
    box_.for_each_in(u, box_.volume() - 1, [&](Code d) {
      if (box_.rho(d) >= k_ && interval_clear(u, d)) out.push_back(d);
      return true;
    });
    std::stable_sort(out.begin(), out.end(), [&](Code a, Code b) {
      return box_.rho(a) > box_.rho(b);
    });
    return out;
  }

  // A top d >= w with [w, d] uncovered can only grow w along coordinates
  // that are saturated or whose unit step is still uncovered.
  bool every_element_has_room(std::size_t pos) const {
    const auto& g = box_.g();
    for (std::size_t i = pos; i < order_.size(); ++i) {
      const Code w = order_[i];
      if (covered_.test(w) || box_.rho(w) >= k_) continue;
      int reachable = 0;
      for (int j = 0; j < box_.n(); ++j) {
        const auto cj = box_.coord(w, j);
        if (cj == g[j]) {
          ++reachable;
        } else {
          const Code step = box_.join(w, box_.encode(unit_step(j, cj + 1)));
          reachable += !covered_.test(step);
        }
      }
      if (reachable < k_) return false;
    }
    return true;
  }

  Exponent unit_step(int j, std::uint32_t value) const {
    Exponent e(static_cast<std::size_t>(box_.n()));
    e[j] = value;
    return e;
  }

  void place(Code u, Code d) {
    box_.for_each_in(u, d, [&](Code c) {
      covered_.set(c);
      return true;
    });
    chosen_.emplace_back(u, d);
  }

  void unplace() {
    const auto [u, d] = chosen_.back();
    chosen_.pop_back();
    box_.for_each_in(u, d, [&](Code c) {
      covered_.reset(c);
      return true;
    });
  }

  bool dfs(std::size_t pos, NodeMeter& meter) {
    meter.tick();
    pos = first_uncovered(pos);
    if (pos == order_.size()) return true;
    if (!every_element_has_room(pos)) return false;
    const Code u = order_[pos];
    for (Code d : candidates(u)) {
      place(u, d);
      if (dfs(pos + 1, meter)) return true;
      unplace();
    }
    return false;
  }

  const CharacteristicPoset& poset_;
  const Box& box_;
  int k_;
  Bitmap covered_;
  std::vector<Code> order_;
  std::vector<std::pair<Code, Code>> chosen_;
};

template <class Engine>
SearchOutcome run_sequential(const CharacteristicPoset& poset, int k,
                             const SearchConfig& cfg) {
  Engine engine(poset, k);
  NodeMeter meter(cfg.node_budget, nullptr, nullptr);
  SearchOutcome out;
  try {
    out.status = engine.solve(meter) ? SearchStatus::found : SearchStatus::not_found;
  } catch (const BudgetHit&) {
    out.status = SearchStatus::budget_exceeded;
  }
  out.nodes = meter.local();
  if (out.status == SearchStatus::found) out.witness = engine.witness();
  return out;
}

template <class Engine>
SearchOutcome run_parallel(const CharacteristicPoset& poset, int k,
                           const SearchConfig& cfg) {
  Engine root(poset, k);
  if (root.pending_empty()) return run_sequential<Engine>(poset, k, cfg);
  const auto cands = root.root_candidates();
  if (cands.empty()) return {SearchStatus::not_found, std::nullopt, 1};

  unsigned threads = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(cands.size()));

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::optional<std::pair<std::size_t, IntervalPartition>> best;

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= cands.size()) return;
      Engine engine(poset, k);
      NodeMeter meter(cfg.node_budget, &nodes, &stop);
      try {
        if (engine.solve_from(cands[idx], meter)) {
          std::lock_guard lock(mu);
          if (!best || idx < best->first) best.emplace(idx, engine.witness());
          stop.store(true);
        }
      } catch (const BudgetHit&) {
        budget_hit.store(true);
        stop.store(true);
      } catch (const Cancelled&) {
        return;
      }
      nodes.fetch_add(meter.local() & 1023);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  SearchOutcome out;
  out.nodes = nodes.load();
  if (best) {
    out.status = SearchStatus::found;
    out.witness = std::move(best->second);
  } else {
    out.status = budget_hit ? SearchStatus::budget_exceeded : SearchStatus::not_found;
  }
  return out;
}

template <class Engine>
SearchOutcome run(const CharacteristicPoset& poset, int k, const SearchConfig& cfg) {
  return cfg.parallel ? run_parallel<Engine>(poset, k, cfg)
                      : run_sequential<Engine>(poset, k, cfg);
}

}  // namespace

SearchOutcome has_partition_min_rho(const CharacteristicPoset& poset, int k,
                                    const SearchConfig& cfg) {
  if (k < 0 || k > poset.n()) throw PreconditionError("k must lie in [0, n]");
  if (cfg.node_budget == 0) throw PreconditionError("node budget must be positive");
  const bool upper_discrete =
      poset.squarefree() && cfg.strategy == SearchStrategy::automatic;
  auto out = upper_discrete ? run<UpperDiscreteEngine>(poset, k, cfg)
                            : run<GenericEngine>(poset, k, cfg);
  if (out.witness) {
    const auto v = verify_partition(poset, *out.witness);
    if (!v.ok() || min_rho(*out.witness) < k) {
      throw VerificationError("search produced an invalid witness");
    }
  }
  return out;
}

StanleyDepth sdepth_exact(const CharacteristicPoset& poset, const SearchConfig& cfg) {
  if (poset.size() == 0) throw PreconditionError("the zero ideal has no Stanley depth");
  int lower = poset.n();
  for (Code c : poset.elements()) lower = std::min(lower, poset.box().rho(c));
  std::uint64_t nodes = 0;
  for (int k = poset.n(); k >= 0; --k) {
    auto out = has_partition_min_rho(poset, k, cfg);
    nodes += out.nodes;
    if (out.status == SearchStatus::found) {
      return {k, std::move(*out.witness), nodes};
    }
    if (out.status == SearchStatus::budget_exceeded) {
      throw BudgetExceededError(lower, k);
    }
  }
  throw VerificationError("no k admits a partition, not even k = 0");
}

StanleyDepth sdepth_exact(const MonomialIdeal& ideal, const SearchConfig& cfg,
                          const std::optional<Exponent>& g) {
  return sdepth_exact(build_poset(ideal, g), cfg);
}

}  // namespace stanley
