#include "stanley/selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "stanley/constructions.hpp"
#include "stanley/error.hpp"
#include "stanley/random_ideal.hpp"
#include "stanley/search.hpp"

namespace stanley {

namespace {

// A criterion body returns a summary line and throws CriterionFailed on the
// first mismatch.
struct CriterionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
  if (!cond) throw CriterionFailed(what);
}

MonomialIdeal maximal_ideal(int n) {
  std::vector<Mask> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(bit_of(i));
  return MonomialIdeal::from_masks(n, gens);
}

std::string maximal_ideal_values() {
  for (int n = 1; n <= 6; ++n) {
    const int got = sdepth_exact(maximal_ideal(n)).value;
    expect(got == (n + 1) / 2, "n=" + std::to_string(n) + ": sdepth " + std::to_string(got));
  }
  return "n=1..6 match ceil(n/2)";
}

// Partitions of s into parts >= 1, non-increasing.
void compositions(int s, int max_part, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (s == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(s, max_part); p >= 1; --p) {
    cur.push_back(p);
    compositions(s - p, p, cur, out);
    cur.pop_back();
  }
}

std::string complete_intersections() {
  int count = 0;
  for (int n = 1; n <= 7; ++n) {
    for (int s = 1; s <= n; ++s) {
      std::vector<std::vector<int>> sizes;
      std::vector<int> cur;
      compositions(s, s, cur, sizes);
      for (const auto& blocks : sizes) {
        std::vector<Mask> gens;
        int next = 1;
        for (int b : blocks) {
          Mask g = 0;
          for (int i = 0; i < b; ++i) g |= bit_of(next++);
          gens.push_back(g);
        }
        const auto ideal = MonomialIdeal::from_masks(n, gens);
        const int want = n - static_cast<int>(gens.size()) / 2;
        const int exact = sdepth_exact(ideal).value;
        const auto part = ci_partition(ideal);
        const auto poset = build_poset(ideal);
        expect(exact == want, to_compact(ideal) + ": exact " + std::to_string(exact));
        expect(partition_sdepth(poset, part) == want,
               to_compact(ideal) + ": ci_partition gives " + std::to_string(min_rho(part)));
        ++count;
      }
    }
  }
  return std::to_string(count) + " ideals";
}

std::string radical_invariance() {
  const auto ideal = parse_ideal("n=3; x1^2, x2*x3^2");
  const int value = sdepth_exact(ideal, {}, Exponent{2, 1, 2}).value;
  const int rad = sdepth_exact(radical(ideal)).value;
  expect(value == 2, "sdepth " + std::to_string(value));
  expect(rad == 2, "radical sdepth " + std::to_string(rad));
  return "both equal 2";
}

std::string three_generated() {
  std::mt19937_64 rng(3003);
  for (int idx = 0; idx < 200; ++idx) {
    const int n = static_cast<int>(uniform_int(rng, 3, 7));
    const auto ideal = random_squarefree_ideal(rng, n, 3, idx % 2 == 0);
    const auto part = three_gen_partition(ideal);
    const int exact = sdepth_exact(ideal).value;
    const std::string tag = to_compact(ideal);
    expect(partition_sdepth(build_poset(ideal), part) >= n - 1, tag + ": construction below n-1");
    expect(exact == n - 1, tag + ": exact " + std::to_string(exact));
  }
  return "200 ideals, sdepth = n-1";
}

std::string four_generated() {
  const auto example = parse_ideal("n=4; x1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4");
  const int value = sdepth_exact(example).value;
  expect(value == 3, "example sdepth " + std::to_string(value));
  expect(partition_sdepth(build_poset(example), four_gen_partition(example)) >= 2,
         "example construction below 2");
  std::mt19937_64 rng(4004);
  int tight = 0;
  for (int idx = 0; idx < 100; ++idx) {
    const int n = static_cast<int>(uniform_int(rng, 4, 6));
    const auto ideal = random_squarefree_ideal(rng, n, 4, idx % 2 == 0);
    const int exact = sdepth_exact(ideal).value;
    const std::string tag = to_compact(ideal);
    expect(exact >= n - 2, tag + ": exact " + std::to_string(exact));
    expect(min_rho(four_gen_partition(ideal)) >= n - 2, tag + ": construction below n-2");
    tight += exact == n - 2;
  }
  return "example = 3; 100 random >= n-2 (" + std::to_string(tight) + " tight)";
}

std::string upper_discrete_suite() {
  const auto ideal = parse_ideal("n=3; x1*x2, x2*x3, x1*x3");
  const auto poset = build_poset(ideal);
  auto set = [](std::initializer_list<int> vars) {
    Mask m = 0;
    for (int v : vars) m |= bit_of(v);
    return m;
  };
  const auto good = IntervalPartition::squarefree(
      3, {{set({1, 2}), set({1, 2}), ""},
          {set({2, 3}), set({2, 3}), ""},
          {set({1, 3}), set({1, 3}), ""},
          {set({1, 2, 3}), set({1, 2, 3}), ""}});
  const auto shorter = IntervalPartition::squarefree(
      3, {{set({1, 2}), set({1, 2, 3}), ""},
          {set({2, 3}), set({2, 3}), ""},
          {set({1, 3}), set({1, 3}), ""}});
  expect(verify_partition(poset, good).ok(), "example partition does not verify");
  expect(is_upper_discrete(good, 2), "example partition not upper-discrete at 2");
  expect(verify_partition(poset, shorter).ok(), "shorter partition does not verify");
  expect(!is_upper_discrete(shorter, 2), "shorter partition accepted as upper-discrete");

  std::mt19937_64 rng(6006);
  int refinements = 0;
  for (int idx = 0; idx < 100; ++idx) {
    const int n = static_cast<int>(uniform_int(rng, 2, 7));
    const int m = static_cast<int>(uniform_int(rng, 1, std::min(n, 4)));
    const auto I = random_squarefree_ideal(rng, n, m, false);
    const auto P = build_poset(I);
    const auto part = random_partition(P, rng);
    const int sd = partition_sdepth(P, part);
    for (int k = 0; k <= sd; ++k) {
      const auto refined = upper_discrete_refine(I, part, k);
      expect(verify_partition(P, refined).ok() && is_upper_discrete(refined, k),
             to_compact(I) + ": refine at k=" + std::to_string(k));
      ++refinements;
    }
  }
  return "examples ok; " + std::to_string(refinements) + " refinements of 100 partitions";
}

std::string oracle_equivalence() {
  std::mt19937_64 rng(7007);
  int done = 0;
  int attempts = 0;
  while (done < 500) {
    expect(++attempts < 100'000, "could not fill the corpus");
    const int n = static_cast<int>(uniform_int(rng, 1, 6));
    const int width = n <= 1 ? 1 : n <= 3 ? n : n == 4 ? 6 : n == 5 ? 10 : 20;
    const int m = static_cast<int>(uniform_int(rng, 1, std::min(width, 5)));
    const auto ideal = random_squarefree_ideal(rng, n, m, false);
    if (build_poset(ideal).size() > kBruteForceMaxElements) continue;
    const int oracle = brute_force_sdepth(ideal);
    const int exact = sdepth_exact(ideal).value;
    expect(oracle == exact, to_compact(ideal) + ": oracle " + std::to_string(oracle) +
                                ", solver " + std::to_string(exact));
    ++done;
  }
  return "500 ideals agree";
}

// Random ideal plus a variable occurring in exactly one generator.
std::pair<MonomialIdeal, int> lemma_instance(std::mt19937_64& rng, bool disjoint) {
  while (true) {
    const int n = static_cast<int>(uniform_int(rng, 1, 6));
    const int m = static_cast<int>(uniform_int(rng, 1, std::min(n, 3)));
    MonomialIdeal ideal = MonomialIdeal::zero(n);
    if (disjoint) {
      // Cut a random permutation of the variables into m nonempty blocks,
      // leaving a random tail unused.
      std::vector<int> vars(n);
      for (int i = 0; i < n; ++i) vars[i] = i + 1;
      for (int i = n - 1; i > 0; --i) std::swap(vars[i], vars[uniform_int(rng, 0, i)]);
      const int used = static_cast<int>(uniform_int(rng, m, n));
      std::vector<Mask> gens(m, 0);
      for (int i = 0; i < used; ++i) {
        gens[i < m ? i : uniform_int(rng, 0, m - 1)] |= bit_of(vars[i]);
      }
      ideal = MonomialIdeal::from_masks(n, gens);
    } else {
      ideal = random_squarefree_ideal(rng, n, m, false);
    }
    std::vector<int> pivots;
    const auto types = classify_variables(ideal);
    for (int j = 0; j < n; ++j) {
      if (types[j].type == 1) pivots.push_back(j + 1);
    }
    if (pivots.empty()) continue;
    return {ideal, pivots[uniform_int(rng, 0, pivots.size() - 1)]};
  }
}

std::string lift_exactness() {
  std::mt19937_64 rng(8008);
  for (int idx = 0; idx < 100; ++idx) {
    const auto [ideal, pivot] = lemma_instance(rng, false);
    const auto poset = build_poset(ideal);
    const auto part = idx % 2 == 0 ? random_partition(poset, rng) : sdepth_exact(poset).witness;
    const auto lifted = lem_lift(ideal, part, pivot, ideal.n() + 1);
    const auto target = build_poset(lem_lifted_ideal(ideal, pivot, ideal.n() + 1));
    expect(verify_partition(target, lifted).ok(), to_compact(ideal) + ": lem output");
    expect(partition_sdepth(target, lifted) == partition_sdepth(poset, part) + 1,
           to_compact(ideal) + ": lem did not raise sdepth by one");
  }
  for (int idx = 0; idx < 100; ++idx) {
    const auto [ideal, pivot] = lemma_instance(rng, true);
    const auto poset = build_poset(ideal);
    const auto base = random_partition(poset, rng);
    const int k = static_cast<int>(uniform_int(rng, 0, partition_sdepth(poset, base)));
    const auto part = upper_discrete_refine(ideal, base, k);
    const auto lifted = rem_lift(ideal, part, k, pivot, ideal.n() + 1);
    const auto target = build_poset(lem_lifted_ideal(ideal, pivot, ideal.n() + 1));
    expect(verify_partition(target, lifted).ok(), to_compact(ideal) + ": rem output");
    // Exactly k + 1: no higher degree unless the input already had one.
    const bool exact = !is_upper_discrete(lifted, k + 2) || is_upper_discrete(part, k + 1);
    expect(is_upper_discrete(lifted, k + 1) && exact,
           to_compact(ideal) + ": rem degree is not k+1 at k=" + std::to_string(k));
  }
  return "100 lem + 100 rem lifts";
}

struct Criterion {
  const char* title;
  double limit_seconds;
  std::string (*body)();
};

const Criterion kCriteria[] = {
    {"maximal ideal sdepth = ceil(n/2), n <= 6", 300, maximal_ideal_values},
    {"complete intersections, n <= 7", 600, complete_intersections},
    {"radical invariance for (x1^2, x2*x3^2)", 60, radical_invariance},
    {"3-generated: sdepth = n-1", 900, three_generated},
    {"4-generated: sdepth >= n-2", 900, four_generated},
    {"upper-discrete suite", 300, upper_discrete_suite},
    {"brute-force oracle equivalence", 600, oracle_equivalence},
    {"lift exactness (lem, rem)", 600, lift_exactness},
};

}  // namespace

int criterion_count() { return static_cast<int>(std::size(kCriteria)); }

CriterionReport run_criterion(int id) {
  if (id < 1 || id > criterion_count()) throw PreconditionError("no such criterion");
  const Criterion& c = kCriteria[id - 1];
  CriterionReport r{id, c.title, false, "", 0, c.limit_seconds};
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = c.body();
    r.passed = true;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.passed && r.seconds > r.limit_seconds) {
    r.passed = false;
    r.detail += " (over time limit)";
  }
  return r;
}

std::vector<CriterionReport> run_selftest(
    const std::function<void(const CriterionReport&)>& on_done) {
  std::vector<CriterionReport> out;
  for (int id = 1; id <= criterion_count(); ++id) {
    out.push_back(run_criterion(id));
    if (on_done) on_done(out.back());
  }
  return out;
}

}  // namespace stanley
