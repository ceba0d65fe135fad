#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "stanley/error.hpp"
#include "stanley/random_ideal.hpp"
#include "stanley/search.hpp"

using namespace stanley;
using testing::maximal;
using testing::S;

TEST_SUITE("search") {

TEST_CASE("decision on the maximal ideal") {
  const auto P = build_poset(maximal(3));
  const auto yes = has_partition_min_rho(P, 2);
  CHECK(yes.status == SearchStatus::found);
  REQUIRE(yes.witness);
  CHECK(verify_partition(P, *yes.witness).ok());
  CHECK(min_rho(*yes.witness) >= 2);
  CHECK(has_partition_min_rho(P, 3).status == SearchStatus::not_found);
  CHECK_THROWS_AS(has_partition_min_rho(P, 4), PreconditionError);
}

TEST_CASE("principal ideal: one interval") {
  const auto P = build_poset(parse_ideal("n=4; x1*x3"));
  const auto r = has_partition_min_rho(P, 4);
  REQUIRE(r.status == SearchStatus::found);
  REQUIRE(r.witness->intervals.size() == 1);
  CHECK(r.witness->intervals[0].lo == S({1, 3}));
  CHECK(r.witness->intervals[0].hi == S({1, 2, 3, 4}));
}

TEST_CASE("exact values") {
  CHECK(sdepth_exact(parse_ideal("n=3; x1*x2, x2*x3, x1*x3")).value == 2);
  CHECK(sdepth_exact(parse_ideal("n=4; x1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4")).value == 3);
  CHECK(sdepth_exact(maximal(4)).value == 2);
  CHECK(sdepth_exact(parse_ideal("n=2; x1")).value == 2);
  CHECK(sdepth_exact(maximal(2)).value == 1);
  CHECK(sdepth_exact(parse_ideal("n=3; x1*x2, x2*x3")).value == 2);
  for (int n = 1; n <= 8; ++n) CHECK(sdepth_exact(maximal(n)).value == (n + 1) / 2);
}

TEST_CASE("non-squarefree and explicit g") {
  const auto I = parse_ideal("n=3; x1^2, x2*x3^2");
  CHECK(sdepth_exact(I).value == 2);
  CHECK(sdepth_exact(I, {}, Exponent{2, 1, 2}).value == 2);
  CHECK(sdepth_exact(radical(I)).value == 2);
  CHECK(sdepth_exact(parse_ideal("n=2; x1^2, x1*x2, x2^2")).value == 1);
  CHECK(sdepth_exact(parse_ideal("n=2; x1^2"), {}, Exponent{3, 1}).value == 2);
  CHECK_THROWS_AS(sdepth_exact(I, {}, Exponent{1, 1, 1}), PreconditionError);
}

TEST_CASE("budget exhaustion reports bounds") {
  SearchConfig cfg;
  cfg.node_budget = 1;
  cfg.strategy = SearchStrategy::generic;
  try {
    sdepth_exact(maximal(6), cfg);
    FAIL("expected budget error");
  } catch (const BudgetExceededError& e) {
    CHECK(e.lower() <= 3);
    CHECK(e.upper() >= 3);
  }
}

TEST_CASE("oracle agrees with the solver") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int i = 0; checked < 150 && i < 5000; ++i) {
    const int n = 1 + static_cast<int>(uniform_int(rng, 0, 4));
    const int m = 1 + static_cast<int>(uniform_int(rng, 0, std::min(n, 3) - 1));
    const auto I = random_squarefree_ideal(rng, n, m, false);
    if (build_poset(I).size() > kBruteForceMaxElements) continue;
    CHECK_MESSAGE(brute_force_sdepth(I) == sdepth_exact(I).value, to_compact(I));
    ++checked;
  }
  CHECK(checked == 150);
  for (const char* text : {"n=3; x1^2, x2*x3^2", "n=2; x1^2, x2^2", "n=2; x1^3*x2"}) {
    const auto I = parse_ideal(text);
    CHECK_MESSAGE(brute_force_sdepth(I) == sdepth_exact(I).value, text);
  }
}

TEST_CASE("generic strategy agrees with upper-discrete search") {
  std::mt19937_64 rng(12);
  SearchConfig generic;
  generic.strategy = SearchStrategy::generic;
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(uniform_int(rng, 2, 6));
    const int m = static_cast<int>(uniform_int(rng, 1, std::min(n, 4)));
    const auto I = random_squarefree_ideal(rng, n, m, i % 2 == 0);
    CHECK_MESSAGE(sdepth_exact(I).value == sdepth_exact(I, generic).value, to_compact(I));
  }
}

TEST_CASE("decisions are monotone in k") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    const auto I = random_squarefree_ideal(rng, 5, 1 + i % 4, false);
    const auto P = build_poset(I);
    const int sd = sdepth_exact(P).value;
    for (int k = 0; k <= I.n(); ++k) {
      const auto r = has_partition_min_rho(P, k);
      CHECK((r.status == SearchStatus::found) == (k <= sd));
    }
  }
}

TEST_CASE("sequential search is deterministic") {
  const auto I = parse_ideal("n=6; x1*x2, x2*x3*x4, x4*x5, x1*x6");
  const auto a = sdepth_exact(I);
  const auto b = sdepth_exact(I);
  CHECK(a.value == b.value);
  CHECK(a.nodes == b.nodes);
  CHECK(testing::sorted_pairs(a.witness) == testing::sorted_pairs(b.witness));
}

TEST_CASE("parallel search finds the same value") {
  SearchConfig par;
  par.parallel = true;
  par.threads = 4;
  std::mt19937_64 rng(14);
  for (int i = 0; i < 20; ++i) {
    const auto I = random_squarefree_ideal(rng, 6, 2 + i % 3);
    const auto r = sdepth_exact(I, par);
    CHECK(r.value == sdepth_exact(I).value);
    CHECK(verify_partition(build_poset(I), r.witness).ok());
  }
  CHECK(sdepth_exact(maximal(7), par).value == 4);
}

TEST_CASE("zero ideal is rejected") {
  CHECK_THROWS_AS(sdepth_exact(MonomialIdeal::zero(3)), PreconditionError);
  CHECK_THROWS_AS(brute_force_sdepth(MonomialIdeal::zero(3)), PreconditionError);
}

}  // TEST_SUITE
