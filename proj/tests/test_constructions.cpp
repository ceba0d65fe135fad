#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "stanley/constructions.hpp"
#include "stanley/error.hpp"
#include "stanley/random_ideal.hpp"
#include "stanley/search.hpp"

using namespace stanley;
using testing::part;
using testing::S;
using testing::sorted_pairs;

namespace {

using Pairs = std::vector<std::pair<Mask, Mask>>;

Pairs sorted(Pairs p) {
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

TEST_SUITE("constructions") {

TEST_CASE("lem_lift worked example") {
  const auto I = parse_ideal("n=3; x1, x2*x3");
  const auto in = part(3, {{S({1}), S({1, 2})}, {S({1, 3}), S({1, 3})}, {S({2, 3}), S({1, 2, 3})}});
  const auto out = lem_lift(I, in, 3, 4);
  CHECK(sorted_pairs(out) == sorted({{S({1}), S({1, 2, 4})},
                                     {S({1, 3}), S({1, 2, 3})},
                                     {S({1, 3, 4}), S({1, 3, 4})},
                                     {S({2, 3, 4}), S({1, 2, 3, 4})}}));
  CHECK(partition_sdepth(build_poset(lem_lifted_ideal(I, 3, 4)), out) == 3);
}

TEST_CASE("lem_lift on a principal ideal") {
  const auto I = parse_ideal("n=2; x1*x2");
  const auto out = lem_lift(I, part(2, {{S({1, 2}), S({1, 2})}}), 2, 3);
  CHECK(sorted_pairs(out) == Pairs{{S({1, 2, 3}), S({1, 2, 3})}});
  CHECK(lem_lifted_ideal(I, 2, 3) == parse_ideal("n=3; x1*x2*x3"));
}

TEST_CASE("lem_lift preconditions") {
  const auto I = parse_ideal("n=3; x1*x2, x2*x3");
  const auto w = sdepth_exact(I).witness;
  CHECK_THROWS_AS(lem_lift(I, w, 2, 4), PreconditionError);
  CHECK_THROWS_AS(lem_lift(I, w, 1, 5), PreconditionError);
  CHECK_THROWS_AS(lem_lift(I, part(3, {{S({1, 2}), S({1, 2})}}), 1, 4), PreconditionError);
  CHECK_NOTHROW(lem_lift(I, w, 1, 4));
}

TEST_CASE("lem_lift raises min rho by one on random inputs") {
  std::mt19937_64 rng(21);
  int done = 0;
  while (done < 60) {
    const auto I = random_squarefree_ideal(rng, 3 + done % 4, 1 + done % 3, false);
    const auto types = classify_variables(I);
    int pivot = 0;
    for (int j = 0; j < I.n() && pivot == 0; ++j) {
      if (types[j].type == 1) pivot = j + 1;
    }
    if (pivot == 0) continue;
    const auto P = build_poset(I);
    const auto in = random_partition(P, rng);
    const auto out = lem_lift(I, in, pivot, I.n() + 1);
    CHECK(partition_sdepth(build_poset(lem_lifted_ideal(I, pivot, I.n() + 1)), out) ==
          partition_sdepth(P, in) + 1);
    ++done;
  }
}

TEST_CASE("ci_partition values") {
  CHECK(min_rho(ci_partition(testing::maximal(5))) == 3);
  CHECK(min_rho(ci_partition(parse_ideal("n=5; x1*x2, x3*x4*x5"))) == 4);
  CHECK(min_rho(ci_partition(parse_ideal("n=6; x1*x2, x3*x4, x5*x6"))) == 5);
  CHECK(min_rho(ci_partition(parse_ideal("n=7; x2*x6, x4"))) == 6);
  CHECK_THROWS_AS(ci_partition(parse_ideal("n=3; x1*x2, x2*x3")), PreconditionError);
  CHECK_THROWS_AS(ci_partition(parse_ideal("n=2; x1^2")), PreconditionError);
}

TEST_CASE("boolean upper-discrete partitions") {
  CHECK(sorted_pairs(boolean_upper_discrete(1, 1)) == Pairs{{0, S({1})}});
  CHECK(sorted_pairs(boolean_upper_discrete(2, 1)) ==
        sorted({{0, S({1})}, {S({2}), S({2})}, {S({1, 2}), S({1, 2})}}));
  const auto zero = boolean_upper_discrete(3, 0);
  CHECK(zero.intervals.size() == 8);
  for (const auto& iv : zero.intervals) CHECK(iv.lo == iv.hi);

  const auto unit = MonomialIdeal::from_masks(6, std::vector<Mask>{0}, UnitPolicy::allow);
  const auto P = build_poset(unit);
  for (int n = 0; n <= 6; ++n) {
    const auto cube = build_poset(MonomialIdeal::from_masks(n, std::vector<Mask>{0},
                                                            UnitPolicy::allow));
    for (int k = 0; k <= n; ++k) {
      const auto b = boolean_upper_discrete(n, k);
      CHECK(verify_partition(cube, b).ok());
      CHECK(is_upper_discrete(b, k));
    }
  }
  CHECK(P.size() == 64);
  CHECK_THROWS_AS(boolean_upper_discrete(3, 4), PreconditionError);
}

TEST_CASE("upper_discrete_refine") {
  const auto I = parse_ideal("n=3; x1*x2, x2*x3, x1*x3");
  const auto shorter =
      part(3, {{S({1, 2}), S({1, 2, 3})}, {S({2, 3}), S({2, 3})}, {S({1, 3}), S({1, 3})}});
  const auto refined = upper_discrete_refine(I, shorter, 2);
  CHECK(sorted_pairs(refined) == sorted({{S({1, 2}), S({1, 2})},
                                         {S({1, 2, 3}), S({1, 2, 3})},
                                         {S({2, 3}), S({2, 3})},
                                         {S({1, 3}), S({1, 3})}}));

  const auto singles = part(3, {{S({1, 2}), S({1, 2})},
                                {S({2, 3}), S({2, 3})},
                                {S({1, 3}), S({1, 3})},
                                {S({1, 2, 3}), S({1, 2, 3})}});
  CHECK(sorted_pairs(upper_discrete_refine(I, singles, 2)) == sorted_pairs(singles));
  CHECK(sorted_pairs(upper_discrete_refine(I, singles, 1)) == sorted_pairs(singles));

  const auto M = testing::maximal(4);
  const auto best = sdepth_exact(M).witness;
  const auto r = upper_discrete_refine(M, best, 2);
  CHECK(verify_partition(build_poset(M), r).ok());
  CHECK(is_upper_discrete(r, 2));
  CHECK_THROWS_AS(upper_discrete_refine(M, best, 3), PreconditionError);
}

TEST_CASE("rem_lift") {
  const auto I = parse_ideal("n=2; x1*x2");
  const auto out = rem_lift(I, part(2, {{S({1, 2}), S({1, 2})}}), 2, 2, 3);
  CHECK(sorted_pairs(out) == Pairs{{S({1, 2, 3}), S({1, 2, 3})}});
  CHECK(is_upper_discrete(out, 3));

  const auto J = parse_ideal("n=2; x1, x2");
  const auto in = part(2, {{S({1}), S({1})}, {S({2}), S({2})}, {S({1, 2}), S({1, 2})}});
  REQUIRE(is_upper_discrete(in, 1));
  const auto lifted = rem_lift(J, in, 1, 2, 3);
  CHECK(verify_partition(build_poset(lem_lifted_ideal(J, 2, 3)), lifted).ok());
  CHECK(is_upper_discrete(lifted, 2));
  CHECK_FALSE(is_upper_discrete(lifted, 3));

  CHECK_THROWS_AS(rem_lift(parse_ideal("n=3; x1*x2, x2*x3"),
                           sdepth_exact(parse_ideal("n=3; x1*x2, x2*x3")).witness, 2, 1, 4),
                  PreconditionError);
  CHECK_THROWS_AS(rem_lift(J, part(2, {{S({1}), S({1, 2})}, {S({2}), S({2})}}), 1, 2, 3),
                  PreconditionError);
}

TEST_CASE("step-by-step 3-generated construction") {
  // Core of (x1x2, x2x3, x1x3): every variable is of type 2.
  GeneratorTriple t{1, {S({1}), 0, S({1})}};
  auto p = step0_base(t);
  auto r = step0_extend(t, p, {0, 1}, 2);
  r = step0_extend(r.triple, r.partition, {1, 2}, 3);
  CHECK(r.triple.v == std::array<Mask, 3>{S({1, 2}), S({2, 3}), S({1, 3})});
  CHECK(min_rho(r.partition) == 2);
  CHECK(is_upper_discrete(r.partition, 2));

  const std::array<int, 3> roles{0, 1, 2};
  for (int step = 1; step <= 3; ++step) {
    r = step_private_extend(r.triple, 3, roles, r.partition, step, 3 + step);
    CHECK(r.triple.n == 3 + step);
    CHECK(min_rho(r.partition) >= 2 + step);
    CHECK(verify_partition(build_poset(r.triple.ideal()), r.partition).ok());
  }
  CHECK(r.triple.v == std::array<Mask, 3>{S({1, 2, 4}), S({2, 3, 5}), S({1, 3, 6})});
  CHECK_THROWS_AS(step_private_extend(r.triple, 3, roles, r.partition, 1, 7), PreconditionError);
}

TEST_CASE("three_gen_partition") {
  CHECK(min_rho(three_gen_partition(parse_ideal("n=3; x1*x2, x2*x3, x1*x3"))) == 2);
  CHECK(min_rho(three_gen_partition(parse_ideal("n=5; x1*x2, x2*x3, x1*x3"))) == 4);
  const auto I = parse_ideal("n=5; x1*x2*x3, x3*x4, x1*x4*x5");
  std::vector<LiftInstruction> trace;
  CHECK(min_rho(three_gen_partition(I, &trace)) >= 4);
  CHECK(sdepth_exact(I).value == 4);
  CHECK_FALSE(trace.empty());
  CHECK_THROWS_AS(three_gen_partition(parse_ideal("n=3; x1, x2")), PreconditionError);

  std::mt19937_64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(uniform_int(rng, 3, 9));
    const auto J = random_squarefree_ideal(rng, n, 3, i % 3 != 0);
    CHECK_MESSAGE(min_rho(three_gen_partition(J)) >= n - 1, to_compact(J));
  }
}

TEST_CASE("split and compose") {
  const auto I = parse_ideal("n=4; x1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4");
  const auto s = split_ideal(I);
  CHECK(s.without_last == parse_ideal("n=3; x1*x2*x3"));
  CHECK(s.with_last == parse_ideal("n=3; x1*x2, x1*x3, x2*x3"));

  const auto J = parse_ideal("n=3; x1, x2*x3");
  const auto t = split_ideal(J);
  CHECK(t.without_last == parse_ideal("n=2; x1"));
  CHECK(t.with_last == parse_ideal("n=2; x1, x2"));
  const auto composed = compose_split(J, sdepth_exact(t.without_last).witness,
                                      sdepth_exact(t.with_last).witness);
  CHECK(verify_partition(build_poset(J), composed).ok());

  const auto K = parse_ideal("n=3; x1*x3, x2*x3");
  const auto u = split_ideal(K);
  CHECK(u.without_last.is_zero());
  const auto only = compose_split(K, IntervalPartition::squarefree(2, {}),
                                  sdepth_exact(u.with_last).witness);
  CHECK(verify_partition(build_poset(K), only).ok());
  CHECK_THROWS_AS(compose_split(K, IntervalPartition::squarefree(2, {}),
                                part(2, {{S({1}), S({1})}})),
                  VerificationError);
  CHECK_THROWS_AS(split_ideal(parse_ideal("n=3; x1*x2")), PreconditionError);
}

TEST_CASE("four_gen_partition") {
  const auto I = parse_ideal("n=4; x1*x2*x3, x1*x2*x4, x1*x3*x4, x2*x3*x4");
  CHECK(min_rho(four_gen_partition(I)) >= 2);
  const auto C = parse_ideal("n=4; x1*x2, x2*x3, x3*x4, x1*x4");
  CHECK(min_rho(four_gen_partition(C)) >= 2);
  CHECK(sdepth_exact(C).value == brute_force_sdepth(C));

  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(uniform_int(rng, 4, 8));
    const auto J = random_squarefree_ideal(rng, n, 4, i % 2 == 0);
    CHECK_MESSAGE(min_rho(four_gen_partition(J)) >= n - 2, to_compact(J));
  }
  for (const char* text : {"n=3; x1*x2*x3", "n=4; x1, x2*x3", "n=3; x1*x2, x2*x3, x1*x3"}) {
    const auto J = parse_ideal(text);
    CHECK(min_rho(four_gen_partition(J)) >= J.n() - 1);
  }
  CHECK_THROWS_AS(four_gen_partition(testing::maximal(5)), PreconditionError);
}

}  // TEST_SUITE
