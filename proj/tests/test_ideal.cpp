#include <algorithm>

#include <doctest.h>

#include "helpers.hpp"
#include "stanley/error.hpp"
#include "stanley/random_ideal.hpp"

using namespace stanley;
using testing::S;

namespace {

std::vector<Mask> sorted_masks(const MonomialIdeal& I) {
  auto m = I.masks();
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TEST_SUITE("ideal") {

TEST_CASE("parse compact form") {
  const auto I = parse_ideal("n=3; x1*x2, x2*x3, x1*x3");
  CHECK(I.n() == 3);
  CHECK(I.squarefree());
  auto want = std::vector<Mask>{S({1, 2}), S({2, 3}), S({1, 3})};
  std::sort(want.begin(), want.end());
  CHECK(sorted_masks(I) == want);

  const auto J = parse_ideal("n=2; x1, x1*x2");
  CHECK(J.size() == 1);
  CHECK(J.masks()[0] == S({1}));

  const auto K = parse_ideal("n=3; x1^2, x2*x3^2");
  CHECK_FALSE(K.squarefree());
  auto gens = K.generators();
  std::sort(gens.begin(), gens.end());
  CHECK(gens[0] == Exponent{0, 1, 2});
  CHECK(gens[1] == Exponent{2, 0, 0});
}

TEST_CASE("parse JSON form and round trips") {
  const auto I = parse_ideal(R"({"n":3,"generators":[[1,1,0],[0,1,1]]})");
  CHECK(I == parse_ideal("n=3; x1*x2, x2*x3"));
  CHECK(parse_ideal(to_compact(I)) == I);
  CHECK(parse_ideal(to_json(I)) == I);
  const auto K = parse_ideal("n=3; x1^2, x2*x3^2");
  CHECK(parse_ideal(to_compact(K)) == K);
  CHECK(parse_ideal(to_json(K)) == K);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_ideal(""), ParseError);
  CHECK_THROWS_AS(parse_ideal("n=3; x4"), ParseError);
  CHECK_THROWS_AS(parse_ideal("n=0; x1"), ParseError);
  CHECK_THROWS_AS(parse_ideal("n=2; x1**x2"), ParseError);
  CHECK_THROWS_AS(parse_ideal("n=2; x1^"), ParseError);
  CHECK_THROWS_AS(parse_ideal("x1, x2"), ParseError);
  CHECK_THROWS_AS(parse_ideal("{\"n\":2}"), ParseError);
  CHECK_THROWS_AS(parse_ideal("{\"n\":2,\"generators\":[[1]]}"), ParseError);
  CHECK_THROWS_AS(parse_ideal("{not json"), ParseError);
}

TEST_CASE("minimalize") {
  auto m = minimalize({Exponent{1, 1, 0}, Exponent{1, 1, 1}});
  CHECK(m == std::vector<Exponent>{Exponent{1, 1, 0}});
  m = minimalize({Exponent{1, 0, 0}, Exponent{0, 1, 0}, Exponent{0, 0, 1}});
  CHECK(m.size() == 3);
  m = minimalize({Exponent{2, 0}, Exponent{1, 1}, Exponent{2, 1}});
  std::sort(m.begin(), m.end());
  CHECK(m == std::vector<Exponent>{Exponent{1, 1}, Exponent{2, 0}});
  m = minimalize({Exponent{1, 1}, Exponent{1, 1}});
  CHECK(m.size() == 1);
}

TEST_CASE("complete intersections") {
  CHECK(is_complete_intersection(parse_ideal("n=3; x1, x2*x3")));
  CHECK_FALSE(is_complete_intersection(parse_ideal("n=3; x1*x2, x2*x3")));
  CHECK(is_complete_intersection(parse_ideal("n=3; x1^2, x2*x3^2")));
}

TEST_CASE("radical") {
  CHECK(radical(parse_ideal("n=3; x1^2, x2*x3^2")) == parse_ideal("n=3; x1, x2*x3"));
  const auto I = parse_ideal("n=4; x1*x2, x3*x4");
  CHECK(radical(I) == I);
  CHECK(radical(parse_ideal("n=2; x1^2, x1*x2^3")) == parse_ideal("n=2; x1"));
}

TEST_CASE("classify variables") {
  const auto I = parse_ideal("n=3; x1*x2, x2*x3, x1*x3");
  for (const auto& t : classify_variables(I)) CHECK(t.type == 2);

  const auto J = parse_ideal("n=4; x1, x2*x3");
  const auto types = classify_variables(J);
  const auto gens = J.masks();
  auto owner_of = [&](Mask g) {
    return static_cast<int>(std::find(gens.begin(), gens.end(), g) - gens.begin());
  };
  CHECK(types[3] == VariableType{0, -1});
  CHECK(types[0] == VariableType{1, owner_of(S({1}))});
  CHECK(types[1] == VariableType{1, owner_of(S({2, 3}))});
  CHECK(types[2] == VariableType{1, owner_of(S({2, 3}))});

  for (const auto& t : classify_variables(parse_ideal("n=3; x1*x2*x3"))) {
    CHECK(t == VariableType{1, 0});
  }
  const auto common = classify_variables(parse_ideal("n=3; x1*x3, x2*x3"));
  CHECK(common[2].type == 2);
}

TEST_CASE("unit and zero ideals") {
  CHECK_THROWS_AS(MonomialIdeal::from_masks(2, std::vector<Mask>{0}), PreconditionError);
  const auto U = MonomialIdeal::from_masks(2, std::vector<Mask>{0, S({1})}, UnitPolicy::allow);
  CHECK(U.is_unit());
  CHECK(U.size() == 1);
  CHECK(MonomialIdeal::zero(3).is_zero());
  CHECK_THROWS_AS(parse_ideal("n=2; 1, x1"), ParseError);
  CHECK(parse_ideal("n=2; 1, x1", UnitPolicy::allow).is_unit());
  CHECK(parse_ideal(to_compact(U), UnitPolicy::allow) == U);
}

TEST_CASE("random ideals have exactly m minimal generators") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 5;
    const int m = 1 + i % std::min(n, 4);
    const auto I = random_squarefree_ideal(a, n, m);
    CHECK(I.size() == static_cast<std::size_t>(m));
    Mask used = 0;
    for (Mask g : I.masks()) used |= g;
    CHECK(used == full_mask(n));
    CHECK(random_squarefree_ideal(b, n, m) == I);
  }
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(random_squarefree_ideal(rng, 3, 4), PreconditionError);
}

}  // TEST_SUITE
