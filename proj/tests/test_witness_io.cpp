#include <cstdio>

#include <doctest.h>

#include "helpers.hpp"
#include "stanley/error.hpp"
#include "stanley/search.hpp"
#include "stanley/witness_io.hpp"

using namespace stanley;

TEST_SUITE("witness-io") {

TEST_CASE("round trip through JSON") {
  for (const char* text : {"n=3; x1*x2, x2*x3, x1*x3", "n=3; x1^2, x2*x3^2"}) {
    const auto I = parse_ideal(text);
    const auto w = sdepth_exact(I).witness;
    const auto back = witness_from_json(partition_to_json(w, &I));
    REQUIRE(back.ideal);
    CHECK(*back.ideal == I);
    CHECK(back.partition.box == w.box);
    CHECK(same_intervals(back.partition, w));
    CHECK(verify_partition(build_poset(I, w.box.g()), back.partition).ok());
  }
}

TEST_CASE("files") {
  const auto I = parse_ideal("n=4; x1*x2, x3");
  const auto w = sdepth_exact(I).witness;
  const std::string path = "witness_io_test.json";
  write_witness_file(path, w, &I);
  const auto back = read_witness_file(path);
  CHECK(same_intervals(back.partition, w));
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_witness_file("does/not/exist.json"), ParseError);
}

TEST_CASE("violation shape") {
  const auto j = violation_to_json(Box::unit_cube(3), {ViolationKind::gap, testing::S({2, 3})});
  CHECK(j.dump() == R"({"kind":"gap","witness":[0,1,1]})");
}

TEST_CASE("malformed witnesses") {
  using nlohmann::json;
  CHECK_THROWS_AS(witness_from_json(json::array()), ParseError);
  CHECK_THROWS_AS(witness_from_json(json{{"n", 2}}), ParseError);
  CHECK_THROWS_AS(witness_from_json(json::parse(R"({"n":2,"intervals":[{"lo":[1],"hi":[1,1]}]})")),
                  ParseError);
  CHECK_THROWS_AS(witness_from_json(json::parse(R"({"n":2,"intervals":[{"lo":[1,1],"hi":[0,1]}]})")),
                  ParseError);
  CHECK_THROWS_AS(witness_from_json(json::parse(R"({"n":1,"intervals":[{"lo":[0],"hi":[2]}]})")),
                  ParseError);
  CHECK_THROWS_AS(witness_from_json(json::parse(R"({"n":2,"ideal":"n=3; x1","intervals":[]})")),
                  ParseError);
}

}  // TEST_SUITE
