#include <random>
#include <vector>

#include <doctest.h>

#include "stanley/kernels.hpp"

using namespace stanley;

TEST_SUITE("kernels") {

TEST_CASE("dispatcher picks a table") {
  const auto& k = kernels::active();
  CHECK(k.upset_membership != nullptr);
  CHECK(k.first_intersecting != nullptr);
  MESSAGE("active kernels: " << k.name);
}

TEST_CASE("scalar upset membership matches the definition") {
  const std::vector<Mask> gens{0b0011, 0b0110, 0b1000};
  std::vector<std::uint64_t> out(1);
  kernels::scalar().upset_membership(gens, 0, out);
  for (Mask c = 0; c < 16; ++c) {
    bool in = false;
    for (Mask g : gens) in = in || (g & ~c) == 0;
    CHECK(((out[0] >> c) & 1) == in);
  }
}

TEST_CASE("SIMD variants agree with scalar") {
  const auto* simd = kernels::avx2();
  if (simd == nullptr) {
    MESSAGE("AVX2 not available, skipping");
    return;
  }
  std::mt19937_64 rng(17);
  for (int round = 0; round < 200; ++round) {
    const int n = 6 + round % 9;
    std::vector<Mask> gens(1 + rng() % 6);
    for (auto& g : gens) g = rng() & ((Mask{1} << n) - 1);
    const std::size_t words = std::max<std::size_t>(1, (std::size_t{1} << n) / 64);
    std::vector<std::uint64_t> a(words), b(words);
    const Mask base = 0;
    kernels::scalar().upset_membership(gens, base, a);
    simd->upset_membership(gens, base, b);
    CHECK(a == b);

    // A window in the middle of the cube.
    if (n >= 9) {
      std::vector<std::uint64_t> c(3), d(3);
      const Mask offset = 64 * (1 + rng() % ((std::size_t{1} << n) / 64 - 3));
      kernels::scalar().upset_membership(gens, offset, c);
      simd->upset_membership(gens, offset, d);
      CHECK(c == d);
      for (std::size_t bit = 0; bit < 192; ++bit) {
        const Mask code = offset + bit;
        bool in = false;
        for (Mask g : gens) in = in || (g & ~code) == 0;
        CHECK(((c[bit / 64] >> (bit % 64)) & 1) == in);
      }
    }

    const std::size_t count = rng() % 40;
    std::vector<Mask> los(count), his(count);
    for (std::size_t i = 0; i < count; ++i) {
      his[i] = rng() & 0xFFF;
      los[i] = his[i] & rng();
    }
    const Mask hi = rng() & 0xFFF;
    const Mask lo = hi & rng() & rng();
    CHECK(kernels::scalar().first_intersecting(lo, hi, los, his) ==
          simd->first_intersecting(lo, hi, los, his));
  }
}

}  // TEST_SUITE
