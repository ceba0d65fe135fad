#include <cstdlib>

#include "stanley/kernels.hpp"

namespace stanley::kernels {

namespace {

void upset_membership_scalar(std::span<const Mask> gens, Mask base,
                             std::span<std::uint64_t> out) {
  for (std::size_t w = 0; w < out.size(); ++w) {
    std::uint64_t word = 0;
    const Mask start = base + 64 * w;
    for (unsigned b = 0; b < 64; ++b) {
      const Mask code = start + b;
      for (Mask g : gens) {
        if ((code & g) == g) {
          word |= std::uint64_t{1} << b;
          break;
        }
      }
    }
    out[w] = word;
  }
}

std::size_t first_intersecting_scalar(Mask lo, Mask hi,
                                      std::span<const Mask> los,
                                      std::span<const Mask> his) {
  for (std::size_t i = 0; i < los.size(); ++i) {
    if (((lo | los[i]) & ~(hi & his[i])) == 0) return i;
  }
  return los.size();
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", &upset_membership_scalar,
                                 &first_intersecting_scalar};
  return table;
}

#if !defined(STANLEY_HAVE_AVX2)
const KernelTable* avx2() { return nullptr; }
#endif

const KernelTable& active() {
  static const KernelTable& chosen = [] () -> const KernelTable& {
    const char* force = std::getenv("STANLEY_FORCE_SCALAR");
    if (force != nullptr && force[0] == '1') return scalar();
    if (const auto* t = avx2()) return *t;
    return scalar();
  }();
  return chosen;
}

}  // namespace stanley::kernels
