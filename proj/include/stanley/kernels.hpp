#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "stanley/bits.hpp"

// Bit-parallel kernels over squarefree masks. Each kernel has a scalar
// reference implementation and, on x86-64 builds, an AVX2 variant; the
// dispatcher picks one at first use from CPUID. Variants must agree
// bit-for-bit (see tests/test_kernels.cpp).

namespace stanley::kernels {

/// For codes base + 0 .. base + 64*out.size() - 1, sets bit (code - base) of
/// `out` iff some generator mask is a subset of the code. base % 64 == 0.
using UpsetMembershipFn = void (*)(std::span<const Mask> gens, Mask base,
                                   std::span<std::uint64_t> out);

/// Index of the first i with [lo, hi] and [los[i], his[i]] intersecting,
/// or los.size() if none. Squarefree intervals meet iff
/// lo | los[i] is a subset of hi & his[i].
using FirstIntersectingFn = std::size_t (*)(Mask lo, Mask hi,
                                            std::span<const Mask> los,
                                            std::span<const Mask> his);

struct KernelTable {
  const char* name;
  UpsetMembershipFn upset_membership;
  FirstIntersectingFn first_intersecting;
};

const KernelTable& scalar();

/// nullptr when not compiled in or the CPU lacks AVX2.
const KernelTable* avx2();

/// The dispatched table. Setting STANLEY_FORCE_SCALAR=1 in the environment
/// pins the scalar table.
const KernelTable& active();

}  // namespace stanley::kernels
