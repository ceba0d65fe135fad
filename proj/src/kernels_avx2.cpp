// Compiled with -mavx2; only reached after a CPUID check.

#include <immintrin.h>

#include "stanley/kernels.hpp"

namespace stanley::kernels {

namespace {

void upset_membership_avx2(std::span<const Mask> gens, Mask base,
                           std::span<std::uint64_t> out) {
  const __m256i lane_offsets = _mm256_setr_epi64x(0, 1, 2, 3);
  for (std::size_t w = 0; w < out.size(); ++w) {
    std::uint64_t word = 0;
    const Mask start = base + 64 * w;
    for (unsigned b = 0; b < 64; b += 4) {
      const __m256i codes = _mm256_add_epi64(
          _mm256_set1_epi64x(static_cast<long long>(start + b)), lane_offsets);
      __m256i hit = _mm256_setzero_si256();
      for (Mask g : gens) {
        const __m256i gv = _mm256_set1_epi64x(static_cast<long long>(g));
        hit = _mm256_or_si256(
            hit, _mm256_cmpeq_epi64(_mm256_and_si256(codes, gv), gv));
      }
      const auto bits = static_cast<unsigned>(
          _mm256_movemask_pd(_mm256_castsi256_pd(hit)));
      word |= std::uint64_t{bits} << b;
    }
    out[w] = word;
  }
}

std::size_t first_intersecting_avx2(Mask lo, Mask hi,
                                    std::span<const Mask> los,
                                    std::span<const Mask> his) {
  const std::size_t count = los.size();
  const __m256i lo_v = _mm256_set1_epi64x(static_cast<long long>(lo));
  const __m256i hi_v = _mm256_set1_epi64x(static_cast<long long>(hi));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i l = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(los.data() + i));
    const __m256i h = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(his.data() + i));
    const __m256i joined_lo = _mm256_or_si256(lo_v, l);
    const __m256i met_hi = _mm256_and_si256(hi_v, h);
    // andnot(a, b) = ~a & b
    const __m256i outside = _mm256_andnot_si256(met_hi, joined_lo);
    const auto hits = static_cast<unsigned>(_mm256_movemask_pd(
        _mm256_castsi256_pd(_mm256_cmpeq_epi64(outside, zero))));
    if (hits != 0) return i + static_cast<std::size_t>(__builtin_ctz(hits));
  }
  for (; i < count; ++i) {
    if (((lo | los[i]) & ~(hi & his[i])) == 0) return i;
  }
  return count;
}

}  // namespace

const KernelTable* avx2() {
  static const KernelTable table{"avx2", &upset_membership_avx2,
                                 &first_intersecting_avx2};
  static const bool supported = __builtin_cpu_supports("avx2") != 0;
  return supported ? &table : nullptr;
}

}  // namespace stanley::kernels
