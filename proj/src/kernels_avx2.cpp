// Compiled with -mavx2; only reached when CPUID reports AVX2.
#include <immintrin.h>

#include "imw/kernels.hpp"

namespace imw::kernels::avx2 {

namespace {

inline int mismatch_mask(__m256i lhs, __m256i rhs) {
  __m256i eq = _mm256_cmpeq_epi32(lhs, rhs);
  return ~_mm256_movemask_ps(_mm256_castsi256_ps(eq)) & 0xFF;
}

}  // namespace

std::size_t first_gather_mismatch(const Elem* direct, const Elem* base,
                                  const Elem* idx, std::size_t n) {
  const int* base_i = reinterpret_cast<const int*>(base);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
    __m256i gathered = _mm256_i32gather_epi32(base_i, vi, 4);
    __m256i vd =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(direct + i));
    int mask = mismatch_mask(vd, gathered);
    if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(mask));
  }
  for (; i < n; ++i) {
    if (direct[i] != base[idx[i]]) return i;
  }
  return n;
}

std::size_t first_gather2_mismatch(const Elem* a_base, const Elem* a_idx,
                                   const Elem* b_base, const Elem* b_idx,
                                   std::size_t n) {
  const int* a_base_i = reinterpret_cast<const int*>(a_base);
  const int* b_base_i = reinterpret_cast<const int*>(b_base);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a_idx + i));
    __m256i vb =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b_idx + i));
    int mask = mismatch_mask(_mm256_i32gather_epi32(a_base_i, va, 4),
                             _mm256_i32gather_epi32(b_base_i, vb, 4));
    if (mask != 0) return i + static_cast<std::size_t>(__builtin_ctz(mask));
  }
  for (; i < n; ++i) {
    if (a_base[a_idx[i]] != b_base[b_idx[i]]) return i;
  }
  return n;
}

}  // namespace imw::kernels::avx2
