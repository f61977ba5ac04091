// AVX2 variants of the data-parallel kernels. Compiled with -mavx2 (no FMA:
// fused rounding would break bit-equivalence with the scalar reference).

#include "dpolar/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstring>

#include "dpolar/llr.hpp"

namespace dpolar::kern {
namespace {

constexpr std::size_t kVec = 4;  // doubles per __m256d

inline __m256d abs_pd(__m256d v) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  return _mm256_andnot_pd(sign_mask, v);
}

void f_minsum_avx2(const double* x, const double* y, double* out, std::size_t n) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + kVec <= n; i += kVec) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    const __m256d sign = _mm256_and_pd(_mm256_xor_pd(vx, vy), sign_mask);
    const __m256d mag = _mm256_min_pd(abs_pd(vx), abs_pd(vy));
    _mm256_storeu_pd(out + i, _mm256_or_pd(mag, sign));
  }
  for (; i < n; ++i) {
    const bool neg = std::signbit(x[i]) != std::signbit(y[i]);
    const double m = std::min(std::fabs(x[i]), std::fabs(y[i]));
    out[i] = neg ? -m : m;
  }
}

void g_combine_avx2(const double* x, const double* y, const std::uint8_t* u, double* out,
                    std::size_t n) {
  const __m256d lo = _mm256_set1_pd(-kLlrMax);
  const __m256d hi = _mm256_set1_pd(kLlrMax);
  std::size_t i = 0;
  for (; i + kVec <= n; i += kVec) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    // u in {0,1}: build a lane mask selecting -x where u is set
    int u_packed;
    std::memcpy(&u_packed, u + i, sizeof(u_packed));
    const __m128i u32 = _mm_cvtepu8_epi32(_mm_cvtsi32_si128(u_packed));
    const __m256d mask = _mm256_castsi256_pd(_mm256_cmpgt_epi64(
        _mm256_cvtepi32_epi64(u32), _mm256_setzero_si256()));
    const __m256d xs = _mm256_blendv_pd(vx, _mm256_xor_pd(vx, _mm256_set1_pd(-0.0)), mask);
    // min/max operand order matches the scalar reference (std::min/std::max)
    __m256d v = _mm256_add_pd(xs, vy);
    v = _mm256_max_pd(v, lo);
    v = _mm256_min_pd(v, hi);
    _mm256_storeu_pd(out + i, v);
  }
  for (; i < n; ++i) {
    const double v = (u[i] ? -x[i] : x[i]) + y[i];
    out[i] = std::min(std::max(v, -kLlrMax), kLlrMax);
  }
}

void xor_bytes_avx2(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

void hard_decision_avx2(const double* llr, std::uint8_t* bits, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kVec <= n; i += kVec) {
    const __m256d v = _mm256_loadu_pd(llr + i);
    const int mask = _mm256_movemask_pd(_mm256_cmp_pd(v, zero, _CMP_LT_OQ));
    bits[i + 0] = (mask >> 0) & 1;
    bits[i + 1] = (mask >> 1) & 1;
    bits[i + 2] = (mask >> 2) & 1;
    bits[i + 3] = (mask >> 3) & 1;
  }
  for (; i < n; ++i) bits[i] = llr[i] < 0.0 ? 1 : 0;
}

const Ops kAvx2{"avx2", f_minsum_avx2, g_combine_avx2, xor_bytes_avx2, hard_decision_avx2};

}  // namespace

const Ops* avx2_ops() {
  return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
}

}  // namespace dpolar::kern

#endif  // x86_64
