// NEON variants of the data-parallel kernels (aarch64).

#include "dpolar/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

#include "dpolar/llr.hpp"

namespace dpolar::kern {
namespace {

void f_minsum_neon(const double* x, const double* y, double* out, std::size_t n) {
  const uint64x2_t sign_mask = vdupq_n_u64(0x8000000000000000ull);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t vx = vld1q_f64(x + i);
    const float64x2_t vy = vld1q_f64(y + i);
    const uint64x2_t sign =
        vandq_u64(veorq_u64(vreinterpretq_u64_f64(vx), vreinterpretq_u64_f64(vy)), sign_mask);
    const float64x2_t mag = vminq_f64(vabsq_f64(vx), vabsq_f64(vy));
    vst1q_f64(out + i, vreinterpretq_f64_u64(vorrq_u64(vreinterpretq_u64_f64(mag), sign)));
  }
  for (; i < n; ++i) {
    const bool neg = std::signbit(x[i]) != std::signbit(y[i]);
    const double m = std::min(std::fabs(x[i]), std::fabs(y[i]));
    out[i] = neg ? -m : m;
  }
}

void g_combine_neon(const double* x, const double* y, const std::uint8_t* u, double* out,
                    std::size_t n) {
  const float64x2_t lo = vdupq_n_f64(-kLlrMax);
  const float64x2_t hi = vdupq_n_f64(kLlrMax);
  const uint64x2_t sign_mask = vdupq_n_u64(0x8000000000000000ull);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t vx = vld1q_f64(x + i);
    const float64x2_t vy = vld1q_f64(y + i);
    const uint64x2_t flip =
        vandq_u64(uint64x2_t{u[i] ? ~0ull : 0ull, u[i + 1] ? ~0ull : 0ull}, sign_mask);
    const float64x2_t xs = vreinterpretq_f64_u64(veorq_u64(vreinterpretq_u64_f64(vx), flip));
    float64x2_t v = vaddq_f64(xs, vy);
    v = vmaxq_f64(v, lo);
    v = vminq_f64(v, hi);
    vst1q_f64(out + i, v);
  }
  for (; i < n; ++i) {
    const double v = (u[i] ? -x[i] : x[i]) + y[i];
    out[i] = std::min(std::max(v, -kLlrMax), kLlrMax);
  }
}

void xor_bytes_neon(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16)
    vst1q_u8(dst + i, veorq_u8(vld1q_u8(dst + i), vld1q_u8(src + i)));
  for (; i < n; ++i) dst[i] ^= src[i];
}

void hard_decision_neon(const double* llr, std::uint8_t* bits, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) bits[i] = llr[i] < 0.0 ? 1 : 0;
}

const Ops kNeon{"neon", f_minsum_neon, g_combine_neon, xor_bytes_neon, hard_decision_neon};

}  // namespace

const Ops* neon_ops() { return &kNeon; }

}  // namespace dpolar::kern

#endif  // aarch64
