#include "dpolar/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>

#include "dpolar/llr.hpp"

namespace dpolar::kern {

namespace {

void f_minsum_scalar(const double* x, const double* y, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const bool neg = std::signbit(x[i]) != std::signbit(y[i]);
    const double m = std::min(std::fabs(x[i]), std::fabs(y[i]));
    out[i] = neg ? -m : m;
  }
}

void g_combine_scalar(const double* x, const double* y, const std::uint8_t* u, double* out,
                      std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = (u[i] ? -x[i] : x[i]) + y[i];
    out[i] = std::min(std::max(v, -kLlrMax), kLlrMax);
  }
}

void xor_bytes_scalar(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void hard_decision_scalar(const double* llr, std::uint8_t* bits, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) bits[i] = llr[i] < 0.0 ? 1 : 0;
}

const Ops kScalar{"scalar", f_minsum_scalar, g_combine_scalar, xor_bytes_scalar,
                  hard_decision_scalar};

const Ops* g_active = nullptr;
std::mutex g_mutex;

const Ops* pick(const std::string& name) {
  for (const Ops* ops : available())
    if (name == ops->name) return ops;
  return nullptr;
}

const Ops* pick_auto() {
  // Prefer the widest vector unit present.
  const auto avail = available();
  return avail.back();
}

}  // namespace

#if defined(__x86_64__) || defined(_M_X64)
const Ops* avx2_ops();  // kernels_avx2.cpp
#endif
#if defined(__aarch64__)
const Ops* neon_ops();  // kernels_neon.cpp
#endif

const Ops& scalar() { return kScalar; }

std::vector<const Ops*> available() {
  std::vector<const Ops*> out{&kScalar};
#if defined(__x86_64__) || defined(_M_X64)
  if (const Ops* ops = avx2_ops()) out.push_back(ops);
#endif
#if defined(__aarch64__)
  if (const Ops* ops = neon_ops()) out.push_back(ops);
#endif
  return out;
}

bool select(const std::string& name) {
  std::lock_guard<std::mutex> lock(g_mutex);
  const Ops* ops = (name == "auto") ? pick_auto() : pick(name);
  if (!ops) return false;
  g_active = ops;
  return true;
}

const Ops& active() {
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    if (!g_active) {
      const char* env = std::getenv("DPOLAR_KERNELS");
      const Ops* ops = env ? pick(env) : nullptr;
      g_active = ops ? ops : pick_auto();
    }
  }
  return *g_active;
}

}  // namespace dpolar::kern
