#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dpolar/bitblock.hpp"

namespace dpolar {

// Saturation bound for all LLR arithmetic. exp(-kLlrMax) underflows the path
// metric increment to zero in double precision, so +/-kLlrMax behaves as a
// perfectly known bit and can stand in for +/-inf.
constexpr double kLlrMax = 40.0;

inline double clamp_llr(double v) { return std::clamp(v, -kLlrMax, kLlrMax); }
inline bool llr_saturated(double v) { return std::fabs(v) >= kLlrMax; }

/// Real-valued LLR vector (natural log), clamped to +/-kLlrMax.
struct LlrFrame {
  std::vector<double> values;

  LlrFrame() = default;
  explicit LlrFrame(std::size_t n, double fill = 0.0) : values(n, fill) {}
  explicit LlrFrame(std::vector<double> v) : values(std::move(v)) { clamp(); }
  LlrFrame(std::initializer_list<double> v) : values(v) { clamp(); }

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
  const double* data() const { return values.data(); }

  void clamp() {
    for (double& v : values) v = clamp_llr(v);
  }
};

/// Check-node update (boxplus). Exact by default; values at the saturation
/// bound are treated as perfectly known bits.
inline double f_llr(double x, double y) {
  const bool neg = std::signbit(x) != std::signbit(y);
  const double ax = std::fabs(x), ay = std::fabs(y);
  const double lo = std::min(ax, ay), hi = std::max(ax, ay);
  if (lo >= kLlrMax) return neg ? -kLlrMax : kLlrMax;
  double r;
  if (hi >= kLlrMax) {
    r = lo;  // boxplus with a known bit passes the other magnitude through
  } else {
    r = lo + std::log1p(std::exp(-(ax + ay))) - std::log1p(std::exp(-(hi - lo)));
  }
  return neg ? -r : r;
}

/// Min-sum approximation of f_llr.
inline double f_llr_minsum(double x, double y) {
  const bool neg = std::signbit(x) != std::signbit(y);
  const double m = std::min(std::fabs(x), std::fabs(y));
  return neg ? -m : m;
}

/// Variable-node update: (1-2u)*x + y, clamped.
inline double g_llr(double x, double y, Bit u) { return clamp_llr((u ? -x : x) + y); }

/// Addition where +/-kLlrMax acts as +/-inf (used when combining extrinsic
/// soft values with channel LLRs).
inline double sat_add(double a, double b) {
  const bool sa = llr_saturated(a), sb = llr_saturated(b);
  if (sa && sb) return (std::signbit(a) == std::signbit(b)) ? a : 0.0;
  if (sa) return a;
  if (sb) return b;
  return clamp_llr(a + b);
}

/// Path metric increment: log(1 + exp(-(1-2u)*llr)), exact form.
inline double pm_increment(double leaf_llr, Bit u_hat) {
  const double t = (u_hat ? -leaf_llr : leaf_llr);
  if (t >= 0.0) return std::log1p(std::exp(-t));
  return -t + std::log1p(std::exp(t));
}

inline double pm_update(double pm, double leaf_llr, Bit u_hat) {
  return pm + pm_increment(leaf_llr, u_hat);
}

/// Hardware-style approximation of the increment: max(0, -(1-2u)*llr).
inline double pm_increment_minsum(double leaf_llr, Bit u_hat) {
  const double t = (u_hat ? -leaf_llr : leaf_llr);
  return t >= 0.0 ? 0.0 : -t;
}

}  // namespace dpolar
