#pragma once

#include <vector>

#include "dpolar/deep.hpp"

namespace dpolar {

// Stand-in for an infinite backward mean; psi(kEtaMax) evaluates to exactly
// 1.0, which makes the backward recursion fixed points exact.
constexpr double kEtaMax = 1e6;

struct DegaOptions {
  bool fast_psi = false;  // tabulated piecewise fit instead of quadrature
};

/// psi(mu) = E[tanh(X/2)], X ~ N(mu, 2*mu). Gauss-Hermite quadrature
/// (63 nodes); returns exactly 1.0 once 1 - psi underflows.
double psi(double mu);

/// Piecewise-linear fit of psi over a dense precomputed grid; within 1e-4 of
/// the quadrature everywhere.
double psi_fast(double mu);

/// Monotone bisection inverse on mu in [0, 1e4]; absolute tolerance 1e-10.
/// Throws std::domain_error for v outside [0, 1).
double psi_inv(double v);

/// Standard normal tail Q(x).
double q_func(double x);

/// Mean-LLR evolution table: mu[d] holds the 2^d distinct node means at
/// depth d (depth 0 = channel, depth n = leaves).
struct DegaTree {
  std::vector<std::vector<double>> mu;

  int depth() const { return static_cast<int>(mu.size()) - 1; }
  const std::vector<double>& leaf_means() const { return mu.back(); }
};

/// Forward (left-to-right) recursion from channel mean mu0 = 2/sigma^2.
DegaTree dega_forward(int n, double mu0, const DegaOptions& opts = {});

/// Backward (right-to-left) recursion; frozen leaves start at kEtaMax,
/// information leaves at 0. Returns the per-codeword-position means eta_0.
std::vector<double> dega_backward(const DegaTree& tree, const std::vector<int>& frozen_set,
                                  const DegaOptions& opts = {});

/// 1 - prod_{i in I} (1 - Q(sqrt(mu_i / 2))).
double sc_error_prob(const std::vector<int>& info_set, const std::vector<double>& leaf_mu);

struct ExtendedErrorProb {
  double pe0 = 0.0;               // layer-0 estimate with soft-boosted connections
  double pe_ub = 0.0;             // 1 - prod_q (1 - P_{e,q})
  std::vector<double> per_layer;  // P_{e,q}; index 0 is pe0
};

/// DEGA prediction for an extended deep polar code at noise variance sigma2.
ExtendedErrorProb extended_error_prob(const DeepCodeSpec& spec, double sigma2,
                                      const DegaOptions& opts = {});

/// Per-leaf mean LLRs and backward means for export.
struct DegaProfile {
  std::vector<double> mu;   // leaf means, length N
  std::vector<double> eta;  // backward means at depth 0, length N
  double design_sigma2 = 0.0;
};

DegaProfile make_dega_profile(int n, double sigma2, const std::vector<int>& frozen_set,
                              const DegaOptions& opts = {});

/// Exact BEC polarization: per-leaf erasure probabilities after n levels.
std::vector<double> bec_evolution(double eps, int n);

/// The worked two-layer bound with channel erasures rounded to two decimals
/// (0.44, 0.06): returns 0.2668.
double bec_example_bound();

/// Same bound from the exact erasures 0.4375 / 0.0625: 0.267578125.
double bec_example_bound_exact();

}  // namespace dpolar
