#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dpolar/dega.hpp"
#include "dpolar/deep.hpp"
#include "dpolar/polar.hpp"

namespace dpolar {

/// Chooses a layer's information set given (N_q, K_q). The default picks the
/// K_q best positions of the reliability sequence in the layer's decode
/// orientation (the pre-transform reverses bit order, so the stored I_q is
/// the reversal of the chosen leaves).
using LayerDesigner = std::function<std::vector<int>(std::size_t n_q, std::size_t k_q)>;

LayerDesigner default_layer_designer(const ReliabilitySequence& seq);

/// Index-set design for deep polar codes: I_0 takes the K_0 most reliable
/// indices, each A_q the next N_q, F_0 the remainder; layer info sets come
/// from the designer.
DeepCodeSpec design_index_sets(std::size_t n0, std::size_t k0,
                               const std::vector<std::pair<std::size_t, std::size_t>>& layer_dims,
                               const ReliabilitySequence& seq,
                               const LayerDesigner& designer = {});

struct ProfilePoint {
  std::vector<std::size_t> k_values;  // K_0 .. K_Q
  double pe0 = 0.0;
  double pe_ub = 0.0;
};

struct ProfileResult {
  DeepCodeSpec spec;
  std::vector<std::size_t> k_values;
  double pe0 = 0.0;
  double pe_ub = 0.0;
  std::size_t evaluations = 0;
  bool fallback = false;               // greedy: some stage found no crossing
  std::vector<ProfilePoint> searched;  // exhaustive: every feasible grid point
};

/// Enumerate every split (K_0..K_Q) with sum K and K_q <= N_q, score each
/// with the DEGA upper bound, return the argmin (ties: lexicographically
/// largest split).
ProfileResult exhaustive_rate_profile(std::size_t n0, const std::vector<std::size_t>& layer_ns,
                                      std::size_t k, double sigma2,
                                      const ReliabilitySequence& seq,
                                      const DegaOptions& opts = {});

/// Crossing-point search: for each layer, the largest K_q whose standalone
/// polar code beats the next layer holding the remaining bits.
ProfileResult greedy_rate_profile(std::size_t n0, const std::vector<std::size_t>& layer_ns,
                                  std::size_t k, double sigma2, const ReliabilitySequence& seq,
                                  const DegaOptions& opts = {});

}  // namespace dpolar
