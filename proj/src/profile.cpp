#include "dpolar/profile.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dpolar {

namespace {

std::size_t sum_of(const std::vector<std::size_t>& v, std::size_t from = 0) {
  return std::accumulate(v.begin() + from, v.end(), std::size_t{0});
}

// SC block error estimate of a standalone Polar(n, k) built from seq.
double standalone_pe(std::size_t n, std::size_t k, double mu0, const ReliabilitySequence& seq,
                     const DegaOptions& opts) {
  if (k == 0) return 0.0;
  const CodeSpec spec = build_code_spec(n, k, seq);
  return sc_error_prob(spec.info_set, dega_forward(log2_exact(n), mu0, opts).leaf_means());
}

}  // namespace

LayerDesigner default_layer_designer(const ReliabilitySequence& seq) {
  return [&seq](std::size_t n_q, std::size_t k_q) {
    const std::vector<int> order = seq.restrict_to(n_q);
    std::vector<int> info;
    info.reserve(k_q);
    for (std::size_t r = 0; r < k_q; ++r) info.push_back(static_cast<int>(n_q) - 1 - order[r]);
    std::sort(info.begin(), info.end());
    return info;
  };
}

DeepCodeSpec design_index_sets(std::size_t n0, std::size_t k0,
                               const std::vector<std::pair<std::size_t, std::size_t>>& layer_dims,
                               const ReliabilitySequence& seq, const LayerDesigner& designer) {
  std::size_t need = k0;
  for (const auto& [nq, kq] : layer_dims) {
    if (kq > nq) throw std::invalid_argument("design_index_sets: K_q > N_q");
    need += nq;
  }
  if (need > n0)
    throw std::invalid_argument("design_index_sets: K_0 + sum N_q exceeds N_0");

  const LayerDesigner d = designer ? designer : default_layer_designer(seq);
  const std::vector<int> order = seq.restrict_to(n0);

  DeepCodeSpec spec;
  spec.n0 = n0;
  std::size_t at = 0;
  spec.i0.assign(order.begin(), order.begin() + k0);
  std::sort(spec.i0.begin(), spec.i0.end());
  at += k0;
  for (const auto& [nq, kq] : layer_dims) {
    std::vector<int> a(order.begin() + at, order.begin() + at + nq);
    std::sort(a.begin(), a.end());
    spec.a_sets.push_back(std::move(a));
    at += nq;
    DeepLayerSpec layer;
    layer.n = nq;
    layer.info_set = d(nq, kq);
    std::sort(layer.info_set.begin(), layer.info_set.end());
    if (layer.info_set.size() != kq)
      throw std::invalid_argument("design_index_sets: designer returned wrong K_q");
    spec.layers.push_back(std::move(layer));
  }
  spec.validate();
  return spec;
}

ProfileResult exhaustive_rate_profile(std::size_t n0, const std::vector<std::size_t>& layer_ns,
                                      std::size_t k, double sigma2,
                                      const ReliabilitySequence& seq, const DegaOptions& opts) {
  const std::size_t q_count = layer_ns.size();
  const std::size_t conn_total = sum_of(layer_ns);

  ProfileResult best;
  bool have_best = false;

  std::vector<std::size_t> kq(q_count, 0);  // K_1..K_Q odometer
  ProfileResult out;
  while (true) {
    const std::size_t used = sum_of(kq);
    if (used <= k) {
      const std::size_t k0 = k - used;
      if (k0 + conn_total <= n0) {
        std::vector<std::pair<std::size_t, std::size_t>> dims;
        for (std::size_t q = 0; q < q_count; ++q) dims.emplace_back(layer_ns[q], kq[q]);
        const DeepCodeSpec spec = design_index_sets(n0, k0, dims, seq);
        const ExtendedErrorProb pe = extended_error_prob(spec, sigma2, opts);
        ++out.evaluations;

        ProfilePoint point;
        point.k_values.push_back(k0);
        point.k_values.insert(point.k_values.end(), kq.begin(), kq.end());
        point.pe0 = pe.pe0;
        point.pe_ub = pe.pe_ub;
        out.searched.push_back(point);

        const bool better =
            !have_best || pe.pe_ub < best.pe_ub ||
            (pe.pe_ub == best.pe_ub && point.k_values > best.k_values);
        if (better) {
          have_best = true;
          best.spec = spec;
          best.k_values = point.k_values;
          best.pe0 = pe.pe0;
          best.pe_ub = pe.pe_ub;
        }
      }
    }
    // advance odometer over [0, N_q]
    std::size_t q = 0;
    for (; q < q_count; ++q) {
      if (kq[q] < layer_ns[q]) {
        ++kq[q];
        std::fill(kq.begin(), kq.begin() + q, 0);
        break;
      }
    }
    if (q == q_count) break;
  }
  if (!have_best) throw std::invalid_argument("exhaustive_rate_profile: no feasible split");
  out.spec = best.spec;
  out.k_values = best.k_values;
  out.pe0 = best.pe0;
  out.pe_ub = best.pe_ub;
  return out;
}

ProfileResult greedy_rate_profile(std::size_t n0, const std::vector<std::size_t>& layer_ns,
                                  std::size_t k, double sigma2, const ReliabilitySequence& seq,
                                  const DegaOptions& opts) {
  const std::size_t q_count = layer_ns.size();
  const double mu0 = 2.0 / sigma2;
  auto n_of = [&](std::size_t q) { return q == 0 ? n0 : layer_ns[q - 1]; };

  ProfileResult out;
  std::vector<std::size_t> k_star;
  for (std::size_t q = 0; q < q_count; ++q) {
    const std::size_t used = sum_of(k_star);
    std::size_t remaining_capacity = 0;
    for (std::size_t i = q + 1; i <= q_count; ++i) remaining_capacity += n_of(i);

    bool found = false;
    bool scanned_any = false;
    std::size_t chosen = 0, smallest_scanned = 0;
    for (std::size_t cand = n_of(q); cand >= 1; --cand) {
      if (q == 0 && cand + sum_of(layer_ns) > n0) continue;  // layer-0 capacity
      if (used + cand > k) continue;                         // nothing left over
      const std::size_t rem_after = k - used - cand;
      if (rem_after > remaining_capacity) break;  // smaller K_q only overflows more

      // hypothetical next-layer dimension, reserving one bit per later layer
      const std::size_t reserve = q_count - q;
      std::size_t kbar = 1;
      if (rem_after > reserve)
        kbar = std::min(n_of(q + 1), rem_after - reserve);
      kbar = std::max<std::size_t>(kbar, 1);

      const double pe_q = standalone_pe(n_of(q), cand, mu0, seq, opts);
      const double pe_next = standalone_pe(n_of(q + 1), kbar, mu0, seq, opts);
      ++out.evaluations;
      scanned_any = true;
      smallest_scanned = cand;
      if (pe_q < pe_next) {  // crossing point: largest K_q that still wins
        chosen = cand;
        found = true;
        break;
      }
    }
    if (!found) {
      if (!scanned_any) throw std::invalid_argument("greedy_rate_profile: K infeasible");
      chosen = smallest_scanned;
      out.fallback = true;
    }
    k_star.push_back(chosen);
  }
  const std::size_t used = sum_of(k_star);
  if (used > k) throw std::invalid_argument("greedy_rate_profile: split exceeded K");
  const std::size_t k_last = k - used;
  if (q_count > 0) {
    if (k_last > layer_ns.back())
      throw std::invalid_argument("greedy_rate_profile: final layer overflow");
    k_star.push_back(k_last);
  } else {
    k_star.assign(1, k);
  }

  std::vector<std::pair<std::size_t, std::size_t>> dims;
  for (std::size_t q = 0; q < q_count; ++q) dims.emplace_back(layer_ns[q], k_star[q + 1]);
  out.spec = design_index_sets(n0, k_star[0], dims, seq);
  const ExtendedErrorProb pe = extended_error_prob(out.spec, sigma2, opts);
  out.k_values = k_star;
  out.pe0 = pe.pe0;
  out.pe_ub = pe.pe_ub;
  return out;
}

}  // namespace dpolar
