#include "dpolar/ratematch.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpolar {

void RateMatchScheme::validate() const {
  if (!is_power_of_two(n)) throw std::invalid_argument("rate match: mother length not a power of two");
  switch (kind) {
    case RateMatchKind::none:
      if (m != n) throw std::invalid_argument("rate match: kind none needs m == n");
      break;
    case RateMatchKind::puncture:
    case RateMatchKind::shorten:
      if (m >= n || m == 0) throw std::invalid_argument("rate match: puncture/shorten need m < n");
      break;
    case RateMatchKind::repeat:
      if (m <= n || m > 2 * n)
        throw std::invalid_argument("rate match: repeat needs n < m <= 2n");
      break;
  }
}

std::size_t interleaved_index(std::size_t i, std::size_t n) {
  if (n < 32) return i;
  const std::size_t sub = n / 32;
  return static_cast<std::size_t>(kSubblockPattern[i / sub]) * sub + (i % sub);
}

BitBlock subblock_interleave(const BitBlock& c) {
  const std::size_t n = c.size();
  if (n >= 32 && n % 32 != 0)
    throw std::invalid_argument("subblock_interleave: length not divisible by 32");
  BitBlock out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = c[interleaved_index(i, n)];
  return out;
}

BitBlock subblock_deinterleave(const BitBlock& c) {
  const std::size_t n = c.size();
  if (n >= 32 && n % 32 != 0)
    throw std::invalid_argument("subblock_deinterleave: length not divisible by 32");
  BitBlock out(n);
  for (std::size_t i = 0; i < n; ++i) out[interleaved_index(i, n)] = c[i];
  return out;
}

BitBlock rate_match(const BitBlock& c, const RateMatchScheme& scheme) {
  scheme.validate();
  if (c.size() != scheme.n) throw std::invalid_argument("rate_match: codeword length != n");
  const BitBlock inter = subblock_interleave(c);
  BitBlock out(scheme.m);
  switch (scheme.kind) {
    case RateMatchKind::none:
      out = inter;
      break;
    case RateMatchKind::puncture:
      std::copy(inter.begin() + (scheme.n - scheme.m), inter.end(), out.begin());
      break;
    case RateMatchKind::shorten:
      std::copy(inter.begin(), inter.begin() + scheme.m, out.begin());
      break;
    case RateMatchKind::repeat:
      std::copy(inter.begin(), inter.end(), out.begin());
      std::copy(inter.begin(), inter.begin() + (scheme.m - scheme.n), out.begin() + scheme.n);
      break;
  }
  return out;
}

LlrFrame derate_llr(const LlrFrame& rx, const RateMatchScheme& scheme) {
  scheme.validate();
  if (rx.size() != scheme.m) throw std::invalid_argument("derate_llr: LLR length != m");
  std::vector<double> inter(scheme.n, 0.0);
  switch (scheme.kind) {
    case RateMatchKind::none:
      inter.assign(rx.values.begin(), rx.values.end());
      break;
    case RateMatchKind::puncture:
      // first n-m interleaved bits were never sent: unknown, LLR 0
      std::copy(rx.values.begin(), rx.values.end(), inter.begin() + (scheme.n - scheme.m));
      break;
    case RateMatchKind::shorten:
      // last n-m interleaved bits are known zeros
      std::copy(rx.values.begin(), rx.values.end(), inter.begin());
      std::fill(inter.begin() + scheme.m, inter.end(), kLlrMax);
      break;
    case RateMatchKind::repeat:
      std::copy(rx.values.begin(), rx.values.begin() + scheme.n, inter.begin());
      for (std::size_t i = 0; i < scheme.m - scheme.n; ++i)
        inter[i] = sat_add(inter[i], rx.values[scheme.n + i]);
      break;
  }
  LlrFrame out(scheme.n);
  for (std::size_t i = 0; i < scheme.n; ++i) out[interleaved_index(i, scheme.n)] = inter[i];
  out.clamp();
  return out;
}

CodeSpec punctured_frozen_adjust(const CodeSpec& spec, const RateMatchScheme& scheme,
                                 const ReliabilitySequence& seq) {
  if (scheme.kind == RateMatchKind::none) return spec;
  if (scheme.kind != RateMatchKind::puncture)
    throw std::invalid_argument("punctured_frozen_adjust: scheme kind must be puncture or none");
  scheme.validate();
  if (spec.n != scheme.n) throw std::invalid_argument("punctured_frozen_adjust: length mismatch");
  if (spec.k() > scheme.m) throw std::invalid_argument("punctured_frozen_adjust: k > m infeasible");

  // Exact BEC evolution with erasure 1 at punctured positions; a leaf whose
  // erasure stays 1 carries no information and must not hold a message bit.
  std::vector<double> eps(spec.n, 0.0);
  for (std::size_t i = 0; i < scheme.n - scheme.m; ++i) eps[interleaved_index(i, spec.n)] = 1.0;
  const int n_levels = log2_exact(spec.n);
  std::vector<double> next(spec.n);
  for (int d = 0; d < n_levels; ++d) {
    const std::size_t half = spec.n >> (d + 1);
    for (std::size_t base = 0; base < spec.n; base += 2 * half) {
      for (std::size_t j = 0; j < half; ++j) {
        const double x = eps[base + j], y = eps[base + half + j];
        next[base + j] = x + y - x * y;
        next[base + half + j] = x * y;
      }
    }
    std::swap(eps, next);
  }

  std::vector<int> info;
  info.reserve(spec.k());
  for (int idx : seq.restrict_to(spec.n)) {
    if (eps[idx] >= 1.0) continue;
    info.push_back(idx);
    if (info.size() == spec.k()) break;
  }
  if (info.size() != spec.k())
    throw std::invalid_argument("punctured_frozen_adjust: not enough capable positions for k");
  return make_code_spec(spec.n, std::move(info));
}

CodeSpec shortened_frozen_adjust(const CodeSpec& spec, const RateMatchScheme& scheme,
                                 const ReliabilitySequence& seq) {
  if (scheme.kind == RateMatchKind::none) return spec;
  if (scheme.kind != RateMatchKind::shorten)
    throw std::invalid_argument("shortened_frozen_adjust: scheme kind must be shorten or none");
  scheme.validate();
  if (spec.n != scheme.n) throw std::invalid_argument("shortened_frozen_adjust: length mismatch");
  if (spec.k() > scheme.m) throw std::invalid_argument("shortened_frozen_adjust: k > m infeasible");

  // Codeword positions dropped by shortening (de-interleaved domain).
  std::vector<Bit> dropped(spec.n, 0);
  for (std::size_t i = scheme.m; i < scheme.n; ++i) dropped[interleaved_index(i, spec.n)] = 1;

  // c_j depends on u_i iff j is a bitwise subset of i, so u_i must be frozen
  // whenever any dropped j is a subset of i. With the quasi-uniform pattern
  // the dropped set is superset-closed and this reduces to freezing it.
  std::vector<Bit> blocked(spec.n, 0);
  for (std::size_t i = 0; i < spec.n; ++i) {
    if (dropped[i]) {
      blocked[i] = 1;
      continue;
    }
    for (std::size_t j = i;; j = (j - 1) & i) {
      if (dropped[j]) {
        blocked[i] = 1;
        break;
      }
      if (j == 0) break;
    }
  }

  std::vector<int> info;
  info.reserve(spec.k());
  for (int idx : seq.restrict_to(spec.n)) {
    if (blocked[idx]) continue;
    info.push_back(idx);
    if (info.size() == spec.k()) break;
  }
  if (info.size() != spec.k())
    throw std::invalid_argument("shortened_frozen_adjust: not enough usable positions for k");
  return make_code_spec(spec.n, std::move(info));
}

}  // namespace dpolar
