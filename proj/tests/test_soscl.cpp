#include <cmath>

#include "doctest.h"
#include "dpolar/decode.hpp"
#include "dpolar/sim.hpp"

using namespace dpolar;

namespace {

// Exact bit-wise posterior oracle: Lambda_i = log P(x_i=+1|y)/P(x_i=-1|y)
// by enumerating the whole codebook.
std::vector<double> exact_posterior(const CodeSpec& spec, const LlrFrame& llr) {
  std::vector<double> num(spec.n, 0.0), den(spec.n, 0.0);
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << spec.k()); ++w) {
    BitBlock m(spec.k());
    for (std::size_t j = 0; j < spec.k(); ++j) m[j] = static_cast<Bit>((w >> j) & 1);
    const BitBlock c = polar_encode(spec, m);
    double logp = 0.0;
    for (std::size_t i = 0; i < spec.n; ++i) logp -= pm_increment(llr[i], c[i]);
    const double p = std::exp(logp);
    for (std::size_t i = 0; i < spec.n; ++i) (c[i] ? den : num)[i] += p;
  }
  std::vector<double> out(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) out[i] = std::log(num[i] / den[i]);
  return out;
}

}  // namespace

TEST_CASE("soscl: rate-1 code returns the channel LLRs exactly (L=1)") {
  const std::size_t n = 8;
  const CodeSpec spec = build_code_spec(n, n, nr_sequence());
  Rng rng(44);
  LlrFrame llr(n);
  for (auto& v : llr.values) v = 12.0 * (rng.uniform() - 0.5);
  const auto [u, soft] = soscl_decode(spec, llr, 1);
  for (std::size_t i = 0; i < n; ++i) CHECK(soft.lambda[i] == llr[i]);
  (void)u;
}

TEST_CASE("soscl: all-frozen code saturates every position toward the zero codeword") {
  const std::size_t n = 8;
  const CodeSpec spec = make_code_spec(n, {});
  Rng rng(45);
  for (int t = 0; t < 10; ++t) {
    LlrFrame llr(n);
    for (auto& v : llr.values) v = 20.0 * (rng.uniform() - 0.5);
    const auto [u, soft] = soscl_decode(spec, llr, 4);
    for (std::size_t i = 0; i < n; ++i) CHECK(soft.lambda[i] == kLlrMax);
    CHECK(u == BitBlock(n));
  }
}

TEST_CASE("soscl: aggregated sign tracks the exact posterior on a small code") {
  const CodeSpec spec = build_code_spec(4, 2, nr_sequence());
  const double sigma = 0.8;
  std::size_t agree = 0, total = 0;
  for (std::uint64_t f = 0; f < 300; ++f) {
    Rng rng(derive_seed(2024, 2, f));
    BitBlock m(spec.k());
    for (auto& b : m) b = rng.bit();
    const LlrFrame llr = awgn_transmit(polar_encode(spec, m), sigma * sigma, rng);
    const auto [u, soft] = soscl_decode(spec, llr, 4);
    (void)u;
    const std::vector<double> exact = exact_posterior(spec, llr);
    for (std::size_t i = 0; i < spec.n; ++i) {
      ++total;
      if ((soft.lambda[i] < 0) == (exact[i] < 0)) ++agree;
    }
  }
  CHECK(static_cast<double>(agree) / static_cast<double>(total) >= 0.95);
}

TEST_CASE("soscl: soft magnitudes stay clamped") {
  const CodeSpec spec = build_code_spec(16, 5, nr_sequence());
  Rng rng(46);
  LlrFrame llr(16);
  for (auto& v : llr.values) v = 100.0 * (rng.uniform() - 0.5);  // clamps at input
  const auto [u, soft] = soscl_decode(spec, llr, 4);
  (void)u;
  for (double v : soft.lambda) {
    CHECK(std::isfinite(v));
    CHECK(std::fabs(v) <= kLlrMax);
  }
}
