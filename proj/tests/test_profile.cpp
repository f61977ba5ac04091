#include <numeric>

#include "doctest.h"
#include "dpolar/profile.hpp"
#include "dpolar/sim.hpp"

using namespace dpolar;

TEST_CASE("design_index_sets: hand execution at N0=8") {
  // most-reliable-first restriction of the universal sequence to 8:
  // (7,6,5,3,4,2,1,0); K0=2 then N1=4 connections
  const DeepCodeSpec spec = design_index_sets(8, 2, {{4, 2}}, nr_sequence());
  CHECK(spec.i0 == std::vector<int>{6, 7});
  CHECK(spec.a_sets[0] == std::vector<int>{2, 3, 4, 5});
  CHECK(spec.f0() == std::vector<int>{0, 1});
}

TEST_CASE("design_index_sets: output partitions [0, N0)") {
  for (std::size_t k0 : {0u, 3u, 9u}) {
    const DeepCodeSpec spec = design_index_sets(32, k0, {{8, 5}, {4, 1}}, nr_sequence());
    std::vector<int> all = spec.i0;
    for (const auto& a : spec.a_sets) all.insert(all.end(), a.begin(), a.end());
    const auto f0 = spec.f0();
    all.insert(all.end(), f0.begin(), f0.end());
    std::sort(all.begin(), all.end());
    std::vector<int> expect(32);
    std::iota(expect.begin(), expect.end(), 0);
    CHECK(all == expect);
    CHECK(spec.a_sets[0].size() == 8);
    CHECK(spec.a_sets[1].size() == 4);
  }
  CHECK_THROWS_AS(design_index_sets(8, 5, {{4, 1}}, nr_sequence()), std::invalid_argument);
}

TEST_CASE("layer designer picks decode-orientation leaves") {
  // N_q=4, K_q=1: the best decode-side leaf is 3, stored reversed as 0
  const auto designer = default_layer_designer(nr_sequence());
  CHECK(designer(4, 1) == std::vector<int>{0});
  CHECK(designer(4, 4) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("exhaustive profile: Q=0 forces K0=K; boundary point is unique") {
  const auto r = exhaustive_rate_profile(32, {}, 12, 0.8, nr_sequence());
  CHECK(r.k_values == std::vector<std::size_t>{12});
  CHECK(r.evaluations == 1);

  // maximum feasible K: every connection bit and every remaining i0 slot used
  const auto full = exhaustive_rate_profile(16, {4}, 12 + 4, 0.8, nr_sequence());
  CHECK(full.k_values == std::vector<std::size_t>{12, 4});
}

TEST_CASE("exhaustive profile: argmin over the full grid, verified by re-enumeration") {
  const std::size_t n0 = 64, k = 40;
  const std::vector<std::size_t> layer_ns = {8, 4};
  const double sigma2 = 0.5;
  const auto r = exhaustive_rate_profile(n0, layer_ns, k, sigma2, nr_sequence());

  // independent second pass over the grid
  std::size_t feasible = 0;
  double best = 2.0;
  for (std::size_t k1 = 0; k1 <= 8; ++k1)
    for (std::size_t k2 = 0; k2 <= 4; ++k2) {
      if (k1 + k2 > k) continue;
      const std::size_t k0 = k - k1 - k2;
      if (k0 + 12 > n0) continue;
      ++feasible;
      const DeepCodeSpec spec =
          design_index_sets(n0, k0, {{8, k1}, {4, k2}}, nr_sequence());
      best = std::min(best, extended_error_prob(spec, sigma2).pe_ub);
    }
  CHECK(r.evaluations == feasible);
  CHECK(r.searched.size() == feasible);
  CHECK(r.pe_ub == doctest::Approx(best).epsilon(1e-12));
  std::size_t sum = 0;
  for (auto v : r.k_values) sum += v;
  CHECK(sum == k);
}

TEST_CASE("greedy profile: splits sum to K") {
  for (std::size_t k : {20u, 40u, 44u}) {
    const auto r = greedy_rate_profile(64, {8, 4}, k, 0.6, nr_sequence());
    std::size_t sum = 0;
    for (auto v : r.k_values) sum += v;
    CHECK(sum == k);
    CHECK(r.k_values.size() == 3);
    CHECK(r.evaluations <= 64 + 8 + 4);
  }
}

TEST_CASE("greedy profile: small K keeps everything in layer 0") {
  // Polar(64, 4) at high SNR is far better than any Polar(8, k) comparison
  const auto r = greedy_rate_profile(64, {8}, 4, 0.2, nr_sequence());
  CHECK(r.k_values == std::vector<std::size_t>{4, 0});
}

TEST_CASE("greedy within 3x of exhaustive on the paper-scale configuration") {
  // operating point: exhaustive pe_ub sits in the 1e-2..3e-1 band here
  const double sigma2 = sigma2_for(1.0, SnrConvention::es_n0, 0.0);
  for (std::size_t k : {80u, 100u}) {
    const auto ex = exhaustive_rate_profile(128, {16, 8}, k, sigma2, nr_sequence());
    const auto gr = greedy_rate_profile(128, {16, 8}, k, sigma2, nr_sequence());
    CHECK(ex.pe_ub <= gr.pe_ub + 1e-15);
    CHECK(gr.pe_ub <= 3.0 * ex.pe_ub + 1e-12);
  }
}
