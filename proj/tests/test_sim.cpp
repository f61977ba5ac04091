#include <cmath>

#include "doctest.h"
#include "dpolar/sim.hpp"

using namespace dpolar;

TEST_CASE("rng: deterministic streams, uniform in range") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t va = a.next();
    CHECK(va == b.next());
    if (va != c.next()) differs = true;
  }
  CHECK(differs);
  Rng u(7);
  for (int i = 0; i < 1000; ++i) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
}

TEST_CASE("rng: gaussian moments") {
  Rng rng(2718);
  const int n = 200000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.gaussian();
    sum += z;
    sum2 += z * z;
  }
  CHECK(std::fabs(sum / n) < 0.01);
  CHECK(sum2 / n == doctest::Approx(1.0).epsilon(2e-2));
}

TEST_CASE("awgn_transmit: noiseless sign pattern and determinism") {
  BitBlock c{0, 1, 1, 0, 1};
  {
    // tiny noise: signs follow 1 - 2c
    Rng rng(5);
    const LlrFrame llr = awgn_transmit(c, 1e-6, rng);
    for (std::size_t i = 0; i < c.size(); ++i)
      CHECK((llr[i] > 0) == (c[i] == 0));
  }
  Rng r1(99), r2(99);
  const LlrFrame a = awgn_transmit(c, 0.5, r1);
  const LlrFrame b = awgn_transmit(c, 0.5, r2);
  CHECK(a.values == b.values);
  CHECK_THROWS_AS(awgn_transmit(c, 0.0, r1), std::invalid_argument);
}

TEST_CASE("awgn_transmit: uncoded BER matches Q(1/sigma)") {
  const double sigma = 1.0;
  const int frames = 200000;
  int errors = 0;
  Rng rng(1234);
  const BitBlock zero{0};
  for (int i = 0; i < frames; ++i) {
    const LlrFrame llr = awgn_transmit(zero, sigma * sigma, rng);
    errors += llr[0] < 0.0;
  }
  const double p = static_cast<double>(errors) / frames;
  const double expect = 0.158655;
  const double sd = std::sqrt(expect * (1 - expect) / frames);
  CHECK(std::fabs(p - expect) < 3.0 * sd + 1e-9);
}

TEST_CASE("sigma2_for: conventions and conversion round trip") {
  CHECK(sigma2_for(0.0, SnrConvention::es_n0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(sigma2_for(3.0, SnrConvention::eb_n0, 0.5) ==
        doctest::Approx(sigma2_for(es_db_from_eb(3.0, 0.5), SnrConvention::es_n0, 0.0))
            .epsilon(1e-12));
  for (double db : {-2.0, 0.0, 1.7, 6.3}) {
    for (double rate : {0.25, 0.5, 0.837}) {
      CHECK(eb_db_from_es(es_db_from_eb(db, rate), rate) == doctest::Approx(db).epsilon(1e-12));
      CHECK(es_db_from_eb(eb_db_from_es(db, rate), rate) == doctest::Approx(db).epsilon(1e-12));
    }
  }
}

TEST_CASE("wilson_ci: sane bounds, shrinks with frames") {
  const auto a = wilson_ci(10, 100);
  CHECK(a.lo > 0.0);
  CHECK(a.hi < 1.0);
  CHECK(a.lo < 0.1);
  CHECK(a.hi > 0.1);
  const auto b = wilson_ci(100, 1000);
  CHECK(b.hi - b.lo < a.hi - a.lo);
  const auto zero = wilson_ci(0, 1000);
  CHECK(zero.lo <= 1e-12);
  CHECK(zero.hi > 0.0);
}

namespace {

SimConfig small_config() {
  SimConfig cfg;
  cfg.scheme.family = SchemeFamily::plain;
  cfg.scheme.rm = RateMatchKind::repeat;
  cfg.scheme.n0 = 32;
  cfg.scheme.m = 40;
  cfg.scheme.k = 12;
  cfg.scheme.crc11 = false;
  cfg.scheme.list_size = 1;
  cfg.snr_db = {1.0, 3.0};
  cfg.max_frames = 2000;
  cfg.min_block_errors = 50;
  cfg.seed = 77;
  cfg.chunk = 128;
  return cfg;
}

}  // namespace

TEST_CASE("run_bler: reproducible records, worker-count independent") {
  const SimConfig cfg = small_config();
  auto r1 = run_bler(cfg);
  auto r2 = run_bler(cfg);
  SimConfig cfg4 = cfg;
  cfg4.workers = 4;
  auto r4 = run_bler(cfg4);
  CHECK(records_to_csv(r1) == records_to_csv(r2));
  CHECK(records_to_csv(r1) == records_to_csv(r4));
  REQUIRE(r1.size() == 2);
  for (const auto& rec : r1) {
    CHECK(rec.bler == doctest::Approx(static_cast<double>(rec.errors) / rec.frames));
    CHECK(rec.bler >= 0.0);
    CHECK(rec.bler <= 1.0);
    CHECK((rec.frames % cfg.chunk == 0 || rec.frames == cfg.max_frames));
  }
  // higher SNR should not be worse on this grid
  CHECK(r1[1].bler <= r1[0].bler + 0.05);
}

TEST_CASE("run_bler: noiseless-grade SNR measures zero errors") {
  SimConfig cfg = small_config();
  cfg.snr_db = {20.0};
  cfg.max_frames = 256;
  cfg.min_block_errors = 1;
  const auto recs = run_bler(cfg);
  CHECK(recs[0].errors == 0);
  CHECK(recs[0].frames == 256);
}

TEST_CASE("csv: pinned header and one line per record") {
  const auto recs = run_bler(small_config());
  const std::string csv = records_to_csv(recs);
  CHECK(csv.rfind("scheme,N0,layers,M,K,crc,list,snr_db,snr_conv,frames,errors,bler,ci_lo,ci_hi,"
                  "seed\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  const std::string json = records_to_json(recs);
  CHECK(json.find("\"scheme\":\"repeat\"") != std::string::npos);
}

TEST_CASE("required_snr: interpolation, exact hits, bracket errors") {
  auto mk = [](double snr, double bler) {
    SimRecord r;
    r.snr_db = snr;
    r.bler = bler;
    return r;
  };
  std::vector<SimRecord> recs{mk(0.0, 1e-2), mk(1.0, 1e-4)};
  CHECK(required_snr(recs, 1e-3) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(required_snr(recs, 1e-2) == 0.0);
  CHECK_THROWS(required_snr(recs, 1e-6));
  CHECK_THROWS(required_snr(recs, 0.5));

  bool flagged = false;
  std::vector<SimRecord> wobble{mk(0.0, 1e-2), mk(1.0, 2e-2), mk(2.0, 1e-4)};
  const double v = required_snr(wobble, 1e-3, &flagged);
  CHECK(flagged);
  CHECK(v > 1.0);
  CHECK(v < 2.0);
}
