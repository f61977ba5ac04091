#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dpolar/decode.hpp"
#include "dpolar/deep.hpp"
#include "dpolar/llr.hpp"
#include "dpolar/ratematch.hpp"

namespace dpolar {

/// xoshiro256++ seeded through splitmix64; self-contained so simulation
/// streams do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  double uniform();   // [0, 1)
  double gaussian();  // N(0, 1), Box-Muller
  Bit bit() { return static_cast<Bit>(next() >> 63); }

 private:
  std::array<std::uint64_t, 4> s_{};
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Per-frame seed: hash(master, snr_index, frame_index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t snr_index,
                          std::uint64_t frame_index);

/// BPSK over AWGN: x = 1 - 2c, y = x + w, LLR = 2y / sigma2 (clamped).
LlrFrame awgn_transmit(const BitBlock& c, double sigma2, Rng& rng);

enum class SnrConvention { es_n0, eb_n0 };

/// Noise variance for an SNR point; rate only matters for Eb/N0.
double sigma2_for(double snr_db, SnrConvention conv, double rate);
double es_db_from_eb(double eb_db, double rate);
double eb_db_from_es(double es_db, double rate);

enum class SchemeFamily { plain, deep };
enum class ProfileMethod { exhaustive, greedy };

struct SchemeConfig {
  SchemeFamily family = SchemeFamily::plain;
  RateMatchKind rm = RateMatchKind::none;  // plain family only
  std::size_t n0 = 0;                      // mother code length
  std::size_t m = 0;                       // transmitted length
  std::size_t k = 0;                       // payload bits, pre-CRC
  bool crc11 = true;
  int list_size = 1;
  ProfileMethod profile = ProfileMethod::exhaustive;
  bool pin_design_snr = false;  // deep: construct once at design_snr_db
  double design_snr_db = 0.0;   // Es/N0 dB when pinned
  DecodeOptions decode;

  std::string name() const;
};

struct SimConfig {
  SchemeConfig scheme;
  std::vector<double> snr_db;
  SnrConvention convention = SnrConvention::es_n0;
  std::uint64_t max_frames = 1000000;
  std::uint64_t min_block_errors = 100;
  std::uint64_t seed = 1;
  int workers = 1;
  // Stopping is evaluated at this frame granularity, so records do not
  // depend on the worker count.
  std::uint64_t chunk = 256;
};

struct SimRecord {
  std::string scheme;
  std::size_t n0 = 0, m = 0, k = 0;
  std::string layers;  // "64", "16+8", ... ; empty for plain schemes
  int crc = 0;
  int list = 1;
  double snr_db = 0.0;
  SnrConvention convention = SnrConvention::es_n0;
  std::uint64_t frames = 0, errors = 0, crc_detected = 0;
  double bler = 0.0, ci_lo = 0.0, ci_hi = 0.0;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;  // diagnostics only; not part of the CSV/JSON
};

std::vector<SimRecord> run_bler(const SimConfig& config);

std::string records_to_csv(const std::vector<SimRecord>& records);
std::string records_to_json(const std::vector<SimRecord>& records);

struct WilsonInterval {
  double lo = 0.0, hi = 0.0;
};
WilsonInterval wilson_ci(std::uint64_t errors, std::uint64_t frames);  // 95%

/// Log-linear interpolation (dB vs log10 BLER) between the first bracketing
/// pair scanning from low SNR. Never extrapolates; throws without a bracket.
double required_snr(const std::vector<SimRecord>& records, double target_bler,
                    bool* flagged_nonmonotone = nullptr);

/// One encode-transmit-decode chain, fixed at a noise level. Stateless
/// across frames; safe to share between workers.
class Pipeline {
 public:
  Pipeline(const SchemeConfig& scheme, double sigma2);

  struct FrameResult {
    bool block_error = false;
    bool crc_detected = false;
  };
  FrameResult run_frame(Rng& rng) const;

  std::size_t payload_bits() const { return scheme_.k; }
  std::string layers_label() const;
  const DeepCodeSpec& deep_spec() const { return deep_spec_; }

 private:
  SchemeConfig scheme_;
  double sigma2_;
  CodeSpec plain_spec_;        // plain family
  RateMatchScheme rm_scheme_;  // plain family
  DeepCodeSpec deep_spec_;     // deep family
  const CrcPoly* crc_ = nullptr;
};

}  // namespace dpolar
