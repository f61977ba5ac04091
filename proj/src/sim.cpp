#include "dpolar/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dpolar/profile.hpp"

namespace dpolar {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : s_) word = splitmix64(sm);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller; u1 in (0,1] keeps the log finite
  const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t snr_index,
                          std::uint64_t frame_index) {
  std::uint64_t h = master;
  (void)splitmix64(h);
  h ^= 0x517cc1b727220a95ull * (snr_index + 1);
  (void)splitmix64(h);
  h ^= 0x2545f4914f6cdd1dull * (frame_index + 1);
  return splitmix64(h);
}

LlrFrame awgn_transmit(const BitBlock& c, double sigma2, Rng& rng) {
  if (sigma2 <= 0.0) throw std::invalid_argument("awgn_transmit: sigma2 must be positive");
  LlrFrame out(c.size());
  const double scale = 2.0 / sigma2;
  const double sigma = std::sqrt(sigma2);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double x = c[i] ? -1.0 : 1.0;
    out[i] = clamp_llr(scale * (x + sigma * rng.gaussian()));
  }
  return out;
}

double sigma2_for(double snr_db, SnrConvention conv, double rate) {
  const double lin = std::pow(10.0, snr_db / 10.0);
  if (conv == SnrConvention::es_n0) return 1.0 / (2.0 * lin);
  if (rate <= 0.0) throw std::invalid_argument("sigma2_for: rate must be positive for Eb/N0");
  return 1.0 / (2.0 * rate * lin);
}

double es_db_from_eb(double eb_db, double rate) { return eb_db + 10.0 * std::log10(rate); }
double eb_db_from_es(double es_db, double rate) { return es_db - 10.0 * std::log10(rate); }

std::string SchemeConfig::name() const {
  if (family == SchemeFamily::deep) return "deep";
  switch (rm) {
    case RateMatchKind::none: return "none";
    case RateMatchKind::puncture: return "puncture";
    case RateMatchKind::shorten: return "shorten";
    case RateMatchKind::repeat: return "repeat";
  }
  return "?";
}

Pipeline::Pipeline(const SchemeConfig& scheme, double sigma2)
    : scheme_(scheme), sigma2_(sigma2) {
  if (scheme.crc11) crc_ = &CrcPoly::crc11();
  const std::size_t k_coded = scheme.k + (scheme.crc11 ? 11 : 0);

  if (scheme.family == SchemeFamily::plain) {
    rm_scheme_ = RateMatchScheme{scheme.rm, scheme.n0, scheme.m};
    rm_scheme_.validate();
    plain_spec_ = build_code_spec(scheme.n0, k_coded, nr_sequence());
    if (scheme.rm == RateMatchKind::shorten)
      plain_spec_ = shortened_frozen_adjust(plain_spec_, rm_scheme_, nr_sequence());
    else if (scheme.rm == RateMatchKind::puncture)
      plain_spec_ = punctured_frozen_adjust(plain_spec_, rm_scheme_, nr_sequence());
    return;
  }

  // deep: layer sizes from the binary expansion of m - n0, dimension split
  // from the rate profile at the operating (or pinned) noise level
  std::vector<std::size_t> layer_ns;
  if (scheme.m != scheme.n0) layer_ns = decompose_extension(scheme.m, scheme.n0);
  const double design_sigma2 =
      scheme.pin_design_snr ? sigma2_for(scheme.design_snr_db, SnrConvention::es_n0, 0.0)
                            : sigma2;
  const ProfileResult prof =
      scheme.profile == ProfileMethod::exhaustive
          ? exhaustive_rate_profile(scheme.n0, layer_ns, k_coded, design_sigma2, nr_sequence())
          : greedy_rate_profile(scheme.n0, layer_ns, k_coded, design_sigma2, nr_sequence());
  deep_spec_ = prof.spec;
  if (deep_spec_.total_length() != scheme.m)
    throw std::invalid_argument("deep pipeline: M mismatch");
}

std::string Pipeline::layers_label() const {
  if (scheme_.family != SchemeFamily::deep) return "";
  std::ostringstream os;
  for (std::size_t q = 0; q < deep_spec_.q_count(); ++q) {
    if (q) os << "+";
    os << deep_spec_.layers[q].n;
  }
  return os.str();
}

Pipeline::FrameResult Pipeline::run_frame(Rng& rng) const {
  BitBlock payload(scheme_.k);
  for (auto& b : payload) b = rng.bit();
  const BitBlock coded_msg = crc_ ? crc_append(payload, *crc_) : payload;

  FrameResult res;
  BitBlock decoded_payload;
  if (scheme_.family == SchemeFamily::plain) {
    const BitBlock tx = rate_match(polar_encode(plain_spec_, coded_msg), rm_scheme_);
    const LlrFrame rx = awgn_transmit(tx, sigma2_, rng);
    const SclResult dec =
        scl_decode(plain_spec_, derate_llr(rx, rm_scheme_), scheme_.list_size, crc_,
                   scheme_.decode);
    const BitBlock msg_hat = extract_message(plain_spec_, dec.paths[dec.selected].u);
    decoded_payload = BitBlock(scheme_.k);
    std::copy(msg_hat.begin(), msg_hat.begin() + scheme_.k, decoded_payload.begin());
    res.crc_detected = dec.crc_failed;
  } else {
    const BitBlock tx = deep_encode(deep_spec_, coded_msg);
    const LlrFrame rx = awgn_transmit(tx, sigma2_, rng);
    const DeepDecodeResult dec = deep_decode(deep_spec_, rx, scheme_.list_size, crc_,
                                             scheme_.decode);
    decoded_payload = BitBlock(scheme_.k);
    std::copy(dec.message.begin(), dec.message.begin() + scheme_.k, decoded_payload.begin());
    res.crc_detected = dec.crc_checked && !dec.crc_ok;
  }
  res.block_error = !(decoded_payload == payload);
  return res;
}

namespace {

void run_chunk(const Pipeline& pipeline, const SimConfig& cfg, std::size_t snr_index,
               std::uint64_t first_frame, std::vector<Pipeline::FrameResult>& results,
               int workers) {
  const std::size_t todo = results.size();
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      Rng rng(derive_seed(cfg.seed, snr_index, first_frame + i));
      results[i] = pipeline.run_frame(rng);
    }
  };
  if (workers <= 1 || todo < 2) {
    work(0, todo);
    return;
  }
  const std::size_t w = std::min<std::size_t>(workers, todo);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::size_t t = 0; t < w; ++t) {
    const std::size_t lo = todo * t / w;
    const std::size_t hi = todo * (t + 1) / w;
    threads.emplace_back(work, lo, hi);
  }
  for (auto& th : threads) th.join();
}

}  // namespace

std::vector<SimRecord> run_bler(const SimConfig& cfg) {
  if (cfg.min_block_errors < 1 || cfg.max_frames < cfg.min_block_errors)
    throw std::invalid_argument("run_bler: need min_block_errors >= 1 and max_frames >= it");
  if (cfg.chunk < 1) throw std::invalid_argument("run_bler: chunk must be >= 1");

  std::vector<SimRecord> records;
  const double rate = static_cast<double>(cfg.scheme.k) / static_cast<double>(cfg.scheme.m);
  for (std::size_t si = 0; si < cfg.snr_db.size(); ++si) {
    const auto t0 = std::chrono::steady_clock::now();
    const double sigma2 = sigma2_for(cfg.snr_db[si], cfg.convention, rate);
    const Pipeline pipeline(cfg.scheme, sigma2);

    std::uint64_t frames = 0, errors = 0, crc_detected = 0;
    std::vector<Pipeline::FrameResult> results;
    while (frames < cfg.max_frames && errors < cfg.min_block_errors) {
      const std::uint64_t todo = std::min<std::uint64_t>(cfg.chunk, cfg.max_frames - frames);
      results.assign(todo, {});
      run_chunk(pipeline, cfg, si, frames, results, cfg.workers);
      for (const auto& r : results) {
        errors += r.block_error;
        crc_detected += r.crc_detected;
      }
      frames += todo;
    }

    SimRecord rec;
    rec.scheme = cfg.scheme.name();
    rec.n0 = cfg.scheme.n0;
    rec.m = cfg.scheme.m;
    rec.k = cfg.scheme.k;
    rec.layers = pipeline.layers_label();
    rec.crc = cfg.scheme.crc11 ? 11 : 0;
    rec.list = cfg.scheme.list_size;
    rec.snr_db = cfg.snr_db[si];
    rec.convention = cfg.convention;
    rec.frames = frames;
    rec.errors = errors;
    rec.crc_detected = crc_detected;
    rec.bler = frames ? static_cast<double>(errors) / static_cast<double>(frames) : 0.0;
    const WilsonInterval ci = wilson_ci(errors, frames);
    rec.ci_lo = ci.lo;
    rec.ci_hi = ci.hi;
    rec.seed = cfg.seed;
    rec.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    records.push_back(std::move(rec));
  }
  return records;
}

WilsonInterval wilson_ci(std::uint64_t errors, std::uint64_t frames) {
  if (frames == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;  // 95%
  const double n = static_cast<double>(frames);
  const double p = static_cast<double>(errors) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

const char* conv_name(SnrConvention c) { return c == SnrConvention::es_n0 ? "es" : "eb"; }

}  // namespace

std::string records_to_csv(const std::vector<SimRecord>& records) {
  std::ostringstream os;
  os << "scheme,N0,layers,M,K,crc,list,snr_db,snr_conv,frames,errors,bler,ci_lo,ci_hi,seed\n";
  for (const auto& r : records) {
    os << r.scheme << ',' << r.n0 << ',' << r.layers << ',' << r.m << ',' << r.k << ',' << r.crc
       << ',' << r.list << ',' << fmt_double(r.snr_db) << ',' << conv_name(r.convention) << ','
       << r.frames << ',' << r.errors << ',' << fmt_double(r.bler) << ',' << fmt_double(r.ci_lo)
       << ',' << fmt_double(r.ci_hi) << ',' << r.seed << '\n';
  }
  return os.str();
}

std::string records_to_json(const std::vector<SimRecord>& records) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    os << "  {\"scheme\":\"" << r.scheme << "\",\"N0\":" << r.n0 << ",\"layers\":\"" << r.layers
       << "\",\"M\":" << r.m << ",\"K\":" << r.k << ",\"crc\":" << r.crc << ",\"list\":" << r.list
       << ",\"snr_db\":" << fmt_double(r.snr_db) << ",\"snr_conv\":\"" << conv_name(r.convention)
       << "\",\"frames\":" << r.frames << ",\"errors\":" << r.errors
       << ",\"bler\":" << fmt_double(r.bler) << ",\"ci_lo\":" << fmt_double(r.ci_lo)
       << ",\"ci_hi\":" << fmt_double(r.ci_hi) << ",\"seed\":" << r.seed << "}"
       << (i + 1 < records.size() ? "," : "") << "\n";
  }
  os << "]\n";
  return os.str();
}

double required_snr(const std::vector<SimRecord>& records, double target_bler,
                    bool* flagged_nonmonotone) {
  if (target_bler <= 0.0 || target_bler >= 1.0)
    throw std::invalid_argument("required_snr: target outside (0, 1)");
  std::vector<const SimRecord*> pts;
  for (const auto& r : records) pts.push_back(&r);
  std::stable_sort(pts.begin(), pts.end(),
                   [](const SimRecord* a, const SimRecord* b) { return a->snr_db < b->snr_db; });

  if (flagged_nonmonotone) {
    *flagged_nonmonotone = false;
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i]->bler > pts[i - 1]->bler) *flagged_nonmonotone = true;
  }
  for (const auto* p : pts)
    if (p->bler == target_bler) return p->snr_db;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double hi = pts[i - 1]->bler, lo = pts[i]->bler;
    if (lo <= 0.0 || hi <= 0.0) continue;  // log-linear needs positive BLER
    if (hi >= target_bler && target_bler >= lo) {
      const double x0 = pts[i - 1]->snr_db, x1 = pts[i]->snr_db;
      const double t = (std::log10(target_bler) - std::log10(hi)) /
                       (std::log10(lo) - std::log10(hi));
      return x0 + t * (x1 - x0);
    }
  }
  throw std::runtime_error("required_snr: target BLER not bracketed by the records");
}

}  // namespace dpolar
