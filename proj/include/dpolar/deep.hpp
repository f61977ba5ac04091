#pragma once

#include <string>
#include <vector>

#include "dpolar/decode.hpp"
#include "dpolar/polar.hpp"

namespace dpolar {

/// One pre-transform layer: an (N_q, K_q) code whose codeword is produced by
/// the transposed polar transform and lands on the connection set A_q.
struct DeepLayerSpec {
  std::size_t n = 0;          // N_q, power of two
  std::vector<int> info_set;  // I_q, sorted ascending

  std::size_t k() const { return info_set.size(); }
};

/// A layered (deep) polar code. Layer 0 is a length-N0 polar code whose input
/// carries m_0 on i0, the layer codewords c_q on a_sets[q-1], and zeros on
/// the remaining (frozen) positions; the emitted codeword is
/// [c_0, c_1, ..., c_Q] with total length M = N0 + sum N_q.
struct DeepCodeSpec {
  std::size_t n0 = 0;
  std::vector<int> i0;                  // I_0, sorted ascending
  std::vector<DeepLayerSpec> layers;    // q = 1..Q
  std::vector<std::vector<int>> a_sets; // A_q, sorted ascending, |A_q| = N_q

  std::size_t q_count() const { return layers.size(); }
  std::size_t total_length() const;  // M
  std::size_t dimension() const;     // K
  std::vector<int> f0() const;       // layer-0 frozen set

  /// Throws unless i0, a_sets and f0 partition [0, N0-1], |A_q| = N_q, and
  /// every N_q is a power of two <= N0.
  void validate() const;
};

/// Powers of two in the binary expansion of m - n0, sorted descending.
/// Requires n0 < m < 2*n0.
std::vector<std::size_t> decompose_extension(std::size_t m, std::size_t n0);

/// Contiguous split of m into (K_0, K_1, ..., K_Q) pieces.
std::vector<BitBlock> split_message(const DeepCodeSpec& spec, const BitBlock& m);

BitBlock deep_encode(const DeepCodeSpec& spec, const BitBlock& m);

/// (c_q * G_q^T) restricted to I_q; inverse of the layer-q pre-transform.
BitBlock invert_pretransform(const BitBlock& c_q, const DeepLayerSpec& layer);

DeepLayerView make_layer_view(const DeepCodeSpec& spec);

struct DeepDecodeResult {
  BitBlock message;  // K bits, layers concatenated (includes CRC bits if any)
  double pm = 0.0;
  bool crc_checked = false;
  bool crc_ok = false;
  bool parity_ok = true;  // every layer frozen constraint holds on the winner
};

/// Per-layer SoSCL over the reversed segments, soft values embedded at the
/// connection sets, then the modified SCL over the layer-0 segment.
DeepDecodeResult deep_decode(const DeepCodeSpec& spec, const LlrFrame& llr, int list_size,
                             const CrcPoly* crc = nullptr, const DecodeOptions& opts = {});

std::string deep_spec_to_json(const DeepCodeSpec& spec);
DeepCodeSpec deep_spec_from_json(const std::string& text);

}  // namespace dpolar
