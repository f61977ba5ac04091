#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dpolar/gf2.hpp"
#include "dpolar/llr.hpp"
#include "dpolar/polar.hpp"

namespace dpolar {

struct DecodeOptions {
  bool min_sum = false;           // hardware-style f and path metric updates
  bool free_connections = false;  // fork frozen-layer connection bits instead
                                  // of forcing their dynamic-frozen parity
};

struct DecodedPath {
  BitBlock u;         // input-domain decisions, length N
  BitBlock codeword;  // re-encoded codeword (partial sums at depth 0)
  double pm = 0.0;    // nondecreasing along the path
};

struct SclResult {
  std::vector<DecodedPath> paths;  // sorted by ascending pm
  int selected = 0;                // CRC winner when a CRC is given, else 0
  bool crc_checked = false;
  bool crc_failed = false;  // CRC given but no path passed

  const DecodedPath& best() const { return paths[selected]; }
};

/// Per-codeword-bit posterior LLRs aggregated over the decoding list.
struct SoftOutput {
  std::vector<double> lambda;
};

BitBlock sc_decode(const CodeSpec& spec, const LlrFrame& llr, const DecodeOptions& opts = {});

SclResult scl_decode(const CodeSpec& spec, const LlrFrame& llr, int list_size,
                     const CrcPoly* crc = nullptr, const DecodeOptions& opts = {});

/// SCL followed by the right-to-left soft pass; returns the best path's
/// decisions and the aggregated soft output.
std::pair<BitBlock, SoftOutput> soscl_decode(const CodeSpec& spec, const LlrFrame& llr,
                                             int list_size, const DecodeOptions& opts = {});

/// Projection of a layered code consumed by modified_scl_decode: the layer-0
/// split plus, per pre-transform layer, the connection positions (ascending)
/// and that layer's information pattern.
struct DeepLayerView {
  struct Layer {
    std::vector<int> positions;  // A_q, ascending; positions[j] carries c_{q,j}
    std::vector<int> info_set;   // I_q (layer input domain)
    std::vector<Bit> info_mask;  // length N_q, 1 = information
  };
  std::size_t n0 = 0;
  std::vector<int> i0;
  std::vector<Layer> layers;
};

/// SCL over the layer-0 code where connection leaves consume embedded soft
/// information: information-coupled leaves fork with L + lambda, frozen-layer
/// leaves are dynamically frozen to the causal GF(2) parity of earlier
/// connection decisions (default) or fork freely (opts.free_connections).
/// lambda must be zero outside connection positions.
SclResult modified_scl_decode(const DeepLayerView& view, const LlrFrame& llr,
                              const std::vector<double>& lambda, int list_size,
                              const CrcPoly* crc = nullptr, const DecodeOptions& opts = {});

/// Assemble the concatenated message [m_0, m_1, ..., m_Q] from a layer-0
/// input vector by inverting each layer's pre-transform.
BitBlock assemble_deep_message(const DeepLayerView& view, const BitBlock& u0);

}  // namespace dpolar
