#pragma once

#include <array>
#include <cstddef>

#include "dpolar/llr.hpp"
#include "dpolar/polar.hpp"

namespace dpolar {

enum class RateMatchKind { none, puncture, shorten, repeat };

/// Mother length n (power of two) to target length m: puncture/shorten need
/// m < n, repeat needs n < m <= 2n.
struct RateMatchScheme {
  RateMatchKind kind = RateMatchKind::none;
  std::size_t n = 0;
  std::size_t m = 0;

  void validate() const;
};

// TS 38.212 sub-block permutation; part of the public contract, bit-exact.
inline constexpr std::array<int, 32> kSubblockPattern = {
    0, 1, 2, 4, 3, 5, 6, 7, 8, 16, 9, 17, 10, 18, 11, 19,
    12, 20, 13, 21, 14, 22, 15, 23, 24, 25, 26, 28, 27, 29, 30, 31};

/// 32 equal sub-blocks reordered by kSubblockPattern. Identity for n < 32
/// (the standard pattern is undefined there); otherwise n must be divisible
/// by 32.
BitBlock subblock_interleave(const BitBlock& c);
BitBlock subblock_deinterleave(const BitBlock& c);

/// Interleaved-domain index of output position i (what lands at slot i).
std::size_t interleaved_index(std::size_t i, std::size_t n);

/// Interleave, then drop (puncture: first n-m; shorten: last n-m) or append
/// a copy of the first m-n interleaved bits (repeat).
BitBlock rate_match(const BitBlock& c, const RateMatchScheme& scheme);

/// Receiver counterpart: punctured positions get LLR 0, shortened ones
/// +kLlrMax, repeated observations add; then deinterleave.
LlrFrame derate_llr(const LlrFrame& rx, const RateMatchScheme& scheme);

/// For shortening: additionally freeze every input whose codeword image
/// touches a shortened position, then re-select the k information indices
/// from the remaining reliability order.
CodeSpec shortened_frozen_adjust(const CodeSpec& spec, const RateMatchScheme& scheme,
                                 const ReliabilitySequence& seq);

/// For puncturing: freeze the inputs whose synthetic channel has zero
/// capacity under the punctured pattern (exact BEC evolution with erasure 1
/// at punctured positions), re-selecting the k information indices.
CodeSpec punctured_frozen_adjust(const CodeSpec& spec, const RateMatchScheme& scheme,
                                 const ReliabilitySequence& seq);

}  // namespace dpolar
