#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpolar/bitblock.hpp"
#include "dpolar/gf2.hpp"

namespace dpolar {

/// Channel-independent reliability order: a permutation of [0, n_max-1]
/// listed from the most reliable index to the least reliable one.
struct ReliabilitySequence {
  std::vector<int> order;  // most reliable first
  std::string source;      // "5G-table", "DEGA@<snr>", or a file path

  std::size_t n_max() const { return order.size(); }

  /// Entries < n, order preserved. n must be a power of two <= n_max.
  std::vector<int> restrict_to(std::size_t n) const;

  /// Throws unless order is a permutation of [0, n_max-1] with a
  /// power-of-two length.
  void validate() const;
};

/// The NR universal sequence for n_max = 1024 (bundled copy).
const ReliabilitySequence& nr_sequence();

/// FNV-1a 64 hash of the sequence in its file form (one index per line,
/// most reliable first); pins the bundled table.
std::uint64_t sequence_fingerprint(const ReliabilitySequence& seq);

/// Parse a sequence file: one decimal index per line, most reliable first.
ReliabilitySequence load_reliability_sequence(const std::string& path);

/// Reliability order by descending DEGA mean at the given noise variance.
ReliabilitySequence dega_sequence(std::size_t n, double sigma2);

/// A polar code: blocklength, dimension, and the information/frozen split.
struct CodeSpec {
  std::size_t n = 0;            // blocklength, power of two
  std::vector<int> info_set;    // sorted ascending, size k
  std::vector<int> frozen_set;  // complement, sorted ascending

  std::size_t k() const { return info_set.size(); }
  std::vector<Bit> frozen_mask() const;  // 1 = frozen
};

/// Pick the k most reliable indices of seq restricted to n.
CodeSpec build_code_spec(std::size_t n, std::size_t k, const ReliabilitySequence& seq);

CodeSpec make_code_spec(std::size_t n, std::vector<int> info_set);

/// Scatter m over the information set (ascending), zeros elsewhere.
BitBlock expand_message(const CodeSpec& spec, const BitBlock& m);

BitBlock polar_encode(const CodeSpec& spec, const BitBlock& m);

/// u restricted to the information set (ascending).
BitBlock extract_message(const CodeSpec& spec, const BitBlock& u);

}  // namespace dpolar
