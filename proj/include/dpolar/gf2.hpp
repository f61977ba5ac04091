#pragma once

#include <vector>

#include "dpolar/bitblock.hpp"

namespace dpolar {

/// c = u * F_N over GF(2), F_N the n-th Kronecker power of [[1,0],[1,1]].
/// Butterfly form, O(N log N); index 0 is the leftmost bit, no bit-reversal
/// permutation.
BitBlock polar_transform(const BitBlock& u);

/// u * F_N^T, computed with the identity F^T = J F J (J = index reversal).
BitBlock polar_transform_transposed(const BitBlock& u);

/// In-place transform over a raw bit span (length must be a power of two).
void polar_transform_inplace(Bit* bits, std::size_t n);

/// Cyclic redundancy check polynomial, most-significant coefficient first.
struct CrcPoly {
  std::vector<Bit> coeffs;  // degree+1 coefficients, coeffs[0] = x^degree

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  static CrcPoly from_coeffs(std::vector<Bit> c);
  /// g(x) = x^11 + x^10 + x^9 + x^5 + 1
  static const CrcPoly& crc11();
};

/// Remainder of m(x) * x^r divided by g(x) over GF(2); r parity bits,
/// most-significant first. Zero initial register, no final xor.
BitBlock crc_compute(const BitBlock& m, const CrcPoly& poly);

/// True iff the trailing degree(poly) bits of block are the CRC of the rest.
bool crc_verify(const BitBlock& block, const CrcPoly& poly);

/// message followed by its CRC.
BitBlock crc_append(const BitBlock& m, const CrcPoly& poly);

}  // namespace dpolar
