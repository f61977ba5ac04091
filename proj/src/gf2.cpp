#include "dpolar/gf2.hpp"

#include <algorithm>
#include <stdexcept>

#include "dpolar/kernels.hpp"

namespace dpolar {

void polar_transform_inplace(Bit* bits, std::size_t n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("polar_transform: length not a power of two");
  const auto& ops = kern::active();
  for (std::size_t step = 1; step < n; step <<= 1)
    for (std::size_t blk = 0; blk < n; blk += 2 * step)
      ops.xor_bytes(bits + blk, bits + blk + step, step);
}

BitBlock polar_transform(const BitBlock& u) {
  BitBlock c = u;
  polar_transform_inplace(c.data(), c.size());
  return c;
}

BitBlock polar_transform_transposed(const BitBlock& u) {
  BitBlock r(u.size());
  std::reverse_copy(u.begin(), u.end(), r.begin());
  polar_transform_inplace(r.data(), r.size());
  std::reverse(r.begin(), r.end());
  return r;
}

CrcPoly CrcPoly::from_coeffs(std::vector<Bit> c) {
  if (c.size() < 2) throw std::invalid_argument("CrcPoly: degree must be >= 1");
  for (Bit b : c)
    if (b > 1) throw std::invalid_argument("CrcPoly: coefficient not in {0,1}");
  if (c.front() != 1) throw std::invalid_argument("CrcPoly: leading coefficient must be 1");
  return CrcPoly{std::move(c)};
}

const CrcPoly& CrcPoly::crc11() {
  static const CrcPoly poly = from_coeffs({1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1});
  return poly;
}

namespace {

// Long division of block(x) * x^shift by g(x); returns the remainder as
// degree(poly) bits, most-significant first.
BitBlock crc_remainder(const BitBlock& block, const CrcPoly& poly, int shift) {
  const int r = poly.degree();
  std::vector<Bit> reg(block.size() + shift, 0);
  std::copy(block.begin(), block.end(), reg.begin());
  for (std::size_t i = 0; i + r < reg.size(); ++i) {
    if (!reg[i]) continue;
    for (int j = 0; j <= r; ++j) reg[i + j] ^= poly.coeffs[j];
  }
  BitBlock out(r);
  std::copy(reg.end() - r, reg.end(), out.begin());
  return out;
}

}  // namespace

BitBlock crc_compute(const BitBlock& m, const CrcPoly& poly) {
  if (m.empty()) throw std::invalid_argument("crc_compute: empty message");
  return crc_remainder(m, poly, poly.degree());
}

bool crc_verify(const BitBlock& block, const CrcPoly& poly) {
  if (block.size() <= static_cast<std::size_t>(poly.degree())) return false;
  const BitBlock rem = crc_remainder(block, poly, 0);
  return std::all_of(rem.begin(), rem.end(), [](Bit b) { return b == 0; });
}

BitBlock crc_append(const BitBlock& m, const CrcPoly& poly) {
  const BitBlock crc = crc_compute(m, poly);
  BitBlock out(m.size() + crc.size());
  std::copy(m.begin(), m.end(), out.begin());
  std::copy(crc.begin(), crc.end(), out.begin() + m.size());
  return out;
}

}  // namespace dpolar
