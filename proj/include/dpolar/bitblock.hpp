#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpolar {

using Bit = std::uint8_t;

/// Fixed-length vector over GF(2). Length is set at construction and never
/// changes; elements are 0/1.
class BitBlock {
 public:
  BitBlock() = default;
  explicit BitBlock(std::size_t n) : bits_(n, 0) {}
  BitBlock(std::initializer_list<int> init) {
    bits_.reserve(init.size());
    for (int b : init) {
      if (b != 0 && b != 1) throw std::invalid_argument("BitBlock: element not in {0,1}");
      bits_.push_back(static_cast<Bit>(b));
    }
  }
  static BitBlock from_bits(std::vector<Bit> v) {
    for (Bit b : v)
      if (b > 1) throw std::invalid_argument("BitBlock: element not in {0,1}");
    BitBlock out;
    out.bits_ = std::move(v);
    return out;
  }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  Bit& operator[](std::size_t i) { return bits_[i]; }
  Bit at(std::size_t i) const { return bits_.at(i); }
  const Bit* data() const { return bits_.data(); }
  Bit* data() { return bits_.data(); }
  auto begin() { return bits_.begin(); }
  auto end() { return bits_.end(); }
  auto begin() const { return bits_.begin(); }
  auto end() const { return bits_.end(); }

  bool operator==(const BitBlock&) const = default;

  BitBlock& operator^=(const BitBlock& other) {
    if (other.size() != size()) throw std::invalid_argument("BitBlock: xor size mismatch");
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
    return *this;
  }
  friend BitBlock operator^(BitBlock a, const BitBlock& b) { return a ^= b; }

  /// "0101..." text form, index 0 first.
  std::string to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (Bit b : bits_) s.push_back(b ? '1' : '0');
    return s;
  }
  static BitBlock from_string(const std::string& s) {
    BitBlock out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        out[i] = 1;
      else if (s[i] != '0')
        throw std::invalid_argument("BitBlock: bad character in bit string");
    }
    return out;
  }

 private:
  std::vector<Bit> bits_;
};

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline int log2_exact(std::size_t n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("length is not a power of two");
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

}  // namespace dpolar
