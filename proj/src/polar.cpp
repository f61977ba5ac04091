#include "dpolar/polar.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dpolar/dega.hpp"

namespace dpolar {

namespace detail {
extern const std::array<int, 1024> kNrSequence1024;
}

std::vector<int> ReliabilitySequence::restrict_to(std::size_t n) const {
  if (!is_power_of_two(n) || n > n_max())
    throw std::invalid_argument("restrict_to: n must be a power of two <= n_max");
  std::vector<int> out;
  out.reserve(n);
  for (int idx : order)
    if (idx < static_cast<int>(n)) out.push_back(idx);
  return out;
}

void ReliabilitySequence::validate() const {
  if (!is_power_of_two(order.size()))
    throw std::invalid_argument("reliability sequence: length not a power of two");
  std::vector<char> seen(order.size(), 0);
  for (int idx : order) {
    if (idx < 0 || idx >= static_cast<int>(order.size()) || seen[idx])
      throw std::invalid_argument("reliability sequence: not a permutation");
    seen[idx] = 1;
  }
}

const ReliabilitySequence& nr_sequence() {
  static const ReliabilitySequence seq = [] {
    ReliabilitySequence s;
    s.order.assign(detail::kNrSequence1024.begin(), detail::kNrSequence1024.end());
    s.source = "5G-table";
    s.validate();
    return s;
  }();
  return seq;
}

std::uint64_t sequence_fingerprint(const ReliabilitySequence& seq) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](char c) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  };
  for (int idx : seq.order) {
    for (char c : std::to_string(idx)) mix(c);
    mix('\n');
  }
  return h;
}

ReliabilitySequence load_reliability_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reliability sequence file: " + path);
  ReliabilitySequence seq;
  seq.source = path;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t pos = 0;
    int v = std::stoi(line, &pos);
    if (pos != line.size())
      throw std::runtime_error("reliability sequence parse error at '" + line + "'");
    seq.order.push_back(v);
  }
  seq.validate();
  return seq;
}

ReliabilitySequence dega_sequence(std::size_t n, double sigma2) {
  if (!is_power_of_two(n)) throw std::invalid_argument("dega_sequence: n not a power of two");
  if (sigma2 <= 0) throw std::invalid_argument("dega_sequence: sigma2 must be positive");
  const std::vector<double> mu = dega_forward(log2_exact(n), 2.0 / sigma2).leaf_means();
  ReliabilitySequence seq;
  seq.order.resize(n);
  std::iota(seq.order.begin(), seq.order.end(), 0);
  std::stable_sort(seq.order.begin(), seq.order.end(),
                   [&mu](int a, int b) { return mu[a] > mu[b]; });
  std::ostringstream tag;
  tag << "DEGA@sigma2=" << sigma2;
  seq.source = tag.str();
  return seq;
}

std::vector<Bit> CodeSpec::frozen_mask() const {
  std::vector<Bit> mask(n, 1);
  for (int i : info_set) mask[i] = 0;
  return mask;
}

CodeSpec make_code_spec(std::size_t n, std::vector<int> info_set) {
  if (!is_power_of_two(n)) throw std::invalid_argument("CodeSpec: n not a power of two");
  std::sort(info_set.begin(), info_set.end());
  if (!info_set.empty() &&
      (info_set.front() < 0 || info_set.back() >= static_cast<int>(n) ||
       std::adjacent_find(info_set.begin(), info_set.end()) != info_set.end()))
    throw std::invalid_argument("CodeSpec: bad information set");
  CodeSpec spec;
  spec.n = n;
  spec.frozen_set.reserve(n - info_set.size());
  std::size_t j = 0;
  for (int i = 0; i < static_cast<int>(n); ++i) {
    if (j < info_set.size() && info_set[j] == i)
      ++j;
    else
      spec.frozen_set.push_back(i);
  }
  spec.info_set = std::move(info_set);
  return spec;
}

CodeSpec build_code_spec(std::size_t n, std::size_t k, const ReliabilitySequence& seq) {
  if (k > n) throw std::invalid_argument("build_code_spec: k > n");
  const std::vector<int> order = seq.restrict_to(n);
  return make_code_spec(n, {order.begin(), order.begin() + k});
}

BitBlock expand_message(const CodeSpec& spec, const BitBlock& m) {
  if (m.size() != spec.k()) throw std::invalid_argument("polar_encode: message length != k");
  BitBlock u(spec.n);
  for (std::size_t j = 0; j < m.size(); ++j) u[spec.info_set[j]] = m[j];
  return u;
}

BitBlock polar_encode(const CodeSpec& spec, const BitBlock& m) {
  return polar_transform(expand_message(spec, m));
}

BitBlock extract_message(const CodeSpec& spec, const BitBlock& u) {
  BitBlock m(spec.k());
  for (std::size_t j = 0; j < m.size(); ++j) m[j] = u[spec.info_set[j]];
  return m;
}

}  // namespace dpolar
