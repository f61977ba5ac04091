#include "dpolar/deep.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace dpolar {

std::size_t DeepCodeSpec::total_length() const {
  std::size_t m = n0;
  for (const auto& l : layers) m += l.n;
  return m;
}

std::size_t DeepCodeSpec::dimension() const {
  std::size_t k = i0.size();
  for (const auto& l : layers) k += l.k();
  return k;
}

std::vector<int> DeepCodeSpec::f0() const {
  std::vector<Bit> taken(n0, 0);
  for (int i : i0) taken[i] = 1;
  for (const auto& a : a_sets)
    for (int i : a) taken[i] = 1;
  std::vector<int> out;
  for (std::size_t i = 0; i < n0; ++i)
    if (!taken[i]) out.push_back(static_cast<int>(i));
  return out;
}

void DeepCodeSpec::validate() const {
  if (!is_power_of_two(n0)) throw std::invalid_argument("DeepCodeSpec: N0 not a power of two");
  if (layers.size() != a_sets.size())
    throw std::invalid_argument("DeepCodeSpec: layer/connection-set count mismatch");
  std::vector<Bit> taken(n0, 0);
  auto claim = [&](const std::vector<int>& set, const char* what) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      const int i = set[j];
      if (i < 0 || i >= static_cast<int>(n0) || taken[i])
        throw std::invalid_argument(std::string("DeepCodeSpec: bad or overlapping ") + what);
      if (j > 0 && set[j] <= set[j - 1])
        throw std::invalid_argument(std::string("DeepCodeSpec: unsorted ") + what);
      taken[i] = 1;
    }
  };
  claim(i0, "i0");
  for (std::size_t q = 0; q < layers.size(); ++q) {
    const auto& layer = layers[q];
    if (!is_power_of_two(layer.n) || layer.n > n0)
      throw std::invalid_argument("DeepCodeSpec: bad layer length");
    if (a_sets[q].size() != layer.n)
      throw std::invalid_argument("DeepCodeSpec: |A_q| != N_q");
    claim(a_sets[q], "a_set");
    for (std::size_t j = 0; j < layer.info_set.size(); ++j) {
      const int i = layer.info_set[j];
      if (i < 0 || i >= static_cast<int>(layer.n))
        throw std::invalid_argument("DeepCodeSpec: layer info index out of range");
      if (j > 0 && layer.info_set[j] <= layer.info_set[j - 1])
        throw std::invalid_argument("DeepCodeSpec: unsorted layer info set");
    }
  }
}

std::vector<std::size_t> decompose_extension(std::size_t m, std::size_t n0) {
  if (!is_power_of_two(n0)) throw std::invalid_argument("decompose_extension: N0 not a power of two");
  if (m <= n0 || m >= 2 * n0)
    throw std::out_of_range("decompose_extension: need N0 < M < 2*N0");
  std::vector<std::size_t> out;
  for (std::size_t bit = n0 >> 1; bit > 0; bit >>= 1)
    if ((m - n0) & bit) out.push_back(bit);
  return out;
}

std::vector<BitBlock> split_message(const DeepCodeSpec& spec, const BitBlock& m) {
  if (m.size() != spec.dimension())
    throw std::invalid_argument("split_message: message length != K");
  std::vector<BitBlock> out;
  out.reserve(spec.q_count() + 1);
  std::size_t at = 0;
  auto take = [&](std::size_t k) {
    BitBlock piece(k);
    std::copy(m.begin() + at, m.begin() + at + k, piece.begin());
    at += k;
    return piece;
  };
  out.push_back(take(spec.i0.size()));
  for (const auto& layer : spec.layers) out.push_back(take(layer.k()));
  return out;
}

BitBlock deep_encode(const DeepCodeSpec& spec, const BitBlock& m) {
  spec.validate();
  const std::vector<BitBlock> parts = split_message(spec, m);

  BitBlock u0(spec.n0);
  for (std::size_t j = 0; j < spec.i0.size(); ++j) u0[spec.i0[j]] = parts[0][j];

  std::vector<BitBlock> layer_codewords(spec.q_count());
  for (std::size_t q = 0; q < spec.q_count(); ++q) {
    const auto& layer = spec.layers[q];
    BitBlock u_q(layer.n);
    for (std::size_t j = 0; j < layer.info_set.size(); ++j)
      u_q[layer.info_set[j]] = parts[q + 1][j];
    layer_codewords[q] = polar_transform_transposed(u_q);
    for (std::size_t j = 0; j < layer.n; ++j) u0[spec.a_sets[q][j]] = layer_codewords[q][j];
  }

  const BitBlock c0 = polar_transform(u0);
  BitBlock out(spec.total_length());
  std::copy(c0.begin(), c0.end(), out.begin());
  std::size_t at = spec.n0;
  for (const auto& c_q : layer_codewords) {
    std::copy(c_q.begin(), c_q.end(), out.begin() + at);
    at += c_q.size();
  }
  return out;
}

BitBlock invert_pretransform(const BitBlock& c_q, const DeepLayerSpec& layer) {
  if (c_q.size() != layer.n)
    throw std::invalid_argument("invert_pretransform: length != N_q");
  const BitBlock u_q = polar_transform_transposed(c_q);  // (G^T)^-1 = G^T
  BitBlock m_q(layer.k());
  for (std::size_t j = 0; j < m_q.size(); ++j) m_q[j] = u_q[layer.info_set[j]];
  return m_q;
}

DeepLayerView make_layer_view(const DeepCodeSpec& spec) {
  DeepLayerView view;
  view.n0 = spec.n0;
  view.i0 = spec.i0;
  view.layers.reserve(spec.q_count());
  for (std::size_t q = 0; q < spec.q_count(); ++q) {
    DeepLayerView::Layer l;
    l.positions = spec.a_sets[q];
    l.info_set = spec.layers[q].info_set;
    l.info_mask.assign(spec.layers[q].n, 0);
    for (int i : l.info_set) l.info_mask[i] = 1;
    view.layers.push_back(std::move(l));
  }
  return view;
}

namespace {

// The layer codeword is a transposed polar codeword: reverse(c_q) is a plain
// polar codeword with frozen pattern reversed. Decode the reversed segment
// against that code and map the soft output back to c_q order.
std::vector<double> layer_soft_output(const DeepLayerSpec& layer, const double* seg,
                                      int list_size, const DecodeOptions& opts) {
  const std::size_t nq = layer.n;
  LlrFrame rev(nq);
  for (std::size_t i = 0; i < nq; ++i) rev[i] = seg[nq - 1 - i];

  std::vector<int> info_rev;
  info_rev.reserve(layer.k());
  for (int i : layer.info_set) info_rev.push_back(static_cast<int>(nq) - 1 - i);
  std::sort(info_rev.begin(), info_rev.end());

  auto [u_hat, soft] = soscl_decode(make_code_spec(nq, std::move(info_rev)), rev, list_size, opts);
  (void)u_hat;
  std::vector<double> lambda_q(nq);
  for (std::size_t i = 0; i < nq; ++i) lambda_q[i] = soft.lambda[nq - 1 - i];
  return lambda_q;
}

}  // namespace

DeepDecodeResult deep_decode(const DeepCodeSpec& spec, const LlrFrame& llr, int list_size,
                             const CrcPoly* crc, const DecodeOptions& opts) {
  spec.validate();
  if (llr.size() != spec.total_length())
    throw std::invalid_argument("deep_decode: LLR length != M");

  const DeepLayerView view = make_layer_view(spec);

  std::vector<double> lambda(spec.n0, 0.0);
  std::size_t at = spec.n0;
  for (std::size_t q = 0; q < spec.q_count(); ++q) {
    const auto lambda_q = layer_soft_output(spec.layers[q], llr.data() + at, list_size, opts);
    for (std::size_t j = 0; j < lambda_q.size(); ++j) lambda[spec.a_sets[q][j]] = lambda_q[j];
    at += spec.layers[q].n;
  }

  LlrFrame seg0(std::vector<double>(llr.values.begin(), llr.values.begin() + spec.n0));
  const SclResult res = modified_scl_decode(view, seg0, lambda, list_size, crc, opts);
  const DecodedPath& win = res.paths[res.selected];

  DeepDecodeResult out;
  out.message = assemble_deep_message(view, win.u);
  out.pm = win.pm;
  out.crc_checked = res.crc_checked;
  out.crc_ok = res.crc_checked && !res.crc_failed;
  for (std::size_t q = 0; q < spec.q_count() && out.parity_ok; ++q) {
    const auto& layer = spec.layers[q];
    BitBlock c_q(layer.n);
    for (std::size_t j = 0; j < c_q.size(); ++j) c_q[j] = win.u[spec.a_sets[q][j]];
    const BitBlock u_q = polar_transform_transposed(c_q);
    for (std::size_t j = 0; j < u_q.size() && out.parity_ok; ++j)
      if (u_q[j] != 0 &&
          !std::binary_search(layer.info_set.begin(), layer.info_set.end(), static_cast<int>(j)))
        out.parity_ok = false;
  }
  return out;
}

std::string deep_spec_to_json(const DeepCodeSpec& spec) {
  nlohmann::json j;
  j["n0"] = spec.n0;
  j["i0"] = spec.i0;
  j["layers"] = nlohmann::json::array();
  for (const auto& layer : spec.layers)
    j["layers"].push_back({{"n", layer.n}, {"k", layer.k()}, {"info_set", layer.info_set}});
  j["a_sets"] = spec.a_sets;
  return j.dump(2);
}

DeepCodeSpec deep_spec_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  DeepCodeSpec spec;
  spec.n0 = j.at("n0").get<std::size_t>();
  spec.i0 = j.at("i0").get<std::vector<int>>();
  for (const auto& jl : j.at("layers")) {
    DeepLayerSpec layer;
    layer.n = jl.at("n").get<std::size_t>();
    layer.info_set = jl.at("info_set").get<std::vector<int>>();
    if (jl.contains("k") && jl.at("k").get<std::size_t>() != layer.info_set.size())
      throw std::invalid_argument("deep spec json: k != |info_set|");
    spec.layers.push_back(std::move(layer));
  }
  spec.a_sets = j.at("a_sets").get<std::vector<std::vector<int>>>();
  spec.validate();
  return spec;
}

}  // namespace dpolar
