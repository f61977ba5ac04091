#include "dpolar/decode.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <memory>
#include <stdexcept>

#include "dpolar/kernels.hpp"

namespace dpolar {

namespace {

enum class LeafKind : std::uint8_t { frozen, info, conn_info, conn_frozen };

struct LeafPlan {
  LeafKind kind = LeafKind::frozen;
  double lambda = 0.0;          // embedded soft value, conn_info only
  std::vector<int> parity_of;   // leaf positions XORed into a dynamic-frozen bit
};

// One decoding candidate. L and U are (n+1) x N row-major tables indexed by
// depth: row 0 is the channel side, row n the leaves.
struct Path {
  std::vector<double> L;
  std::vector<Bit> U;
  BitBlock u;
  double pm = 0.0;
};

double log_sigmoid(double v) {
  if (v >= 0.0) return -std::log1p(std::exp(-v));
  return v - std::log1p(std::exp(v));
}

class ListEngine {
 public:
  ListEngine(std::size_t n_len, int list_size, const DecodeOptions& opts)
      : N_(n_len), n_(log2_exact(n_len)), L_(list_size), opts_(opts), plan_(n_len) {
    if (list_size < 1) throw std::invalid_argument("list size must be >= 1");
  }

  std::vector<LeafPlan>& plan() { return plan_; }

  void run(const LlrFrame& llr) {
    if (llr.size() != N_) throw std::invalid_argument("decode: LLR length != N");
    paths_.clear();
    pool_.clear();
    auto root = make_path();
    std::copy(llr.values.begin(), llr.values.end(), root->L.begin());
    for (double& v : root->L) v = clamp_llr(v);
    paths_.push_back(std::move(root));

    for (std::size_t i = 0; i < N_; ++i) {
      for (auto& p : paths_) compute_leaf_llr(*p, i);
      process_leaf(i);
      for (auto& p : paths_) propagate_sums(*p, i);
    }
    std::stable_sort(paths_.begin(), paths_.end(),
                     [](const auto& a, const auto& b) { return a->pm < b->pm; });
  }

  std::size_t path_count() const { return paths_.size(); }
  const Path& path(std::size_t idx) const { return *paths_[idx]; }

  // Right-to-left pass over one finished path; returns per-position
  // lambda[i] = L_{0,i} + R_{0,i}.
  std::vector<double> soft_pass(std::size_t idx) const {
    const Path& p = *paths_[idx];
    std::vector<double> r_hi(N_), r_lo(N_);
    for (std::size_t i = 0; i < N_; ++i)
      r_hi[i] = (plan_[i].kind == LeafKind::frozen) ? kLlrMax : 0.0;
    for (int d = static_cast<int>(n_) - 1; d >= 0; --d) {
      const std::size_t half = N_ >> (d + 1);
      const double* Ld = p.L.data() + static_cast<std::size_t>(d) * N_;
      for (std::size_t base = 0; base < N_; base += 2 * half) {
        for (std::size_t j = 0; j < half; ++j) {
          const std::size_t a = base + j, b = base + half + j;
          r_lo[a] = f(r_hi[a], sat_add(r_hi[b], Ld[b]));
          r_lo[b] = sat_add(f(r_hi[a], Ld[a]), r_hi[b]);
        }
      }
      std::swap(r_hi, r_lo);
    }
    for (std::size_t i = 0; i < N_; ++i) r_hi[i] = sat_add(p.L[i], r_hi[i]);
    return r_hi;
  }

 private:
  using PathPtr = std::unique_ptr<Path>;

  PathPtr make_path() {
    PathPtr p;
    if (!pool_.empty()) {
      p = std::move(pool_.back());
      pool_.pop_back();
    } else {
      p = std::make_unique<Path>();
      p->L.resize((n_ + 1) * N_);
      p->U.resize((n_ + 1) * N_);
      p->u = BitBlock(N_);
    }
    std::fill(p->U.begin(), p->U.end(), 0);
    p->pm = 0.0;
    return p;
  }

  PathPtr clone_path(const Path& src) {
    PathPtr p = make_path();
    p->L = src.L;
    p->U = src.U;
    p->u = src.u;
    p->pm = src.pm;
    return p;
  }

  double f(double x, double y) const { return opts_.min_sum ? f_llr_minsum(x, y) : f_llr(x, y); }
  double pm_inc(double llr, Bit u) const {
    return opts_.min_sum ? pm_increment_minsum(llr, u) : pm_increment(llr, u);
  }

  void f_stage(Path& p, int d, std::size_t base, std::size_t half) const {
    const double* src = p.L.data() + static_cast<std::size_t>(d - 1) * N_ + base;
    double* dst = p.L.data() + static_cast<std::size_t>(d) * N_ + base;
    if (opts_.min_sum) {
      kern::active().f_minsum(src, src + half, dst, half);
    } else {
      for (std::size_t j = 0; j < half; ++j) dst[j] = f_llr(src[j], src[half + j]);
    }
  }

  void g_stage(Path& p, int d, std::size_t base, std::size_t half) const {
    const double* src = p.L.data() + static_cast<std::size_t>(d - 1) * N_ + base;
    const Bit* sums = p.U.data() + static_cast<std::size_t>(d) * N_ + base;
    double* dst = p.L.data() + static_cast<std::size_t>(d) * N_ + base + half;
    kern::active().g_combine(src, src + half, sums, dst, half);
  }

  void compute_leaf_llr(Path& p, std::size_t i) const {
    if (i == 0) {
      for (int d = 1; d <= static_cast<int>(n_); ++d) f_stage(p, d, 0, N_ >> d);
      return;
    }
    const int k = std::countr_zero(i);
    const int dg = static_cast<int>(n_) - k;
    const std::size_t base = (i >> (k + 1)) << (k + 1);
    g_stage(p, dg, base, std::size_t{1} << k);
    for (int d = dg + 1; d <= static_cast<int>(n_); ++d) {
      const std::size_t half = N_ >> d;
      f_stage(p, d, (i >> (n_ - d + 1)) << (n_ - d + 1), half);
    }
  }

  void propagate_sums(Path& p, std::size_t i) const {
    std::size_t m = i;
    int d = static_cast<int>(n_);
    while (d > 0 && (m & 1)) {
      const std::size_t half = N_ >> d;
      const std::size_t base = (m >> 1) << (n_ - d + 1);
      Bit* up = p.U.data() + static_cast<std::size_t>(d - 1) * N_ + base;
      const Bit* lo = p.U.data() + static_cast<std::size_t>(d) * N_ + base;
      std::memcpy(up, lo, 2 * half);
      kern::active().xor_bytes(up, lo + half, half);
      m >>= 1;
      --d;
    }
  }

  void set_decision(Path& p, std::size_t i, Bit b, double pm) {
    p.u[i] = b;
    p.U[n_ * N_ + i] = b;
    p.pm = pm;
  }

  void process_leaf(std::size_t i) {
    const LeafPlan& leaf = plan_[i];
    const bool forced = leaf.kind == LeafKind::frozen ||
                        (leaf.kind == LeafKind::conn_frozen && !opts_.free_connections);
    if (forced) {
      for (auto& p : paths_) {
        Bit b = 0;
        if (leaf.kind == LeafKind::conn_frozen)
          for (int src : leaf.parity_of) b ^= p->u[src];
        set_decision(*p, i, b, pm_update_for(*p, i, b, /*with_lambda=*/false));
      }
      return;
    }
    const bool with_lambda = leaf.kind == LeafKind::conn_info;

    struct Cand {
      double pm;
      std::uint32_t parent;
      Bit bit;
    };
    std::vector<Cand> cands;
    cands.reserve(2 * paths_.size());
    for (std::size_t pi = 0; pi < paths_.size(); ++pi) {
      cands.push_back({pm_update_for(*paths_[pi], i, 0, with_lambda),
                       static_cast<std::uint32_t>(pi), 0});
      cands.push_back({pm_update_for(*paths_[pi], i, 1, with_lambda),
                       static_cast<std::uint32_t>(pi), 1});
    }
    const std::size_t keep = std::min<std::size_t>(cands.size(), L_);
    // deterministic: ties resolved by lower parent path index, then bit value
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      if (a.pm != b.pm) return a.pm < b.pm;
      if (a.parent != b.parent) return a.parent < b.parent;
      return a.bit < b.bit;
    });
    cands.resize(keep);

    std::vector<PathPtr> next;
    next.reserve(keep);
    // After set_decision the only state differing between the two children of
    // one parent is (u[i], U[n][i], pm), so the second child can be cloned
    // from its already-decided sibling and re-decided.
    std::vector<int> placed(paths_.size(), -1);
    for (const Cand& c : cands) {
      PathPtr p;
      if (placed[c.parent] < 0) {
        placed[c.parent] = static_cast<int>(next.size());
        p = std::move(paths_[c.parent]);
      } else {
        p = clone_path(*next[placed[c.parent]]);
      }
      set_decision(*p, i, c.bit, c.pm);
      next.push_back(std::move(p));
    }
    for (auto& p : paths_)
      if (p) pool_.push_back(std::move(p));
    paths_ = std::move(next);
  }

  double pm_update_for(const Path& p, std::size_t i, Bit b, bool with_lambda) const {
    double llr = p.L[n_ * N_ + i];
    if (with_lambda) llr = sat_add(llr, plan_[i].lambda);
    return p.pm + pm_inc(llr, b);
  }

  std::size_t N_;
  std::size_t n_;
  std::size_t L_;
  DecodeOptions opts_;
  std::vector<LeafPlan> plan_;
  std::vector<PathPtr> paths_;
  std::vector<PathPtr> pool_;
};

void fill_plain_plan(std::vector<LeafPlan>& plan, const CodeSpec& spec) {
  for (int i : spec.info_set) plan[i].kind = LeafKind::info;
}

// Proper bitwise subsets of j index the earlier connection bits feeding the
// dynamic-frozen parity c_{q,j} = sum_{i subset j} c_{q,i}.
std::vector<int> parity_sources(const DeepLayerView::Layer& layer, int j) {
  std::vector<int> out;
  for (int s = (j - 1) & j;; s = (s - 1) & j) {
    out.push_back(layer.positions[s]);
    if (s == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

SclResult collect_paths(const ListEngine& eng, std::size_t n_len) {
  SclResult out;
  out.paths.reserve(eng.path_count());
  for (std::size_t i = 0; i < eng.path_count(); ++i) {
    const Path& p = eng.path(i);
    DecodedPath dp;
    dp.u = p.u;
    dp.codeword = BitBlock(n_len);
    std::copy(p.U.begin(), p.U.begin() + n_len, dp.codeword.begin());
    dp.pm = p.pm;
    out.paths.push_back(std::move(dp));
  }
  return out;
}

template <typename PayloadFn>
void select_by_crc(SclResult& res, const CrcPoly* crc, PayloadFn&& payload) {
  if (!crc) return;
  res.crc_checked = true;
  for (std::size_t i = 0; i < res.paths.size(); ++i) {
    if (crc_verify(payload(res.paths[i]), *crc)) {
      res.selected = static_cast<int>(i);
      return;
    }
  }
  res.selected = 0;
  res.crc_failed = true;
}

}  // namespace

SclResult scl_decode(const CodeSpec& spec, const LlrFrame& llr, int list_size, const CrcPoly* crc,
                     const DecodeOptions& opts) {
  ListEngine eng(spec.n, list_size, opts);
  fill_plain_plan(eng.plan(), spec);
  eng.run(llr);
  SclResult res = collect_paths(eng, spec.n);
  select_by_crc(res, crc, [&spec](const DecodedPath& p) { return extract_message(spec, p.u); });
  return res;
}

BitBlock sc_decode(const CodeSpec& spec, const LlrFrame& llr, const DecodeOptions& opts) {
  return scl_decode(spec, llr, 1, nullptr, opts).paths.front().u;
}

std::pair<BitBlock, SoftOutput> soscl_decode(const CodeSpec& spec, const LlrFrame& llr,
                                             int list_size, const DecodeOptions& opts) {
  ListEngine eng(spec.n, list_size, opts);
  fill_plain_plan(eng.plan(), spec);
  eng.run(llr);

  SoftOutput soft;
  if (eng.path_count() == 1) {
    soft.lambda = eng.soft_pass(0);
    for (double& v : soft.lambda) v = clamp_llr(v);
    return {eng.path(0).u, std::move(soft)};
  }

  // Probability-domain mixture of the per-path posteriors, path weights
  // exp(-pm); evaluated as logsumexp with the common normalizer cancelling.
  const std::size_t n_paths = eng.path_count();
  std::vector<std::vector<double>> lam(n_paths);
  double pm_min = eng.path(0).pm;
  for (std::size_t p = 0; p < n_paths; ++p) {
    lam[p] = eng.soft_pass(p);
    pm_min = std::min(pm_min, eng.path(p).pm);
  }
  soft.lambda.assign(spec.n, 0.0);
  for (std::size_t i = 0; i < spec.n; ++i) {
    double up = 0.0, dn = 0.0;  // sums of w * sigma(+lam), w * sigma(-lam)
    for (std::size_t p = 0; p < n_paths; ++p) {
      const double logw = pm_min - eng.path(p).pm;
      up += std::exp(logw + log_sigmoid(lam[p][i]));
      dn += std::exp(logw + log_sigmoid(-lam[p][i]));
    }
    soft.lambda[i] = clamp_llr(std::log(up) - std::log(dn));
  }
  return {eng.path(0).u, std::move(soft)};
}

SclResult modified_scl_decode(const DeepLayerView& view, const LlrFrame& llr,
                              const std::vector<double>& lambda, int list_size,
                              const CrcPoly* crc, const DecodeOptions& opts) {
  if (lambda.size() != view.n0)
    throw std::invalid_argument("modified_scl_decode: lambda length != N0");

  ListEngine eng(view.n0, list_size, opts);
  auto& plan = eng.plan();
  for (int i : view.i0) plan[i].kind = LeafKind::info;
  for (const auto& layer : view.layers) {
    for (std::size_t j = 0; j < layer.positions.size(); ++j) {
      const int pos = layer.positions[j];
      if (layer.info_mask[j]) {
        plan[pos].kind = LeafKind::conn_info;
        plan[pos].lambda = clamp_llr(lambda[pos]);
      } else {
        plan[pos].kind = LeafKind::conn_frozen;
        plan[pos].parity_of = parity_sources(layer, static_cast<int>(j));
      }
    }
  }
  for (std::size_t i = 0; i < view.n0; ++i)
    if (lambda[i] != 0.0 && plan[i].kind != LeafKind::conn_info &&
        plan[i].kind != LeafKind::conn_frozen)
      throw std::invalid_argument("modified_scl_decode: nonzero lambda off the connection sets");

  eng.run(llr);
  SclResult res = collect_paths(eng, view.n0);
  select_by_crc(res, crc,
                [&view](const DecodedPath& p) { return assemble_deep_message(view, p.u); });
  return res;
}

BitBlock assemble_deep_message(const DeepLayerView& view, const BitBlock& u0) {
  std::size_t k_total = view.i0.size();
  for (const auto& layer : view.layers) k_total += layer.info_set.size();
  BitBlock msg(k_total);
  std::size_t at = 0;
  for (int i : view.i0) msg[at++] = u0[i];
  for (const auto& layer : view.layers) {
    BitBlock c_q(layer.positions.size());
    for (std::size_t j = 0; j < c_q.size(); ++j) c_q[j] = u0[layer.positions[j]];
    const BitBlock u_q = polar_transform_transposed(c_q);
    for (int i : layer.info_set) msg[at++] = u_q[i];
  }
  return msg;
}

}  // namespace dpolar
