#include "dpolar/dega.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace dpolar {

namespace {

constexpr int kQuadNodes = 63;
constexpr double kPsiSaturationMu = 400.0;  // 1 - psi underflows well before this
constexpr double kPsiInvTol = 1e-10;

// Nodes/weights for integral e^{-t^2} f(t) dt (Hermite); Newton iteration on
// the normalized recurrence.
struct GaussHermite {
  std::vector<double> t, w;

  explicit GaussHermite(int n) : t(n), w(n) {
    const double eps = 1e-14;
    const int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
      if (i == 0)
        z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
      else if (i == 1)
        z -= 1.14 * std::pow(n, 0.426) / z;
      else if (i == 2)
        z = 1.86 * z - 0.86 * t[0];
      else if (i == 3)
        z = 1.91 * z - 0.91 * t[1];
      else
        z = 2.0 * z - t[i - 2];
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p1 = 0.7511255444649425;  // pi^(-1/4)
        double p2 = 0.0;
        for (int j = 1; j <= n; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
        }
        pp = std::sqrt(2.0 * n) * p2;
        const double dz = p1 / pp;
        z -= dz;
        if (std::fabs(dz) <= eps) break;
      }
      t[i] = z;
      t[n - 1 - i] = -z;
      w[i] = 2.0 / (pp * pp);
      w[n - 1 - i] = w[i];
    }
  }
};

const GaussHermite& quad() {
  static const GaussHermite gh(kQuadNodes);
  return gh;
}

// 1 - psi(mu) as a direct sum of positive terms; relatively accurate down to
// the underflow of exp.
double phi_quadrature(double mu) {
  const auto& gh = quad();
  const double s = 2.0 * std::sqrt(mu);
  double acc = 0.0;
  for (int i = 0; i < kQuadNodes; ++i) {
    const double x = mu + s * gh.t[i];
    acc += gh.w[i] * 2.0 / (std::exp(x) + 1.0);
  }
  return acc / std::sqrt(std::numbers::pi);
}

template <typename PsiFn>
double psi_inv_impl(double v, PsiFn&& psi_fn) {
  if (v < 0.0 || v >= 1.0) throw std::domain_error("psi_inv: value outside [0, 1)");
  if (v == 0.0) return 0.0;
  double lo = 0.0, hi = kPsiSaturationMu;
  while (hi - lo > kPsiInvTol) {
    const double mid = 0.5 * (lo + hi);
    (psi_fn(mid) < v ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct PsiFuncs {
  double (*value)(double);
  double (*inverse)(double);
};

double psi_inv_fast(double v) { return psi_inv_impl(v, psi_fast); }

PsiFuncs psi_funcs(const DegaOptions& opts) {
  if (opts.fast_psi) return {psi_fast, psi_inv_fast};
  return {psi, psi_inv};
}

}  // namespace

double psi(double mu) {
  if (mu < 0.0) throw std::domain_error("psi: mu must be nonnegative");
  if (mu == 0.0) return 0.0;
  if (mu > kPsiSaturationMu) return 1.0;
  return 1.0 - phi_quadrature(mu);
}

double psi_fast(double mu) {
  if (mu < 0.0) throw std::domain_error("psi: mu must be nonnegative");
  // dense grid, uniform in sqrt(mu)
  constexpr int kPoints = 8192;
  static const std::vector<double> table = [] {
    std::vector<double> t(kPoints);
    for (int i = 0; i < kPoints; ++i) {
      const double r = std::sqrt(kPsiSaturationMu) * i / (kPoints - 1);
      t[i] = psi(r * r);
    }
    return t;
  }();
  if (mu >= kPsiSaturationMu) return 1.0;
  const double pos = std::sqrt(mu) / std::sqrt(kPsiSaturationMu) * (kPoints - 1);
  const int i = std::min(static_cast<int>(pos), kPoints - 2);
  const double frac = pos - i;
  return table[i] + frac * (table[i + 1] - table[i]);
}

double psi_inv(double v) { return psi_inv_impl(v, psi); }

double q_func(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

DegaTree dega_forward(int n, double mu0, const DegaOptions& opts) {
  if (n < 0) throw std::invalid_argument("dega_forward: negative depth");
  if (mu0 < 0.0) throw std::invalid_argument("dega_forward: negative channel mean");

  struct Key {
    int n;
    double mu0;
    bool fast;
    bool operator<(const Key& o) const {
      if (n != o.n) return n < o.n;
      if (mu0 != o.mu0) return mu0 < o.mu0;
      return fast < o.fast;
    }
  };
  static std::map<Key, DegaTree> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({n, mu0, opts.fast_psi});
    if (it != cache.end()) return it->second;
  }

  const PsiFuncs fn = psi_funcs(opts);
  DegaTree tree;
  tree.mu.resize(n + 1);
  tree.mu[0] = {mu0};
  for (int d = 0; d < n; ++d) {
    const auto& cur = tree.mu[d];
    auto& next = tree.mu[d + 1];
    next.resize(cur.size() * 2);
    for (std::size_t m = 0; m < cur.size(); ++m) {
      const double x = cur[m];
      const double p = fn.value(x) * fn.value(x);
      next[2 * m] = (p >= 1.0) ? x : fn.inverse(p);  // check branch degrades
      next[2 * m + 1] = 2.0 * x;
    }
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (cache.size() > 256) cache.clear();
    cache.emplace(Key{n, mu0, opts.fast_psi}, tree);
  }
  return tree;
}

std::vector<double> dega_backward(const DegaTree& tree, const std::vector<int>& frozen_set,
                                  const DegaOptions& opts) {
  const int n = tree.depth();
  const std::size_t n_len = std::size_t{1} << n;
  const PsiFuncs fn = psi_funcs(opts);

  std::vector<double> hi(n_len, 0.0), lo(n_len, 0.0);
  for (int i : frozen_set) {
    if (i < 0 || i >= static_cast<int>(n_len))
      throw std::invalid_argument("dega_backward: frozen index out of range");
    hi[i] = kEtaMax;
  }
  for (int d = n - 1; d >= 0; --d) {
    const std::size_t half = n_len >> (d + 1);
    for (std::size_t m = 0; m < tree.mu[d].size(); ++m) {
      const double mu_d = tree.mu[d][m];
      const std::size_t base = m * 2 * half;
      for (std::size_t j = 0; j < half; ++j) {
        const std::size_t a = base + j, b = base + half + j;
        const double p = fn.value(std::min(hi[a], kEtaMax)) *
                         fn.value(std::min(hi[b] + mu_d, kEtaMax));
        lo[a] = (p >= 1.0) ? kEtaMax : fn.inverse(p);
        const double t = fn.value(std::min(hi[a], kEtaMax)) * fn.value(mu_d);
        lo[b] = std::min(kEtaMax, hi[b] + ((t >= 1.0) ? kEtaMax : fn.inverse(t)));
      }
    }
    std::swap(hi, lo);
  }
  return hi;
}

double sc_error_prob(const std::vector<int>& info_set, const std::vector<double>& leaf_mu) {
  double ok = 1.0;
  for (int i : info_set) ok *= 1.0 - q_func(std::sqrt(leaf_mu.at(i) / 2.0));
  return 1.0 - ok;
}

ExtendedErrorProb extended_error_prob(const DeepCodeSpec& spec, double sigma2,
                                      const DegaOptions& opts) {
  spec.validate();
  if (sigma2 <= 0.0) throw std::invalid_argument("extended_error_prob: sigma2 must be positive");
  const double mu0 = 2.0 / sigma2;

  const DegaTree tree0 = dega_forward(log2_exact(spec.n0), mu0, opts);
  const auto& leaf0 = tree0.leaf_means();

  double ok0 = 1.0;
  for (int i : spec.i0) ok0 *= 1.0 - q_func(std::sqrt(leaf0[i] / 2.0));

  ExtendedErrorProb out;
  out.per_layer.assign(spec.q_count() + 1, 0.0);
  for (std::size_t q = 0; q < spec.q_count(); ++q) {
    const auto& layer = spec.layers[q];
    const DegaTree tree_q = dega_forward(log2_exact(layer.n), mu0, opts);

    // The layer decodes in reversed orientation; eta_rev is indexed by
    // reversed codeword position, so c_{q,j} sees eta_rev[N_q - 1 - j].
    std::vector<Bit> info_rev_mask(layer.n, 0);
    for (int i : layer.info_set) info_rev_mask[layer.n - 1 - i] = 1;
    std::vector<int> frozen_rev, info_rev;
    for (std::size_t i = 0; i < layer.n; ++i)
      (info_rev_mask[i] ? info_rev : frozen_rev).push_back(static_cast<int>(i));
    const std::vector<double> eta_rev = dega_backward(tree_q, frozen_rev, opts);

    for (int j : layer.info_set) {
      const double mu_conn = leaf0[spec.a_sets[q][j]] + eta_rev[layer.n - 1 - j];
      ok0 *= 1.0 - q_func(std::sqrt(mu_conn / 2.0));
    }
    out.per_layer[q + 1] = sc_error_prob(info_rev, tree_q.leaf_means());
  }
  out.pe0 = 1.0 - ok0;
  out.per_layer[0] = out.pe0;

  double ok_all = 1.0;
  for (double pe : out.per_layer) ok_all *= 1.0 - pe;
  out.pe_ub = 1.0 - ok_all;
  return out;
}

DegaProfile make_dega_profile(int n, double sigma2, const std::vector<int>& frozen_set,
                              const DegaOptions& opts) {
  if (sigma2 <= 0.0) throw std::invalid_argument("make_dega_profile: sigma2 must be positive");
  DegaProfile prof;
  prof.design_sigma2 = sigma2;
  const DegaTree tree = dega_forward(n, 2.0 / sigma2, opts);
  prof.mu = tree.leaf_means();
  prof.eta = dega_backward(tree, frozen_set, opts);
  return prof;
}

std::vector<double> bec_evolution(double eps, int n) {
  if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("bec_evolution: eps outside [0, 1]");
  if (n < 0) throw std::invalid_argument("bec_evolution: negative depth");
  std::vector<double> cur{eps};
  for (int d = 0; d < n; ++d) {
    std::vector<double> next(cur.size() * 2);
    for (std::size_t m = 0; m < cur.size(); ++m) {
      const double e = cur[m];
      next[2 * m] = 2.0 * e - e * e;
      next[2 * m + 1] = e * e;
    }
    cur = std::move(next);
  }
  return cur;
}

namespace {

double bec_bound_from(double eps_good, double eps_next) {
  // success: both info leaves correct, or the weaker one erased and guessed
  return 1.0 - (1.0 - eps_next) * (1.0 - eps_good) - 0.5 * eps_next * (1.0 - eps_good);
}

}  // namespace

double bec_example_bound() {
  std::vector<double> eps = bec_evolution(0.5, 2);
  std::sort(eps.begin(), eps.end());
  const double good = std::round(eps[0] * 100.0) / 100.0;   // 0.06
  const double next = std::round(eps[1] * 100.0) / 100.0;   // 0.44
  return bec_bound_from(good, next);
}

double bec_example_bound_exact() {
  std::vector<double> eps = bec_evolution(0.5, 2);
  std::sort(eps.begin(), eps.end());
  return bec_bound_from(eps[0], eps[1]);
}

}  // namespace dpolar
