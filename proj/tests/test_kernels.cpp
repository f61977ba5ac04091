#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "dpolar/kernels.hpp"
#include "dpolar/llr.hpp"

using namespace dpolar;

TEST_CASE("f_llr: closed form, symmetry, erasure") {
  // high-precision oracle: direct evaluation of log((1+e^{x+y})/(e^x+e^y))
  auto oracle = [](long double x, long double y) {
    return static_cast<double>(std::log((1.0L + std::exp(x + y)) / (std::exp(x) + std::exp(y))));
  };
  std::mt19937 gen(5);
  std::uniform_real_distribution<double> dist(-30.0, 30.0);
  for (int i = 0; i < 2000; ++i) {
    const double x = dist(gen), y = dist(gen);
    CHECK(f_llr(x, y) == doctest::Approx(oracle(x, y)).epsilon(1e-10));
    CHECK(f_llr(x, y) == f_llr(y, x));
    CHECK(std::fabs(f_llr(x, y)) <= std::min(std::fabs(x), std::fabs(y)) + 1e-12);
    // min-sum upper-bounds the exact magnitude
    CHECK(std::fabs(f_llr_minsum(x, y)) >= std::fabs(f_llr(x, y)) - 1e-12);
  }
  CHECK(f_llr(2.0, 3.0) == doctest::Approx(oracle(2.0, 3.0)).epsilon(1e-12));
  CHECK(f_llr(2.0, 3.0) == doctest::Approx(1.6936).epsilon(2e-4));
  CHECK(f_llr(0.0, 17.0) == 0.0);
  CHECK(f_llr(0.0, -3.0) == 0.0);
}

TEST_CASE("f_llr saturation acts as a known bit") {
  CHECK(f_llr(kLlrMax, 7.0) == 7.0);
  CHECK(f_llr(-kLlrMax, 7.0) == -7.0);
  CHECK(f_llr(kLlrMax, kLlrMax) == kLlrMax);
  CHECK(f_llr(kLlrMax, -kLlrMax) == -kLlrMax);
}

TEST_CASE("g_llr arithmetic and clamping") {
  CHECK(g_llr(1.0, 2.5, 0) == 3.5);
  CHECK(g_llr(1.0, 2.5, 1) == 1.5);
  CHECK(g_llr(3.0, -1.0, 1) == -4.0);
  CHECK(g_llr(30.0, 30.0, 0) == kLlrMax);
  CHECK(g_llr(30.0, -30.0, 1) == -kLlrMax);
}

TEST_CASE("sat_add treats the bound as infinity") {
  CHECK(sat_add(kLlrMax, -39.0) == kLlrMax);
  CHECK(sat_add(-kLlrMax, 39.0) == -kLlrMax);
  CHECK(sat_add(kLlrMax, -kLlrMax) == 0.0);
  CHECK(sat_add(1.25, 2.0) == 3.25);
  CHECK(sat_add(30.0, 30.0) == kLlrMax);
}

TEST_CASE("path metric increments: pinned values") {
  CHECK(pm_increment(0.0, 0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(pm_increment(2.0, 0) == doctest::Approx(0.126928011).epsilon(1e-8));
  CHECK(pm_increment(2.0, 1) == doctest::Approx(2.126928011).epsilon(1e-8));
  CHECK(pm_increment(-2.0, 1) == doctest::Approx(0.126928011).epsilon(1e-8));
  CHECK(pm_increment_minsum(2.0, 0) == 0.0);
  CHECK(pm_increment_minsum(2.0, 1) == 2.0);
}

namespace {

struct SpanCase {
  std::vector<double> x, y;
  std::vector<Bit> u;
};

SpanCase make_case(std::mt19937& gen, std::size_t n) {
  std::uniform_real_distribution<double> dist(-45.0, 45.0);
  SpanCase c;
  c.x.resize(n);
  c.y.resize(n);
  c.u.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    c.x[i] = dist(gen);
    c.y[i] = dist(gen);
    c.u[i] = static_cast<Bit>(gen() & 1);
  }
  if (n >= 4) {
    c.x[0] = 0.0;
    c.x[1] = -0.0;
    c.y[2] = kLlrMax;
    c.y[3] = -kLlrMax;
  }
  return c;
}

}  // namespace

TEST_CASE("SIMD kernel variants are bit-identical to the scalar reference") {
  const auto sets = kern::available();
  CHECK(!sets.empty());
  INFO("active kernels: ", kern::active().name);

  std::mt19937 gen(17);
  const std::size_t sizes[] = {0, 1, 2, 3, 4, 5, 7, 8, 15, 16, 31, 32, 33, 64, 257, 1024};
  for (const auto* ops : sets) {
    CAPTURE(ops->name);
    for (std::size_t n : sizes) {
      SpanCase c = make_case(gen, n);
      std::vector<double> out_ref(n, -1), out_alt(n, -2);
      kern::scalar().f_minsum(c.x.data(), c.y.data(), out_ref.data(), n);
      ops->f_minsum(c.x.data(), c.y.data(), out_alt.data(), n);
      CHECK(std::memcmp(out_ref.data(), out_alt.data(), n * sizeof(double)) == 0);

      kern::scalar().g_combine(c.x.data(), c.y.data(), c.u.data(), out_ref.data(), n);
      ops->g_combine(c.x.data(), c.y.data(), c.u.data(), out_alt.data(), n);
      CHECK(std::memcmp(out_ref.data(), out_alt.data(), n * sizeof(double)) == 0);

      std::vector<Bit> bits_ref(n, 9), bits_alt(n, 8);
      kern::scalar().hard_decision(c.x.data(), bits_ref.data(), n);
      ops->hard_decision(c.x.data(), bits_alt.data(), n);
      CHECK(bits_ref == bits_alt);

      std::vector<Bit> dst_ref(n), dst_alt(n), src(n);
      for (std::size_t i = 0; i < n; ++i) {
        dst_ref[i] = static_cast<Bit>(gen() & 1);
        src[i] = static_cast<Bit>(gen() & 1);
      }
      dst_alt = dst_ref;
      kern::scalar().xor_bytes(dst_ref.data(), src.data(), n);
      ops->xor_bytes(dst_alt.data(), src.data(), n);
      CHECK(dst_ref == dst_alt);
    }
  }
}

TEST_CASE("kernel selection honors names") {
  const std::string before = kern::active().name;
  CHECK(kern::select("scalar"));
  CHECK(std::string(kern::active().name) == "scalar");
  CHECK_FALSE(kern::select("no-such-backend"));
  CHECK(std::string(kern::active().name) == "scalar");
  CHECK(kern::select("auto"));
  CHECK(kern::select(before));  // restore
}
