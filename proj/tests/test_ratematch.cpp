#include <random>

#include "doctest.h"
#include "dpolar/decode.hpp"
#include "dpolar/ratematch.hpp"

using namespace dpolar;

namespace {

BitBlock random_block(std::mt19937& gen, std::size_t n) {
  BitBlock b(n);
  for (auto& bit : b) bit = static_cast<Bit>(gen() & 1);
  return b;
}

LlrFrame noiseless_llr(const BitBlock& c) {
  LlrFrame llr(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) llr[i] = c[i] ? -kLlrMax : kLlrMax;
  return llr;
}

}  // namespace

TEST_CASE("sub-block pattern is the pinned constant") {
  const std::array<int, 32> expected = {0, 1, 2, 4,  3,  5,  6,  7,  8,  16, 9,
                                        17, 10, 18, 11, 19, 12, 20, 13, 21, 14, 22,
                                        15, 23, 24, 25, 26, 28, 27, 29, 30, 31};
  CHECK(kSubblockPattern == expected);
}

TEST_CASE("interleaver: N=32 positions follow the table exactly") {
  BitBlock ramp(32);
  for (int i = 0; i < 32; ++i) ramp[i] = static_cast<Bit>(i % 2);
  const BitBlock inter = subblock_interleave(ramp);
  for (int i = 0; i < 32; ++i) CHECK(inter[i] == ramp[kSubblockPattern[i]]);
}

TEST_CASE("interleaver: inverse property and non-involution") {
  std::mt19937 gen(2);
  for (std::size_t n : {32u, 64u, 128u, 512u}) {
    for (int t = 0; t < 20; ++t) {
      const BitBlock c = random_block(gen, n);
      CHECK(subblock_deinterleave(subblock_interleave(c)) == c);
    }
  }
  // applying the pattern twice is not the identity
  BitBlock probe(32);
  probe[9] = 1;
  CHECK(subblock_interleave(subblock_interleave(probe)) != probe);

  // identity below 32
  const BitBlock small = random_block(gen, 16);
  CHECK(subblock_interleave(small) == small);
  CHECK_THROWS_AS(subblock_interleave(BitBlock(48)), std::invalid_argument);
}

TEST_CASE("rate_match: definitions") {
  std::mt19937 gen(3);
  const BitBlock c = random_block(gen, 32);
  const BitBlock inter = subblock_interleave(c);

  const BitBlock same = rate_match(c, {RateMatchKind::none, 32, 32});
  CHECK(same == inter);

  const BitBlock punct = rate_match(c, {RateMatchKind::puncture, 32, 24});
  for (int i = 0; i < 24; ++i) CHECK(punct[i] == inter[8 + i]);

  const BitBlock shortened = rate_match(c, {RateMatchKind::shorten, 32, 24});
  for (int i = 0; i < 24; ++i) CHECK(shortened[i] == inter[i]);

  const BitBlock rep = rate_match(c, {RateMatchKind::repeat, 32, 40});
  for (int i = 0; i < 32; ++i) CHECK(rep[i] == inter[i]);
  for (int i = 0; i < 8; ++i) CHECK(rep[32 + i] == inter[i]);

  CHECK_THROWS_AS(rate_match(c, {RateMatchKind::repeat, 32, 72}), std::invalid_argument);
  CHECK_THROWS_AS(rate_match(c, {RateMatchKind::puncture, 32, 32}), std::invalid_argument);
}

TEST_CASE("derate_llr: zero, saturated and summed positions") {
  // m == n: deinterleave only
  std::mt19937 gen(4);
  {
    LlrFrame rx(32);
    for (auto& v : rx.values) v = 3.0 * (static_cast<double>(gen() % 1000) / 500.0 - 1.0);
    const LlrFrame out = derate_llr(rx, {RateMatchKind::none, 32, 32});
    for (int i = 0; i < 32; ++i) CHECK(out[interleaved_index(i, 32)] == rx[i]);
  }
  {
    LlrFrame rx(24, 1.0);
    const LlrFrame out = derate_llr(rx, {RateMatchKind::puncture, 32, 24});
    int zeros = 0;
    for (double v : out.values) zeros += (v == 0.0);
    CHECK(zeros == 8);
  }
  {
    LlrFrame rx(24, -0.5);
    const LlrFrame out = derate_llr(rx, {RateMatchKind::shorten, 32, 24});
    int sat = 0;
    for (double v : out.values) sat += (v == kLlrMax);
    CHECK(sat == 8);
  }
  {
    LlrFrame rx(40, 0.0);
    rx[0] = 1.5;
    rx[32] = 0.5;  // second copy of interleaved position 0
    const LlrFrame out = derate_llr(rx, {RateMatchKind::repeat, 32, 40});
    CHECK(out[interleaved_index(0, 32)] == 2.0);
  }
}

TEST_CASE("shortened_frozen_adjust: N=32 M=24 adds exactly 8 pre-frozen indices") {
  const RateMatchScheme scheme{RateMatchKind::shorten, 32, 24};
  const CodeSpec base = build_code_spec(32, 10, nr_sequence());
  const CodeSpec adj = shortened_frozen_adjust(base, scheme, nr_sequence());
  CHECK(adj.k() == base.k());

  // the 8 dropped interleaved positions force those same u-indices to zero
  std::vector<int> dropped;
  for (std::size_t i = 24; i < 32; ++i) dropped.push_back(static_cast<int>(interleaved_index(i, 32)));
  std::sort(dropped.begin(), dropped.end());
  for (int d : dropped)
    CHECK(std::binary_search(adj.frozen_set.begin(), adj.frozen_set.end(), d));

  // exhaustive: every message leaves zeros at every shortened position
  for (std::uint32_t w = 0; w < (1u << 10); ++w) {
    BitBlock m(10);
    for (int j = 0; j < 10; ++j) m[j] = static_cast<Bit>((w >> j) & 1);
    const BitBlock tx = rate_match(polar_encode(adj, m), scheme);
    const BitBlock inter = subblock_interleave(polar_encode(adj, m));
    for (std::size_t i = 24; i < 32; ++i) CHECK(inter[i] == 0);
    CHECK(tx.size() == 24);
  }

  CHECK(shortened_frozen_adjust(base, {RateMatchKind::none, 32, 32}, nr_sequence()).info_set ==
        base.info_set);
  CHECK_THROWS_AS(shortened_frozen_adjust(build_code_spec(32, 30, nr_sequence()), scheme,
                                          nr_sequence()),
                  std::invalid_argument);
}

TEST_CASE("end-to-end noiseless round trip for all four kinds") {
  std::mt19937 gen(6);
  struct Case {
    RateMatchKind kind;
    std::size_t n, m;
  };
  const Case cases[] = {{RateMatchKind::none, 64, 64},
                        {RateMatchKind::puncture, 64, 48},
                        {RateMatchKind::shorten, 64, 48},
                        {RateMatchKind::repeat, 64, 80},
                        {RateMatchKind::puncture, 512, 400},
                        {RateMatchKind::shorten, 512, 400},
                        {RateMatchKind::repeat, 256, 300}};
  for (const auto& c : cases) {
    const RateMatchScheme scheme{c.kind, c.n, c.m};
    const std::size_t k = std::min<std::size_t>(c.m / 2, 40);
    CodeSpec spec = build_code_spec(c.n, k, nr_sequence());
    if (c.kind == RateMatchKind::shorten)
      spec = shortened_frozen_adjust(spec, scheme, nr_sequence());
    else if (c.kind == RateMatchKind::puncture)
      spec = punctured_frozen_adjust(spec, scheme, nr_sequence());
    for (int t = 0; t < 10; ++t) {
      const BitBlock m = random_block(gen, k);
      const BitBlock tx = rate_match(polar_encode(spec, m), scheme);
      const LlrFrame rx = noiseless_llr(tx);
      const BitBlock u = sc_decode(spec, derate_llr(rx, scheme));
      CHECK(extract_message(spec, u) == m);
    }
  }
}
