#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dpolar::kern {

// Data-parallel inner loops of the encoder/decoder stack. Every entry has a
// scalar reference implementation; AVX2/NEON variants are selected at runtime
// and are bit-identical to the scalar versions (the exact boxplus stays
// scalar because of its transcendental terms).
struct Ops {
  const char* name;
  // out[i] = sign(x[i])sign(y[i]) * min(|x[i]|, |y[i]|)
  void (*f_minsum)(const double* x, const double* y, double* out, std::size_t n);
  // out[i] = clamp((1-2u[i])*x[i] + y[i])
  void (*g_combine)(const double* x, const double* y, const std::uint8_t* u, double* out,
                    std::size_t n);
  // dst[i] ^= src[i]
  void (*xor_bytes)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);
  // bits[i] = llr[i] < 0 (sign bit; -0.0 maps to 0)
  void (*hard_decision)(const double* llr, std::uint8_t* bits, std::size_t n);
};

const Ops& scalar();
const Ops& active();

/// Select a kernel set by name: "auto", "scalar", "avx2", "neon".
/// Returns false (and leaves the selection unchanged) if the request cannot
/// be satisfied on this machine. The DPOLAR_KERNELS environment variable is
/// honored on first use.
bool select(const std::string& name);

/// Kernel sets compiled into this binary and usable on this CPU.
std::vector<const Ops*> available();

}  // namespace dpolar::kern
