#pragma once

// Vector kernels for arithmetic modulo a word-sized prime p < 2^26.
//
// Residues are carried as doubles in [0, p): products of two residues stay
// below 2^52 and are therefore exact, which lets the AVX2 variant reduce with
// a floating reciprocal instead of 64-bit integer division. The scalar
// variant is the reference and uses plain integer arithmetic.

#include <cstddef>
#include <cstdint>

namespace pvialg::kernels {

inline constexpr std::uint32_t kMaxModulusBits = 26;

struct Modulus {
  std::uint32_t p = 0;
  double pd = 0.0;
  double pinv = 0.0;

  Modulus() = default;
  explicit Modulus(std::uint32_t prime) : p(prime), pd(prime), pinv(1.0 / prime) {}
};

// dst[k] = (dst[k] - s * src[k]) mod p
using SubmulFn = void (*)(double* dst, const double* src, double s, const Modulus& m, std::size_t n);
// dst[k] = (s * dst[k]) mod p
using ScaleFn = void (*)(double* dst, double s, const Modulus& m, std::size_t n);
// dst[k] = (dst[k] + s * src[k]) mod p
using AddmulFn = void (*)(double* dst, const double* src, double s, const Modulus& m, std::size_t n);

struct ModpKernels {
  const char* name;
  SubmulFn submul;
  AddmulFn addmul;
  ScaleFn scale;
};

const ModpKernels& scalar_kernels();

/// AVX2 table, or nullptr when the build has no x86 AVX2 support.
const ModpKernels* avx2_kernels();

bool cpu_supports_avx2();

/// Kernels chosen at first use: AVX2 when both compiled in and supported by
/// the CPU, otherwise scalar. Setting PVIALG_FORCE_SCALAR=1 in the
/// environment pins the scalar table.
const ModpKernels& active_kernels();

}  // namespace pvialg::kernels
