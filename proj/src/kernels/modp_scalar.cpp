#include "pvialg/kernels/modp.hpp"

namespace pvialg::kernels {

namespace {

inline std::uint64_t to_u(double v) { return static_cast<std::uint64_t>(v); }

void submul_scalar(double* dst, const double* src, double s, const Modulus& m, std::size_t n) {
  const std::uint64_t p = m.p;
  const std::uint64_t su = to_u(s);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t prod = (su * to_u(src[k])) % p;
    std::uint64_t d = to_u(dst[k]);
    dst[k] = static_cast<double>(d >= prod ? d - prod : d + p - prod);
  }
}

void addmul_scalar(double* dst, const double* src, double s, const Modulus& m, std::size_t n) {
  const std::uint64_t p = m.p;
  const std::uint64_t su = to_u(s);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t v = (to_u(dst[k]) + su * to_u(src[k])) % p;
    dst[k] = static_cast<double>(v);
  }
}

void scale_scalar(double* dst, double s, const Modulus& m, std::size_t n) {
  const std::uint64_t p = m.p;
  const std::uint64_t su = to_u(s);
  for (std::size_t k = 0; k < n; ++k) dst[k] = static_cast<double>((su * to_u(dst[k])) % p);
}

constexpr ModpKernels kScalar{"scalar", submul_scalar, addmul_scalar, scale_scalar};

}  // namespace

const ModpKernels& scalar_kernels() { return kScalar; }

}  // namespace pvialg::kernels
