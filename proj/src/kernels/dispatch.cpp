#include <cstdlib>
#include <cstring>

#include "pvialg/kernels/modp.hpp"

namespace pvialg::kernels {

namespace {

const ModpKernels& choose() {
  const char* force = std::getenv("PVIALG_FORCE_SCALAR");
  if (force && std::strcmp(force, "0") != 0 && *force) return scalar_kernels();
  if (const ModpKernels* k = avx2_kernels(); k && cpu_supports_avx2()) return *k;
  return scalar_kernels();
}

}  // namespace

const ModpKernels& active_kernels() {
  static const ModpKernels& table = choose();
  return table;
}

}  // namespace pvialg::kernels
