#include <cstdlib>

#include "casimir/kernels.hpp"

namespace casimir::kernels {

namespace {

bool env_force_scalar() {
  const char* v = std::getenv("CASIMIR_FORCE_SCALAR");
  return v && v[0] != '\0' && v[0] != '0';
}

bool cpu_has_avx2_fma() {
#if defined(CASIMIR_BUILD_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace

BatchFn select_batch(bool force_scalar) {
  if (force_scalar || env_force_scalar()) return eval_f_scalar;
#if defined(CASIMIR_BUILD_AVX2)
  if (cpu_has_avx2_fma()) return eval_f_avx2;
#endif
  return eval_f_scalar;
}

const char* selected_name(bool force_scalar) {
  if (force_scalar || env_force_scalar()) return "scalar";
#if defined(CASIMIR_BUILD_AVX2)
  if (cpu_has_avx2_fma()) return "avx2";
#endif
  return "scalar";
}

}  // namespace casimir::kernels
