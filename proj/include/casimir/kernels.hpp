#pragma once

#include <cstddef>

namespace casimir::kernels {

/// Everything about one Matsubara point that the y-batch does not change.
/// For mode positive_zeta the fields eps/zeta2/em1z2 are used; for zero_zeta
/// only w. half_thickness = d/(2a), +inf for semispaces. The ideal_metal and
/// vacuum modes exist for oracle runs (r = 1 and r = 0 forced).
template <class Real>
struct ProfileT {
  enum class Mode { positive_zeta, zero_zeta, ideal_metal, vacuum };
  Mode mode = Mode::positive_zeta;
  Real eps = Real(1);
  Real zeta2 = Real(0);
  Real em1z2 = Real(0);  // (eps - 1) zeta^2
  Real w = Real(0);      // zero-frequency TE strength
  Real half_thickness = Real(0);
  bool semispace = true;
};

using Profile = ProfileT<double>;
using ProfileL = ProfileT<long double>;

/// f(zeta, y_i) = y ln(1 - r_tm^2 e^{-y}) + y ln(1 - r_te^2 e^{-y}) for a
/// batch of y values sharing one profile.
using BatchFn = void (*)(const Profile&, const double* y, double* f, int n);

/// Portable reference kernel.
void eval_f_scalar(const Profile& p, const double* y, double* f, int n);

/// Extended-precision reference kernel (used by the thermal-correction path).
void eval_f_ld(const ProfileL& p, const long double* y, long double* f, int n);

#if defined(CASIMIR_BUILD_AVX2)
void eval_f_avx2(const Profile& p, const double* y, double* f, int n);
#endif

/// Best kernel the running CPU supports (AVX2+FMA when available, else
/// scalar). force_scalar pins the reference path; the CASIMIR_FORCE_SCALAR
/// environment variable does the same without a rebuild.
BatchFn select_batch(bool force_scalar = false);
const char* selected_name(bool force_scalar = false);

}  // namespace casimir::kernels
