#include <cmath>

#include "casimir/kernels.hpp"
#include "casimir/reflection.hpp"

namespace casimir::kernels {

namespace {

template <class Real>
inline Real f_one(const ProfileT<Real>& p, Real y) {
  using Mode = typename ProfileT<Real>::Mode;
  const Real t = std::exp(-y);
  Real r_tm = Real(1), r_te = Real(1);
  switch (p.mode) {
    case Mode::positive_zeta:
      refl::positive_zeta(p.eps, p.zeta2, p.em1z2, y, p.half_thickness, r_tm,
                          r_te);
      break;
    case Mode::zero_zeta:
      refl::zero_zeta(p.w, y, p.half_thickness, r_tm, r_te);
      break;
    case Mode::ideal_metal:
      r_tm = r_te = Real(1);
      break;
    case Mode::vacuum:
      return Real(0);
  }
  return y * (std::log1p(-r_tm * r_tm * t) + std::log1p(-r_te * r_te * t));
}

}  // namespace

void eval_f_scalar(const Profile& p, const double* y, double* f, int n) {
  for (int i = 0; i < n; ++i) f[i] = f_one(p, y[i]);
}

void eval_f_ld(const ProfileL& p, const long double* y, long double* f, int n) {
  for (int i = 0; i < n; ++i) f[i] = f_one(p, y[i]);
}

}  // namespace casimir::kernels
