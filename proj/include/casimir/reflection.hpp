#pragma once

#include <cmath>

#include "casimir/dielectric.hpp"
#include "casimir/frame.hpp"

namespace casimir {

struct ReflectionPair {
  double r_tm;
  double r_te;
};

/// coth(z) in the overflow-safe form (1 + e^{-2z})/(1 - e^{-2z}); exactly 1
/// for z > 350 or z = +inf.
template <class Real>
inline Real coth_stable(Real z) {
  if (z > Real(350) || std::isinf(z)) return Real(1);
  const Real e = std::exp(Real(-2) * z);
  return (Real(1) + e) / (Real(1) - e);
}

namespace refl {

/// TM/TE coefficients at zeta > 0, from the imaginary-axis Fresnel forms
/// with the two-interface coth factor:
///   h    = sqrt(y^2 + (eps-1) zeta^2)
///   r_tm = (eps^2 y^2 - h^2) / (eps^2 y^2 + h^2 + 2 eps y h coth(dh h))
///   r_te = (eps-1) zeta^2 / (2 y^2 + (eps-1) zeta^2 + 2 y h coth(dh h))
/// where dh = d/(2a) (coth term = 1 for semispaces). The TM numerator is
/// evaluated as (eps-1)((eps+1) y^2 - zeta^2), which is cancellation-free for
/// eps > 1, y >= zeta.
template <class Real>
inline void positive_zeta(Real eps, Real zeta2, Real em1z2, Real y, Real dh,
                          Real& r_tm, Real& r_te) {
  const Real y2 = y * y;
  const Real h = std::sqrt(y2 + em1z2);
  const Real cth = coth_stable(dh * h);
  const Real num_tm = (eps - Real(1)) * ((eps + Real(1)) * y2 - zeta2);
  const Real den_tm = (eps * eps + Real(1)) * y2 + em1z2 + Real(2) * eps * y * h * cth;
  r_tm = num_tm / den_tm;
  r_te = em1z2 / (Real(2) * y2 + em1z2 + Real(2) * y * h * cth);
}

/// Analytic zeta = 0 limits. All shipped models have diverging eps at zero
/// frequency, so r_tm = 1; the TE strength w = lim zeta^2 (eps - 1) decides
/// between the plasma-like value and exactly zero.
template <class Real>
inline void zero_zeta(Real w, Real y, Real dh, Real& r_tm, Real& r_te) {
  r_tm = Real(1);
  if (w <= Real(0)) {
    r_te = Real(0);
    return;
  }
  const Real s = std::sqrt(y * y + w);
  r_te = w / (Real(2) * y * y + w + Real(2) * y * s * coth_stable(dh * s));
}

}  // namespace refl

/// Reflection coefficients at the dimensionless point (zeta, y), y >= zeta.
/// zeta = 0 dispatches to the analytic limits; zeta below 1e-150 is clamped
/// onto them.
ReflectionPair reflect(const DielectricModel& model, const Geometry& geometry,
                       const DimensionlessFrame& frame, double zeta, double y);

/// coth[(d/2a) sqrt(y^2 + 1/alpha^2 + A zeta^2)], the finite-thickness
/// factor; exactly 1 for semispaces.
double thickness_factor(const Geometry& geometry, const DimensionlessFrame& frame,
                        double zeta, double y, double a_term_value);

/// Two-interface slab coefficient r (1 - e^{-2 k d}) / (1 - r^2 e^{-2 k d})
/// from a single-interface coefficient; used to cross-check the coth form.
double slab_from_single_interface(double r_single, double kd);

}  // namespace casimir
