#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

/// Plate separation and thickness. Thickness +inf means semispaces.
struct Geometry {
  double separation;  // m
  double thickness;   // m, or +inf

  static Geometry semispace(double a) {
    check(a);
    return {a, std::numeric_limits<double>::infinity()};
  }
  static Geometry slab(double a, double d) {
    check(a);
    if (!(d > 0)) throw std::invalid_argument("Geometry: thickness must be > 0");
    return {a, d};
  }
  bool is_semispace() const { return std::isinf(thickness); }
  /// d/(2a), the argument scale of the thickness factor; +inf for semispaces.
  double half_thickness_ratio() const { return thickness / (2 * separation); }

 private:
  static void check(double a) {
    if (!(a > 0)) throw std::invalid_argument("Geometry: separation must be > 0");
  }
};

/// The dimensionless variables of the scaled Lifshitz formula:
///   omega_c = c/(2a),  alpha = omega_c/omega_p,  tau = 2 pi T / T_eff,
///   k_B T_eff = hbar c / (2a),  zeta_l = tau l.
struct DimensionlessFrame {
  double alpha;    // omega_c / omega_p (NaN when the model has no omega_p)
  double tau;      // 2 pi T / T_eff
  double omega_c;  // rad/s
  double T_eff;    // K

  static DimensionlessFrame make(double a, double T, double omega_p) {
    if (!(a > 0)) throw std::invalid_argument("frame: separation must be > 0");
    if (T < 0) throw std::invalid_argument("frame: temperature must be >= 0");
    const double wc = codata.c / (2 * a);
    const double teff = codata.hbar * codata.c / (2 * a * codata.k_B);
    const double alpha = omega_p > 0 ? wc / omega_p
                                     : std::numeric_limits<double>::quiet_NaN();
    return {alpha, 2 * pi_const * T / teff, wc, teff};
  }

  double zeta(long l) const { return tau * (double)l; }
  double omega_p_tilde() const { return 1.0 / alpha; }
};

/// k_B T_eff = hbar c / (2a), in kelvin.
inline double effective_temperature(double a) {
  if (!(a > 0)) throw std::invalid_argument("effective_temperature: a must be > 0");
  return codata.hbar * codata.c / (2 * a * codata.k_B);
}

/// xi_l = 2 pi k_B T l / hbar.
inline double matsubara_frequency(double T, long l) {
  if (!(T > 0)) throw std::invalid_argument("matsubara_frequency: T must be > 0");
  if (l < 0) throw std::invalid_argument("matsubara_frequency: l must be >= 0");
  return 2 * pi_const * codata.k_B * T * (double)l / codata.hbar;
}

}  // namespace casimir
