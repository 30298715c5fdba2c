#pragma once

#include <array>

#include "casimir/dielectric.hpp"
#include "casimir/frame.hpp"

namespace casimir {

enum class Polarization { TM, TE };

/// Coefficients c0..c4 of y ln(1 - r^2 e^{-y}) = sum_k c_k alpha^k for one
/// polarization. c0 = y ln(1 - e^{-y}) for both.
struct LogTermExpansion {
  std::array<double, 5> c;
};

/// Per-order breakdown of the low-temperature free energy: total =
/// e0 + t3_term + t4_term + t5_term, the brackets grouped by powers of
/// T/T_eff.
struct AsymptoticBreakdown {
  double e0;       // J/m^2
  double t3_term;  // J/m^2
  double t4_term;  // J/m^2
  double t5_term;  // J/m^2
  double total;    // J/m^2
};

/// tau <= this is the documented validity window; outside it the closed
/// forms still evaluate but results are tagged extrapolated by callers.
inline constexpr double kAsymptoticTauMax = 0.3;
inline bool within_asymptotic_window(double tau) { return tau <= kAsymptoticTauMax; }

/// Order-alpha expansion of the two logarithmic terms of the integrand at
/// (zeta, y), with A(zeta) supplied by the caller.
LogTermExpansion expand_log_term(Polarization pol, double zeta, double y,
                                 double a_value);

/// Free-electron (alpha^0..alpha^2) thermal correction, J/m^2.
double delta_f_plasma(const DimensionlessFrame& frame, double a);

/// Core-electron (alpha^3, alpha^4) thermal correction, J/m^2.
double delta_f_core(const DimensionlessFrame& frame, double a,
                    const OscillatorSet& set);

/// Total low-temperature free energy with per-order breakdown; e0 comes from
/// the direct zero-temperature evaluation.
AsymptoticBreakdown free_energy_expansion(const DimensionlessFrame& frame, double a,
                                          const OscillatorSet& set, double e0);

/// Low-temperature entropy closed form, J/(K m^2).
double entropy_expansion(const DimensionlessFrame& frame, double a,
                         const OscillatorSet& set);

/// The imaginary-part coefficient pair of F^{(k)}(i tau t) - F^{(k)}(-i tau t)
/// = i [t3_coeff (tau t)^3 + t4_coeff (tau t)^4], k = 3 or 4, in the closed
/// form the expansion pipeline integrates against 1/(e^{2 pi t} - 1).
struct F34Coefficients {
  double t3_coeff;
  double t4_coeff;
};
F34Coefficients f34_difference(int order, const DimensionlessFrame& frame,
                               const OscillatorSet& set, double t);

}  // namespace casimir
