#include "casimir/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir {

namespace {

const double kPi = pi_const;

void require_alpha(const DimensionlessFrame& frame) {
  if (!std::isfinite(frame.alpha) || !(frame.alpha > 0))
    throw std::invalid_argument("asymptotics: frame must carry a finite alpha");
}

double prefactor_u(double a) {
  return codata.hbar * codata.c / (32.0 * kPi * kPi * a * a * a);
}

}  // namespace

LogTermExpansion expand_log_term(Polarization pol, double zeta, double y,
                                 double a_value) {
  if (!(y > 0)) throw std::domain_error("expand_log_term: y must be > 0");
  if (zeta < 0) throw std::domain_error("expand_log_term: zeta must be >= 0");
  const double e = std::exp(-y);
  const double d = -std::expm1(-y);  // 1 - e^{-y}
  const double d2 = d * d, d3 = d2 * d, d4 = d2 * d2;
  const double z2 = zeta * zeta, z4 = z2 * z2;
  const double y2 = y * y;
  const double core = y2 - 2 * z2 - z2 * a_value;

  LogTermExpansion out;
  out.c[0] = y * std::log1p(-e);
  if (pol == Polarization::TM) {
    out.c[1] = 4 * z2 * e / d;
    out.c[2] = -8 * z4 * e / (y * d2);
    const double s3 = 3 + e;
    out.c[3] = 2 * z2 *
               (2 * z4 * e * s3 * s3 / d3 + 3 * y2 * core * e / d) /
               (3 * y2);
    const double s1 = 1 + e;
    out.c[4] = -8 * z4 *
               (2 * z4 * e * s1 * s1 / d4 + y2 * core * e / d2) /
               (y2 * y);
  } else {
    out.c[1] = 4 * y2 * e / d;
    out.c[2] = -8 * y2 * y * e / d2;
    const double p3 = 15 * e + 18 * e * e - e * e * e;
    out.c[3] = 2 * y2 * (-3 * z2 * a_value * e / d + y2 * p3 / d3) / 3;
    const double p4 = e + 6 * e * e + e * e * e;
    out.c[4] = -8 * y2 * y * (-z2 * a_value * e / d2 + y2 * p4 / d4);
  }
  return out;
}

double delta_f_plasma(const DimensionlessFrame& frame, double a) {
  require_alpha(frame);
  const double z3 = euler_maclaurin.zeta3, z5 = euler_maclaurin.zeta5;
  const double t = frame.tau, al = frame.alpha;
  const double t3 = t * t * t, t4 = t3 * t, t5 = t4 * t;
  const double bracket = z3 * t3 / (4 * kPi * kPi) - t4 / 360.0 +
                         al * (z3 * t3 / (kPi * kPi) - t4 / 45.0) -
                         al * al * 6.0 * z5 * t5 / (kPi * kPi);
  return -prefactor_u(a) * bracket;
}

double delta_f_core(const DimensionlessFrame& frame, double a,
                    const OscillatorSet& set) {
  require_alpha(frame);
  const double z3 = euler_maclaurin.zeta3, z5 = euler_maclaurin.zeta5;
  const auto m = oscillator_moments(set, a);
  const double t = frame.tau, al = frame.alpha;
  const double al3 = al * al * al, al4 = al3 * al;
  const double t4 = t * t * t * t, t5 = t4 * t;
  const double pi4 = kPi * kPi * kPi * kPi;
  const double bracket =
      -al3 * (z3 / 60.0 * m.sum_c_delta * t4 +
              3.0 * z5 / (2 * pi4) * (m.sum_c + 2.0) * t5) +
      al4 * (4.0 * z3 / 15.0 * m.sum_c_delta * t4 + 6.0 * z5 / pi4 * t5);
  return -prefactor_u(a) * bracket;
}

AsymptoticBreakdown free_energy_expansion(const DimensionlessFrame& frame, double a,
                                          const OscillatorSet& set, double e0) {
  require_alpha(frame);
  const double z3 = euler_maclaurin.zeta3, z5 = euler_maclaurin.zeta5;
  const auto m = oscillator_moments(set, a);
  const double al = frame.alpha;
  const double al2 = al * al, al3 = al2 * al, al4 = al2 * al2;
  const double t = frame.tau / (2 * kPi);  // T / T_eff
  const double K = codata.hbar * codata.c * z3 / (16 * kPi * a * a * a) * t * t * t;

  const double b4 = 1.0 + 8 * al + 6 * z3 * al3 * m.sum_c_delta -
                    96 * z3 * al4 * m.sum_c_delta;
  const double b5 = 1.0 + al / (4 * kPi * kPi) * (m.sum_c + 2.0) -
                    al2 / (kPi * kPi);

  AsymptoticBreakdown out;
  out.e0 = e0;
  out.t3_term = -K * (1.0 + 4 * al);
  out.t4_term = K * (kPi * kPi * kPi / (45 * z3)) * t * b4;
  out.t5_term = K * (96 * kPi * kPi * z5 / z3) * t * t * al2 * b5;
  out.total = e0 + out.t3_term + out.t4_term + out.t5_term;
  return out;
}

double entropy_expansion(const DimensionlessFrame& frame, double a,
                         const OscillatorSet& set) {
  require_alpha(frame);
  const double z3 = euler_maclaurin.zeta3, z5 = euler_maclaurin.zeta5;
  const auto m = oscillator_moments(set, a);
  const double al = frame.alpha;
  const double al2 = al * al, al3 = al2 * al, al4 = al2 * al2;
  const double t = frame.tau / (2 * kPi);

  const double b4 = 1.0 + 8 * al + 6 * z3 * al3 * m.sum_c_delta -
                    96 * z3 * al4 * m.sum_c_delta;
  const double b5 = 1.0 + al / (4 * kPi * kPi) * (m.sum_c + 2.0) -
                    al2 / (kPi * kPi);
  const double bracket = 1.0 + 4 * al -
                         (4 * kPi * kPi * kPi / (135 * z3)) * t * b4 -
                         (160 * kPi * kPi * z5 / z3) * t * t * al2 * b5;
  return 3 * z3 * codata.k_B / (8 * kPi * a * a) * t * t * bracket;
}

F34Coefficients f34_difference(int order, const DimensionlessFrame& frame,
                               const OscillatorSet& set, double t) {
  require_alpha(frame);
  if (order != 3 && order != 4)
    throw std::invalid_argument("f34_difference: order must be 3 or 4");
  if (!(frame.tau * t <= kAsymptoticTauMax))
    throw std::domain_error("f34_difference: tau*t outside the validity window");
  const double z3 = euler_maclaurin.zeta3;
  const double al = frame.alpha;
  // delta_j carries omega_c = c/(2a); recover a from the frame.
  const double a = codata.c / (2 * frame.omega_c);
  const auto m = oscillator_moments(set, a);
  if (order == 3) {
    const double al3 = al * al * al;
    return {-2 * al3 * 2 * z3 * m.sum_c_delta, -2 * al3 * kPi * (m.sum_c + 2.0)};
  }
  const double al4 = al * al * al * al;
  return {8 * al4 * 8 * z3 * m.sum_c_delta, 8 * al4 * kPi};
}

}  // namespace casimir
