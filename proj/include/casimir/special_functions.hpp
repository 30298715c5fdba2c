#pragma once

#include "casimir/constants.hpp"

namespace casimir {

/// Li_n(e^{-x}) for integer n >= 1, x >= 0. Relative accuracy ~1e-15.
/// n = 1 requires x > 0 (the series diverges at x = 0).
double polylog_exp(int n, double x);
long double polylog_exp(int n, long double x);

/// Gamma(0, x) = E_1(x) = int_x^inf e^{-t}/t dt, x > 0.
double inc_gamma_zero(double x);
long double inc_gamma_zero(long double x);

/// Gamma(-n, x) for n >= 1, x > 0, via the downward recurrence combination
/// ((-1)^n/n!) [Gamma(0,x) - e^{-x} sum_{m<n} (-1)^m m!/x^{m+1}].
double inc_gamma_neg(int n, double x);
long double inc_gamma_neg(int n, long double x);

/// The exponentially decaying integrals that drive the small-x expansion
/// machinery. Tags name the integrand family:
///   I1_3 : y^2 e^{-y} / (1 - e^{-y})
///   I2_3 : y^4 (15 e^{-y} + 18 e^{-2y} - e^{-3y}) / (1 - e^{-y})^3
///   I3_3 : e^{-y} / (1 - e^{-y})
///   I4_3 : e^{-y} (3 + e^{-y})^2 / (y^2 (1 - e^{-y})^3)
///   I1_4 : y^3 e^{-y} / (1 - e^{-y})^2
///   I4_4 : y e^{-y} / (1 - e^{-y})^2
enum class AppendixTag { I1_3, I2_3, I3_3, I4_3, I1_4, I4_4 };

/// int_x^inf of the tagged integrand, adaptive quadrature, rel. tol 1e-12.
/// Throws std::domain_error for x <= 0, std::runtime_error on
/// non-convergence.
double appendix_integral(AppendixTag tag, double x);
long double appendix_integral(AppendixTag tag, long double x);

/// Small-x closed form of the tagged quantity, valid for x in (0, 0.5].
/// For I4_3 and I4_4 the value corresponds to x^6 * I4_3 and x^4 * I4_4
/// respectively (see appendix_expansion_power); for the other tags it is the
/// plain integral.
double appendix_expansion(AppendixTag tag, double x);
long double appendix_expansion(AppendixTag tag, long double x);

/// Power p such that appendix_expansion(tag, x) approximates
/// x^p * appendix_integral(tag, x).
int appendix_expansion_power(AppendixTag tag);

/// Moments of a dimensionless oscillator set, sufficient for the expansions
/// that carry core-electron terms.
struct OscillatorMoments {
  double sum_c = 0;         // sum C_j
  double sum_c_delta = 0;   // sum C_j delta_j
  double sum_c_delta2 = 0;  // sum C_j delta_j^2
  double sum_c_gamma = 0;   // sum C_j gamma_j
};

/// Small-x expansion of [A(x)-1] x^2 I1_3(x).
double i13_weighted_expansion(const OscillatorMoments& m, double x);
/// Small-x expansion of [A(x)+2] x^4 I3_3(x): the leading x^4 ln x and
/// x^5 ln x terms.
double i33_weighted_expansion(const OscillatorMoments& m, double x);
/// Small-x expansion of A(x) x^2 I1_4(x).
double i14_weighted_expansion(const OscillatorMoments& m, double x);

}  // namespace casimir
