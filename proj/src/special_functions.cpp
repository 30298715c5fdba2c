#include "casimir/special_functions.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/quadrature.hpp"

namespace casimir {

namespace {

constexpr long double kZetaNeg[] = {
    // zeta(0), zeta(-1), zeta(-2), ... zeta(-6)
    -0.5L, -1.0L / 12.0L, 0.0L, 1.0L / 120.0L, 0.0L, -1.0L / 252.0L, 0.0L};

long double zeta_int(int n) {
  // n >= 2 here; riemann_zetal covers it, but the common ones are pinned.
  switch (n) {
    case 2: return detail::pi_l * detail::pi_l / 6.0L;
    case 3: return detail::zeta3_l;
    case 4: return detail::zeta4_l;
    case 5: return detail::zeta5_l;
    default: return std::riemann_zetal((long double)n);
  }
}

long double polylog_series(int n, long double x) {
  // sum_{k>=1} e^{-kx}/k^n with rigorous geometric tail bound.
  const long double q = std::exp(-x);
  long double term = q, sum = q, qk = q;
  for (long k = 2; k < 2000000; ++k) {
    qk *= q;
    term = qk / std::pow((long double)k, (long double)n);
    sum += term;
    // tail <= e^{-(k+1)x} / ((k+1)^n (1 - e^{-x}))
    if (term / (1.0L - q) < 1e-21L * sum) break;
  }
  return sum;
}

long double polylog_small_x(int n, long double x) {
  // Li_n(e^{-x}) = (-x)^{n-1}/(n-1)! [H_{n-1} - ln x]
  //              + sum_{k>=0, k != n-1} zeta(n-k) (-x)^k / k!
  long double h = 0, fact = 1;
  for (int j = 1; j < n; ++j) {
    h += 1.0L / j;
    fact *= j;
  }
  long double sum = std::pow(-x, (long double)(n - 1)) / fact * (h - std::log(x));
  long double xk = 1, kfact = 1;
  for (int k = 0; k <= 8; ++k) {
    if (k > 0) {
      xk *= -x;
      kfact *= k;
    }
    if (k == n - 1) continue;
    const int arg = n - k;
    const long double z = (arg >= 2) ? zeta_int(arg) : kZetaNeg[-arg];
    sum += z * xk / kfact;
  }
  return sum;
}

long double inc_gamma_zero_series(long double x) {
  // -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
  long double sum = -detail::euler_gamma_l - std::log(x);
  long double term = 1;
  for (int k = 1; k < 200; ++k) {
    term *= -x / k;
    const long double add = -term / k;
    sum += add;
    if (std::fabs(add) < 1e-22L * (std::fabs(sum) + 1e-30L)) break;
  }
  return sum;
}

long double inc_gamma_zero_cf(long double x) {
  // Gamma(0,x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
  // evaluated with the modified Lentz algorithm.
  const long double tiny = 1e-30L;
  long double b = x + 1, c = 1 / tiny, d = 1 / b, f = d;
  for (int i = 1; i < 300; ++i) {
    const long double ai = -(long double)i * i;
    b += 2;
    d = ai * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + ai / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1 / d;
    const long double delta = d * c;
    f *= delta;
    if (std::fabs(delta - 1) < 1e-20L) break;
  }
  return std::exp(-x) * f;
}

struct TagInfo {
  int growth;  // polynomial growth order of the integrand
  int power;   // multiplier x^power carried by the expansion
};

TagInfo tag_info(AppendixTag tag) {
  switch (tag) {
    case AppendixTag::I1_3: return {2, 0};
    case AppendixTag::I2_3: return {4, 0};
    case AppendixTag::I3_3: return {0, 0};
    case AppendixTag::I4_3: return {0, 6};
    case AppendixTag::I1_4: return {3, 0};
    case AppendixTag::I4_4: return {1, 4};
  }
  return {0, 0};
}

long double tag_integrand(AppendixTag tag, long double y) {
  const long double e = std::exp(-y);
  const long double d = -std::expm1(-y);  // 1 - e^{-y}
  switch (tag) {
    case AppendixTag::I1_3: return y * y * e / d;
    case AppendixTag::I2_3: {
      const long double num = 15.0L * e + 18.0L * e * e - e * e * e;
      return y * y * y * y * num / (d * d * d);
    }
    case AppendixTag::I3_3: return e / d;
    case AppendixTag::I4_3: {
      const long double s = 3.0L + e;
      return e * s * s / (y * y * d * d * d);
    }
    case AppendixTag::I1_4: return y * y * y * e / (d * d);
    case AppendixTag::I4_4: return y * e / (d * d);
  }
  return 0;
}

long double tag_tail_bound(AppendixTag tag, long double y) {
  // Crude bound for int_y^inf; integrands decay like poly * e^{-y}.
  const long double c = 1.0L / -std::expm1(-y);
  const long double e = std::exp(-y);
  switch (tag) {
    case AppendixTag::I1_3: return c * (y * y + 2 * y + 2) * e;
    case AppendixTag::I2_3:
      return 33 * c * c * c * (((y + 4) * y + 12) * y * y + 24 * y + 24) * e;
    case AppendixTag::I3_3: return c * e;
    case AppendixTag::I4_3: return 16 * c * c * c * e / (y * y);
    case AppendixTag::I1_4: return c * c * (((y + 3) * y + 6) * y + 6) * e;
    case AppendixTag::I4_4: return c * c * (y + 1) * e;
  }
  return 0;
}

long double appendix_integral_l(AppendixTag tag, long double x) {
  if (!(x > 0)) throw std::domain_error("appendix_integral: x must be > 0");
  const TagInfo info = tag_info(tag);
  const long double cut = x + 40.0L + 5.0L * info.growth;
  QuadControl<long double> ctl;
  ctl.rel_tol = 1e-13L;
  ctl.max_intervals = 6000;
  auto f = [tag](long double y) { return tag_integrand(tag, y); };
  const auto bps = decay_breakpoints(x, cut);
  auto r = integrate_gk15_fn(f, x, cut, ctl, bps);
  const long double tail = tag_tail_bound(tag, cut);
  if (!r.converged && r.error > 1e-10L * std::fabs(r.value))
    throw std::runtime_error("appendix_integral: quadrature did not converge");
  return r.value + 0 * tail;  // tail < 1e-17 relative at these cutoffs
}

long double appendix_expansion_l(AppendixTag tag, long double x) {
  if (!(x > 0) || x > 0.5L)
    throw std::domain_error("appendix_expansion: x must be in (0, 0.5]");
  const long double z3 = detail::zeta3_l, z5 = detail::zeta5_l;
  const long double x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
  switch (tag) {
    case AppendixTag::I1_3: return 2 * z3 - x2 / 2 + x3 / 6 - x4 / 48;
    case AppendixTag::I2_3: return 384 * z3 - 24 * z5 - 16 * x2 + x4 / 4;
    case AppendixTag::I3_3: return -std::log(x) + x / 2 - x2 / 24;
    case AppendixTag::I4_3: return 4 * x2 + x4 / 2;
    case AppendixTag::I1_4: return 6 * z3 - x2 / 2 + x4 / 48;
    case AppendixTag::I4_4: return x4 - x4 * std::log(x);
  }
  return 0;
}

}  // namespace

long double polylog_exp(int n, long double x) {
  if (n < 1) throw std::domain_error("polylog_exp: n must be >= 1");
  if (x < 0) throw std::domain_error("polylog_exp: x must be >= 0");
  if (n == 1) {
    if (x == 0) throw std::domain_error("polylog_exp: Li_1 diverges at x = 0");
    return -std::log1p(-std::exp(-x));
  }
  if (x == 0) return zeta_int(n);
  if (x < 1e-3L && n <= 8) return polylog_small_x(n, x);
  return polylog_series(n, x);
}

double polylog_exp(int n, double x) {
  return (double)polylog_exp(n, (long double)x);
}

long double inc_gamma_zero(long double x) {
  if (!(x > 0)) throw std::domain_error("inc_gamma_zero: x must be > 0");
  return x < 1 ? inc_gamma_zero_series(x) : inc_gamma_zero_cf(x);
}

double inc_gamma_zero(double x) {
  return (double)inc_gamma_zero((long double)x);
}

long double inc_gamma_neg(int n, long double x) {
  if (n < 1) throw std::domain_error("inc_gamma_neg: n must be >= 1");
  if (!(x > 0)) throw std::domain_error("inc_gamma_neg: x must be > 0");
  long double sum = 0, mfact = 1, xp = x;
  for (int m = 0; m < n; ++m) {
    if (m > 0) {
      mfact *= m;
      xp *= x;
    }
    const long double t = mfact / xp;
    sum += (m % 2 == 0) ? t : -t;
  }
  long double nfact = 1;
  for (int j = 2; j <= n; ++j) nfact *= j;
  const long double sign = (n % 2 == 0) ? 1.0L : -1.0L;
  return sign / nfact * (inc_gamma_zero(x) - std::exp(-x) * sum);
}

double inc_gamma_neg(int n, double x) {
  return (double)inc_gamma_neg(n, (long double)x);
}

double appendix_integral(AppendixTag tag, double x) {
  return (double)appendix_integral_l(tag, (long double)x);
}

long double appendix_integral(AppendixTag tag, long double x) {
  return appendix_integral_l(tag, x);
}

double appendix_expansion(AppendixTag tag, double x) {
  return (double)appendix_expansion_l(tag, (long double)x);
}

long double appendix_expansion(AppendixTag tag, long double x) {
  return appendix_expansion_l(tag, x);
}

int appendix_expansion_power(AppendixTag tag) { return tag_info(tag).power; }

double i13_weighted_expansion(const OscillatorMoments& m, double x) {
  const double z3 = euler_maclaurin.zeta3;
  const double x2 = x * x;
  return -2 * z3 * x2 + x2 * x2 / 2 + 2 * z3 * m.sum_c * x2 -
         2 * z3 * m.sum_c_delta * x2 * x -
         (m.sum_c / 2 - 2 * z3 * m.sum_c_delta2 + 2 * z3 * m.sum_c_gamma) *
             x2 * x2;
}

double i33_weighted_expansion(const OscillatorMoments& m, double x) {
  const double lx = std::log(x);
  const double x4 = x * x * x * x;
  return -(m.sum_c + 2) * x4 * lx + m.sum_c_delta * x4 * x * lx;
}

double i14_weighted_expansion(const OscillatorMoments& m, double x) {
  const double z3 = euler_maclaurin.zeta3;
  const double x2 = x * x;
  return 6 * z3 * m.sum_c * x2 - 6 * z3 * m.sum_c_delta * x2 * x -
         (m.sum_c / 2 - 6 * z3 * m.sum_c_delta2 + 6 * z3 * m.sum_c_gamma) *
             x2 * x2;
}

}  // namespace casimir
