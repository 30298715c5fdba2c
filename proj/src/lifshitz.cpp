#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "casimir/parallel.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

namespace {

using kernels::Profile;
using kernels::ProfileL;

// Above this permittivity the positive-zeta formulas are numerically
// indistinguishable from the analytic zero-frequency limit (and eps^2 is
// about to overflow), so we clamp onto it; covers the zeta < 1e-150 rule.
constexpr double kEpsClamp = 1e120;

template <class Real>
kernels::ProfileT<Real> build_profile(const DimlessPermittivity& eps, double dh,
                                      bool semispace, Real zeta) {
  kernels::ProfileT<Real> p;
  p.half_thickness = Real(dh);
  p.semispace = semispace;
  if (zeta <= Real(0)) {
    p.mode = kernels::ProfileT<Real>::Mode::zero_zeta;
    p.w = Real(eps.w());
    return p;
  }
  const long double em1z2 = eps.em1z2_ld((long double)zeta);
  const long double e = 1.0L + em1z2 / ((long double)zeta * (long double)zeta);
  if (e > kEpsClamp) {
    p.mode = kernels::ProfileT<Real>::Mode::zero_zeta;
    p.w = Real(em1z2);
    return p;
  }
  p.mode = kernels::ProfileT<Real>::Mode::positive_zeta;
  p.eps = Real(e);
  p.zeta2 = zeta * zeta;
  p.em1z2 = Real(em1z2);
  return p;
}

double y_window(const EngineConfig& cfg) {
  return cfg.y_max_padding + 10.0 * std::log10(1.0 / cfg.rel_tol);
}

// |f(zeta,y)| <= 2 y e^{-y} (1 + margin); bound for int_Y^inf.
template <class Real>
Real f_tail_bound(Real ymin) {
  return Real(2.5) * (ymin + Real(1)) * std::exp(-ymin);
}

/// Phi(zeta) = int_zeta^inf f(zeta, y) dy, double precision, batched kernel.
struct PhiEvaluatorD {
  const ProfileSource* src;
  kernels::BatchFn fn;
  double umax;
  double rel_tol;
  mutable long evals = 0;

  double operator()(double zeta, double* err = nullptr) const {
    const Profile prof = src->at(zeta);
    auto batch = [&](const double* u, double* out, int n) {
      double ybuf[16];
      for (int i = 0; i < n; ++i) ybuf[i] = zeta + u[i];
      fn(prof, ybuf, out, n);
    };
    QuadControl<double> ctl;
    ctl.rel_tol = rel_tol;
    ctl.max_intervals = 800;
    static constexpr double bps[] = {0.25, 1.0, 4.0, 12.0, 30.0};
    auto r = integrate_gk15(batch, 0.0, umax, ctl, std::span<const double>(bps));
    evals += r.evals;
    if (err) *err = r.error + f_tail_bound(zeta + umax);
    return r.value;
  }
};

/// Extended-precision Phi for the thermal-correction path.
struct PhiEvaluatorL {
  const ProfileSource* src;
  long double umax;
  long double rel_tol = 5e-17L;

  long double operator()(long double zeta) const {
    const ProfileL prof = src->at_ld(zeta);
    auto batch = [&](const long double* u, long double* out, int n) {
      long double ybuf[16];
      for (int i = 0; i < n; ++i) ybuf[i] = zeta + u[i];
      kernels::eval_f_ld(prof, ybuf, out, n);
    };
    QuadControl<long double> ctl;
    ctl.rel_tol = rel_tol;
    ctl.max_intervals = 1500;
    static constexpr long double bps[] = {0.25L, 1.0L, 4.0L, 12.0L, 30.0L};
    auto r = integrate_gk15(batch, 0.0L, umax,
                            ctl, std::span<const long double>(bps));
    return r.value;
  }
};

ProfileSource make_source(DimlessPermittivity eps, const Geometry& geometry) {
  const bool semi = geometry.is_semispace();
  const double dh = semi ? std::numeric_limits<double>::infinity()
                         : geometry.half_thickness_ratio();
  ProfileSource src;
  const double scale = eps.structure_scale();
  if (scale > 0)
    src.zeta_hints = {scale, 10 * scale, 100 * scale};
  src.at = [eps, dh, semi](double zeta) {
    return build_profile<double>(eps, dh, semi, zeta);
  };
  src.at_ld = [eps, dh, semi](long double zeta) {
    return build_profile<long double>(eps, dh, semi, zeta);
  };
  return src;
}

}  // namespace

ProfileSource model_profile_source(const DielectricModel& model,
                                   const Geometry& geometry,
                                   const DimensionlessFrame& frame) {
  return make_source(DimlessPermittivity(model, frame), geometry);
}

ProfileSource ideal_metal_source() {
  ProfileSource src;
  src.at = [](double) {
    Profile p;
    p.mode = Profile::Mode::ideal_metal;
    return p;
  };
  src.at_ld = [](long double) {
    ProfileL p;
    p.mode = ProfileL::Mode::ideal_metal;
    return p;
  };
  return src;
}

ProfileSource vacuum_source() {
  ProfileSource src;
  src.at = [](double) {
    Profile p;
    p.mode = Profile::Mode::vacuum;
    return p;
  };
  src.at_ld = [](long double) {
    ProfileL p;
    p.mode = ProfileL::Mode::vacuum;
    return p;
  };
  return src;
}

double energy_prefactor(double a) {
  return codata.hbar * codata.c /
         (32.0 * pi_const * pi_const * a * a * a);
}

double integrand(const DielectricModel& model, const Geometry& geometry,
                 const DimensionlessFrame& frame, double zeta, double y) {
  if (zeta < 0 || y < zeta) throw std::domain_error("integrand: requires y >= zeta >= 0");
  const auto src = model_profile_source(model, geometry, frame);
  const Profile p = src.at(zeta);
  double out;
  kernels::eval_f_scalar(p, &y, &out, 1);
  return out;
}

double zero_t_energy_bracket(const ProfileSource& src, const EngineConfig& cfg,
                             double* error_out) {
  cfg.validate();
  const double umax = y_window(cfg);
  PhiEvaluatorD phi{&src, kernels::select_batch(cfg.force_scalar_kernels), umax,
                    0.05 * cfg.rel_tol};

  auto outer = [&](double zeta) { return phi(zeta); };
  QuadControl<double> ctl;
  ctl.rel_tol = 0.5 * cfg.rel_tol;
  ctl.max_intervals = 2000;
  std::vector<double> bps = {1e-6, 1e-4, 1e-2, 0.1, 0.5, 2.0, 8.0, 20.0};
  for (double h : src.zeta_hints) bps.push_back(h);
  std::sort(bps.begin(), bps.end());
  auto r = integrate_gk15_fn(outer, 0.0, umax, ctl, bps);
  const double tail = f_tail_bound(umax) * 2;  // both tails decay like e^{-y}
  const double err = r.error + tail + 0.1 * cfg.rel_tol * std::abs(r.value);
  if (error_out) *error_out = err;
  if (err > cfg.rel_tol * std::abs(r.value) && std::abs(r.value) > 0)
    throw ConvergenceError("zero_t_energy: tolerance not achieved",
                           err / std::abs(r.value));
  return r.value;
}

ThermalBracket thermal_correction_bracket(const ProfileSource& src, double tau,
                                          const EngineConfig& cfg) {
  cfg.validate();
  if (!(tau > 0)) throw std::invalid_argument("thermal_correction: tau must be > 0");

  const long double umax = (long double)y_window(cfg) + 30.0L;
  PhiEvaluatorL phi{&src, umax};
  const long double t = tau;

  // Group size: 1 near zero frequency (all the curvature lives there), then
  // doubling up to a fixed width cap.
  const long max_g = std::max<long>(1, (long)std::floor(0.5L / t));

  struct GroupOut {
    long double d = 0, integral_err = 0, phi_right = 0;
    long l0 = 0, l1 = 0;
  };

  auto eval_group = [&](long l0, long l1) {
    GroupOut g;
    g.l0 = l0;
    g.l1 = l1;
    const long double z0 = t * l0, z1 = t * l1;
    const long double p0 = phi(z0), p1 = phi(z1);
    g.phi_right = p1;  // reported for tail control
    long double trap = 0.5L * (p0 + p1);
    for (long l = l0 + 1; l < l1; ++l) trap += phi(t * l);
    trap *= t;

    QuadControl<long double> ctl;
    ctl.rel_tol = 1e-11L;
    ctl.max_intervals = (l0 == 0) ? 600 : 60;
    std::vector<long double> bps;
    if (l0 == 0) {
      for (long double s : {1e-6L, 1e-4L, 1e-2L, 0.1L, 0.5L})
        if (s * z1 > 0) bps.push_back(s * z1);
      for (double h : src.zeta_hints)
        if (h < (double)z1) bps.push_back((long double)h);
      std::sort(bps.begin(), bps.end());
    }
    auto integral = integrate_gk15_fn([&](long double z) { return phi(z); }, z0,
                                      z1, ctl, std::span<const long double>(bps));
    g.d = trap - integral.value;
    g.integral_err = integral.error;
    return g;
  };

  ThermalBracket out;
  long double acc = 0, comp = 0, errsum = 0;
  long l = 0;
  long g_size = 1;
  long groups_done = 0;
  long double last_d = 0, prev_d = 0;

  const int chunk = 16;
  std::vector<GroupOut> results(chunk);

  bool done = false;
  while (!done) {
    // plan the next chunk of groups
    std::vector<std::pair<long, long>> plan;
    long lp = l;
    long gs = g_size;
    for (int i = 0; i < chunk; ++i) {
      if (lp >= cfg.max_matsubara_terms) break;
      if (groups_done + i >= 16 && gs < max_g) gs = std::min(max_g, gs * 2);
      plan.emplace_back(lp, lp + gs);
      lp += gs;
    }
    if (plan.empty())
      throw ConvergenceError("thermal_correction: max Matsubara terms exceeded",
                             (double)(out.tail / std::max(std::abs(acc), 1e-300L)));

    results.resize(plan.size());
    parallel_for((long)plan.size(), cfg.threads, [&](long i) {
      results[i] = eval_group(plan[i].first, plan[i].second);
    });

    for (const auto& g : results) {
      const long double v = g.d;
      const long double s = acc + v;
      if (std::abs(acc) >= std::abs(v))
        comp += (acc - s) + v;
      else
        comp += (v - s) + acc;
      acc = s;
      errsum += g.integral_err;
      prev_d = last_d;
      last_d = v;
      ++groups_done;
    }
    l = plan.back().second;
    g_size = gs;

    const long double zl = t * l;
    const long double mag = std::max(std::abs(acc + comp), (long double)1e-300L);
    // Tail of the trapezoid-minus-integral remainder: Euler-Maclaurin bound
    // for small tau, crude separate bound otherwise, and the geometric
    // extrapolation of the group magnitudes.
    const long double phi_end = std::abs(results.back().phi_right);
    long double tail_analytic;
    if (t < 0.5L)
      tail_analytic = (t * t / 4.0L) * phi_end;
    else
      tail_analytic = 3.0L * phi_end * (t / -std::expm1(-t) + 1.0L);
    long double tail_geo = std::abs(last_d);
    if (std::abs(prev_d) > std::abs(last_d) && prev_d != 0) {
      const long double rho =
          std::min(std::abs(last_d / prev_d), (long double)0.95L);
      tail_geo = std::abs(last_d) * rho / (1 - rho);
    }
    out.tail = std::min(tail_analytic, tail_geo);
    if (zl > 6 && groups_done > 8 && out.tail <= 0.1L * cfg.rel_tol * mag) {
      done = true;
    }
    if (l >= cfg.max_matsubara_terms && !done)
      throw ConvergenceError("thermal_correction: max Matsubara terms exceeded",
                             (double)(out.tail / mag));
  }

  out.value = acc + comp;
  out.terms = l;
  // Phi-level noise allowance: each value is accurate to ~5e-17 relative and
  // enters with weight ~tau.
  const long double noise = 5e-17L * t * std::sqrt((long double)l) * 2.0L;
  out.error = errsum + out.tail + noise;
  return out;
}

double zero_t_energy(const DielectricModel& model, const Geometry& geometry,
                     const EngineConfig& cfg) {
  const auto frame = DimensionlessFrame::make(geometry.separation, 0.0,
                                              model.omega_p());
  const auto src = model_profile_source(model, geometry, frame);
  return energy_prefactor(geometry.separation) * zero_t_energy_bracket(src, cfg);
}

FreeEnergyResult free_energy(const DielectricModel& model, const Geometry& geometry,
                             double T, const EngineConfig& cfg) {
  cfg.validate();
  if (T < 0) throw std::invalid_argument("free_energy: T must be >= 0");
  const double U = energy_prefactor(geometry.separation);
  const auto frame =
      DimensionlessFrame::make(geometry.separation, T, model.omega_p());
  const auto src = model_profile_source(model, geometry, frame);

  FreeEnergyResult out{};
  double e_err = 0;
  EngineConfig ecfg = cfg;
  ecfg.rel_tol = 0.5 * cfg.rel_tol;
  out.zero_t_energy = U * zero_t_energy_bracket(src, ecfg, &e_err);
  e_err *= U;

  if (T == 0) {
    out.free_energy = out.zero_t_energy;
    out.achieved_tol = e_err / std::abs(out.free_energy);
    return out;
  }

  const auto th = thermal_correction_bracket(src, frame.tau, ecfg);
  out.thermal_correction = U * (double)th.value;
  out.free_energy = out.zero_t_energy + out.thermal_correction;
  out.terms_used = th.terms;
  out.tail_estimate = U * (double)th.tail;
  out.achieved_tol =
      (e_err + U * (double)th.error) / std::abs(out.free_energy);
  if (out.achieved_tol > cfg.rel_tol)
    throw ConvergenceError("free_energy: tolerance not achieved", out.achieved_tol);
  return out;
}

double thermal_correction(const DielectricModel& model, const Geometry& geometry,
                          double T, const EngineConfig& cfg) {
  if (!(T > 0)) throw std::invalid_argument("thermal_correction: T must be > 0");
  const auto frame =
      DimensionlessFrame::make(geometry.separation, T, model.omega_p());
  const auto src = model_profile_source(model, geometry, frame);
  const auto th = thermal_correction_bracket(src, frame.tau, cfg);
  return energy_prefactor(geometry.separation) * (double)th.value;
}

double entropy(const DielectricModel& model, const Geometry& geometry, double T,
               const EngineConfig& cfg, double* error_out) {
  cfg.validate();
  if (!(T > 0)) throw std::invalid_argument("entropy: T must be > 0");
  if (T < 1e-3)
    throw std::domain_error("entropy: finite-difference step underflow below 1 mK");

  const double U = energy_prefactor(geometry.separation);
  const auto src_at = [&](double Tx) {
    const auto frame =
        DimensionlessFrame::make(geometry.separation, Tx, model.omega_p());
    const auto src = model_profile_source(model, geometry, frame);
    return (double)thermal_correction_bracket(src, frame.tau, cfg).value;
  };

  const double h = std::max(1e-3 * T, 1e-6);
  auto slope = [&](double step) {
    return U * (src_at(T - step) - src_at(T + step)) / (2 * step);
  };
  const double s_h = slope(h);
  const double s_h2 = slope(h / 2);
  const double s_rich = (4 * s_h2 - s_h) / 3;
  if (error_out) *error_out = std::abs(s_rich - s_h2);
  return s_rich;
}

FreeEnergyResult free_energy_direct(const DielectricModel& model,
                                    const Geometry& geometry, double T,
                                    const EngineConfig& cfg) {
  cfg.validate();
  if (!(T > 0)) return free_energy(model, geometry, 0.0, cfg);
  const double U = energy_prefactor(geometry.separation);
  const auto frame =
      DimensionlessFrame::make(geometry.separation, T, model.omega_p());
  const auto src = model_profile_source(model, geometry, frame);
  const double tau = frame.tau;
  const double umax = y_window(cfg);
  PhiEvaluatorD phi{&src, kernels::select_batch(cfg.force_scalar_kernels), umax,
                    0.02 * cfg.rel_tol};

  double acc = 0.5 * phi(0.0), comp = 0;
  double term = 0, prev = 0;
  long l = 1;
  double tail = std::numeric_limits<double>::infinity();
  for (; l <= cfg.max_matsubara_terms; ++l) {
    prev = term;
    term = phi(tau * (double)l);
    const double s = acc + term;
    if (std::abs(acc) >= std::abs(term))
      comp += (acc - s) + term;
    else
      comp += (term - s) + acc;
    acc = s;
    if (l >= 3 && std::abs(term) < std::abs(prev)) {
      const double rho = std::min(std::abs(term / prev), 0.99);
      tail = std::abs(term) * rho / (1 - rho);
      if (tail <= 0.1 * cfg.rel_tol * std::abs(acc + comp) && tau * l > 3) break;
    }
  }
  if (l > cfg.max_matsubara_terms)
    throw ConvergenceError("free_energy_direct: max Matsubara terms exceeded",
                           tail / std::abs(acc + comp));

  FreeEnergyResult out{};
  out.free_energy = U * tau * (acc + comp);
  out.terms_used = l;
  out.tail_estimate = U * tau * tail;
  EngineConfig ecfg = cfg;
  ecfg.rel_tol = 0.5 * cfg.rel_tol;
  out.zero_t_energy = U * zero_t_energy_bracket(src, ecfg);
  out.thermal_correction = out.free_energy - out.zero_t_energy;
  out.achieved_tol = (out.tail_estimate + cfg.rel_tol * 0.2 * std::abs(out.free_energy)) /
                     std::abs(out.free_energy);
  return out;
}

}  // namespace casimir
