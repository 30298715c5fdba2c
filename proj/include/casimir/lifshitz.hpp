#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/dielectric.hpp"
#include "casimir/frame.hpp"
#include "casimir/kernels.hpp"

namespace casimir {

struct EngineConfig {
  double rel_tol = 1e-8;
  long max_matsubara_terms = 2000000;
  int threads = 0;             // 0 = all hardware threads
  double y_max_padding = 40.0; // base length of the y window; the engine adds
                               // 10 log10(1/rel_tol)
  std::string quadrature = "gk15";
  bool force_scalar_kernels = false;

  void validate() const {
    if (!(rel_tol > 0) || rel_tol >= 1e-2)
      throw std::invalid_argument("EngineConfig: rel_tol must be in (0, 1e-2)");
    if (max_matsubara_terms < 1)
      throw std::invalid_argument("EngineConfig: max_matsubara_terms must be >= 1");
  }
};

struct FreeEnergyResult {
  double free_energy;         // J/m^2
  double zero_t_energy;       // J/m^2
  double thermal_correction;  // J/m^2 (free_energy - zero_t_energy)
  long terms_used;            // Matsubara terms consumed
  double tail_estimate;       // J/m^2, bound on the truncated remainder
  double achieved_tol;        // relative to |free_energy|
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, double achieved)
      : std::runtime_error(msg + " (achieved_tol = " + std::to_string(achieved) + ")"),
        achieved_tol(achieved) {}
  double achieved_tol;
};

/// Builds the per-zeta kernel profiles for a reflectivity configuration.
/// The model-independent seam lets tests drive the engine with surrogate
/// mirrors (ideal metal, vacuum).
struct ProfileSource {
  std::function<kernels::Profile(double zeta)> at;
  std::function<kernels::ProfileL(long double zeta)> at_ld;
  std::vector<double> zeta_hints;  // low-frequency structure scales, if any
};

ProfileSource model_profile_source(const DielectricModel& model,
                                   const Geometry& geometry,
                                   const DimensionlessFrame& frame);
ProfileSource ideal_metal_source();
ProfileSource vacuum_source();

/// hbar c / (32 pi^2 a^3): converts the dimensionless brackets to J/m^2.
double energy_prefactor(double a);

/// f(zeta, y) = y ln(1 - r_TM^2 e^{-y}) + y ln(1 - r_TE^2 e^{-y}).
double integrand(const DielectricModel& model, const Geometry& geometry,
                 const DimensionlessFrame& frame, double zeta, double y);

/// Dimensionless zero-temperature double integral
/// int_0^inf dzeta int_zeta^inf f(zeta, y) dy.
double zero_t_energy_bracket(const ProfileSource& src, const EngineConfig& cfg,
                             double* error_out = nullptr);

struct ThermalBracket {
  long double value = 0;  // tau sum' Phi - int Phi  (dimensionless)
  long double error = 0;
  long double tail = 0;
  long terms = 0;
};

/// Dimensionless thermal correction, evaluated as the grouped
/// trapezoid-minus-integral sum over the Matsubara grid. This is
/// algebraically identical to F - E but free of the cancellation between two
/// large independently computed numbers, which is what makes the low-tau
/// entropy runs resolvable in finite precision.
ThermalBracket thermal_correction_bracket(const ProfileSource& src, double tau,
                                          const EngineConfig& cfg);

/// E(a) at T = 0, in J/m^2.
double zero_t_energy(const DielectricModel& model, const Geometry& geometry,
                     const EngineConfig& cfg);

/// F(a, T) = E(a) + dF(a, T) with convergence diagnostics. T = 0 returns the
/// zero-temperature energy.
FreeEnergyResult free_energy(const DielectricModel& model, const Geometry& geometry,
                             double T, const EngineConfig& cfg);

/// dF(a, T) = F - E, in J/m^2.
double thermal_correction(const DielectricModel& model, const Geometry& geometry,
                          double T, const EngineConfig& cfg);

/// S(a, T) = -dF/dT by Richardson-extrapolated central differences on the
/// thermal correction (the zero-T energy drops out of the derivative).
/// The extrapolation disagreement is reported through error_out.
double entropy(const DielectricModel& model, const Geometry& geometry, double T,
               const EngineConfig& cfg, double* error_out = nullptr);

/// Plain Matsubara sum with exponential tail extrapolation; cross-validation
/// path for the split evaluation above.
FreeEnergyResult free_energy_direct(const DielectricModel& model,
                                    const Geometry& geometry, double T,
                                    const EngineConfig& cfg);

}  // namespace casimir
