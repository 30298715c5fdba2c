#pragma once

namespace casimir {

/// Surface-charge accumulation on the sides of finite plates in a constant
/// in-plane field: d rho/dt = sigma0 E_tot, E_tot = E - 4 pi rho.
/// The model is linear in E, so callers usually consume the ratios.
struct RelaxationScenario {
  double sigma0;   // Gaussian conductivity, 1/s
  double E_field;  // arbitrary units
  double t;        // s
};

/// rho(t) = E/(4 pi) (1 - e^{-4 pi sigma0 t}).
double surface_charge(const RelaxationScenario& s);

/// E_tot(t) = E e^{-4 pi sigma0 t}.
double total_field(const RelaxationScenario& s);

/// rho(t)/rho(inf), dimensionless.
double charge_ratio(const RelaxationScenario& s);

/// E_tot(t)/E, dimensionless.
double field_ratio(const RelaxationScenario& s);

}  // namespace casimir
