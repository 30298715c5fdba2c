#include "casimir/relaxation.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir {

namespace {
void check(const RelaxationScenario& s) {
  if (!(s.sigma0 > 0))
    throw std::invalid_argument("relaxation: sigma0 must be > 0");
  if (s.t < 0) throw std::invalid_argument("relaxation: t must be >= 0");
}
}  // namespace

double surface_charge(const RelaxationScenario& s) {
  check(s);
  return s.E_field / (4 * pi_const) * -std::expm1(-4 * pi_const * s.sigma0 * s.t);
}

double total_field(const RelaxationScenario& s) {
  check(s);
  return s.E_field * std::exp(-4 * pi_const * s.sigma0 * s.t);
}

double charge_ratio(const RelaxationScenario& s) {
  check(s);
  return -std::expm1(-4 * pi_const * s.sigma0 * s.t);
}

double field_ratio(const RelaxationScenario& s) {
  check(s);
  return std::exp(-4 * pi_const * s.sigma0 * s.t);
}

}  // namespace casimir
