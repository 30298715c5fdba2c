#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "casimir/relaxation.hpp"
#include "oracle.hpp"

using namespace casimir;

namespace {
constexpr double kPi = 3.14159265358979323846;
// Au: 4 pi sigma0 = 3.5e18 1/s
const double kSigmaAu = 3.5e18 / (4 * kPi);
}  // namespace

TEST_CASE("limits") {
  CHECK(surface_charge({kSigmaAu, 2.0, 0.0}) == 0.0);
  CHECK(total_field({kSigmaAu, 2.0, 0.0}) == 2.0);
  // saturation
  const double rho_inf = 2.0 / (4 * kPi);
  CHECK(surface_charge({kSigmaAu, 2.0, 1e-12}) ==
        doctest::Approx(rho_inf).epsilon(1e-15));
  CHECK(total_field({kSigmaAu, 2.0, 1e-12}) == doctest::Approx(0.0).scale(1));
}

TEST_CASE("Au reaches 0.9698 of saturation within 1e-18 s") {
  const double ratio = charge_ratio({kSigmaAu, 1.0, 1e-18});
  CHECK(ratio == doctest::Approx(1.0 - std::exp(-3.5)).epsilon(1e-12));
  CHECK(std::fabs(ratio - 0.9698) < 1e-4);
}

TEST_CASE("closed form matches an RK4 integration of the rate equation") {
  // d rho/dt = sigma0 (E - 4 pi rho), E = 1
  const double t_end = 1e-18;
  const double rho_rk4 = oracle::rk4(
      [](double, double rho) { return kSigmaAu * (1.0 - 4 * kPi * rho); }, 0.0,
      0.0, t_end, 1e-21);
  const double rho = surface_charge({kSigmaAu, 1.0, t_end});
  CHECK(rho == doctest::Approx(rho_rk4).epsilon(1e-6));
}

TEST_CASE("conservation identity: E_tot + 4 pi rho = E exactly") {
  for (double t : {0.0, 1e-20, 5e-19, 1e-18, 1e-17}) {
    const RelaxationScenario s{kSigmaAu, 3.7, t};
    CHECK(total_field(s) + 4 * kPi * surface_charge(s) ==
          doctest::Approx(3.7).epsilon(1e-15));
  }
}

TEST_CASE("monotonicity on a grid") {
  double prev_rho = -1, prev_field = 2;
  for (double t = 0; t <= 2e-18; t += 1e-19) {
    const RelaxationScenario s{kSigmaAu, 1.0, t};
    const double rho = surface_charge(s), f = total_field(s);
    CHECK(rho > prev_rho);
    CHECK(f < prev_field);
    prev_rho = rho;
    prev_field = f;
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(surface_charge({0.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(total_field({1.0, 1.0, -1.0}), std::invalid_argument);
}
