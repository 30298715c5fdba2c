#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "casimir/lifshitz.hpp"
#include "oracle.hpp"

using namespace casimir;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kWpAu = 9.0 * codata.eV_to_rad_per_s;
const double kGammaAu = 0.035 * codata.eV_to_rad_per_s;

EngineConfig cfg_with(double tol) {
  EngineConfig cfg;
  cfg.rel_tol = tol;
  cfg.threads = 2;
  return cfg;
}
}  // namespace

TEST_CASE("matsubara frequency anchors") {
  CHECK(matsubara_frequency(300.0, 1) == doctest::Approx(2.47e14).epsilon(0.005));
  CHECK(matsubara_frequency(300.0, 0) == 0.0);
  CHECK(matsubara_frequency(600.0, 1) ==
        doctest::Approx(2 * matsubara_frequency(300.0, 1)).epsilon(1e-14));
  CHECK_THROWS_AS(matsubara_frequency(0.0, 1), std::invalid_argument);
}

TEST_CASE("effective temperature anchors") {
  CHECK(effective_temperature(1e-6) == doctest::Approx(1145.0).epsilon(0.01));
  CHECK(effective_temperature(2e-6) ==
        doctest::Approx(effective_temperature(1e-6) / 2).epsilon(1e-14));
  CHECK(effective_temperature(0.5e-6) ==
        doctest::Approx(2 * effective_temperature(1e-6)).epsilon(1e-14));
}

TEST_CASE("frame identities hold to 1e-12") {
  const double a = 0.7e-6, T = 214.0;
  const auto frame = DimensionlessFrame::make(a, T, kWpAu);
  CHECK(frame.tau ==
        doctest::Approx(2 * kPi * T / effective_temperature(a)).epsilon(1e-12));
  const double lambda_p = 2 * kPi * codata.c / kWpAu;
  CHECK(frame.alpha == doctest::Approx(lambda_p / (4 * kPi * a)).epsilon(1e-12));
  CHECK(frame.T_eff * a ==
        doctest::Approx(codata.hbar * codata.c / (2 * codata.k_B)).epsilon(1e-12));
}

TEST_CASE("integrand basics") {
  const double a = 1e-6;
  const auto geo = Geometry::semispace(a);
  const auto frame = DimensionlessFrame::make(a, 300.0, kWpAu);
  const auto plasma = DielectricModel::plasma(kWpAu);

  // vacuum source gives zero
  const auto vac = vacuum_source();
  double f;
  const double y = 1.3;
  kernels::eval_f_scalar(vac.at(0.5), &y, &f, 1);
  CHECK(f == 0.0);

  // ideal-metal profile: f = 2 y ln(1 - e^{-y})
  const auto ideal = ideal_metal_source();
  kernels::eval_f_scalar(ideal.at(0.5), &y, &f, 1);
  CHECK(f == doctest::Approx(2 * y * std::log1p(-std::exp(-y))).epsilon(1e-14));

  // f <= 0 everywhere
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> zd(0.0, 5.0), ud(1e-4, 25.0);
  for (int i = 0; i < 200; ++i) {
    const double zeta = (i % 7 == 0) ? 0.0 : zd(rng);
    CHECK(integrand(plasma, geo, frame, zeta, zeta + ud(rng)) <= 0.0);
  }
  CHECK_THROWS_AS(integrand(plasma, geo, frame, 2.0, 1.0), std::domain_error);
}

TEST_CASE("ideal-metal zero-temperature bracket") {
  // int_0^inf dzeta int_zeta^inf 2 y ln(1-e^{-y}) dy = -2 pi^4 / 45
  const auto cfg = cfg_with(1e-10);
  const double bracket = zero_t_energy_bracket(ideal_metal_source(), cfg);
  const double expect = -2 * std::pow(kPi, 4) / 45.0;
  CHECK(bracket == doctest::Approx(expect).epsilon(1e-8));
}

TEST_CASE("plasma zero-T energy approaches ideal as alpha -> 0") {
  const double a = 1e-6;
  const auto geo = Geometry::semispace(a);
  const auto cfg = cfg_with(1e-9);
  const double wc = codata.c / (2 * a);
  const double e_ideal = -kPi * kPi * codata.hbar * codata.c / (720 * a * a * a);
  double prev_deficit = 1.0;
  for (double alpha : {0.1, 0.05, 0.02}) {
    const double e = zero_t_energy(DielectricModel::plasma(wc / alpha), geo, cfg);
    const double deficit = 1.0 - e / e_ideal;  // |E| smaller than ideal
    CHECK(e < 0.0);
    CHECK(deficit > 0.0);
    CHECK(deficit < prev_deficit);
    prev_deficit = deficit;
  }
}

TEST_CASE("generalized plasma with empty set equals plasma at T = 0") {
  const double a = 1e-6;
  const auto geo = Geometry::semispace(a);
  const auto cfg = cfg_with(1e-9);
  const double e_p = zero_t_energy(DielectricModel::plasma(kWpAu), geo, cfg);
  const double e_gp = zero_t_energy(
      DielectricModel::generalized_plasma(kWpAu, OscillatorSet{}), geo, cfg);
  CHECK(e_gp == doctest::Approx(e_p).epsilon(2e-9));
}

TEST_CASE("free energy at T = 0 dispatches to the zero-T energy") {
  const double a = 1e-6;
  const auto geo = Geometry::semispace(a);
  const auto cfg = cfg_with(1e-8);
  const auto plasma = DielectricModel::plasma(kWpAu);
  const auto r = free_energy(plasma, geo, 0.0, cfg);
  CHECK(r.thermal_correction == 0.0);
  CHECK(r.free_energy == r.zero_t_energy);
  CHECK(r.free_energy ==
        doctest::Approx(zero_t_energy(plasma, geo, cfg)).epsilon(1e-8));
}

TEST_CASE("split result is internally consistent and converged") {
  const double a = 1e-6;
  const auto geo = Geometry::semispace(a);
  const auto cfg = cfg_with(1e-9);
  const auto plasma = DielectricModel::plasma(kWpAu);
  const auto r = free_energy(plasma, geo, 300.0, cfg);
  CHECK(r.free_energy == r.zero_t_energy + r.thermal_correction);  // construction
  CHECK(r.free_energy < 0.0);
  CHECK(r.achieved_tol <= cfg.rel_tol);
  CHECK(r.tail_estimate / std::fabs(r.free_energy) <= cfg.rel_tol);
  CHECK(r.terms_used > 5);
}

TEST_CASE("direct Matsubara sum agrees with the split evaluation") {
  const double a = 1e-6;
  const auto geo = Geometry::semispace(a);
  const auto cfg = cfg_with(1e-9);
  for (const auto& model :
       {DielectricModel::plasma(kWpAu), DielectricModel::drude(kWpAu, kGammaAu)}) {
    const auto split = free_energy(model, geo, 300.0, cfg);
    const auto direct = free_energy_direct(model, geo, 300.0, cfg);
    CHECK(direct.free_energy ==
          doctest::Approx(split.free_energy).epsilon(5e-9));
  }
}

TEST_CASE("tolerance self-consistency: loose vs tight runs") {
  const double a = 1e-6;
  const auto geo = Geometry::semispace(a);
  const auto plasma = DielectricModel::plasma(kWpAu);
  const auto loose = free_energy(plasma, geo, 300.0, cfg_with(1e-6));
  const auto tight = free_energy(plasma, geo, 300.0, cfg_with(1e-10));
  CHECK(std::fabs(loose.free_energy - tight.free_energy) <=
        2e-6 * std::fabs(tight.free_energy));
}

TEST_CASE("direct-sum tail estimate bounds the true remainder") {
  const double a = 1e-6;
  const auto geo = Geometry::semispace(a);
  const auto plasma = DielectricModel::plasma(kWpAu);
  const auto coarse = free_energy_direct(plasma, geo, 300.0, cfg_with(1e-5));
  const auto fine = free_energy_direct(plasma, geo, 300.0, cfg_with(1e-11));
  CHECK(fine.terms_used > coarse.terms_used);
  const double true_gap = std::fabs(fine.free_energy - coarse.free_energy);
  CHECK(true_gap <= coarse.tail_estimate + 5e-11 * std::fabs(fine.free_energy));
}

TEST_CASE("ideal-metal thermal correction matches the closed form") {
  // bracket = -[zeta3 tau^3/(4 pi^2) - tau^4/360] up to exponentially small
  // corrections
  const double z3 = 1.2020569031595942854;
  for (double tau : {0.1, 0.2}) {
    const auto th = thermal_correction_bracket(ideal_metal_source(), tau,
                                               cfg_with(1e-10));
    const double expect =
        -(z3 * tau * tau * tau / (4 * kPi * kPi) -
          tau * tau * tau * tau / 360.0);
    CHECK((double)th.value == doctest::Approx(expect).epsilon(2e-9));
  }
}

TEST_CASE("plasma thermal correction matches the small-tau closed form") {
  // alpha = 0.02, tau = 0.05; the closed form carries the alpha^0..alpha^1
  // terms exactly, so the comparison budget is the alpha^2 tau^5 order.
  const double a = 1e-6;
  const double wc = codata.c / (2 * a);
  const double alpha = 0.02;
  const auto geo = Geometry::semispace(a);
  const double tau = 0.05;
  const double T = tau * effective_temperature(a) / (2 * kPi);
  const auto frame = DimensionlessFrame::make(a, T, wc / alpha);
  CHECK(frame.tau == doctest::Approx(tau).epsilon(1e-13));

  const auto src = model_profile_source(DielectricModel::plasma(wc / alpha), geo,
                                        frame);
  const auto th = thermal_correction_bracket(src, tau, cfg_with(1e-9));

  const double z3 = 1.2020569031595942854;
  const double t3 = tau * tau * tau, t4 = t3 * tau;
  const double closed = -(z3 * t3 / (4 * kPi * kPi) - t4 / 360.0 +
                          alpha * (z3 * t3 / (kPi * kPi) - t4 / 45.0));
  // next order is ~alpha^2 tau^5
  const double budget = 1.0 * alpha * alpha * t4 * tau;
  CHECK(std::fabs((double)th.value - closed) < budget);
  CHECK(std::fabs((double)th.value - closed) > 1e-4 * budget);
}

TEST_CASE("model ordering: TE zero-mode suppression only removes binding") {
  const auto cfg = cfg_with(1e-7);
  for (double a : {0.5e-6, 1e-6}) {
    const auto geo = Geometry::semispace(a);
    for (double T : {77.0, 300.0}) {
      const auto fd =
          free_energy(DielectricModel::drude(kWpAu, kGammaAu), geo, T, cfg);
      const auto fp = free_energy(DielectricModel::plasma(kWpAu), geo, T, cfg);
      CHECK(std::fabs(fd.free_energy) < std::fabs(fp.free_energy));
    }
  }
}

TEST_CASE("entropy of the generalized plasma model is positive and ~T^2") {
  const double a = 1e-6;
  const auto geo = Geometry::semispace(a);
  const double u = codata.eV_to_rad_per_s;
  std::vector<Oscillator> osc = {
      {7.091 * u * u, 0.75 * u, 3.05 * u}, {41.46 * u * u, 1.85 * u, 4.15 * u},
      {2.7 * u * u, 1.0 * u, 5.4 * u},     {154.7 * u * u, 7.0 * u, 8.5 * u},
      {44.55 * u * u, 6.0 * u, 13.5 * u},  {309.6 * u * u, 9.0 * u, 21.5 * u}};
  const auto gp =
      DielectricModel::generalized_plasma(kWpAu, OscillatorSet(osc));

  const double teff = effective_temperature(a);
  const double alpha = (codata.c / (2 * a)) / kWpAu;
  const auto cfg = cfg_with(1e-6);

  const double tau = 0.01;
  const double T = tau * teff / (2 * kPi);
  double err = 0;
  const double s = entropy(gp, geo, T, cfg, &err);
  CHECK(s > 0.0);

  const double z3 = 1.2020569031595942854;
  const double lead = 3 * z3 * codata.k_B * (1 + 4 * alpha) /
                      (8 * kPi * a * a) * (T / teff) * (T / teff);
  CHECK(s == doctest::Approx(lead).epsilon(0.005));
  CHECK(err < 0.01 * s);
}

TEST_CASE("Drude entropy: negative plateau in the perfect-lattice regime") {
  // Relaxation far below every probed Matsubara frequency: the zero-mode TE
  // deficit dominates and S approaches a negative constant.
  const double a = 1e-6;
  const auto geo = Geometry::semispace(a);
  const double wc = codata.c / (2 * a);
  const auto drude = DielectricModel::drude(kWpAu, 1e-9 * wc);
  const double teff = effective_temperature(a);
  const auto cfg = cfg_with(1e-6);

  const double tau1 = 4e-3;
  const double s1 = entropy(drude, geo, tau1 * teff / (2 * kPi), cfg);
  const double s2 = entropy(drude, geo, 0.5 * tau1 * teff / (2 * kPi), cfg);
  CHECK(s1 < 0.0);
  CHECK(s2 < 0.0);
  CHECK(std::fabs(s2 - s1) < 0.02 * std::fabs(s1));
}

TEST_CASE("Drude entropy with laboratory relaxation is negative but drifts") {
  // With gamma fixed at the room-temperature value the entropy stays negative
  // over this range while shrinking roughly like sqrt(T).
  const double a = 1e-6;
  const auto geo = Geometry::semispace(a);
  const auto drude = DielectricModel::drude(kWpAu, kGammaAu);
  const double teff = effective_temperature(a);
  const auto cfg = cfg_with(1e-6);

  const double s1 = entropy(drude, geo, 4e-3 * teff / (2 * kPi), cfg);
  const double s2 = entropy(drude, geo, 2e-3 * teff / (2 * kPi), cfg);
  CHECK(s1 < 0.0);
  CHECK(s2 < 0.0);
  CHECK(std::fabs(s2) < std::fabs(s1));
}

TEST_CASE("entropy step underflow guard") {
  const auto geo = Geometry::semispace(1e-6);
  const auto plasma = DielectricModel::plasma(kWpAu);
  CHECK_THROWS_AS(entropy(plasma, geo, 5e-4, cfg_with(1e-6)), std::domain_error);
}

TEST_CASE("config validation") {
  EngineConfig bad;
  bad.rel_tol = 0.5;
  const auto geo = Geometry::semispace(1e-6);
  CHECK_THROWS_AS(free_energy(DielectricModel::plasma(kWpAu), geo, 300.0, bad),
                  std::invalid_argument);
}

TEST_CASE("max Matsubara terms guard raises a convergence error") {
  const auto geo = Geometry::semispace(1e-6);
  const auto plasma = DielectricModel::plasma(kWpAu);
  EngineConfig cfg = cfg_with(1e-8);
  cfg.max_matsubara_terms = 10;
  CHECK_THROWS_AS(thermal_correction(plasma, geo, 2.0, cfg), ConvergenceError);
  try {
    thermal_correction(plasma, geo, 2.0, cfg);
  } catch (const ConvergenceError& e) {
    CHECK(std::string(e.what()).find("achieved_tol") != std::string::npos);
    CHECK(e.achieved_tol > 0.0);
  }
}

TEST_CASE("frozen external-oracle anchor for the full free energy") {
  // plasma, alpha = 0.05, tau = 0.50025555176, semispace; reference bracket
  // computed with an independent arbitrary-precision implementation of the
  // Matsubara sum (22 digits): tau sum' Phi = -3.0750035577321274.
  const double a = 1e-6;
  const double wc = codata.c / (2 * a);
  const auto plasma = DielectricModel::plasma(wc / 0.05);
  const auto geo = Geometry::semispace(a);
  const auto r = free_energy(plasma, geo, 91.15817755, cfg_with(1e-10));
  const double bracket = r.free_energy / energy_prefactor(a);
  CHECK(bracket == doctest::Approx(-3.0750035577321274).epsilon(1e-11));
}
