#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "casimir/dielectric.hpp"
#include "oracle.hpp"

using namespace casimir;

namespace {

// Gold oscillator table in rad/s (the same data as data/au.material).
OscillatorSet au_set() {
  const double u = codata.eV_to_rad_per_s;
  std::vector<Oscillator> v = {
      {7.091 * u * u, 0.75 * u, 3.05 * u}, {41.46 * u * u, 1.85 * u, 4.15 * u},
      {2.7 * u * u, 1.0 * u, 5.4 * u},     {154.7 * u * u, 7.0 * u, 8.5 * u},
      {44.55 * u * u, 6.0 * u, 13.5 * u},  {309.6 * u * u, 9.0 * u, 21.5 * u}};
  return OscillatorSet(std::move(v));
}

const double kWp = 9.0 * codata.eV_to_rad_per_s;
const double kGamma = 0.035 * codata.eV_to_rad_per_s;

}  // namespace

TEST_CASE("eps_imag anchor points") {
  const auto plasma = DielectricModel::plasma(kWp);
  CHECK(plasma.eps_imag_pos(kWp) == doctest::Approx(2.0).epsilon(1e-14));

  const auto drude = DielectricModel::drude(kWp, kGamma);
  const double expect = 1.0 + kWp * kWp / (2 * kGamma * kGamma);
  CHECK(drude.eps_imag_pos(kGamma) == doctest::Approx(expect).epsilon(1e-13));

  const auto gp = DielectricModel::generalized_plasma(kWp, au_set());
  CHECK(gp.eps_imag_pos(1e22) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("eps_imag is real > 1 and strictly decreasing for every model") {
  const auto models = {
      DielectricModel::drude(kWp, kGamma), DielectricModel::plasma(kWp),
      DielectricModel::normal_skin(kWp * kWp / (4 * pi_const * kGamma)),
      DielectricModel::generalized_plasma(kWp, au_set())};
  for (const auto& m : models) {
    double prev = std::numeric_limits<double>::infinity();
    for (double xi = 1e12; xi < 1e19; xi *= 3.7) {
      const double e = m.eps_imag_pos(xi);
      CHECK(e > 1.0);
      CHECK(e < prev);
      prev = e;
    }
  }
}

TEST_CASE("eps_imag at zero frequency returns the limit descriptor") {
  const auto drude = DielectricModel::drude(kWp, kGamma);
  const auto lim = std::get<ZeroFreqLimit>(drude.eps_imag(0.0));
  CHECK(lim.te_vanishes);
  CHECK(lim.w == 0.0);

  const auto plasma = DielectricModel::plasma(kWp);
  const auto lp = std::get<ZeroFreqLimit>(plasma.eps_imag(0.0));
  CHECK(!lp.te_vanishes);
  CHECK(lp.w == doctest::Approx(kWp * kWp));

  CHECK_THROWS_AS(plasma.eps_imag(-1.0), std::domain_error);
}

TEST_CASE("generalized plasma with empty set equals plasma") {
  const auto gp = DielectricModel::generalized_plasma(kWp, OscillatorSet{});
  const auto p = DielectricModel::plasma(kWp);
  for (double xi = 1e12; xi < 1e18; xi *= 2.3)
    CHECK(gp.eps_imag_pos(xi) ==
          doctest::Approx(p.eps_imag_pos(xi)).epsilon(1e-15));
}

TEST_CASE("Drude with gamma = 0 canonicalizes to Plasma") {
  const auto m = DielectricModel::drude(kWp, 0.0);
  CHECK(m.is_plasma());
  const auto frame = DimensionlessFrame::make(1e-6, 300.0, kWp);
  const auto lim = zero_freq_limit(m, frame);
  CHECK(!lim.te_vanishes);
  CHECK(lim.w == doctest::Approx(1.0 / (frame.alpha * frame.alpha)).epsilon(1e-13));
}

TEST_CASE("a_term at zeta = 0 equals sum C_j and decreases") {
  const auto set = au_set();
  const double wc = codata.c / (2 * 200e-9);
  const double s0 = a_term(set, wc, 0.0);
  CHECK(s0 == doctest::Approx(6.3175).epsilon(2e-4));  // reference Au anchor
  CHECK(s0 == doctest::Approx(sum_cj(set)).epsilon(1e-15));
  double prev = s0;
  for (double z : {0.1, 0.5, 2.0, 10.0, 100.0}) {
    const double v = a_term(set, wc, z);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(a_term(set, wc, 1e8) < 1e-10);
  CHECK(a_term(OscillatorSet{}, wc, 1.0) == 0.0);
}

TEST_CASE("sum Cj deltaj anchors and scaling") {
  const auto set = au_set();
  CHECK(sum_cj_deltaj(set, 200e-9) == doctest::Approx(0.272).epsilon(0.01));
  CHECK(sum_cj_deltaj(set, 500e-9) == doctest::Approx(0.109).epsilon(0.01));
  const double ratio = sum_cj_deltaj(set, 200e-9) / sum_cj_deltaj(set, 500e-9);
  CHECK(ratio == doctest::Approx(2.5).epsilon(1e-14));
  CHECK_THROWS_AS(sum_cj_deltaj(set, 0.0), std::invalid_argument);
}

TEST_CASE("conductivity of the Drude model") {
  const auto drude = DielectricModel::drude(kWp, kGamma);
  const double sigma0 = kWp * kWp / (4 * pi_const * kGamma);

  const auto s0 = conductivity(drude, 0.0);
  CHECK(s0.real() == doctest::Approx(sigma0).epsilon(1e-14));
  CHECK(s0.imag() == 0.0);

  const auto sg = conductivity(drude, kGamma);
  CHECK(sg.real() == doctest::Approx(sigma0 / 2).epsilon(1e-14));
  CHECK(sg.imag() == doctest::Approx(sigma0 / 2).epsilon(1e-14));

  const auto sh = conductivity(drude, 100 * kGamma);
  CHECK(std::fabs(sh.real() / sh.imag()) == doctest::Approx(0.01).epsilon(1e-3));

  CHECK_THROWS_AS(conductivity(DielectricModel::plasma(kWp), 1e14),
                  std::domain_error);
}

TEST_CASE("current split") {
  const auto drude = DielectricModel::drude(kWp, kGamma);
  const double sigma0 = kWp * kWp / (4 * pi_const * kGamma);

  const auto low = current_split(drude, kGamma * 1e-4);
  CHECK(low.conduction_coeff == doctest::Approx(sigma0).epsilon(1e-7));

  const auto at_gamma = current_split(drude, kGamma);
  CHECK(at_gamma.conduction_coeff == doctest::Approx(sigma0 / 2).epsilon(1e-13));

  const auto plasma = current_split(DielectricModel::plasma(kWp), 1e15);
  CHECK(plasma.conduction_coeff == 0.0);

  // conduction -> 0 as omega/gamma -> inf
  CHECK(current_split(drude, 1e4 * kGamma).conduction_coeff < 1e-8 * sigma0);
}

TEST_CASE("zero_freq_limit per model") {
  const auto frame = DimensionlessFrame::make(1e-6, 300.0, kWp);
  const double w_expect = 1.0 / (frame.alpha * frame.alpha);

  CHECK(zero_freq_limit(DielectricModel::plasma(kWp), frame).w ==
        doctest::Approx(w_expect).epsilon(1e-13));
  const auto gp =
      zero_freq_limit(DielectricModel::generalized_plasma(kWp, au_set()), frame);
  CHECK(gp.w == doctest::Approx(w_expect).epsilon(1e-13));
  CHECK(!gp.te_vanishes);

  const auto dr = zero_freq_limit(DielectricModel::drude(kWp, kGamma), frame);
  CHECK(dr.w == 0.0);
  CHECK(dr.te_vanishes);
  const auto sk = zero_freq_limit(
      DielectricModel::normal_skin(kWp * kWp / (4 * pi_const * kGamma)), frame);
  CHECK(sk.w == 0.0);
  CHECK(sk.te_vanishes);

  // alpha = 0.05 gives w = 400
  const double wc = codata.c / (2 * 1e-6);
  const auto f2 = DimensionlessFrame::make(1e-6, 300.0, wc / 0.05);
  CHECK(zero_freq_limit(DielectricModel::plasma(wc / 0.05), f2).w ==
        doctest::Approx(400.0).epsilon(1e-12));
}

TEST_CASE("DimlessPermittivity matches eps_imag and exposes em1z2") {
  const auto frame = DimensionlessFrame::make(1e-6, 300.0, kWp);
  for (const auto& m :
       {DielectricModel::drude(kWp, kGamma), DielectricModel::plasma(kWp),
        DielectricModel::generalized_plasma(kWp, au_set())}) {
    const DimlessPermittivity eps(m, frame);
    for (double zeta : {1e-4, 0.05, 1.0, 12.0}) {
      const double xi = zeta * frame.omega_c;
      CHECK(eps(zeta) == doctest::Approx(m.eps_imag_pos(xi)).epsilon(1e-12));
      const double em = (double)eps.em1z2_ld(zeta);
      CHECK(em == doctest::Approx((eps(zeta) - 1) * zeta * zeta).epsilon(1e-10));
    }
  }
}

TEST_CASE("oscillator invariants are enforced") {
  CHECK_THROWS_AS(OscillatorSet({{1.0, 0.1, 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(OscillatorSet({{-1.0, 0.1, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(DielectricModel::plasma(0.0), std::invalid_argument);
  CHECK_THROWS_AS(DielectricModel::normal_skin(-2.0), std::invalid_argument);
}
