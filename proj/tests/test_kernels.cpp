#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "casimir/kernels.hpp"

using namespace casimir;
using kernels::Profile;
using kernels::ProfileL;

namespace {

Profile make_positive(double eps, double zeta, double dh) {
  Profile p;
  p.mode = Profile::Mode::positive_zeta;
  p.eps = eps;
  p.zeta2 = zeta * zeta;
  p.em1z2 = (eps - 1) * zeta * zeta;
  p.semispace = std::isinf(dh);
  p.half_thickness = dh;
  return p;
}

ProfileL to_ld(const Profile& p) {
  ProfileL q;
  q.mode = static_cast<ProfileL::Mode>(p.mode);
  q.eps = p.eps;
  q.zeta2 = p.zeta2;
  q.em1z2 = p.em1z2;
  q.w = p.w;
  q.semispace = p.semispace;
  q.half_thickness = p.half_thickness;
  return q;
}

const double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("scalar double kernel agrees with the long double reference") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> zeta_d(1e-3, 8.0);
  std::uniform_real_distribution<double> logeps(0.01, 14.0);
  std::uniform_real_distribution<double> u_d(1e-4, 40.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double zeta = zeta_d(rng);
    const double eps = 1.0 + std::exp(logeps(rng));
    const double dh = (trial % 3 == 0) ? kInf : (0.05 + 0.4 * u_d(rng));
    const Profile p = make_positive(eps, zeta, dh);
    const ProfileL pl = to_ld(p);
    double y = zeta + u_d(rng);
    double f;
    kernels::eval_f_scalar(p, &y, &f, 1);
    long double yl = y, fl;
    kernels::eval_f_ld(pl, &yl, &fl, 1);
    CHECK(f == doctest::Approx((double)fl).epsilon(2e-13));
    CHECK(f <= 0.0);
  }
}

TEST_CASE("dispatched kernel matches scalar on random batches") {
  const auto fast = kernels::select_batch(false);
  INFO("selected kernel: ", kernels::selected_name());

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> zeta_d(1e-6, 10.0);
  std::uniform_real_distribution<double> logeps(0.01, 20.0);
  std::uniform_real_distribution<double> u_d(1e-5, 60.0);

  for (int trial = 0; trial < 60; ++trial) {
    const double zeta = zeta_d(rng);
    const double eps = 1.0 + std::exp(logeps(rng));
    Profile p;
    if (trial % 4 == 0) {
      p.mode = Profile::Mode::zero_zeta;
      p.w = std::exp(logeps(rng));
      p.semispace = trial % 8 == 0;
      p.half_thickness = p.semispace ? kInf : 1.5;
    } else if (trial % 7 == 0) {
      p.mode = Profile::Mode::ideal_metal;
    } else {
      p = make_positive(eps, zeta, (trial % 2) ? kInf : 0.8);
    }

    std::vector<double> y(37), f_fast(37), f_ref(37);
    for (auto& v : y) v = zeta + u_d(rng);
    fast(p, y.data(), f_fast.data(), (int)y.size());
    kernels::eval_f_scalar(p, y.data(), f_ref.data(), (int)y.size());
    for (size_t i = 0; i < y.size(); ++i) {
      CHECK(f_fast[i] ==
            doctest::Approx(f_ref[i]).epsilon(5e-13).scale(std::max(
                1e-280, std::fabs(f_ref[i]))));
      CHECK(f_fast[i] <= 0.0);
    }
  }
}

TEST_CASE("ideal metal and vacuum profiles") {
  Profile ideal;
  ideal.mode = Profile::Mode::ideal_metal;
  Profile vac;
  vac.mode = Profile::Mode::vacuum;

  const auto fast = kernels::select_batch(false);
  for (double y : {0.2, 1.0, 3.5, 12.0}) {
    double fi, fv;
    fast(ideal, &y, &fi, 1);
    fast(vac, &y, &fv, 1);
    CHECK(fi == doctest::Approx(2 * y * std::log1p(-std::exp(-y))).epsilon(1e-13));
    CHECK(fv == 0.0);
  }
}

TEST_CASE("force-scalar switches the dispatch") {
  CHECK(kernels::select_batch(true) == &kernels::eval_f_scalar);
  CHECK(std::string(kernels::selected_name(true)) == "scalar");
}

TEST_CASE("kernel handles extreme arguments without overflow") {
  // permittivity near the clamp threshold, tiny and huge y
  for (double eps : {1.0 + 1e-12, 1e6, 1e118}) {
    const Profile p = make_positive(eps, 0.5, kInf);
    const auto fast = kernels::select_batch(false);
    for (double y : {0.5000001, 1.0, 50.0, 400.0, 700.0}) {
      double f_fast, f_ref;
      fast(p, &y, &f_fast, 1);
      kernels::eval_f_scalar(p, &y, &f_ref, 1);
      CHECK(std::isfinite(f_fast));
      CHECK(f_fast == doctest::Approx(f_ref).epsilon(1e-12).scale(
                          std::max(1e-280, std::fabs(f_ref))));
    }
  }
}
