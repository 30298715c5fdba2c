// Command-line front end: parameter sweeps, model comparisons, the Nernst
// sweep, asymptotics cross-validation, and the charge-relaxation table.
// Output is RFC-4180-style CSV on stdout, 12 significant digits.
//
// Exit codes: 0 success, 2 flag/usage errors, 3 convergence failures.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "casimir/asymptotics.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/material_file.hpp"
#include "casimir/reflection.hpp"
#include "casimir/relaxation.hpp"

using namespace casimir;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

struct CommonOpts {
  std::string model = "plasma";
  std::string material;
  double a = 1e-6;
  double T = 300.0;
  double d = 0.0;
  bool semispace = true;
  double tol = 1e-8;
  int threads = 0;
  double omega_p_ev = 9.0;
  double gamma_ev = 0.035;
  double alpha = 0.0;  // overrides omega_p when > 0
  bool seed_check = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_temperature = true) {
  cmd->add_option("--model", o.model, "drude|plasma|gplasma|skin")
      ->check(CLI::IsMember({"drude", "plasma", "gplasma", "skin"}));
  cmd->add_option("--material", o.material,
                  "material file (searched in CASIMIR_MATERIALS_DIR)");
  cmd->add_option("--a", o.a, "separation in m")->check(CLI::PositiveNumber);
  if (with_temperature)
    cmd->add_option("--T", o.T, "temperature in K")->check(CLI::NonNegativeNumber);
  cmd->add_option("--d", o.d, "plate thickness in m (default: semispaces)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--semispace", o.semispace, "semi-infinite plates (default)");
  cmd->add_option("--tol", o.tol, "relative tolerance")
      ->check(CLI::Range(1e-12, 9.9e-3));
  cmd->add_option("--threads", o.threads, "worker pool cap (0 = all)");
  cmd->add_option("--omega-p-ev", o.omega_p_ev, "plasma frequency in eV");
  cmd->add_option("--gamma-ev", o.gamma_ev, "Drude relaxation in eV");
  cmd->add_option("--alpha", o.alpha,
                  "set omega_p from alpha = c/(2 a omega_p) instead");
  cmd->add_flag("--seed-check", o.seed_check,
                "run the module invariant suite and exit");
}

std::optional<MaterialRecord> load_record(const CommonOpts& o) {
  if (o.material.empty()) return std::nullopt;
  std::string path = o.material;
  if (!std::filesystem::exists(path) && path != "-") {
    if (const char* dir = std::getenv("CASIMIR_MATERIALS_DIR")) {
      const std::string alt = std::string(dir) + "/" + o.material;
      if (std::filesystem::exists(alt)) path = alt;
    }
  }
  return load_material(path);
}

DielectricModel build_model(const CommonOpts& o,
                            const std::optional<MaterialRecord>& rec) {
  double omega_p = o.omega_p_ev * codata.eV_to_rad_per_s;
  double gamma = o.gamma_ev * codata.eV_to_rad_per_s;
  if (rec) {
    omega_p = rec->omega_p;
    gamma = rec->gamma;
  }
  if (o.alpha > 0) omega_p = codata.c / (2 * o.a) / o.alpha;

  if (o.model == "plasma") return DielectricModel::plasma(omega_p);
  if (o.model == "drude") return DielectricModel::drude(omega_p, gamma);
  if (o.model == "skin") {
    if (!(gamma > 0))
      throw CLI::ValidationError("--model skin requires gamma > 0");
    return DielectricModel::normal_skin(omega_p * omega_p / (4 * kPi * gamma));
  }
  if (!rec)
    throw CLI::ValidationError("--model gplasma: material file required");
  return rec->generalized_plasma_model();
}

Geometry build_geometry(const CommonOpts& o) {
  return o.d > 0 ? Geometry::slab(o.a, o.d) : Geometry::semispace(o.a);
}

EngineConfig build_config(const CommonOpts& o) {
  EngineConfig cfg;
  cfg.rel_tol = o.tol;
  cfg.threads = o.threads;
  return cfg;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || y[i] == 0) continue;
    const double lx = std::log(x[i]), ly = std::log(std::fabs(y[i]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) return std::nan("");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// ---------------------------------------------------------------------------
// invariant suites behind --seed-check

int seed_check_energy(const CommonOpts& o) {
  const double a = 1e-6, T = 300.0;
  const double wp = 9.0 * codata.eV_to_rad_per_s;
  const auto frame = DimensionlessFrame::make(a, T, wp);
  const double teff = effective_temperature(a);
  bool ok = std::fabs(frame.tau - 2 * kPi * T / teff) < 1e-12 * frame.tau;
  const double lambda_p = 2 * kPi * codata.c / wp;
  ok = ok && std::fabs(frame.alpha - lambda_p / (4 * kPi * a)) <
                 1e-12 * frame.alpha;

  // integrand sign and kernel equivalence on a random batch
  const auto geo = Geometry::semispace(a);
  const auto src = model_profile_source(DielectricModel::plasma(wp), geo, frame);
  const auto fast = kernels::select_batch(false);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> zd(0.0, 4.0), ud(1e-4, 20.0);
  for (int i = 0; i < 64 && ok; ++i) {
    const double zeta = (i % 6 == 0) ? 0.0 : zd(rng);
    const double y = zeta + ud(rng);
    const auto prof = src.at(zeta);
    double f_fast, f_ref;
    fast(prof, &y, &f_fast, 1);
    kernels::eval_f_scalar(prof, &y, &f_ref, 1);
    ok = f_fast <= 0.0 &&
         std::fabs(f_fast - f_ref) <= 1e-12 * std::max(1.0, std::fabs(f_ref));
  }

  // ideal-metal zero-temperature bracket
  EngineConfig cfg;
  cfg.rel_tol = 1e-7;
  cfg.threads = o.threads;
  const double bracket = zero_t_energy_bracket(ideal_metal_source(), cfg);
  ok = ok && std::fabs(bracket + 2 * std::pow(kPi, 4) / 45.0) < 1e-5;
  return ok ? 0 : 1;
}

int seed_check_nernst(const CommonOpts&) {
  const double a = 1e-6, alpha = 0.02;
  const double wp = codata.c / (2 * a) / alpha;
  const double teff = effective_temperature(a);
  OscillatorSet empty;
  bool ok = true;
  for (double tau : {1e-3, 0.05}) {
    const double T = tau * teff / (2 * kPi);
    const double h = 1e-5 * T;
    auto f_of = [&](double Tx) {
      const auto fr = DimensionlessFrame::make(a, Tx, wp);
      return free_energy_expansion(fr, a, empty, 0.0).total;
    };
    const auto fr = DimensionlessFrame::make(a, T, wp);
    const double s = entropy_expansion(fr, a, empty);
    const double s_fd = -(f_of(T + h) - f_of(T - h)) / (2 * h);
    ok = ok && s > 0 && std::fabs(s - s_fd) < 1e-7 * std::fabs(s);
  }
  return ok ? 0 : 1;
}

int seed_check_asym(const CommonOpts&) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> ad(0.005, 0.1), td(0.005, 0.1);
  OscillatorSet empty;
  bool ok = true;
  for (int i = 0; i < 5 && ok; ++i) {
    const double a = 1e-6, alpha = ad(rng), tau = td(rng);
    const double wp = codata.c / (2 * a) / alpha;
    const double T = tau * effective_temperature(a) / (2 * kPi);
    const auto fr = DimensionlessFrame::make(a, T, wp);
    const auto b = free_energy_expansion(fr, a, empty, -1e-9);
    const double sum = -1e-9 + delta_f_plasma(fr, a) + delta_f_core(fr, a, empty);
    ok = std::fabs(b.total - sum) <= 1e-12 * std::fabs(b.total);
  }
  return ok ? 0 : 1;
}

int seed_check_relax(const CommonOpts&) {
  const double sigma0 = 3.5e18 / (4 * kPi);
  double prev_rho = -1;
  for (double t = 0; t <= 2e-18; t += 2e-19) {
    const RelaxationScenario s{sigma0, 1.3, t};
    const double rho = surface_charge(s);
    if (std::fabs(total_field(s) + 4 * kPi * rho - 1.3) > 1e-14) return 1;
    if (!(rho > prev_rho)) return 1;
    prev_rho = rho;
  }
  return 0;
}

// ---------------------------------------------------------------------------

int cmd_energy(const CommonOpts& o, const std::string& sweep, double from,
               double to, int points, bool log_spacing) {
  if (o.seed_check) return seed_check_energy(o);
  const auto rec = load_record(o);
  const auto model = build_model(o, rec);
  const auto cfg = build_config(o);

  std::vector<std::pair<double, double>> grid;  // (a, T)
  if (sweep.empty()) {
    grid.emplace_back(o.a, o.T);
  } else {
    if (points < 2) throw CLI::ValidationError("--points must be >= 2");
    if (!(from < to) || !(from > 0))
      throw CLI::ValidationError("need 0 < --from < --to");
    for (int i = 0; i < points; ++i) {
      const double f = (double)i / (points - 1);
      const double v = log_spacing ? from * std::pow(to / from, f)
                                   : from + (to - from) * f;
      grid.emplace_back(sweep == "a" ? v : o.a, sweep == "T" ? v : o.T);
    }
  }

  std::printf("a_m,T_K,alpha,tau,E_Jm2,dF_Jm2,F_Jm2,terms,tail,tol\n");
  for (const auto& [a, T] : grid) {
    const auto geo = o.d > 0 ? Geometry::slab(a, o.d) : Geometry::semispace(a);
    const auto frame = DimensionlessFrame::make(a, T, model.omega_p());
    const auto r = free_energy(model, geo, T, cfg);
    std::printf("%s,%s,%s,%s,%s,%s,%s,%ld,%s,%s\n", fmt(a).c_str(),
                fmt(T).c_str(), fmt(frame.alpha).c_str(), fmt(frame.tau).c_str(),
                fmt(r.zero_t_energy).c_str(), fmt(r.thermal_correction).c_str(),
                fmt(r.free_energy).c_str(), r.terms_used,
                fmt(r.tail_estimate).c_str(), fmt(r.achieved_tol).c_str());
  }
  return 0;
}

int cmd_nernst(const CommonOpts& o, double tau_min, double tau_max, int points) {
  if (o.seed_check) return seed_check_nernst(o);
  const auto rec = load_record(o);
  const auto model = build_model(o, rec);
  const auto geo = build_geometry(o);
  auto cfg = build_config(o);
  if (cfg.rel_tol > 1e-6) cfg.rel_tol = 1e-6;  // entropy needs headroom

  const double teff = effective_temperature(o.a);
  const OscillatorSet empty;
  const OscillatorSet* set = model.oscillators();
  if (!set) set = &empty;

  std::vector<double> Ts, Ss;
  std::printf("T,S_direct,S_expansion,slope_estimate\n");
  for (int i = 0; i < points; ++i) {
    const double f = points > 1 ? (double)i / (points - 1) : 0.0;
    const double tau = tau_min * std::pow(tau_max / tau_min, f);
    const double T = tau * teff / (2 * kPi);
    const double s = entropy(model, geo, T, cfg);
    const auto frame = DimensionlessFrame::make(o.a, T, model.omega_p());
    const double s_exp = model.is_normal_skin()
                             ? std::nan("")
                             : entropy_expansion(frame, o.a, *set);
    Ts.push_back(T);
    Ss.push_back(s);
    const double slope = fit_slope(Ts, Ss);
    std::printf("%s,%s,%s,%s\n", fmt(T).c_str(), fmt(s).c_str(),
                fmt(s_exp).c_str(), fmt(slope).c_str());
  }

  bool positive = true, negative = true;
  for (double s : Ss) {
    positive = positive && s > 0;
    negative = negative && s < 0;
  }
  const double slope = fit_slope(Ts, Ss);
  if (positive && std::fabs(slope - 2.0) <= 0.05) {
    std::printf("NERNST-OK slope=%s\n", fmt(slope).c_str());
  } else if (negative) {
    std::printf("NERNST-VIOLATED S(Tmin)=%s\n", fmt(Ss.front()).c_str());
  } else {
    std::printf("NERNST-INCONCLUSIVE slope=%s\n", fmt(slope).c_str());
  }
  return 0;
}

int cmd_asym_compare(const CommonOpts& o, double tau_min, double tau_max,
                     int points) {
  if (o.seed_check) return seed_check_asym(o);
  const auto rec = load_record(o);
  const auto model = build_model(o, rec);
  if (model.is_drude() || model.is_normal_skin())
    throw CLI::ValidationError(
        "asym-compare applies to the plasma and gplasma models");
  const auto geo = build_geometry(o);
  const auto cfg = build_config(o);

  const double teff = effective_temperature(o.a);
  const OscillatorSet empty;
  const OscillatorSet* set = model.oscillators();
  if (!set) set = &empty;

  const double e0 = zero_t_energy(model, geo, cfg);

  struct Row {
    double tau, f_direct, f_asym, resid;
    bool extrapolated;
  };
  std::vector<Row> rows;
  std::vector<double> taus, abs_resids;  // fitted_order tracks the absolute gap
  for (int i = 0; i < points; ++i) {
    const double f = points > 1 ? (double)i / (points - 1) : 0.0;
    const double tau = tau_min * std::pow(tau_max / tau_min, f);
    const double T = tau * teff / (2 * kPi);
    const auto frame = DimensionlessFrame::make(o.a, T, model.omega_p());
    const auto src = model_profile_source(model, geo, frame);
    const double dF = energy_prefactor(o.a) *
                      (double)thermal_correction_bracket(src, frame.tau, cfg).value;
    const double f_direct = e0 + dF;
    const double f_asym = free_energy_expansion(frame, o.a, *set, e0).total;
    const double resid = std::fabs(f_direct - f_asym) / std::fabs(dF);
    rows.push_back({tau, f_direct, f_asym, resid,
                    !within_asymptotic_window(tau)});
    if (within_asymptotic_window(tau)) {
      taus.push_back(tau);
      abs_resids.push_back(std::fabs(f_direct - f_asym));
    }
  }
  const double order = fit_slope(taus, abs_resids);

  std::printf("tau,F_direct,F_asym,residual,fitted_order,flag\n");
  for (const auto& r : rows)
    std::printf("%s,%s,%s,%s,%s,%s\n", fmt(r.tau).c_str(), fmt(r.f_direct).c_str(),
                fmt(r.f_asym).c_str(), fmt(r.resid).c_str(), fmt(order).c_str(),
                r.extrapolated ? "extrapolated" : "ok");
  return 0;
}

int cmd_relax(const CommonOpts& o, double four_pi_sigma0, double t_min,
              double t_max, int points) {
  if (o.seed_check) return seed_check_relax(o);
  if (!(four_pi_sigma0 > 0))
    throw CLI::ValidationError("--four-pi-sigma0 must be > 0");
  const double sigma0 = four_pi_sigma0 / (4 * kPi);
  std::printf("t_s,rho_ratio,field_ratio\n");
  for (int i = 0; i < points; ++i) {
    const double f = points > 1 ? (double)i / (points - 1) : 0.0;
    const double t =
        t_min > 0 ? t_min * std::pow(t_max / t_min, f) : t_max * f;
    const RelaxationScenario s{sigma0, 1.0, t};
    std::printf("%s,%s,%s\n", fmt(t).c_str(), fmt(charge_ratio(s)).c_str(),
                fmt(field_ratio(s)).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Thermal Casimir free energy and entropy between parallel metal "
      "plates (Matsubara formulation; Drude, plasma, normal-skin and "
      "generalized plasma-like permittivities). Valid for plate area S with "
      "a << sqrt(S); the area itself does not enter."};
  app.require_subcommand(1);

  CommonOpts eo, no, ao, ro;

  auto* energy = app.add_subcommand("energy", "free energy at (a, T), CSV");
  add_common(energy, eo);
  std::string sweep;
  double from = 0, to = 0;
  int points = 8;
  bool log_spacing = false;
  energy->add_option("--sweep", sweep, "sweep axis: a|T")
      ->check(CLI::IsMember({"a", "T"}));
  energy->add_option("--from", from, "sweep start");
  energy->add_option("--to", to, "sweep stop");
  energy->add_option("--points", points, "sweep points");
  energy->add_flag("--log", log_spacing, "log spacing");

  auto* nernst =
      app.add_subcommand("nernst", "low-temperature entropy sweep + verdict");
  add_common(nernst, no, false);
  double n_tau_min = 1e-3, n_tau_max = 1e-2;
  int n_points = 6;
  nernst->add_option("--tau-min", n_tau_min, "smallest tau = 2 pi T/T_eff")
      ->check(CLI::Range(1e-4, 0.1));
  nernst->add_option("--tau-max", n_tau_max, "largest tau")
      ->check(CLI::Range(1e-4, 0.1));
  nernst->add_option("--points", n_points, "grid points");

  auto* asym = app.add_subcommand(
      "asym-compare", "direct numerics vs low-temperature closed forms");
  add_common(asym, ao, false);
  double a_tau_min = 0.02, a_tau_max = 0.2;
  int a_points = 8;
  asym->add_option("--tau-min", a_tau_min, "smallest tau");
  asym->add_option("--tau-max", a_tau_max, "largest tau");
  asym->add_option("--points", a_points, "grid points");

  auto* relax =
      app.add_subcommand("relax", "surface-charge relaxation table");
  relax->add_flag("--seed-check", ro.seed_check,
                  "run the module invariant suite and exit");
  double four_pi_sigma0 = 3.5e18, t_min = 1e-20, t_max = 5e-18;
  int r_points = 20;
  relax->add_option("--four-pi-sigma0", four_pi_sigma0,
                    "4 pi sigma0 in 1/s (Gaussian units)");
  relax->add_option("--t-min", t_min, "first time, s");
  relax->add_option("--t-max", t_max, "last time, s");
  relax->add_option("--points", r_points, "grid points");

  try {
    app.parse(argc, argv);
    if (energy->parsed()) return cmd_energy(eo, sweep, from, to, points, log_spacing);
    if (nernst->parsed()) return cmd_nernst(no, n_tau_min, n_tau_max, n_points);
    if (asym->parsed()) return cmd_asym_compare(ao, a_tau_min, a_tau_max, a_points);
    if (relax->parsed()) return cmd_relax(ro, four_pi_sigma0, t_min, t_max, r_points);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "convergence failure: %s\n", e.what());
    return 3;
  } catch (const MaterialParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
