#include "casimir/dielectric.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir {

OscillatorSet::OscillatorSet(std::vector<Oscillator> e) : entries(std::move(e)) {
  for (const auto& o : entries) {
    if (!(o.omega > 0))
      throw std::invalid_argument("OscillatorSet: resonant frequencies must be > 0");
    if (o.f < 0 || o.g < 0)
      throw std::invalid_argument("OscillatorSet: f_j and g_j must be >= 0");
  }
}

DielectricModel DielectricModel::drude(double omega_p, double gamma) {
  if (!(omega_p > 0)) throw std::invalid_argument("Drude: omega_p must be > 0");
  if (gamma < 0) throw std::invalid_argument("Drude: gamma must be >= 0");
  if (gamma == 0) return plasma(omega_p);  // dissipationless limit
  return DielectricModel(Drude{omega_p, gamma});
}

DielectricModel DielectricModel::plasma(double omega_p) {
  if (!(omega_p > 0)) throw std::invalid_argument("Plasma: omega_p must be > 0");
  return DielectricModel(Plasma{omega_p});
}

DielectricModel DielectricModel::normal_skin(double sigma0) {
  if (!(sigma0 > 0)) throw std::invalid_argument("NormalSkin: sigma0 must be > 0");
  return DielectricModel(NormalSkin{sigma0});
}

DielectricModel DielectricModel::generalized_plasma(double omega_p,
                                                    OscillatorSet set) {
  if (!(omega_p > 0))
    throw std::invalid_argument("GeneralizedPlasma: omega_p must be > 0");
  return DielectricModel(GeneralizedPlasma{omega_p, std::move(set)});
}

double DielectricModel::omega_p() const {
  return std::visit(
      [](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, NormalSkin>)
          return 0.0;
        else
          return m.omega_p;
      },
      v_);
}

const OscillatorSet* DielectricModel::oscillators() const {
  if (auto* gp = std::get_if<GeneralizedPlasma>(&v_)) return &gp->oscillators;
  return nullptr;
}

std::variant<double, ZeroFreqLimit> DielectricModel::eps_imag(double xi) const {
  if (xi < 0) throw std::domain_error("eps_imag: xi must be >= 0");
  if (xi == 0) {
    // All four models diverge at zero frequency; w = lim xi^2 (eps - 1).
    return std::visit(
        [](const auto& m) -> ZeroFreqLimit {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, Plasma>)
            return {m.omega_p * m.omega_p, false};
          else if constexpr (std::is_same_v<T, GeneralizedPlasma>)
            return {m.omega_p * m.omega_p, false};
          else
            return {0.0, true};  // Drude, NormalSkin
        },
        v_);
  }
  return eps_imag_pos(xi);
}

double DielectricModel::eps_imag_pos(double xi) const {
  if (!(xi > 0)) throw std::domain_error("eps_imag_pos: xi must be > 0");
  return std::visit(
      [xi](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Drude>) {
          return 1.0 + m.omega_p * m.omega_p / (xi * (xi + m.gamma));
        } else if constexpr (std::is_same_v<T, Plasma>) {
          return 1.0 + m.omega_p * m.omega_p / (xi * xi);
        } else if constexpr (std::is_same_v<T, NormalSkin>) {
          return 1.0 + 4 * pi_const * m.sigma0 / xi;
        } else {
          double a = 0;
          for (const auto& o : m.oscillators.entries)
            a += o.f / (o.omega * o.omega + xi * xi + o.g * xi);
          return 1.0 + m.omega_p * m.omega_p / (xi * xi) + a;
        }
      },
      v_);
}

std::string DielectricModel::name() const {
  if (is_drude()) return "drude";
  if (is_plasma()) return "plasma";
  if (is_normal_skin()) return "skin";
  return "gplasma";
}

double a_term(const OscillatorSet& set, double omega_c, double zeta) {
  if (zeta < 0) throw std::domain_error("a_term: zeta must be >= 0");
  double sum = 0;
  for (const auto& o : set.entries) {
    const double w2 = o.omega * o.omega;
    const double c = o.f / w2;
    const double g = omega_c * omega_c / w2;
    const double d = omega_c * o.g / w2;
    sum += c / (1.0 + g * zeta * zeta + d * zeta);
  }
  return sum;
}

double sum_cj(const OscillatorSet& set) {
  double s = 0;
  for (const auto& o : set.entries) s += o.f / (o.omega * o.omega);
  return s;
}

double sum_cj_deltaj(const OscillatorSet& set, double a) {
  if (!(a > 0)) throw std::invalid_argument("sum_cj_deltaj: a must be > 0");
  const double wc = codata.c / (2 * a);
  double s = 0;
  for (const auto& o : set.entries) {
    const double w2 = o.omega * o.omega;
    s += (o.f / w2) * (wc * o.g / w2);
  }
  return s;
}

OscillatorMoments oscillator_moments(const OscillatorSet& set, double a) {
  if (!(a > 0)) throw std::invalid_argument("oscillator_moments: a must be > 0");
  const double wc = codata.c / (2 * a);
  OscillatorMoments m;
  for (const auto& o : set.entries) {
    const double w2 = o.omega * o.omega;
    const double c = o.f / w2;
    const double d = wc * o.g / w2;
    const double g = wc * wc / w2;
    m.sum_c += c;
    m.sum_c_delta += c * d;
    m.sum_c_delta2 += c * d * d;
    m.sum_c_gamma += c * g;
  }
  return m;
}

std::complex<double> conductivity(const DielectricModel& model, double omega) {
  const auto* d = std::get_if<Drude>(&model.variant());
  if (!d) throw std::domain_error("conductivity: requires a dissipative Drude model");
  if (omega < 0) throw std::domain_error("conductivity: omega must be >= 0");
  const double sigma0 = d->omega_p * d->omega_p / (4 * pi_const * d->gamma);
  const double r = omega / d->gamma;
  return sigma0 * std::complex<double>(1.0, r) / (1.0 + r * r);
}

CurrentSplit current_split(const DielectricModel& model, double omega) {
  if (!(omega > 0)) throw std::domain_error("current_split: omega must be > 0");
  double omega_p = 0, gamma = 0;
  if (const auto* d = std::get_if<Drude>(&model.variant())) {
    omega_p = d->omega_p;
    gamma = d->gamma;
  } else if (const auto* p = std::get_if<Plasma>(&model.variant())) {
    omega_p = p->omega_p;
  } else {
    throw std::domain_error("current_split: requires a Drude or Plasma model");
  }
  const double den = omega * omega + gamma * gamma;
  CurrentSplit out;
  out.displacement_coeff =
      omega / (4 * pi_const) * (1.0 - omega_p * omega_p / den);
  out.conduction_coeff =
      gamma > 0 ? omega_p * omega_p / (4 * pi_const * gamma) * gamma * gamma / den
                : 0.0;
  return out;
}

ZeroFreqLimit zero_freq_limit(const DielectricModel& model,
                              const DimensionlessFrame& frame) {
  if (model.is_drude() || model.is_normal_skin()) return {0.0, true};
  const double w = 1.0 / (frame.alpha * frame.alpha);
  return {w, false};
}

DimlessPermittivity::DimlessPermittivity(const DielectricModel& model,
                                         const DimensionlessFrame& frame) {
  const long double wc = frame.omega_c;
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Drude>) {
          kind_ = Kind::drude;
          wp2_ = (long double)m.omega_p / wc * ((long double)m.omega_p / wc);
          gamma_ = (long double)m.gamma / wc;
        } else if constexpr (std::is_same_v<T, Plasma>) {
          kind_ = Kind::plasma;
          wp2_ = (long double)m.omega_p / wc * ((long double)m.omega_p / wc);
        } else if constexpr (std::is_same_v<T, NormalSkin>) {
          kind_ = Kind::skin;
          sigma_ = 4.0L * detail::pi_l * (long double)m.sigma0 / wc;
        } else {
          kind_ = Kind::gplasma;
          wp2_ = (long double)m.omega_p / wc * ((long double)m.omega_p / wc);
          for (const auto& o : m.oscillators.entries) {
            const long double w2 = (long double)o.omega * o.omega;
            osc_.push_back({(long double)o.f / w2, wc * wc / w2,
                            wc * (long double)o.g / w2});
          }
        }
      },
      model.variant());
  w_ = (kind_ == Kind::plasma || kind_ == Kind::gplasma) ? (double)wp2_ : 0.0;
}

long double DimlessPermittivity::eval_ld(long double zeta) const {
  switch (kind_) {
    case Kind::drude: return 1.0L + wp2_ / (zeta * (zeta + gamma_));
    case Kind::plasma: return 1.0L + wp2_ / (zeta * zeta);
    case Kind::skin: return 1.0L + sigma_ / zeta;
    case Kind::gplasma: {
      long double a = 0;
      for (const auto& o : osc_)
        a += o.c / (1.0L + o.gamma * zeta * zeta + o.delta * zeta);
      return 1.0L + wp2_ / (zeta * zeta) + a;
    }
  }
  return 1.0L;
}

long double DimlessPermittivity::em1z2_ld(long double zeta) const {
  switch (kind_) {
    case Kind::drude: return wp2_ * zeta / (zeta + gamma_);
    case Kind::plasma: return wp2_;
    case Kind::skin: return sigma_ * zeta;
    case Kind::gplasma: {
      long double a = 0;
      for (const auto& o : osc_)
        a += o.c / (1.0L + o.gamma * zeta * zeta + o.delta * zeta);
      return wp2_ + a * zeta * zeta;
    }
  }
  return 0;
}

double DimlessPermittivity::structure_scale() const {
  switch (kind_) {
    case Kind::drude: return (double)(gamma_ / wp2_);
    case Kind::skin: return (double)(1.0L / sigma_);
    default: return 0.0;
  }
}

double DimlessPermittivity::operator()(double zeta) const {
  return (double)eval_ld((long double)zeta);
}

}  // namespace casimir
