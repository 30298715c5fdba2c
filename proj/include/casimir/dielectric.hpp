#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "casimir/frame.hpp"
#include "casimir/special_functions.hpp"

namespace casimir {

/// One core-electron oscillator: f in (rad/s)^2, g and omega in rad/s.
struct Oscillator {
  double f;
  double g;
  double omega;
};

struct OscillatorSet {
  std::vector<Oscillator> entries;

  OscillatorSet() = default;
  explicit OscillatorSet(std::vector<Oscillator> e);
  size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

struct Drude {
  double omega_p;
  double gamma;  // > 0 (gamma == 0 is canonicalized to Plasma)
};
struct Plasma {
  double omega_p;
};
struct NormalSkin {
  double sigma0;  // Gaussian units, 1/s
};
struct GeneralizedPlasma {
  double omega_p;
  OscillatorSet oscillators;
};

/// Limit of xi^2 (eps(i xi) - 1) as xi -> 0. From zero_freq_limit() the value
/// is in the dimensionless frame (w = 1/alpha^2 for plasma-like models); from
/// eps_imag() it is in (rad/s)^2.
struct ZeroFreqLimit {
  double w;
  bool te_vanishes;
};

/// The two amplitude factors of the Drude total current: the displacement
/// part multiplying Im[E0 e^{-iwt}] and the conduction part multiplying
/// Re[E0 e^{-iwt}].
struct CurrentSplit {
  double displacement_coeff;
  double conduction_coeff;
};

class DielectricModel {
 public:
  using Variant = std::variant<Drude, Plasma, NormalSkin, GeneralizedPlasma>;

  static DielectricModel drude(double omega_p, double gamma);
  static DielectricModel plasma(double omega_p);
  static DielectricModel normal_skin(double sigma0);
  static DielectricModel generalized_plasma(double omega_p, OscillatorSet set);

  const Variant& variant() const { return v_; }
  bool is_drude() const { return std::holds_alternative<Drude>(v_); }
  bool is_plasma() const { return std::holds_alternative<Plasma>(v_); }
  bool is_normal_skin() const { return std::holds_alternative<NormalSkin>(v_); }
  bool is_generalized_plasma() const {
    return std::holds_alternative<GeneralizedPlasma>(v_);
  }

  /// Plasma frequency, or 0 for the normal-skin model.
  double omega_p() const;
  const OscillatorSet* oscillators() const;

  /// eps(i xi) for xi > 0; at xi = 0 all four models diverge and the
  /// ZeroFreqLimit alternative is returned (w in (rad/s)^2).
  std::variant<double, ZeroFreqLimit> eps_imag(double xi) const;

  /// eps(i xi) for strictly positive xi.
  double eps_imag_pos(double xi) const;

  std::string name() const;

 private:
  explicit DielectricModel(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// A(zeta) = sum_j C_j / (1 + gamma_j zeta^2 + delta_j zeta) with
/// C_j = f_j/omega_j^2, gamma_j = omega_c^2/omega_j^2,
/// delta_j = omega_c g_j / omega_j^2.
double a_term(const OscillatorSet& set, double omega_c, double zeta);

/// sum_j C_j (separation-independent).
double sum_cj(const OscillatorSet& set);

/// sum_j C_j delta_j evaluated with omega_c = c/(2a); scales as 1/a.
double sum_cj_deltaj(const OscillatorSet& set, double a);

/// All moments needed by the expansion pipeline, at omega_c = c/(2a).
OscillatorMoments oscillator_moments(const OscillatorSet& set, double a);

/// sigma(omega) = sigma0 (1 + i omega/gamma) / (1 + omega^2/gamma^2),
/// sigma0 = omega_p^2/(4 pi gamma). Requires a dissipative Drude model.
std::complex<double> conductivity(const DielectricModel& model, double omega);

/// Displacement/conduction amplitude split of the total current.
/// Valid for Drude and Plasma models (the latter has zero conduction part).
CurrentSplit current_split(const DielectricModel& model, double omega);

/// Dimensionless zero-frequency limit in the given frame.
ZeroFreqLimit zero_freq_limit(const DielectricModel& model,
                              const DimensionlessFrame& frame);

/// Dimensionless permittivity evaluator bound to a frame: eps(i zeta omega_c).
class DimlessPermittivity {
 public:
  DimlessPermittivity(const DielectricModel& model,
                      const DimensionlessFrame& frame);

  double operator()(double zeta) const;
  long double eval_ld(long double zeta) const;
  /// (eps - 1) zeta^2 without forming eps; overflow-free down to zeta = 0.
  long double em1z2_ld(long double zeta) const;
  double w() const { return w_; }  // zero-frequency TE strength
  /// Scale of the low-frequency TE boundary layer (where (eps-1) zeta^2
  /// reaches 1), or 0 when there is none.
  double structure_scale() const;

 private:
  struct DimOsc {
    long double c, gamma, delta;
  };
  long double wp2_ = 0;     // (omega_p/omega_c)^2
  long double gamma_ = 0;   // gamma/omega_c (Drude)
  long double sigma_ = 0;   // 4 pi sigma0/omega_c (normal skin)
  std::vector<DimOsc> osc_;
  double w_ = 0;
  enum class Kind { drude, plasma, skin, gplasma } kind_;
};

}  // namespace casimir
