#include "casimir/reflection.hpp"

#include <stdexcept>

namespace casimir {

ReflectionPair reflect(const DielectricModel& model, const Geometry& geometry,
                       const DimensionlessFrame& frame, double zeta, double y) {
  if (zeta < 0) throw std::domain_error("reflect: zeta must be >= 0");
  if (y < zeta) throw std::domain_error("reflect: requires y >= zeta");
  if (y == 0 && zeta == 0)
    throw std::domain_error("reflect: the corner y = zeta = 0 is excluded");

  const double dh = geometry.is_semispace()
                        ? std::numeric_limits<double>::infinity()
                        : geometry.half_thickness_ratio();
  ReflectionPair out{};
  if (zeta < 1e-150) {
    const ZeroFreqLimit lim = zero_freq_limit(model, frame);
    refl::zero_zeta(lim.w, y, dh, out.r_tm, out.r_te);
    return out;
  }
  const DimlessPermittivity eps(model, frame);
  const double e = eps(zeta);
  refl::positive_zeta(e, zeta * zeta, (e - 1.0) * zeta * zeta, y, dh, out.r_tm,
                      out.r_te);
  return out;
}

double thickness_factor(const Geometry& geometry, const DimensionlessFrame& frame,
                        double zeta, double y, double a_term_value) {
  if (geometry.is_semispace()) return 1.0;
  const double wt2 = 1.0 / (frame.alpha * frame.alpha);
  const double h = std::sqrt(y * y + wt2 + a_term_value * zeta * zeta);
  return coth_stable(geometry.half_thickness_ratio() * h);
}

double slab_from_single_interface(double r_single, double kd) {
  const double t = std::exp(-2.0 * kd);
  return r_single * (1.0 - t) / (1.0 - r_single * r_single * t);
}

}  // namespace casimir
