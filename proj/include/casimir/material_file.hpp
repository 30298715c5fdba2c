#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "casimir/dielectric.hpp"

namespace casimir {

/// A parsed material description. All frequencies are stored in rad/s
/// regardless of the declared file unit.
struct MaterialRecord {
  std::string name;
  double omega_p = 0;  // rad/s
  double gamma = 0;    // rad/s
  OscillatorSet oscillators;
  std::string source_note;
  std::string unit;  // as declared: "eV" or "rad_s"

  DielectricModel plasma_model() const;
  DielectricModel drude_model() const;
  DielectricModel generalized_plasma_model() const;
  /// sigma0 = omega_p^2 / (4 pi gamma); requires gamma > 0.
  DielectricModel normal_skin_model() const;
};

class MaterialParseError : public std::runtime_error {
 public:
  MaterialParseError(int line, const std::string& msg)
      : std::runtime_error("material file, line " + std::to_string(line) + ": " + msg),
        line_number(line) {}
  int line_number;
};

/// Parses the line-based format:
///   # comment
///   name = gold
///   unit = eV            (mandatory before numeric keys; eV or rad_s)
///   omega_p = 9.0
///   gamma = 0.035
///   oscillator = f g omega   (f in unit^2, g and omega in unit; repeatable)
///   source_note = free text
MaterialRecord parse_material(std::string_view text);

/// Reads a file, or standard input when path is "-".
MaterialRecord load_material(const std::string& path);

/// Full-precision serialization; parse(serialize(r)) reproduces every
/// numeric field exactly. Emits the declared unit.
std::string serialize_material(const MaterialRecord& record);

struct AnchorCheck {
  double separation;       // m
  double expected;         // expected sum C_j delta_j
  double computed;
  double rel_deviation;
};

struct AnchorReport {
  double sum_c;
  std::vector<AnchorCheck> checks;
  bool all_within(double tol) const;
};

/// Evaluates sum C_j and sum C_j delta_j at each anchor separation and
/// reports relative deviations. Report-only; never throws on mismatch.
AnchorReport validate_against_anchors(
    const MaterialRecord& record,
    const std::vector<std::pair<double, double>>& anchors);

}  // namespace casimir
