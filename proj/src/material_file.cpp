#include "casimir/material_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace casimir {

namespace {

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace((unsigned char)s[b])) ++b;
  while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

double parse_number(const std::string& tok, int line, const char* what) {
  size_t pos = 0;
  double v;
  try {
    v = std::stod(tok, &pos);
  } catch (const std::exception&) {
    throw MaterialParseError(line, std::string("cannot parse ") + what + " '" + tok + "'");
  }
  if (pos != tok.size())
    throw MaterialParseError(line, std::string("trailing junk after ") + what + " '" + tok + "'");
  return v;
}

std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

DielectricModel MaterialRecord::plasma_model() const {
  return DielectricModel::plasma(omega_p);
}
DielectricModel MaterialRecord::drude_model() const {
  return DielectricModel::drude(omega_p, gamma);
}
DielectricModel MaterialRecord::generalized_plasma_model() const {
  return DielectricModel::generalized_plasma(omega_p, oscillators);
}
DielectricModel MaterialRecord::normal_skin_model() const {
  if (!(gamma > 0))
    throw std::invalid_argument("normal_skin_model: requires gamma > 0");
  return DielectricModel::normal_skin(omega_p * omega_p / (4 * pi_const * gamma));
}

MaterialRecord parse_material(std::string_view text) {
  MaterialRecord rec;
  double unit_factor = 0;  // rad/s per declared unit; 0 = undeclared
  std::vector<Oscillator> oscillators;
  bool have_omega_p = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    const size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw MaterialParseError(line, "expected 'key = value'");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (value.empty()) throw MaterialParseError(line, "empty value for '" + key + "'");

    if (key == "name") {
      rec.name = value;
    } else if (key == "source_note") {
      std::string v = value;
      if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
        v = v.substr(1, v.size() - 2);
      rec.source_note = v;
    } else if (key == "unit") {
      if (value == "eV")
        unit_factor = codata.eV_to_rad_per_s;
      else if (value == "rad_s")
        unit_factor = 1.0;
      else
        throw MaterialParseError(line, "unknown unit '" + value + "' (use eV or rad_s)");
      rec.unit = value;
    } else if (key == "omega_p" || key == "gamma") {
      if (unit_factor == 0)
        throw MaterialParseError(line, "unit must be declared before '" + key + "'");
      const double v = parse_number(value, line, key.c_str());
      if (v < 0) throw MaterialParseError(line, "'" + key + "' must not be negative");
      if (key == "omega_p") {
        if (!(v > 0)) throw MaterialParseError(line, "omega_p must be > 0");
        rec.omega_p = v * unit_factor;
        have_omega_p = true;
      } else {
        rec.gamma = v * unit_factor;
      }
    } else if (key == "oscillator") {
      if (unit_factor == 0)
        throw MaterialParseError(line, "unit must be declared before 'oscillator'");
      std::istringstream fields(value);
      std::string f_tok, g_tok, w_tok, extra;
      if (!(fields >> f_tok >> g_tok >> w_tok))
        throw MaterialParseError(line, "oscillator needs three fields: f g omega");
      if (fields >> extra)
        throw MaterialParseError(line, "oscillator has more than three fields");
      const double f = parse_number(f_tok, line, "oscillator f");
      const double g = parse_number(g_tok, line, "oscillator g");
      const double w = parse_number(w_tok, line, "oscillator omega");
      if (f < 0 || g < 0) throw MaterialParseError(line, "oscillator f and g must be >= 0");
      if (!(w > 0)) throw MaterialParseError(line, "oscillator omega must be > 0");
      oscillators.push_back({f * unit_factor * unit_factor, g * unit_factor,
                             w * unit_factor});
    } else {
      throw MaterialParseError(line, "unknown key '" + key + "'");
    }
  }
  if (!have_omega_p) throw MaterialParseError(line, "missing omega_p");
  rec.oscillators = OscillatorSet(std::move(oscillators));
  return rec;
}

MaterialRecord load_material(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open material file: " + path);
    buf << f.rdbuf();
  }
  return parse_material(buf.str());
}

std::string serialize_material(const MaterialRecord& record) {
  // Serialize in rad_s: the stored representation is unit-exact.
  std::ostringstream out;
  if (!record.name.empty()) out << "name = " << record.name << "\n";
  out << "unit = rad_s\n";
  out << "omega_p = " << fmt_full(record.omega_p) << "\n";
  if (record.gamma > 0) out << "gamma = " << fmt_full(record.gamma) << "\n";
  for (const auto& o : record.oscillators.entries)
    out << "oscillator = " << fmt_full(o.f) << " " << fmt_full(o.g) << " "
        << fmt_full(o.omega) << "\n";
  if (!record.source_note.empty())
    out << "source_note = " << record.source_note << "\n";
  return out.str();
}

bool AnchorReport::all_within(double tol) const {
  for (const auto& c : checks)
    if (!(std::abs(c.rel_deviation) <= tol)) return false;
  return true;
}

AnchorReport validate_against_anchors(
    const MaterialRecord& record,
    const std::vector<std::pair<double, double>>& anchors) {
  AnchorReport rep;
  rep.sum_c = sum_cj(record.oscillators);
  for (const auto& [a, expected] : anchors) {
    AnchorCheck c;
    c.separation = a;
    c.expected = expected;
    c.computed = sum_cj_deltaj(record.oscillators, a);
    c.rel_deviation = expected != 0 ? (c.computed - expected) / expected
                                    : c.computed;
    rep.checks.push_back(c);
  }
  return rep;
}

}  // namespace casimir
