#pragma once

namespace casimir {

/// CODATA 2018 values (exact where the SI defines them so).
struct PhysicalConstants {
  double hbar;             // J s
  double c;                // m/s
  double k_B;              // J/K
  double eV;               // J
  double eV_to_rad_per_s;  // eV/hbar
};

inline constexpr PhysicalConstants codata{
    1.054571817e-34,
    299792458.0,
    1.380649e-23,
    1.602176634e-19,
    1.602176634e-19 / 1.054571817e-34,
};

/// Zeta values and Euler's constant used by the low-temperature expansions.
struct EulerMaclaurinConstants {
  double zeta3;
  double zeta4;
  double zeta5;
  double euler_gamma;
};

inline constexpr EulerMaclaurinConstants euler_maclaurin{
    1.2020569031595942854,
    1.0823232337111381916,
    1.0369277551433699263,
    0.5772156649015328606,
};

inline constexpr double pi_const = 3.14159265358979323846;

namespace detail {
inline constexpr long double zeta3_l = 1.2020569031595942853997L;
inline constexpr long double zeta4_l = 1.0823232337111381915160L;
inline constexpr long double zeta5_l = 1.0369277551433699263314L;
inline constexpr long double euler_gamma_l = 0.5772156649015328606065L;
inline constexpr long double pi_l = 3.14159265358979323846264L;
}  // namespace detail

}  // namespace casimir
