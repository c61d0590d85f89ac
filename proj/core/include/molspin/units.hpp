#pragma once

namespace molspin::units {

// Single source of truth for every unit conversion in the library.
// Internal energy unit is MHz (ordinary frequency, E/h). External fields are
// kV/cm and Gauss, dipole moments are Debye, lattice lengths are nm.
// CODATA 2018 constants.

/// Stark coupling: 1 Debye x 1 kV/cm, expressed in MHz.
inline constexpr double kStarkMHzPerDebyeKVcm = 503.411953;

/// Bohr magneton, MHz per Gauss.
inline constexpr double kBohrMagnetonMHzPerG = 1.3996244936;

/// Nuclear magneton, MHz per Gauss.
inline constexpr double kNuclearMagnetonMHzPerG = 7.62259323e-4;

/// Dipole-dipole energy scale: d^2 / (4 pi eps0 r^3) for d = 1 Debye,
/// r = 1 nm, expressed in Hz. Couplings J are stored as J/2pi, i.e. E/h,
/// so the cluster time pi/J equals 1/(2 J[Hz]).
inline constexpr double kDipolarHzDebye2nm3 = 1.50919017e11;

inline constexpr double kPi = 3.14159265358979323846;

/// Dipolar coupling for two 1-Debye dipoles r nm apart, in Hz (value of E/h).
inline constexpr double dipolar_hz(double d2_debye2, double inv_r3_nm3) {
    return kDipolarHzDebye2nm3 * d2_debye2 * inv_r3_nm3;
}

}  // namespace molspin::units
