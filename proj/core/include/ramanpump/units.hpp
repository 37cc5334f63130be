#pragma once

// Unit conventions used throughout the library.
//
// Every frequency, rate and temperature is carried as an energy in eV with
// hbar = 1, so time is measured in 1/eV. Dipole moments are in e*nm.
// Cross sections come out in nm^2 once the Gaussian-units value of e^2 is
// folded in.

namespace ramanpump::units {

// hbar * c [eV nm]
inline constexpr double hbar_c_ev_nm = 197.327;

// e^2 in Gaussian units [eV nm]
inline constexpr double e_sq_ev_nm = 1.43996;

inline constexpr double nm_per_m = 1.0e9;
inline constexpr double mm3_per_cm3 = 1.0e3;

}  // namespace ramanpump::units
