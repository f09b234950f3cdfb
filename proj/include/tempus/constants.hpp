#pragma once

// Physical constants used across the library. Values are CODATA 2018
// recommendations; c is exact by SI definition. Natural-unit branches
// (massive temporal functions) take and return quantities with hbar = c = 1
// and perform no conversion here.

namespace tempus::constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;

inline constexpr double c_m_per_s = 2.99792458e8;      // exact
inline constexpr double hbar_eV_s = 6.582119569e-16;   // CODATA 2018
inline constexpr double hbar_MeV_s = 6.582119569e-22;  // CODATA 2018
inline constexpr double hbar_J_s = 1.054571817e-34;    // CODATA 2018

// Thomson cross-section for single gamma-e scattering.
inline constexpr double sigma_thomson_m2 = 6.6524587e-29;  // CODATA 2018

}  // namespace tempus::constants
