#pragma once

// CODATA 2018 values. All formula code pulls constants from here; nothing
// else in the library defines its own copies.

namespace kerrspec::constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

inline constexpr double elementary_charge = 1.602176634e-19;   // C (exact)
inline constexpr double planck = 6.62607015e-34;               // J s (exact)
inline constexpr double hbar = planck / two_pi;                // J s
inline constexpr double boltzmann = 1.380649e-23;              // J/K (exact)
inline constexpr double flux_quantum = planck / (2.0 * elementary_charge);  // Wb
inline constexpr double mu0 = 1.25663706212e-6;                // N/A^2

// BCS weak-coupling ratio 2*Delta/(k_B*T_c) = 3.528
inline constexpr double bcs_gap_ratio = 1.764;

}  // namespace kerrspec::constants
