#pragma once

// Lumped-element and materials physics of the grAl transmon circuit:
// resonance frequency, kinetic inductance, in-plane field dependence of the
// superconducting gap, effective-junction quantities and self-Kerr estimates.
//
// Conventions: frequencies are ordinary frequencies in Hz; rates and Kerr
// coefficients are angular (rad/s). All functions are pure and thread-safe.

#include <cmath>
#include <optional>
#include <stdexcept>

#include "kerrspec/constants.hpp"

namespace kerrspec::circuit {

namespace detail {
inline void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::domain_error(std::string(what) + " must be strictly positive");
  }
}
}  // namespace detail

/// BCS zero-temperature gap from the critical temperature.
inline double bcs_gap(double critical_temperature) {
  detail::require_positive(critical_temperature, "critical_temperature");
  return constants::bcs_gap_ratio * constants::boltzmann * critical_temperature;
}

struct MaterialParams {
  double sheet_resistance = 0.0;          // Ohm per square
  double critical_temperature = 0.0;      // K
  std::optional<double> gap_zero;         // J; defaults to BCS value
  double grain_size = 4e-9;               // m; films show 3-5 nm grains
  double critical_current_density = 0.0;  // A/m^2

  double gap() const {
    return gap_zero ? *gap_zero : bcs_gap(critical_temperature);
  }

  void validate() const {
    detail::require_positive(sheet_resistance, "sheet_resistance");
    detail::require_positive(critical_temperature, "critical_temperature");
    detail::require_positive(grain_size, "grain_size");
    detail::require_positive(critical_current_density, "critical_current_density");
    if (gap_zero) {
      detail::require_positive(*gap_zero, "gap_zero");
      const double ratio = *gap_zero / bcs_gap(critical_temperature);
      if (ratio < 0.5 || ratio > 2.0) {
        throw std::domain_error("gap_zero inconsistent with critical_temperature");
      }
    }
  }
};

struct CircuitParams {
  double shunt_capacitance = 0.0;                 // F
  double geometric_inductance = 0.0;              // H
  double gral_kinetic_inductance = 0.0;           // H
  double al_kinetic_inductance_zero_field = 0.0;  // H
  double al_critical_field = 0.0;                 // T, in-plane pair-breaking field
  double gral_squares = 1.0;                      // square count of the grAl strip

  void validate() const {
    detail::require_positive(shunt_capacitance, "shunt_capacitance");
    detail::require_positive(geometric_inductance, "geometric_inductance");
    detail::require_positive(gral_kinetic_inductance, "gral_kinetic_inductance");
    detail::require_positive(al_kinetic_inductance_zero_field,
                             "al_kinetic_inductance_zero_field");
    detail::require_positive(al_critical_field, "al_critical_field");
    detail::require_positive(gral_squares, "gral_squares");
  }
};

struct GrAlVolume {
  double thickness = 0.0;  // m
  double width = 0.0;      // m
  double length = 0.0;     // m

  void validate() const {
    detail::require_positive(thickness, "thickness");
    detail::require_positive(width, "width");
    detail::require_positive(length, "length");
    if (!(thickness <= width && width <= length)) {
      throw std::domain_error("expected thickness <= width <= length");
    }
  }

  double volume() const { return thickness * width * length; }
  double cross_section() const { return thickness * width; }
};

struct JunctionModel {
  double effective_junction_count = 1.0;  // N
  double critical_current = 0.0;          // A
  double participation = 0.0;             // p_1J in (0,1)

  void validate() const {
    if (!(effective_junction_count >= 1.0)) {
      throw std::domain_error("effective_junction_count must be >= 1");
    }
    detail::require_positive(critical_current, "critical_current");
    if (!(participation > 0.0 && participation < 1.0)) {
      throw std::domain_error("participation must lie in (0,1)");
    }
  }
};

/// f = 1/(2*pi*sqrt(C*L)).
inline double resonant_frequency(double capacitance, double total_inductance) {
  detail::require_positive(capacitance, "capacitance");
  detail::require_positive(total_inductance, "total_inductance");
  return 1.0 / (constants::two_pi * std::sqrt(capacitance * total_inductance));
}

/// Dirty-limit sheet kinetic inductance, L = h*R_sq/(2*pi^2*gap).
inline double mattis_bardeen_sheet_inductance(double sheet_resistance, double gap) {
  detail::require_positive(sheet_resistance, "sheet_resistance");
  detail::require_positive(gap, "gap");
  return constants::planck * sheet_resistance /
         (2.0 * constants::pi * constants::pi * gap);
}

/// L = hbar*R_n/(pi*gap); numerically identical to the sheet formula for
/// R_n = R_sq.
inline double wire_kinetic_inductance(double normal_resistance, double gap) {
  detail::require_positive(normal_resistance, "normal_resistance");
  detail::require_positive(gap, "gap");
  return constants::hbar * normal_resistance / (constants::pi * gap);
}

/// Two-fluid in-plane pair-breaking: gap(B) = gap0*sqrt((1-b^2)/(1+b^2)),
/// b = B/B_c. Undefined at and above the critical field.
inline double gap_vs_field(double field, double critical_field, double gap_zero) {
  detail::require_positive(critical_field, "critical_field");
  detail::require_positive(gap_zero, "gap_zero");
  if (field < 0.0 || !std::isfinite(field)) {
    throw std::domain_error("field must be >= 0");
  }
  if (field >= critical_field) {
    throw std::domain_error("field at or above critical field: pair correlation zero");
  }
  const double b2 = (field / critical_field) * (field / critical_field);
  return gap_zero * std::sqrt((1.0 - b2) / (1.0 + b2));
}

/// Al wire kinetic inductance in field; reciprocal of the gap suppression.
inline double al_kinetic_inductance_vs_field(double field, const CircuitParams& params) {
  params.validate();
  if (field < 0.0 || !std::isfinite(field)) {
    throw std::domain_error("field must be >= 0");
  }
  if (field >= params.al_critical_field) {
    throw std::domain_error("field at or above al_critical_field");
  }
  const double b2 = (field / params.al_critical_field) * (field / params.al_critical_field);
  return params.al_kinetic_inductance_zero_field * std::sqrt((1.0 + b2) / (1.0 - b2));
}

/// Transition frequency of the series circuit; the grAl inductance is taken
/// field-independent.
inline double qubit_frequency_vs_field(double field, const CircuitParams& params) {
  const double al = al_kinetic_inductance_vs_field(field, params);
  const double total = al + params.gral_kinetic_inductance + params.geometric_inductance;
  return resonant_frequency(params.shunt_capacitance, total);
}

/// E_c/hbar = e^2/(2*C*hbar), in rad/s.
inline double charging_energy(double capacitance) {
  detail::require_positive(capacitance, "capacitance");
  return constants::elementary_charge * constants::elementary_charge /
         (2.0 * capacitance * constants::hbar);
}

/// N = sqrt(E_c/alpha); both arguments angular. Rounding is the caller's call.
inline double effective_junction_number(double charging_energy, double anharmonicity) {
  detail::require_positive(charging_energy, "charging_energy");
  detail::require_positive(anharmonicity, "anharmonicity");
  return std::sqrt(charging_energy / anharmonicity);
}

/// j_c = (Phi0/2pi)*N/(L*A).
inline double critical_current_density(double junction_count, double gral_inductance,
                                       double cross_section) {
  detail::require_positive(junction_count, "junction_count");
  detail::require_positive(gral_inductance, "gral_inductance");
  detail::require_positive(cross_section, "cross_section");
  return constants::flux_quantum / constants::two_pi * junction_count /
         (gral_inductance * cross_section);
}

/// K = C*pi*e*a*omega^2/(j_c*V), rad/s. Order-of-magnitude estimate; the
/// ratio omega^2/j_c drops any common gap-induced rescaling.
inline double self_kerr_estimate(double grain_size, double mode_frequency,
                                 double current_density, double volume,
                                 double geometry_factor = 1.0) {
  detail::require_positive(grain_size, "grain_size");
  detail::require_positive(mode_frequency, "mode_frequency");
  detail::require_positive(current_density, "current_density");
  detail::require_positive(volume, "volume");
  detail::require_positive(geometry_factor, "geometry_factor");
  return geometry_factor * constants::pi * constants::elementary_charge * grain_size *
         mode_frequency * mode_frequency / (current_density * volume);
}

/// Per-junction Kerr from the energy-participation ratio,
/// K_1J = h*omega^2/(4*Phi0*I_c)*p^2, rad/s.
inline double junction_kerr(double mode_frequency, double critical_current,
                            double participation) {
  detail::require_positive(mode_frequency, "mode_frequency");
  detail::require_positive(critical_current, "critical_current");
  if (participation < 0.0 || participation >= 1.0) {
    throw std::domain_error("participation must lie in [0,1)");
  }
  return constants::planck * mode_frequency * mode_frequency /
         (4.0 * constants::flux_quantum * critical_current) * participation *
         participation;
}

}  // namespace kerrspec::circuit
