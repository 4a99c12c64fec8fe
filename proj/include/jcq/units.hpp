// units.hpp — internal unit system and physical constants
//
// Energies are in μeV, times in ps, temperatures in mK and (angular)
// frequencies in ps⁻¹. With these units the charge-qubit parameters are all
// order-one numbers.

#pragma once

namespace jcq::units {

inline constexpr double pi = 3.14159265358979323846;

/// Reduced Planck constant, μeV·ps (CODATA 2018: 6.582119569e-16 eV·s).
inline constexpr double hbar = 658.2119569;

/// Boltzmann constant, μeV/mK (CODATA 2018: 8.617333262e-5 eV/K).
inline constexpr double k_b = 0.08617333262;

// SI scale factors.
inline constexpr double joule_per_uev = 1.602176634e-25;
inline constexpr double seconds_per_ps = 1e-12;
inline constexpr double kelvin_per_mk = 1e-3;
inline constexpr double ps_per_us = 1e6;

constexpr double energy_to_si(double uev) { return uev * joule_per_uev; }
constexpr double energy_from_si(double joule) { return joule / joule_per_uev; }
constexpr double time_to_si(double ps) { return ps * seconds_per_ps; }
constexpr double time_from_si(double seconds) { return seconds / seconds_per_ps; }
constexpr double temperature_to_si(double mk) { return mk * kelvin_per_mk; }
constexpr double temperature_from_si(double kelvin) { return kelvin / kelvin_per_mk; }
// angular frequency: ps⁻¹ <-> s⁻¹
constexpr double frequency_to_si(double per_ps) { return per_ps / seconds_per_ps; }
constexpr double frequency_from_si(double per_s) { return per_s * seconds_per_ps; }

constexpr double ps_to_us(double ps) { return ps / ps_per_us; }
constexpr double us_to_ps(double us) { return us * ps_per_us; }

/// β = 1/(k_B T) in μeV⁻¹. Throws DomainError for T <= 0.
double thermal_beta(double temperature_mk);

} // namespace jcq::units
