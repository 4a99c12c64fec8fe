// bath.hpp — Ohmic environment: spectral density, noise power, response function

#pragma once

#include <complex>
#include <vector>

namespace jcq {

enum class BathKind { ohmic };

/// Environment described entirely by its spectral density and temperature.
/// J(ω) = 2πħ α ω exp(−ω/ω_C).
struct BathModel {
    BathKind kind{BathKind::ohmic};
    double alpha{5e-6};           // dimensionless dissipation strength
    double omega_c{5.0};          // cutoff frequency, ps⁻¹
    double temperature_mk{30.0};  // mK

    /// Throws DomainError unless alpha >= 0, omega_c > 0, temperature > 0.
    void validate() const;

    double beta() const;  // μeV⁻¹

    /// Upper frequency limit used by every ω quadrature (50 ω_C).
    double omega_max() const { return 50.0 * omega_c; }
    bool operator==(const BathModel&) const = default;
};

struct ResponseSample {
    double t{0.0};         // ps
    double re_gamma{0.0};  // μeV·ps⁻¹
    double im_gamma{0.0};  // μeV·ps⁻¹
};

/// J(ω) in μeV. Throws DomainError for ω < 0.
double spectral_density(const BathModel& bath, double omega);

/// S(ω) = J(ω) ħ coth(βħω/2), μeV²·ps. Throws DomainError for ω <= 0.
double power_spectrum(const BathModel& bath, double omega);

/// J(ω) coth(βħω/2) with the finite ω → 0 limit 4πα/β filled in.
/// This is the weight of every cosine-type bath integral.
double thermal_spectral_weight(const BathModel& bath, double omega);

/// (1/π)∫₀^W J(ω) dω in closed form; the absolute scale of γ used to set
/// quadrature tolerances.
double response_scale(const BathModel& bath);

/// γ(t) = (1/π)∫₀^∞ dω J(ω)[coth(βħω/2) cos ωt − i sin ωt], t >= 0.
/// Adaptive quadrature to 1e-8 of Re γ(0); NumericalError otherwise.
std::complex<double> response_function(const BathModel& bath, double t);

/// γ on the uniform grid t_i = i·t_max/n_intervals, i = 0..n_intervals.
std::vector<ResponseSample> response_samples(const BathModel& bath, double t_max, std::size_t n_intervals);

/// Memory time, ps: smallest grid time (step 0.1 ps over [0, 100] ps) after
/// which |Re γ|/Re γ(0) and |Im γ|/max|Im γ| both stay below `threshold`.
/// Throws SaturationError when the criterion is never met on the grid.
double memory_time(const BathModel& bath, double threshold);

} // namespace jcq
