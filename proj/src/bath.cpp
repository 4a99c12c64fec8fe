#include "jcq/bath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jcq/errors.hpp"
#include "jcq/quadrature.hpp"
#include "jcq/units.hpp"

namespace jcq {

using units::hbar;
using units::pi;

namespace {

constexpr double memory_grid_step = 0.1;   // ps
constexpr double memory_grid_end = 100.0;  // ps

} // namespace

double response_scale(const BathModel& bath) {
    const double x = bath.omega_max() / bath.omega_c;
    return 2.0 * hbar * bath.alpha * bath.omega_c * bath.omega_c * (1.0 - std::exp(-x) * (1.0 + x));
}

void BathModel::validate() const {
    if (!(alpha >= 0.0)) throw DomainError("alpha must be non-negative");
    if (!(omega_c > 0.0)) throw DomainError("omega_c must be positive");
    if (!(temperature_mk > 0.0)) throw DomainError("temperature must be positive");
}

double BathModel::beta() const { return units::thermal_beta(temperature_mk); }

double spectral_density(const BathModel& bath, double omega) {
    if (omega < 0.0) throw DomainError("spectral density requires omega >= 0, got " + std::to_string(omega));
    return 2.0 * pi * hbar * bath.alpha * omega * std::exp(-omega / bath.omega_c);
}

double power_spectrum(const BathModel& bath, double omega) {
    if (!(omega > 0.0)) {
        throw DomainError("power spectrum requires omega > 0 (coth pole at 0), got " + std::to_string(omega));
    }
    return hbar * thermal_spectral_weight(bath, omega);
}

double thermal_spectral_weight(const BathModel& bath, double omega) {
    const double beta = bath.beta();
    const double x = 0.5 * beta * hbar * omega;
    if (x < 1e-8) {
        // J(ω) coth(x) -> 2πħαω · 2/(βħω)
        return 4.0 * pi * bath.alpha / beta * std::exp(-omega / bath.omega_c);
    }
    return spectral_density(bath, omega) / std::tanh(x);
}

std::complex<double> response_function(const BathModel& bath, double t) {
    if (t < 0.0) throw DomainError("response function requires t >= 0");
    bath.validate();
    const double w_max = bath.omega_max();
    double panel = 0.5 * bath.omega_c;
    if (t > 0.0) panel = std::min(panel, 2.0 * pi / t);
    const double tol = 1e-9 * response_scale(bath);

    const auto re = quadrature::integrate(
        [&](double w) { return thermal_spectral_weight(bath, w) * std::cos(w * t); }, 0.0, w_max, panel, tol);
    double im = 0.0;
    if (t > 0.0) {
        im = -quadrature::integrate(
                  [&](double w) { return spectral_density(bath, w) * std::sin(w * t); }, 0.0, w_max, panel, tol)
                  .value;
    }
    return {re.value / pi, im / pi};
}

std::vector<ResponseSample> response_samples(const BathModel& bath, double t_max, std::size_t n_intervals) {
    if (n_intervals < 1) throw DomainError("response grid needs at least one interval");
    if (!(t_max > 0.0)) throw DomainError("response grid needs t_max > 0");
    std::vector<ResponseSample> out;
    out.reserve(n_intervals + 1);
    for (std::size_t i = 0; i <= n_intervals; ++i) {
        const double t = t_max * static_cast<double>(i) / static_cast<double>(n_intervals);
        const auto g = response_function(bath, t);
        out.push_back({t, g.real(), g.imag()});
    }
    return out;
}

double memory_time(const BathModel& bath, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0)) throw DomainError("memory_time threshold must lie in (0, 1)");
    const auto n = static_cast<std::size_t>(std::lround(memory_grid_end / memory_grid_step));
    const auto samples = response_samples(bath, memory_grid_end, n);

    const double re0 = samples.front().re_gamma;
    double im_max = 0.0;
    for (const auto& s : samples) im_max = std::max(im_max, std::abs(s.im_gamma));
    if (!(re0 > 0.0)) throw DomainError("memory_time needs a non-vanishing bath (alpha > 0)");

    auto settled = [&](const ResponseSample& s) {
        return std::abs(s.re_gamma) / re0 < threshold && std::abs(s.im_gamma) / im_max < threshold;
    };
    if (!settled(samples.back())) {
        throw SaturationError("response function does not settle below threshold within the grid", memory_grid_end);
    }
    std::size_t first = samples.size() - 1;
    while (first > 0 && settled(samples[first - 1])) --first;
    return samples[first].t;
}

} // namespace jcq
