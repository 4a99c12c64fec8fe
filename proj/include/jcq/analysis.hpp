// analysis.hpp — decoherence-time estimators and their comparison

#pragma once

#include <span>
#include <string>
#include <vector>

#include "jcq/bath.hpp"
#include "jcq/itm.hpp"
#include "jcq/qubit.hpp"

namespace jcq {

struct BlochTimes {
    double tau1_us{0.0};
    double tau2_us{0.0};
};

/// Markovian relaxation/dephasing times at the degeneracy point:
/// 1/τ₁ = 2/τ₂ = J(ω₀) coth(βħω₀/2) / (2ħ), ω₀ = B_x/ħ.
/// With include_cutoff = false the exp(−ω₀/ω_C) factor of J is dropped.
/// Throws DomainError when B_z != 0 and InfiniteTimeError when α = 0.
BlochTimes bloch_decoherence_time(const QubitParameters& params, const BathModel& bath, bool include_cutoff = true);

enum class Observable { abs_rho01, re_rho01, rho00 };

const char* to_string(Observable o);
Observable observable_from_string(const std::string& name);

struct DecayFit {
    double tau_us{0.0};
    double c0{0.0};
    double c_inf{0.0};
    double rms_residual{0.0};  // rms residual over max |y|
    std::size_t points_used{0};
    bool used_envelope{false};
};

/// Least-squares fit of y(t) = c_inf + (c0 − c_inf) exp(−t/τ), t in ps.
/// Requires >= 50 samples. Throws NoDecayError when the data do not decay.
DecayFit fit_exponential(std::span<const double> t_ps, std::span<const double> y);

/// Local maxima found with a 3-point stencil, as (t, y) pairs.
void upper_envelope(std::span<const double> t, std::span<const double> y, std::vector<double>& env_t,
                    std::vector<double>& env_y);

/// Fits the chosen observable of a trajectory. For re_rho01 and rho00 the
/// upper envelope is fitted when at least three local maxima are present.
DecayFit fit_decay(const Trajectory& trajectory, Observable observable);

/// Everything the ITM side of a comparison needs besides qubit and bath.
struct ItmConfig {
    ItmSettings settings;
    InitialStateKind initial_state{InitialStateKind::plus};
    Observable observable{Observable::abs_rho01};
    bool bloch_include_cutoff{true};
};

struct ComparisonReport {
    QubitParameters qubit;
    BathModel bath;
    ItmConfig config;
    BlochTimes bloch;
    DecayFit itm_fit;
    double tau2_bloch{0.0};  // μs
    double tau2_itm{0.0};    // μs
    double ratio{0.0};       // tau2_itm / tau2_bloch
};

ComparisonReport compare(const QubitParameters& params, const BathModel& bath, const ItmConfig& config);

/// Flat `key = value` block.
std::string to_key_value(const ComparisonReport& report);
std::string comparison_csv_header();
std::string comparison_csv_row(const ComparisonReport& report);

} // namespace jcq
