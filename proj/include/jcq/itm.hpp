// itm.hpp — iterative tensor multiplication with finite bath memory
//
// The augmented tensor A_n is a function of the last Δk_max + 1 spin pairs
// (s_{n−Δk_max}, …, s_n), laid out row-major with the oldest pair as the most
// significant base-4 digit. It holds the partial path sum over all earlier
// points, including every influence factor between points < n. The factors
// attached to s_n itself (its I₀ and its I_Δk with the window) are applied
// when stepping past it, as interior-point factors, or at sampling time with
// the terminal endpoint coefficients. One step is
//
//   A_{n+1}(s_{n−Δk_max+1}, …, s_{n+1})
//     = Σ_{s_{n−Δk_max}} A_n(…) W(s_{n−Δk_max}, …, s_n) K(s_n, s_{n+1}).
//
// Window slots older than the first path point are pinned to digit 0 and
// carry no influence factors.

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "jcq/bath.hpp"
#include "jcq/influence.hpp"
#include "jcq/qubit.hpp"

namespace jcq {

struct AugmentedTensor {
    static constexpr double magnitude_limit = 4.0;

    std::size_t dk_max{1};
    std::vector<Complex> values;  // 4^(dk_max + 1) entries

    /// Initial tensor: ⟨s₀⁺|ρ(0)|s₀⁻⟩ on the newest slot, older slots pinned.
    static AugmentedTensor initial(const ReducedDensityMatrix& rho0, std::size_t dk_max);

    /// True when every entry is finite with modulus <= magnitude_limit.
    bool within_bounds() const;
};

class TransferTensor {
public:
    TransferTensor(PropagatorK k, const EtaTable& table);

    std::size_t dk_max() const { return dk_max_; }
    std::size_t window_size() const { return window_size_; }  // 4^(dk_max + 1)
    const PropagatorK& propagator() const { return k_; }

    /// Influence weight applied when stepping past point n (the newest slot).
    Complex step_weight(std::size_t n, std::size_t window) const;

    /// Influence weight that closes the path at terminal point n >= 1.
    Complex terminal_weight(std::size_t n, std::size_t window) const;

    /// Steady-state (n > dk_max) linear map between windows:
    /// from (p₀, …, p_d) to (p₁, …, p_d, q).
    Complex element(std::size_t from, std::size_t to) const;

    /// One iteration n -> n+1, summing over the oldest slot.
    void advance(std::size_t n, AugmentedTensor& a) const;

    /// ρ(nΔt) read off the tensor after the terminal factors are applied.
    Matrix2 read_out(std::size_t n, const AugmentedTensor& a) const;

private:
    Complex weight(std::size_t n, std::size_t window, bool terminal) const;

    PropagatorK k_;
    std::size_t dk_max_;
    std::size_t window_size_;
    std::array<Complex, 4> i0_interior_{};
    std::array<Complex, 4> i0_end_{};
    // [class][dk − 1][16 · early + late]
    std::array<std::vector<std::array<Complex, 16>>, 3> idk_;
    std::vector<Complex> steady_step_;
    std::vector<Complex> steady_terminal_;
};

/// Requires table.dk_max to be the memory span wanted for the iteration.
TransferTensor build_transfer_tensor(const PropagatorK& k, const EtaTable& table);

struct TrajectorySample {
    double t{0.0};  // ps
    ReducedDensityMatrix rho;
};

/// Samples with strictly increasing t, the first one at t = 0.
struct Trajectory {
    double dt{0.0};
    std::vector<TrajectorySample> samples;
};

/// Iterates n_steps times from rho0, recording ρ at every multiple of
/// `sample_every` (step 0 included). Throws InstabilityError with the step
/// index if the augmented tensor leaves its bounds.
Trajectory propagate(const ReducedDensityMatrix& rho0, const TransferTensor& transfer, const EtaTable& table,
                     std::size_t n_steps, std::size_t sample_every);

/// Exact enumeration of all 4^(n_steps+1) forward/backward paths, weighted by
/// the propagator chain and assemble_influence. n_steps <= 10.
ReducedDensityMatrix brute_force_path_sum(const ReducedDensityMatrix& rho0, const QubitParameters& params,
                                          const EtaTable& table, std::size_t n_steps);

inline constexpr std::size_t brute_force_max_steps = 10;

struct ItmSettings {
    double dt{12.707};          // ps
    std::size_t dk_max{1};
    double t_max{3.0e6};        // ps
    std::size_t sample_every{64};

    std::size_t n_steps() const;
    void validate() const;
};

/// Builds the coefficient table and transfer tensor and runs propagate.
Trajectory simulate(const QubitParameters& params, const BathModel& bath, const ReducedDensityMatrix& rho0,
                    const ItmSettings& settings);

/// max |ITM(Δk_max = N) − brute force| over the 2×2 entries at N steps.
double oracle_deviation(const QubitParameters& params, const BathModel& bath, const ReducedDensityMatrix& rho0,
                        double dt, std::size_t n_steps);

} // namespace jcq
