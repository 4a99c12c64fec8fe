// influence.hpp — discretized influence functional of the bath
//
// The path s(t) is held constant on cells I_k = [(k−½)Δt, (k+½)Δt] for the
// interior points and on the half cells I_0 = [0, Δt/2], I_N = [NΔt − Δt/2,
// NΔt] at the two ends. The coefficients are the cell double integrals
//
//   η_kk' = ∫_{I_k} dt' ∫_{I_k'} dt'' γ(t' − t'')          (k > k')
//   η_kk  = ∫_{I_k} dt' ∫_{I_k, t'' < t'} dt'' γ(t' − t'')
//
// and the influence functional is the product of the factors
//
//   I₀(s_k)       = exp{−(1/ħ)(s_k⁺ − s_k⁻)(η_kk s_k⁺ − η_kk* s_k⁻)}
//   I_Δk(s_k', s_k) = exp{−(1/ħ)(s_k⁺ − s_k⁻)(η_kk' s_k'⁺ − η_kk'* s_k'⁻)}
//
// over all points and over all pairs with 1 <= k − k' <= Δk_max.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "jcq/bath.hpp"

namespace jcq {

using Complex = std::complex<double>;

/// Which of the two cells of a pair are half-width endpoint cells.
enum class PairClass { interior, end_interior, end_end };

const char* to_string(PairClass c);

struct EtaTable {
    double dt{0.0};
    std::size_t n_steps{0};
    std::size_t dk_max{0};
    Complex self_interior{};
    Complex self_end{};
    // entry dk − 1 holds the coefficient at separation dk
    std::vector<Complex> pair_interior;
    std::vector<Complex> pair_end_interior;
    std::vector<Complex> pair_end_end;

    Complex self(bool endpoint) const { return endpoint ? self_end : self_interior; }
    Complex pair(std::size_t dk, PairClass c) const;

    /// η_{k,k'} (k >= k') for a path whose final point has index `last`.
    Complex coefficient(std::size_t k, std::size_t kp, std::size_t last) const;
};

/// Frequency-domain evaluation of every coefficient with separation <= dk_max.
/// Requires dt > 0 and 1 <= dk_max <= n_steps.
EtaTable eta_coefficients(const BathModel& bath, double dt, std::size_t n_steps, std::size_t dk_max);

/// Forward (s⁺) and backward (s⁻) σ_z values at one path point.
struct SpinPair {
    int plus{1};
    int minus{1};

    SpinPair() = default;
    /// Throws DomainError unless both values are ±1.
    SpinPair(int s_plus, int s_minus);

    /// Flattened index 2·i⁺ + i⁻ over basis indices, see qubit.hpp.
    int index() const;
    static SpinPair from_index(int index);
};

/// Exponents of the factors, i.e. log I₀ and log I_Δk.
Complex influence_exponent_i0(SpinPair pair, Complex eta_self);
Complex influence_exponent_idk(SpinPair early, SpinPair late, Complex eta_pair);

Complex influence_factor_i0(SpinPair pair, Complex eta_self);
Complex influence_factor_idk(SpinPair early, SpinPair late, Complex eta_pair);

/// Product of all I₀ and I_Δk (Δk <= table.dk_max) factors along a path
/// pair. Both paths must hold table.n_steps + 1 values of ±1.
Complex assemble_influence(std::span<const int> path_plus, std::span<const int> path_minus, const EtaTable& table);

} // namespace jcq
