// qubit.hpp — Josephson charge qubit: Hamiltonian, short-time propagator, states
//
// Basis: index 0 = (1,0)ᵀ, index 1 = (0,1)ᵀ, with the standard Pauli
// matrices, so σ_z has eigenvalue +1 on index 0 and −1 on index 1.

#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace jcq {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

namespace pauli {
Matrix2 x();
Matrix2 y();
Matrix2 z();
} // namespace pauli

/// σ_z eigenvalue of basis index 0/1.
constexpr int spin_of_index(int index) { return 1 - 2 * index; }
constexpr int index_of_spin(int spin) { return (1 - spin) / 2; }

struct QubitParameters {
    double e_j{51.8};   // Josephson energy, μeV
    double e_c{122.0};  // charging energy, μeV
    double n_g{0.5};    // gate charge

    double b_x() const { return e_j; }
    double b_z() const { return 4.0 * e_c * (1.0 - 2.0 * n_g); }

    /// Throws DomainError unless e_j > 0 and e_c > 0.
    void validate() const;
    bool operator==(const QubitParameters&) const = default;
};

/// H_s = −½ B_z σ_z − ½ B_x σ_x, μeV.
Matrix2 hamiltonian(const QubitParameters& params);

/// exp(−i H_s dt/ħ), evaluated in closed form.
Matrix2 unitary_step(const QubitParameters& params, double dt);

/// Forward/backward propagator on spin pairs.
///
/// A spin pair (s⁺, s⁻) is flattened to 2·i⁺ + i⁻ where i± are basis
/// indices. element(from, to) = U(to⁺, from⁺) · conj(U(to⁻, from⁻)).
struct PropagatorK {
    Matrix2 u;
    Matrix4 k;  // k(from, to)

    Complex element(int from, int to) const { return k(from, to); }
};

PropagatorK short_time_propagator(const QubitParameters& params, double dt);

/// 2×2 density matrix over the σ_z basis.
class ReducedDensityMatrix {
public:
    static constexpr double hermiticity_tol = 1e-12;
    static constexpr double trace_tol = 1e-10;
    static constexpr double eigenvalue_tol = 1e-8;

    /// Validates hermiticity, unit trace and positivity; DomainError otherwise.
    static ReducedDensityMatrix checked(const Matrix2& m);

    /// Wraps propagated output as-is so drift can be monitored by the caller.
    static ReducedDensityMatrix unchecked(const Matrix2& m) { return ReducedDensityMatrix(m); }

    const Matrix2& matrix() const { return m_; }
    Complex operator()(int row, int col) const { return m_(row, col); }

    double rho00() const { return m_(0, 0).real(); }
    double rho11() const { return m_(1, 1).real(); }
    Complex rho01() const { return m_(0, 1); }
    Complex trace() const { return m_.trace(); }

    /// |ρ₁₀ − conj(ρ₀₁)| together with the imaginary parts of the diagonal.
    double hermiticity_defect() const;

private:
    explicit ReducedDensityMatrix(const Matrix2& m) : m_(m) {}
    Matrix2 m_;
};

enum class InitialStateKind { plus, zero, one };

/// plus: all entries ½; zero: diag(1, 0); one: diag(0, 1).
ReducedDensityMatrix initial_state(InitialStateKind kind);
ReducedDensityMatrix initial_state(const Matrix2& custom);

} // namespace jcq
