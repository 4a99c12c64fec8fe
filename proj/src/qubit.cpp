#include "jcq/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jcq/errors.hpp"
#include "jcq/units.hpp"

namespace jcq {

namespace pauli {
Matrix2 x() {
    Matrix2 m;
    m << 0, 1, 1, 0;
    return m;
}
Matrix2 y() {
    Matrix2 m;
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}
Matrix2 z() {
    Matrix2 m;
    m << 1, 0, 0, -1;
    return m;
}
} // namespace pauli

void QubitParameters::validate() const {
    if (!(e_j > 0.0)) throw DomainError("E_J must be positive");
    if (!(e_c > 0.0)) throw DomainError("E_C must be positive");
    if (!std::isfinite(n_g)) throw DomainError("n_g must be finite");
}

Matrix2 hamiltonian(const QubitParameters& params) {
    return -0.5 * params.b_z() * pauli::z() - 0.5 * params.b_x() * pauli::x();
}

Matrix2 unitary_step(const QubitParameters& params, double dt) {
    if (dt < 0.0) throw DomainError("propagator time step must be non-negative");
    // H = −(|B|/2) n·σ  =>  exp(−iH dt/ħ) = cos θ I + i sin θ n·σ, θ = |B| dt/(2ħ)
    const double bx = params.b_x();
    const double bz = params.b_z();
    const double b = std::hypot(bx, bz);
    if (b == 0.0) return Matrix2::Identity();
    const double theta = 0.5 * b * dt / units::hbar;
    const Matrix2 n_sigma = (bx / b) * pauli::x() + (bz / b) * pauli::z();
    return std::cos(theta) * Matrix2::Identity() + Complex(0.0, std::sin(theta)) * n_sigma;
}

PropagatorK short_time_propagator(const QubitParameters& params, double dt) {
    PropagatorK out;
    out.u = unitary_step(params, dt);
    for (int from = 0; from < 4; ++from) {
        for (int to = 0; to < 4; ++to) {
            out.k(from, to) = out.u(to / 2, from / 2) * std::conj(out.u(to % 2, from % 2));
        }
    }
    return out;
}

double ReducedDensityMatrix::hermiticity_defect() const {
    return std::max({std::abs(m_(1, 0) - std::conj(m_(0, 1))), std::abs(m_(0, 0).imag()), std::abs(m_(1, 1).imag())});
}

ReducedDensityMatrix ReducedDensityMatrix::checked(const Matrix2& m) {
    ReducedDensityMatrix rho(m);
    if (!m.allFinite()) throw DomainError("density matrix has non-finite entries");
    if (rho.hermiticity_defect() > hermiticity_tol) throw DomainError("density matrix is not hermitian");
    if (std::abs(m.trace() - Complex(1.0, 0.0)) > trace_tol) {
        std::ostringstream msg;
        msg << "density matrix trace " << m.trace() << " differs from 1";
        throw DomainError(msg.str());
    }
    const Eigen::SelfAdjointEigenSolver<Matrix2> eig(m, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -eigenvalue_tol) throw DomainError("density matrix is not positive semidefinite");
    return rho;
}

ReducedDensityMatrix initial_state(InitialStateKind kind) {
    Matrix2 m;
    switch (kind) {
    case InitialStateKind::plus:
        m << 0.5, 0.5, 0.5, 0.5;
        break;
    case InitialStateKind::zero:
        m << 1, 0, 0, 0;
        break;
    case InitialStateKind::one:
        m << 0, 0, 0, 1;
        break;
    }
    return ReducedDensityMatrix::checked(m);
}

ReducedDensityMatrix initial_state(const Matrix2& custom) { return ReducedDensityMatrix::checked(custom); }

} // namespace jcq
