#include <doctest.h>

#include <cmath>

#include "jcq/errors.hpp"
#include "jcq/qubit.hpp"
#include "jcq/units.hpp"

using namespace jcq;

namespace {

double max_abs(const Matrix2& m) { return m.cwiseAbs().maxCoeff(); }

Matrix2 evolve(const Matrix2& u, const Matrix2& rho) { return u * rho * u.adjoint(); }

} // namespace

TEST_CASE("pauli matrices") {
    const Matrix2 id = Matrix2::Identity();
    CHECK(max_abs(pauli::x() * pauli::x() - id) == 0.0);
    CHECK(max_abs(pauli::y() * pauli::y() - id) == 0.0);
    CHECK(max_abs(pauli::z() * pauli::z() - id) == 0.0);
    CHECK(max_abs(pauli::x() * pauli::y() - Complex(0, 1) * pauli::z()) == 0.0);
    CHECK(pauli::z()(0, 0) == Complex(1.0));
    CHECK(spin_of_index(0) == 1);
    CHECK(spin_of_index(1) == -1);
    CHECK(index_of_spin(-1) == 1);
}

TEST_CASE("hamiltonian at the degeneracy point") {
    const QubitParameters p;
    CHECK(p.b_z() == 0.0);
    const Matrix2 h = hamiltonian(p);
    CHECK(h(0, 0) == Complex(0.0));
    CHECK(h(1, 1) == Complex(0.0));
    CHECK(h(0, 1) == Complex(-25.9));
    CHECK(h(1, 0) == Complex(-25.9));
}

TEST_CASE("hamiltonian away from degeneracy") {
    const QubitParameters p{51.8, 122.0, 0.25};
    CHECK(p.b_z() == doctest::Approx(244.0));
    const Matrix2 h = hamiltonian(p);
    CHECK(h(0, 0).real() == doctest::Approx(-122.0));
    CHECK(h(1, 1).real() == doctest::Approx(122.0));
    Eigen::SelfAdjointEigenSolver<Matrix2> es(h);
    const double half_gap = 0.5 * std::hypot(244.0, 51.8);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-half_gap));
    CHECK(es.eigenvalues()(1) == doctest::Approx(half_gap));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((QubitParameters{0.0, 122.0, 0.5}.validate()), DomainError);
    CHECK_THROWS_AS((QubitParameters{51.8, -1.0, 0.5}.validate()), DomainError);
    CHECK_NOTHROW(QubitParameters{}.validate());
}

TEST_CASE("unitary step") {
    const QubitParameters p;
    const double dt = 12.707;
    // θ = B_x Δt / (2ħ)
    const double theta = p.b_x() * dt / (2.0 * units::hbar);
    CHECK(theta == doctest::Approx(0.5000080848576879).epsilon(1e-14));
    const Matrix2 u = unitary_step(p, dt);
    CHECK(u(0, 0).real() == doctest::Approx(std::cos(theta)).epsilon(1e-14));
    CHECK(u(0, 1).imag() == doctest::Approx(std::sin(theta)).epsilon(1e-14));
    CHECK(max_abs(u * u.adjoint() - Matrix2::Identity()) < 1e-14);
    CHECK(max_abs(unitary_step(p, 0.0) - Matrix2::Identity()) == 0.0);

    const QubitParameters off{51.8, 122.0, 0.3};
    const Matrix2 v = unitary_step(off, 3.1);
    CHECK(max_abs(v * v.adjoint() - Matrix2::Identity()) < 1e-14);
    CHECK(max_abs(unitary_step(off, 6.2) - v * v) < 1e-14);
}

TEST_CASE("unitary step agrees with a Taylor series of exp(-iH dt/hbar)") {
    const QubitParameters p{51.8, 122.0, 0.37};
    const double dt = 4.0;
    const Matrix2 a = Complex(0.0, -dt / units::hbar) * hamiltonian(p);
    Matrix2 term = Matrix2::Identity();
    Matrix2 sum = term;
    for (int n = 1; n < 40; ++n) {
        term = term * a / double(n);
        sum += term;
    }
    CHECK(max_abs(unitary_step(p, dt) - sum) < 1e-14);
}

TEST_CASE("propagator K") {
    const QubitParameters p;
    const auto identity = short_time_propagator(p, 0.0);
    CHECK(max_abs(Matrix2(identity.u - Matrix2::Identity())) == 0.0);
    CHECK((identity.k - Matrix4::Identity()).cwiseAbs().maxCoeff() == 0.0);

    const auto prop = short_time_propagator(p, 12.707);
    for (int from = 0; from < 4; ++from) {
        for (int to = 0; to < 4; ++to) {
            const Complex expected = prop.u(to / 2, from / 2) * std::conj(prop.u(to % 2, from % 2));
            CHECK(std::abs(prop.element(from, to) - expected) < 1e-15);
        }
    }
    // K applied to a vectorized ρ agrees with U ρ U†
    const Matrix2 rho = initial_state(InitialStateKind::zero).matrix();
    Eigen::Vector4cd v;
    for (int i = 0; i < 4; ++i) v(i) = rho(i / 2, i % 2);
    const Eigen::Vector4cd w = prop.k.transpose() * v;
    const Matrix2 expected = evolve(prop.u, rho);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(w(i) - expected(i / 2, i % 2)) < 1e-15);
}

TEST_CASE("free dynamics: plus state is stationary and zero state Rabi oscillates") {
    const QubitParameters p;
    const double dt = 12.707;
    const Matrix2 u = unitary_step(p, dt);
    Matrix2 plus = initial_state(InitialStateKind::plus).matrix();
    Matrix2 zero = initial_state(InitialStateKind::zero).matrix();
    const double w0 = p.b_x() / units::hbar;
    for (int n = 1; n <= 20; ++n) {
        plus = evolve(u, plus);
        zero = evolve(u, zero);
        CHECK(max_abs(plus - initial_state(InitialStateKind::plus).matrix()) < 1e-12);
        CHECK(zero(0, 0).real() == doctest::Approx(0.5 * (1.0 + std::cos(w0 * n * dt))).epsilon(1e-10));
    }
}

TEST_CASE("density matrix validation") {
    CHECK_NOTHROW(initial_state(InitialStateKind::one));
    const auto one = initial_state(InitialStateKind::one);
    CHECK(one.rho11() == 1.0);
    CHECK(one.trace() == Complex(1.0));

    Matrix2 bad_trace = Matrix2::Identity();
    CHECK_THROWS_AS(initial_state(bad_trace), DomainError);

    Matrix2 non_hermitian;
    non_hermitian << 0.5, 0.3, 0.1, 0.5;
    CHECK_THROWS_AS(initial_state(non_hermitian), DomainError);

    Matrix2 negative;
    negative << 1.2, 0.0, 0.0, -0.2;
    CHECK_THROWS_AS(initial_state(negative), DomainError);

    Matrix2 ok;
    ok << 0.7, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.3;
    const auto rho = initial_state(ok);
    CHECK(rho.rho01() == Complex(0.1, 0.2));
    CHECK(rho.hermiticity_defect() == 0.0);
}
