#include "jcq/influence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jcq/errors.hpp"
#include "jcq/quadrature.hpp"
#include "jcq/qubit.hpp"
#include "jcq/units.hpp"

namespace jcq {

using units::hbar;
using units::pi;

namespace {

double sinc(double x) {
    if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

// (x − sin x)/x without cancellation for small x.
double x_minus_sin_over_x(double x) {
    if (std::abs(x) < 1e-2) {
        const double x2 = x * x;
        return x2 / 6.0 - x2 * x2 / 120.0 + x2 * x2 * x2 / 5040.0;
    }
    return (x - std::sin(x)) / x;
}

struct CellIntegrator {
    const BathModel& bath;
    double tol;

    double panel_for(double longest_time) const {
        return std::min(0.5 * bath.omega_c, 2.0 * pi / longest_time);
    }

    // Same cell, t'' < t': ∫₀^L (L − u) γ(u) du.
    Complex self(double width) const {
        const double w_max = bath.omega_max();
        const double panel = panel_for(width);
        const double half_w2 = 0.5 * width * width;
        const auto re = quadrature::integrate(
            [&](double w) {
                const double s = sinc(0.5 * w * width);
                return thermal_spectral_weight(bath, w) * half_w2 * s * s;  // (1 − cos ωL)/ω²
            },
            0.0, w_max, panel, tol);
        // J(ω)(ωL − sin ωL)/ω² = 2πħα e^{−ω/ω_C} L (x − sin x)/x,  x = ωL
        const auto im = quadrature::integrate(
            [&](double w) {
                return 2.0 * pi * hbar * bath.alpha * std::exp(-w / bath.omega_c) * width *
                       x_minus_sin_over_x(w * width);
            },
            0.0, w_max, panel, tol);
        return {re.value / pi, -im.value / pi};
    }

    // Disjoint cells with widths w_late, w_early whose centres are `sep` apart:
    // the cell window factor is w_l w_e sinc(ω w_l/2) sinc(ω w_e/2) e^{iω sep}.
    Complex pair(double w_late, double w_early, double sep) const {
        const double w_max = bath.omega_max();
        const double panel = panel_for(sep + 0.5 * (w_late + w_early));
        auto window = [&](double w) { return sinc(0.5 * w * w_late) * sinc(0.5 * w * w_early); };
        const auto re = quadrature::integrate(
            [&](double w) { return thermal_spectral_weight(bath, w) * window(w) * std::cos(w * sep); }, 0.0, w_max,
            panel, tol);
        const auto im = quadrature::integrate(
            [&](double w) { return spectral_density(bath, w) * window(w) * std::sin(w * sep); }, 0.0, w_max, panel,
            tol);
        const double area = w_late * w_early;
        return {area * re.value / pi, -area * im.value / pi};
    }
};

} // namespace

const char* to_string(PairClass c) {
    switch (c) {
    case PairClass::interior:
        return "interior";
    case PairClass::end_interior:
        return "end_interior";
    case PairClass::end_end:
        return "end_end";
    }
    return "unknown";
}

Complex EtaTable::pair(std::size_t dk, PairClass c) const {
    if (dk < 1 || dk > dk_max) {
        throw DomainError("pair separation " + std::to_string(dk) + " outside 1.." + std::to_string(dk_max));
    }
    switch (c) {
    case PairClass::interior:
        return pair_interior[dk - 1];
    case PairClass::end_interior:
        return pair_end_interior[dk - 1];
    case PairClass::end_end:
        return pair_end_end[dk - 1];
    }
    return {};
}

Complex EtaTable::coefficient(std::size_t k, std::size_t kp, std::size_t last) const {
    if (kp > k || k > last) throw DomainError("coefficient indices must satisfy k' <= k <= last");
    if (k == kp) return self(k == 0 || k == last);
    const bool early_end = kp == 0;
    const bool late_end = k == last;
    const PairClass c = (early_end && late_end) ? PairClass::end_end
                        : (early_end || late_end) ? PairClass::end_interior
                                                  : PairClass::interior;
    return pair(k - kp, c);
}

EtaTable eta_coefficients(const BathModel& bath, double dt, std::size_t n_steps, std::size_t dk_max) {
    bath.validate();
    if (!(dt > 0.0)) throw DomainError("time step must be positive");
    if (dk_max < 1 || dk_max > n_steps) throw DomainError("memory span must satisfy 1 <= dk_max <= n_steps");

    EtaTable table;
    table.dt = dt;
    table.n_steps = n_steps;
    table.dk_max = dk_max;

    const CellIntegrator cells{bath, 1e-12 * response_scale(bath) * dt * dt};
    const double half = 0.5 * dt;
    table.self_interior = cells.self(dt);
    table.self_end = cells.self(half);
    table.pair_interior.reserve(dk_max);
    table.pair_end_interior.reserve(dk_max);
    table.pair_end_end.reserve(dk_max);
    for (std::size_t dk = 1; dk <= dk_max; ++dk) {
        const double d = static_cast<double>(dk);
        table.pair_interior.push_back(cells.pair(dt, dt, d * dt));
        table.pair_end_interior.push_back(cells.pair(dt, half, (d - 0.25) * dt));
        table.pair_end_end.push_back(cells.pair(half, half, (d - 0.5) * dt));
    }
    return table;
}

SpinPair::SpinPair(int s_plus, int s_minus) : plus(s_plus), minus(s_minus) {
    auto ok = [](int s) { return s == 1 || s == -1; };
    if (!ok(s_plus) || !ok(s_minus)) throw DomainError("spin values must be +1 or -1");
}

int SpinPair::index() const { return 2 * index_of_spin(plus) + index_of_spin(minus); }

SpinPair SpinPair::from_index(int index) {
    if (index < 0 || index > 3) throw DomainError("spin pair index must lie in 0..3");
    return {spin_of_index(index / 2), spin_of_index(index % 2)};
}

Complex influence_exponent_i0(SpinPair pair, Complex eta_self) {
    const double ds = pair.plus - pair.minus;
    if (ds == 0.0) return {};
    return -(ds / hbar) * (eta_self * double(pair.plus) - std::conj(eta_self) * double(pair.minus));
}

Complex influence_exponent_idk(SpinPair early, SpinPair late, Complex eta_pair) {
    const double ds = late.plus - late.minus;
    if (ds == 0.0) return {};
    return -(ds / hbar) * (eta_pair * double(early.plus) - std::conj(eta_pair) * double(early.minus));
}

Complex influence_factor_i0(SpinPair pair, Complex eta_self) {
    return std::exp(influence_exponent_i0(pair, eta_self));
}

Complex influence_factor_idk(SpinPair early, SpinPair late, Complex eta_pair) {
    return std::exp(influence_exponent_idk(early, late, eta_pair));
}

Complex assemble_influence(std::span<const int> path_plus, std::span<const int> path_minus, const EtaTable& table) {
    const std::size_t points = table.n_steps + 1;
    if (path_plus.size() != points || path_minus.size() != points) {
        throw DomainError("paths must hold n_steps + 1 = " + std::to_string(points) + " points");
    }
    std::vector<SpinPair> path;
    path.reserve(points);
    for (std::size_t k = 0; k < points; ++k) path.emplace_back(path_plus[k], path_minus[k]);

    const std::size_t last = table.n_steps;
    Complex product{1.0, 0.0};
    for (std::size_t k = 0; k < points; ++k) {
        product *= influence_factor_i0(path[k], table.coefficient(k, k, last));
        const std::size_t reach = std::min(k, table.dk_max);
        for (std::size_t dk = 1; dk <= reach; ++dk) {
            product *= influence_factor_idk(path[k - dk], path[k], table.coefficient(k, k - dk, last));
        }
    }
    return product;
}

} // namespace jcq
