#include "jcq/itm.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "jcq/errors.hpp"

namespace jcq {

namespace {

std::size_t pow4(std::size_t e) { return std::size_t{1} << (2 * e); }

// Base-4 digit of `window` at slot j (0 = oldest, dk = newest).
int digit(std::size_t window, std::size_t j, std::size_t dk) {
    return static_cast<int>((window >> (2 * (dk - j))) & 3U);
}

constexpr std::size_t class_slot(PairClass c) { return static_cast<std::size_t>(c); }

} // namespace

AugmentedTensor AugmentedTensor::initial(const ReducedDensityMatrix& rho0, std::size_t dk_max) {
    AugmentedTensor a;
    a.dk_max = dk_max;
    a.values.assign(pow4(dk_max + 1), Complex{});
    for (int p = 0; p < 4; ++p) a.values[static_cast<std::size_t>(p)] = rho0(p / 2, p % 2);
    return a;
}

bool AugmentedTensor::within_bounds() const {
    for (const auto& v : values) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) > magnitude_limit) return false;
    }
    return true;
}

TransferTensor::TransferTensor(PropagatorK k, const EtaTable& table)
    : k_(std::move(k)), dk_max_(table.dk_max), window_size_(pow4(table.dk_max + 1)) {
    if (dk_max_ < 1) throw DomainError("transfer tensor needs dk_max >= 1");
    for (int p = 0; p < 4; ++p) {
        const auto sp = SpinPair::from_index(p);
        i0_interior_[p] = influence_factor_i0(sp, table.self_interior);
        i0_end_[p] = influence_factor_i0(sp, table.self_end);
    }
    for (const PairClass c : {PairClass::interior, PairClass::end_interior, PairClass::end_end}) {
        auto& per_dk = idk_[class_slot(c)];
        per_dk.resize(dk_max_);
        for (std::size_t dk = 1; dk <= dk_max_; ++dk) {
            const Complex eta = table.pair(dk, c);
            for (int early = 0; early < 4; ++early) {
                for (int late = 0; late < 4; ++late) {
                    per_dk[dk - 1][4 * early + late] =
                        influence_factor_idk(SpinPair::from_index(early), SpinPair::from_index(late), eta);
                }
            }
        }
    }
    // Weights only depend on n through the endpoint classes, which settle once
    // the oldest window slot no longer reaches point 0.
    steady_step_.resize(window_size_);
    steady_terminal_.resize(window_size_);
    for (std::size_t w = 0; w < window_size_; ++w) {
        steady_step_[w] = weight(dk_max_ + 1, w, false);
        steady_terminal_[w] = weight(dk_max_ + 1, w, true);
    }
}

Complex TransferTensor::weight(std::size_t n, std::size_t window, bool terminal) const {
    const std::size_t dk = dk_max_;
    const int newest = digit(window, dk, dk);
    Complex out;
    if (terminal) {
        out = i0_end_[newest];
    } else {
        out = (n == 0) ? i0_end_[newest] : i0_interior_[newest];
    }
    const std::size_t reach = std::min(n, dk);
    for (std::size_t d = 1; d <= reach; ++d) {
        const bool early_end = (n - d == 0);
        PairClass c = PairClass::interior;
        if (terminal) {
            c = early_end ? PairClass::end_end : PairClass::end_interior;
        } else if (early_end) {
            c = PairClass::end_interior;
        }
        const int early = digit(window, dk - d, dk);
        out *= idk_[class_slot(c)][d - 1][4 * early + newest];
    }
    return out;
}

Complex TransferTensor::step_weight(std::size_t n, std::size_t window) const {
    if (n > dk_max_) return steady_step_[window];
    return weight(n, window, false);
}

Complex TransferTensor::terminal_weight(std::size_t n, std::size_t window) const {
    if (n == 0) throw DomainError("terminal weight needs n >= 1");
    if (n > dk_max_) return steady_terminal_[window];
    return weight(n, window, true);
}

Complex TransferTensor::element(std::size_t from, std::size_t to) const {
    const std::size_t dk = dk_max_;
    // window shift: the surviving slots of `from` must match the old slots of `to`
    const std::size_t keep = pow4(dk);
    if ((from % keep) != (to / 4)) return {};
    const int last_from = digit(from, dk, dk);
    const int q = static_cast<int>(to % 4);
    return steady_step_[from] * k_.element(last_from, q);
}

void TransferTensor::advance(std::size_t n, AugmentedTensor& a) const {
    const std::size_t stride = pow4(dk_max_);
    std::vector<Complex> reduced(stride, Complex{});
    for (std::size_t oldest = 0; oldest < 4; ++oldest) {
        const std::size_t base = oldest * stride;
        for (std::size_t r = 0; r < stride; ++r) {
            const Complex v = a.values[base + r];
            if (v == Complex{}) continue;
            reduced[r] += v * step_weight(n, base + r);
        }
    }
    for (std::size_t r = 0; r < stride; ++r) {
        const int newest = static_cast<int>(r % 4);
        for (int q = 0; q < 4; ++q) a.values[4 * r + static_cast<std::size_t>(q)] = reduced[r] * k_.element(newest, q);
    }
}

Matrix2 TransferTensor::read_out(std::size_t n, const AugmentedTensor& a) const {
    Matrix2 rho = Matrix2::Zero();
    for (std::size_t w = 0; w < window_size_; ++w) {
        const Complex v = a.values[w];
        if (v == Complex{}) continue;
        const int p = static_cast<int>(w % 4);
        rho(p / 2, p % 2) += v * terminal_weight(n, w);
    }
    return rho;
}

TransferTensor build_transfer_tensor(const PropagatorK& k, const EtaTable& table) { return TransferTensor(k, table); }

Trajectory propagate(const ReducedDensityMatrix& rho0, const TransferTensor& transfer, const EtaTable& table,
                     std::size_t n_steps, std::size_t sample_every) {
    if (n_steps < 1) throw DomainError("propagate needs n_steps >= 1");
    if (sample_every < 1) throw DomainError("propagate needs sample_every >= 1");
    if (table.dk_max != transfer.dk_max()) throw DomainError("transfer tensor and coefficient table disagree on dk_max");

    Trajectory traj;
    traj.dt = table.dt;
    traj.samples.reserve(n_steps / sample_every + 1);
    traj.samples.push_back({0.0, rho0});

    auto a = AugmentedTensor::initial(rho0, transfer.dk_max());
    for (std::size_t n = 0; n < n_steps; ++n) {
        transfer.advance(n, a);
        const std::size_t step = n + 1;
        if (!a.within_bounds()) {
            std::ostringstream msg;
            msg << "augmented tensor left its bounds at step " << step;
            throw InstabilityError(msg.str(), step);
        }
        if (step % sample_every == 0) {
            traj.samples.push_back(
                {static_cast<double>(step) * table.dt, ReducedDensityMatrix::unchecked(transfer.read_out(step, a))});
        }
    }
    return traj;
}

ReducedDensityMatrix brute_force_path_sum(const ReducedDensityMatrix& rho0, const QubitParameters& params,
                                          const EtaTable& table, std::size_t n_steps) {
    if (n_steps > brute_force_max_steps) {
        throw CapacityError("exact path enumeration supports at most " + std::to_string(brute_force_max_steps) +
                            " steps, got " + std::to_string(n_steps));
    }
    if (n_steps < 1) throw DomainError("path sum needs n_steps >= 1");
    if (table.n_steps != n_steps) throw DomainError("coefficient table was built for a different n_steps");

    const auto k = short_time_propagator(params, table.dt);
    const std::size_t points = n_steps + 1;
    const std::size_t n_paths = pow4(points);
    std::vector<int> plus(points), minus(points), pairs(points);

    Matrix2 rho = Matrix2::Zero();
    for (std::size_t path = 0; path < n_paths; ++path) {
        for (std::size_t j = 0; j < points; ++j) pairs[j] = static_cast<int>((path >> (2 * j)) & 3U);
        Complex w = rho0(pairs[0] / 2, pairs[0] % 2);
        if (w == Complex{}) continue;
        for (std::size_t j = 0; j + 1 < points; ++j) w *= k.element(pairs[j], pairs[j + 1]);
        if (w == Complex{}) continue;
        for (std::size_t j = 0; j < points; ++j) {
            const auto sp = SpinPair::from_index(pairs[j]);
            plus[j] = sp.plus;
            minus[j] = sp.minus;
        }
        w *= assemble_influence(plus, minus, table);
        rho(pairs[n_steps] / 2, pairs[n_steps] % 2) += w;
    }
    return ReducedDensityMatrix::unchecked(rho);
}

std::size_t ItmSettings::n_steps() const {
    return static_cast<std::size_t>(std::floor(t_max / dt + 1e-9));
}

void ItmSettings::validate() const {
    if (!(dt > 0.0)) throw DomainError("dt must be positive");
    if (!(t_max >= dt)) throw DomainError("t_max must be at least dt");
    if (dk_max < 1) throw DomainError("dk_max must be at least 1");
    if (sample_every < 1) throw DomainError("sample_every must be at least 1");
    if (dk_max > n_steps()) throw DomainError("dk_max cannot exceed the number of steps");
}

Trajectory simulate(const QubitParameters& params, const BathModel& bath, const ReducedDensityMatrix& rho0,
                    const ItmSettings& settings) {
    params.validate();
    bath.validate();
    settings.validate();
    const std::size_t n = settings.n_steps();
    const auto table = eta_coefficients(bath, settings.dt, n, settings.dk_max);
    const auto transfer = build_transfer_tensor(short_time_propagator(params, settings.dt), table);
    return propagate(rho0, transfer, table, n, settings.sample_every);
}

double oracle_deviation(const QubitParameters& params, const BathModel& bath, const ReducedDensityMatrix& rho0,
                        double dt, std::size_t n_steps) {
    params.validate();
    if (n_steps > brute_force_max_steps) {
        throw CapacityError("oracle comparison supports at most " + std::to_string(brute_force_max_steps) + " steps");
    }
    const auto table = eta_coefficients(bath, dt, n_steps, n_steps);
    const auto transfer = build_transfer_tensor(short_time_propagator(params, dt), table);
    const auto traj = propagate(rho0, transfer, table, n_steps, n_steps);
    const auto exact = brute_force_path_sum(rho0, params, table, n_steps);
    return (traj.samples.back().rho.matrix() - exact.matrix()).cwiseAbs().maxCoeff();
}

} // namespace jcq
