// acceptance.cpp — one PASS/FAIL line per acceptance criterion
//
// Exits non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "jcq/analysis.hpp"
#include "jcq/bath.hpp"
#include "jcq/influence.hpp"
#include "jcq/itm.hpp"
#include "oracles.hpp"

using namespace jcq;

namespace {

const QubitParameters qubit{};
const BathModel bath{BathKind::ohmic, 5e-6, 5.0, 30.0};
constexpr double dt = 12.707;

constexpr double bloch_reference_us = 1.61966;
constexpr double itm_reference_us = 1.05299;

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

// Shared by criteria 2, 3 and 5: the default 3 μs run at Δk_max = 1.
struct ReferenceRun {
    Trajectory trajectory;
    DecayFit fit;
    double seconds{0.0};
};

const ReferenceRun& reference_run() {
    static const ReferenceRun run = [] {
        ReferenceRun r;
        const auto start = std::chrono::steady_clock::now();
        r.trajectory = simulate(qubit, bath, initial_state(InitialStateKind::plus), ItmSettings{});
        r.fit = fit_decay(r.trajectory, Observable::abs_rho01);
        r.seconds = seconds_since(start);
        return r;
    }();
    return run;
}

Outcome bloch_baseline() {
    const auto start = std::chrono::steady_clock::now();
    std::ostringstream out, err;
    const int code = cli::run({"jcq", "bloch"}, out, err);
    const double secs = seconds_since(start);
    const auto text = out.str();
    const auto pos = text.find("tau2_us = ");
    if (code != 0 || pos == std::string::npos) return {false, "bloch subcommand failed: " + err.str()};
    const double tau2 = std::stod(text.substr(pos + 10));
    const double rel = tau2 / bloch_reference_us - 1.0;
    return {std::abs(rel) <= 0.02 && secs < 1.0,
            fmt("tau2 = %.6g us, deviation %+.3f%% (limit 2%%), %.3f s", tau2, 100.0 * rel, secs)};
}

Outcome itm_headline() {
    const auto& r = reference_run();
    const double rel = r.fit.tau_us / itm_reference_us - 1.0;
    return {std::abs(rel) <= 0.15 && r.seconds < 60.0,
            fmt("tau = %.6g us, deviation %+.1f%% (limit 15%%), %.2f s", r.fit.tau_us, 100.0 * rel, r.seconds)};
}

Outcome directional_claim() {
    const double tau_bloch = bloch_decoherence_time(qubit, bath).tau2_us;
    const double ratio = reference_run().fit.tau_us / tau_bloch;
    return {ratio < 1.0 && ratio >= 0.55 && ratio <= 0.75,
            fmt("tau2_itm / tau2_bloch = %.4g (required [0.55, 0.75])", ratio)};
}

Outcome oracle_equivalence() {
    double worst = 0.0;
    double secs_at_8 = 0.0;
    for (std::size_t n : {2U, 4U, 6U, 8U}) {
        for (auto state : {InitialStateKind::plus, InitialStateKind::zero}) {
            const auto start = std::chrono::steady_clock::now();
            worst = std::max(worst, oracle_deviation(qubit, bath, initial_state(state), dt, n));
            if (n == 8) secs_at_8 = std::max(secs_at_8, seconds_since(start));
        }
    }
    return {worst <= 1e-10 && secs_at_8 < 30.0,
            fmt("max deviation %.3g over N = 2,4,6,8 (limit 1e-10), %.2f s at N = 8", worst, secs_at_8)};
}

Outcome conservation() {
    double trace = 0.0;
    double herm = 0.0;
    for (const auto& s : reference_run().trajectory.samples) {
        trace = std::max(trace, std::abs(s.rho.trace() - 1.0));
        herm = std::max(herm, s.rho.hermiticity_defect());
    }
    return {trace <= 1e-6 && herm <= 1e-10,
            fmt("max |tr - 1| = %.3g (limit 1e-6), max hermiticity defect %.3g (limit 1e-10), %.0f samples", trace,
                herm, double(reference_run().trajectory.samples.size()))};
}

Outcome free_dynamics() {
    const BathModel free{BathKind::ohmic, 0.0, 5.0, 30.0};
    ItmSettings s;
    s.t_max = 1000.0 * dt;
    s.sample_every = 1;
    const auto plus = simulate(qubit, free, initial_state(InitialStateKind::plus), s);
    const auto zero = simulate(qubit, free, initial_state(InitialStateKind::zero), s);
    const Matrix2 rho_plus = initial_state(InitialStateKind::plus).matrix();
    const double w0 = qubit.b_x() / units::hbar;
    double plus_dev = 0.0;
    double zero_dev = 0.0;
    for (const auto& p : plus.samples) plus_dev = std::max(plus_dev, (p.rho.matrix() - rho_plus).cwiseAbs().maxCoeff());
    for (const auto& z : zero.samples) {
        zero_dev = std::max(zero_dev, std::abs(z.rho.rho00() - 0.5 * (1.0 + std::cos(w0 * z.t))));
    }
    return {plus_dev <= 1e-12 && zero_dev <= 1e-8 && zero.samples.size() == 1001,
            fmt("plus drift %.3g (limit 1e-12), zero-state Rabi error %.3g (limit 1e-8) over %.0f steps", plus_dev,
                zero_dev, double(zero.samples.size() - 1))};
}

Outcome memory_time_check() {
    const double r = std::abs(response_function(bath, 10.0).real()) / response_function(bath, 0.0).real();
    return {r < 0.02, fmt("|Re gamma(10 ps)| / Re gamma(0) = %.3g (limit 0.02)", r)};
}

Outcome quadrature_cross_check() {
    const auto table = eta_coefficients(bath, dt, 5, 5);
    auto gamma = [](double u) { return oracle::gamma_series(bath, u); };
    const double h = dt / 2000.0;
    double worst = 0.0;
    auto track = [&](Complex freq, Complex time) { worst = std::max(worst, std::abs(freq - time) / std::abs(time)); };
    track(table.self_interior, oracle::cell_self_time_domain(gamma, dt, 20000));
    track(table.self_end, oracle::cell_self_time_domain(gamma, 0.5 * dt, 20000));
    for (std::size_t dk : {1U, 2U, 5U}) {
        const double d = double(dk) * dt;
        // interior cells centred at d and 0; endpoint half cells hug t = 0 and t = NΔt
        track(table.pair(dk, PairClass::interior),
              oracle::cell_pair_time_domain(gamma, d - 0.5 * dt, dt, -0.5 * dt, dt, h));
        track(table.pair(dk, PairClass::end_interior),
              oracle::cell_pair_time_domain(gamma, d - 0.5 * dt, dt, 0.0, 0.5 * dt, h));
        track(table.pair(dk, PairClass::end_end),
              oracle::cell_pair_time_domain(gamma, d - 0.5 * dt, 0.5 * dt, 0.0, 0.5 * dt, h));
    }
    return {worst <= 1e-6, fmt("max relative deviation %.3g over dk = 0,1,2,5 and all cell classes (limit 1e-6)", worst)};
}

Outcome scaling_law() {
    auto doubled = bath;
    doubled.alpha *= 2.0;
    const double b1 = bloch_decoherence_time(qubit, bath).tau2_us;
    const double b2 = bloch_decoherence_time(qubit, doubled).tau2_us;
    const double bloch_ratio = b2 / b1;
    const double t1 = reference_run().fit.tau_us;
    const double t2 = fit_decay(simulate(qubit, doubled, initial_state(InitialStateKind::plus), ItmSettings{}),
                                Observable::abs_rho01)
                          .tau_us;
    const double itm_ratio = t2 / (0.5 * t1);
    return {std::abs(bloch_ratio - 0.5) <= 1e-12 && std::abs(itm_ratio - 1.0) <= 0.10,
            fmt("Bloch tau2(2a)/tau2(a) = %.15g; ITM tau(2a)/(tau(a)/2) = %.4f (limit 10%%)", bloch_ratio,
                itm_ratio)};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"Bloch baseline", bloch_baseline},
        {"ITM headline", itm_headline},
        {"directional claim", directional_claim},
        {"oracle equivalence", oracle_equivalence},
        {"conservation", conservation},
        {"free dynamics", free_dynamics},
        {"memory time", memory_time_check},
        {"quadrature cross-check", quadrature_cross_check},
        {"scaling law", scaling_law},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failures;
        std::printf("criterion %zu (%s): %s  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
