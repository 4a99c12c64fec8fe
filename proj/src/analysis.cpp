#include "jcq/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <boost/math/tools/minima.hpp>

#include "jcq/config.hpp"
#include "jcq/errors.hpp"
#include "jcq/format.hpp"
#include "jcq/units.hpp"

namespace jcq {

namespace {

constexpr double no_decay_factor = 100.0;
constexpr std::size_t min_trajectory_samples = 50;

struct LinearPart {
    double a{0.0};  // asymptote
    double b{0.0};  // amplitude
    double rss{0.0};
};

// Best (a, b) of y ≈ a + b exp(−t/τ) at fixed τ.
LinearPart solve_linear(std::span<const double> t, std::span<const double> y, double tau) {
    const auto n = static_cast<double>(t.size());
    double e_mean = 0.0;
    double y_mean = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        e_mean += std::exp(-t[i] / tau);
        y_mean += y[i];
    }
    e_mean /= n;
    y_mean /= n;
    double see = 0.0;
    double sey = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double de = std::exp(-t[i] / tau) - e_mean;
        see += de * de;
        sey += de * (y[i] - y_mean);
    }
    LinearPart out;
    out.b = see > 0.0 ? sey / see : 0.0;
    out.a = y_mean - out.b * e_mean;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double r = y[i] - out.a - out.b * std::exp(-t[i] / tau);
        out.rss += r * r;
    }
    return out;
}

} // namespace

BlochTimes bloch_decoherence_time(const QubitParameters& params, const BathModel& bath, bool include_cutoff) {
    params.validate();
    bath.validate();
    if (std::abs(params.b_z()) > 1e-9) {
        throw DomainError("Bloch estimate is only valid at B_z = 0 (n_g = 1/2); got B_z = " +
                          format::significant(params.b_z(), 6) + " ueV");
    }
    if (bath.alpha == 0.0) throw InfiniteTimeError("alpha = 0: the Markovian decoherence time is infinite");

    const double omega0 = params.b_x() / units::hbar;
    double weight = thermal_spectral_weight(bath, omega0);  // J(ω₀) coth(βħω₀/2)
    if (!include_cutoff) weight *= std::exp(omega0 / bath.omega_c);
    const double rate1 = weight / (2.0 * units::hbar);  // ps⁻¹
    BlochTimes out;
    out.tau1_us = units::ps_to_us(1.0 / rate1);
    out.tau2_us = 2.0 * out.tau1_us;
    return out;
}

const char* to_string(Observable o) {
    switch (o) {
    case Observable::abs_rho01:
        return "abs_rho01";
    case Observable::re_rho01:
        return "re_rho01";
    case Observable::rho00:
        return "rho00";
    }
    return "unknown";
}

Observable observable_from_string(const std::string& name) {
    for (const auto o : {Observable::abs_rho01, Observable::re_rho01, Observable::rho00}) {
        if (name == to_string(o)) return o;
    }
    throw DomainError("unknown observable '" + name + "'");
}

DecayFit fit_exponential(std::span<const double> t_ps, std::span<const double> y) {
    if (t_ps.size() != y.size()) throw DomainError("fit needs equally many times and values");
    if (t_ps.size() < 3) throw DomainError("fit needs at least three points");

    const double span = t_ps.back() - t_ps.front();
    if (!(span > 0.0)) throw DomainError("fit needs a positive time span");
    const auto [y_lo, y_hi] = std::minmax_element(y.begin(), y.end());
    const double y_scale = std::max(std::abs(*y_lo), std::abs(*y_hi));
    if (!(*y_hi - *y_lo > 1e-14 * std::max(1.0, y_scale))) {
        throw NoDecayError("data are constant; no decay to fit", 0.0);
    }

    // Separable least squares: the asymptote and amplitude are linear, so
    // only log τ is searched. Coarse log grid, then Brent around the best node.
    auto rss_of_log_tau = [&](double log_tau) { return solve_linear(t_ps, y, std::exp(log_tau)).rss; };
    const double log_lo = std::log(span * 1e-4);
    const double log_hi = std::log(span * no_decay_factor * 10.0);
    constexpr int nodes = 400;
    int best = 0;
    double best_rss = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= nodes; ++i) {
        const double lt = log_lo + (log_hi - log_lo) * i / nodes;
        const double r = rss_of_log_tau(lt);
        if (r < best_rss) {
            best_rss = r;
            best = i;
        }
    }
    const double step = (log_hi - log_lo) / nodes;
    const double lo = log_lo + step * std::max(best - 1, 0);
    const double hi = log_lo + step * std::min(best + 1, nodes);
    const auto [log_tau, rss] =
        boost::math::tools::brent_find_minima(rss_of_log_tau, lo, hi, std::numeric_limits<double>::digits / 2);

    const double tau = std::exp(log_tau);
    if (!std::isfinite(rss)) throw NumericalError("exponential fit diverged", rss);
    const auto lin = solve_linear(t_ps, y, tau);
    if (tau > no_decay_factor * span || lin.b == 0.0) {
        throw NoDecayError("fitted time constant " + format::significant(tau, 6) + " ps exceeds " +
                               format::significant(no_decay_factor, 3) + "x the data span",
                           std::sqrt(lin.rss / static_cast<double>(t_ps.size())));
    }

    DecayFit fit;
    fit.tau_us = units::ps_to_us(tau);
    // model is anchored at t = 0: y(0) = a + b
    fit.c_inf = lin.a;
    fit.c0 = lin.a + lin.b;
    fit.rms_residual = std::sqrt(lin.rss / static_cast<double>(t_ps.size())) / y_scale;
    fit.points_used = t_ps.size();
    return fit;
}

void upper_envelope(std::span<const double> t, std::span<const double> y, std::vector<double>& env_t,
                    std::vector<double>& env_y) {
    env_t.clear();
    env_y.clear();
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (y[i] > y[i - 1] && y[i] >= y[i + 1]) {
            env_t.push_back(t[i]);
            env_y.push_back(y[i]);
        }
    }
}

DecayFit fit_decay(const Trajectory& trajectory, Observable observable) {
    const auto& s = trajectory.samples;
    if (s.size() < min_trajectory_samples) {
        throw DomainError("fit_decay needs at least " + std::to_string(min_trajectory_samples) + " samples, got " +
                          std::to_string(s.size()));
    }
    std::vector<double> t(s.size());
    std::vector<double> y(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        t[i] = s[i].t;
        switch (observable) {
        case Observable::abs_rho01:
            y[i] = std::abs(s[i].rho.rho01());
            break;
        case Observable::re_rho01:
            y[i] = s[i].rho.rho01().real();
            break;
        case Observable::rho00:
            y[i] = s[i].rho.rho00();
            break;
        }
    }
    if (observable != Observable::abs_rho01) {
        std::vector<double> env_t;
        std::vector<double> env_y;
        upper_envelope(t, y, env_t, env_y);
        if (env_t.size() >= 3) {
            auto fit = fit_exponential(env_t, env_y);
            fit.used_envelope = true;
            return fit;
        }
    }
    return fit_exponential(t, y);
}

ComparisonReport compare(const QubitParameters& params, const BathModel& bath, const ItmConfig& config) {
    ComparisonReport report;
    report.qubit = params;
    report.bath = bath;
    report.config = config;
    report.bloch = bloch_decoherence_time(params, bath, config.bloch_include_cutoff);
    const auto traj = simulate(params, bath, initial_state(config.initial_state), config.settings);
    report.itm_fit = fit_decay(traj, config.observable);
    report.tau2_bloch = report.bloch.tau2_us;
    report.tau2_itm = report.itm_fit.tau_us;
    report.ratio = report.tau2_itm / report.tau2_bloch;
    return report;
}


std::string to_key_value(const ComparisonReport& r) {
    using format::exact;
    std::ostringstream out;
    out << "e_j_ueV = " << exact(r.qubit.e_j) << '\n'
        << "e_c_ueV = " << exact(r.qubit.e_c) << '\n'
        << "n_g = " << exact(r.qubit.n_g) << '\n'
        << "alpha = " << exact(r.bath.alpha) << '\n'
        << "omega_c_per_ps = " << exact(r.bath.omega_c) << '\n'
        << "temperature_mK = " << exact(r.bath.temperature_mk) << '\n'
        << "dt_ps = " << exact(r.config.settings.dt) << '\n'
        << "dk_max = " << r.config.settings.dk_max << '\n'
        << "t_max_ps = " << exact(r.config.settings.t_max) << '\n'
        << "sample_every = " << r.config.settings.sample_every << '\n'
        << "initial_state = " << initial_state_name(r.config.initial_state) << '\n'
        << "observable = " << to_string(r.config.observable) << '\n'
        << "bloch_cutoff = " << (r.config.bloch_include_cutoff ? "true" : "false") << '\n'
        << "tau1_bloch_us = " << format::significant(r.bloch.tau1_us, 6) << '\n'
        << "tau2_bloch_us = " << format::significant(r.tau2_bloch, 6) << '\n'
        << "tau2_itm_us = " << format::significant(r.tau2_itm, 6) << '\n'
        << "itm_fit_c0 = " << format::significant(r.itm_fit.c0, 6) << '\n'
        << "itm_fit_c_inf = " << format::significant(r.itm_fit.c_inf, 6) << '\n'
        << "itm_fit_rms_residual = " << format::significant(r.itm_fit.rms_residual, 6) << '\n'
        << "ratio = " << format::significant(r.ratio, 6) << '\n';
    return out.str();
}

std::string comparison_csv_header() {
    return "e_j_ueV,e_c_ueV,n_g,alpha,omega_c_per_ps,temperature_mK,dt_ps,dk_max,t_max_ps,sample_every,"
           "tau1_bloch_us,tau2_bloch_us,tau2_itm_us,ratio\n";
}

std::string comparison_csv_row(const ComparisonReport& r) {
    using format::csv;
    std::ostringstream out;
    out << csv(r.qubit.e_j) << ',' << csv(r.qubit.e_c) << ',' << csv(r.qubit.n_g) << ',' << csv(r.bath.alpha) << ','
        << csv(r.bath.omega_c) << ',' << csv(r.bath.temperature_mk) << ',' << csv(r.config.settings.dt) << ','
        << r.config.settings.dk_max << ',' << csv(r.config.settings.t_max) << ',' << r.config.settings.sample_every
        << ',' << csv(r.bloch.tau1_us) << ',' << csv(r.tau2_bloch) << ',' << csv(r.tau2_itm) << ',' << csv(r.ratio)
        << '\n';
    return out.str();
}

} // namespace jcq
