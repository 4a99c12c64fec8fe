#include "cli.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "jcq/analysis.hpp"
#include "jcq/config.hpp"
#include "jcq/errors.hpp"
#include "jcq/format.hpp"
#include "jcq/itm.hpp"

namespace jcq::cli {

namespace {

constexpr std::size_t oracle_max_steps = 8;

// flag name -> config key
const std::vector<std::pair<std::string, std::string>>& override_flags() {
    static const std::vector<std::pair<std::string, std::string>> flags = {
        {"--e-j", "e_j_ueV"},
        {"--e-c", "e_c_ueV"},
        {"--n-g", "n_g"},
        {"--alpha", "alpha"},
        {"--omega-c", "omega_c_per_ps"},
        {"--temperature", "temperature_mK"},
        {"--dt", "dt_ps"},
        {"--dk-max", "dk_max"},
        {"--t-max", "t_max_ps"},
        {"--sample-every", "sample_every"},
        {"--initial-state", "initial_state"},
        {"-o,--output", "output"},
    };
    return flags;
}

struct ConfigOptions {
    std::string config_path;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
};

void add_config_options(CLI::App* sub, ConfigOptions& opts) {
    sub->add_option("-c,--config", opts.config_path, "key = value configuration file");
    for (const auto& [flag, key] : override_flags()) {
        opts.options[key] = sub->add_option(flag, opts.values[key], "override '" + key + "'");
    }
}

RunConfig resolve(const ConfigOptions& opts) {
    RunConfig config;
    if (!opts.config_path.empty()) config = load_config_file(opts.config_path);
    for (const auto& [key, option] : opts.options) {
        if (option->count() > 0) apply_key(config, key, opts.values.at(key));
    }
    return config;
}

// Where CSV goes and where the configuration echo goes.
struct Sinks {
    std::unique_ptr<std::ofstream> file;
    std::ostream* data;
    std::ostream* report;
};

Sinks open_sinks(const std::string& path, std::ostream& out, std::ostream& err) {
    Sinks s;
    if (path.empty() || path == "-") {
        s.data = &out;
        s.report = &err;
        return s;
    }
    s.file = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*s.file) throw IoError("cannot open output file '" + path + "'");
    s.data = s.file.get();
    s.report = &out;
    return s;
}

void finish(Sinks& s, const std::string& path) {
    s.data->flush();
    if (!*s.data) throw IoError("failed writing output '" + path + "'");
}

ItmConfig itm_config(const RunConfig& config, Observable observable, bool cutoff) {
    ItmConfig c;
    c.settings = config.itm();
    c.initial_state = config.initial_state;
    c.observable = observable;
    c.bloch_include_cutoff = cutoff;
    return c;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Non-Markovian decoherence of a Josephson charge qubit in an Ohmic bath"};
    app.require_subcommand(1);

    ConfigOptions response_opts, eta_opts, evolve_opts, bloch_opts, compare_opts, oracle_opts;

    auto* response = app.add_subcommand("response", "tabulate the bath response function gamma(t)");
    add_config_options(response, response_opts);
    double span_ps = 50.0;
    std::size_t n_points = 500;
    response->add_option("--span", span_ps, "time span in ps")->capture_default_str();
    response->add_option("--n-points", n_points, "grid intervals (rows = n + 1)")->capture_default_str();

    auto* eta = app.add_subcommand("eta", "dump the influence coefficients");
    add_config_options(eta, eta_opts);

    auto* evolve = app.add_subcommand("evolve", "propagate the reduced density matrix");
    add_config_options(evolve, evolve_opts);

    auto* bloch = app.add_subcommand("bloch", "Markovian relaxation and dephasing times");
    add_config_options(bloch, bloch_opts);
    bool bloch_no_cutoff = false;
    bloch->add_flag("--no-cutoff", bloch_no_cutoff, "drop exp(-w0/wc) from J(w0)");

    auto* cmp = app.add_subcommand("compare", "Bloch estimate versus fitted propagation");
    add_config_options(cmp, compare_opts);
    std::string observable_name = "abs_rho01";
    bool compare_no_cutoff = false;
    cmp->add_option("--observable", observable_name, "abs_rho01, re_rho01 or rho00")->capture_default_str();
    cmp->add_flag("--no-cutoff", compare_no_cutoff, "drop exp(-w0/wc) from the Bloch rate");

    auto* oracle = app.add_subcommand("oracle", "compare propagation against exact path enumeration");
    add_config_options(oracle, oracle_opts);
    std::size_t oracle_steps = 6;
    oracle->add_option("--steps", oracle_steps, "number of steps N (<= 8)")->capture_default_str();

    auto* sweep = app.add_subcommand("sweep", "run compare for several config files concurrently");
    std::vector<std::string> sweep_files;
    std::string sweep_output = "-";
    sweep->add_option("configs", sweep_files, "config files")->required();
    sweep->add_option("-o,--output", sweep_output, "CSV destination");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : config_error;
    }

    try {
        if (*response) {
            const auto config = resolve(response_opts);
            config.bath.validate();
            if (n_points < 2) throw DomainError("--n-points must be at least 2");
            const auto samples = response_samples(config.bath, span_ps, n_points);
            auto sinks = open_sinks(config.output, out, err);
            *sinks.report << echo_config(config);
            write_response_csv(*sinks.data, samples);
            finish(sinks, config.output);
        } else if (*eta) {
            const auto config = resolve(eta_opts);
            config.bath.validate();
            const auto table = eta_coefficients(config.bath, config.dt_ps, config.dk_max, config.dk_max);
            auto sinks = open_sinks(config.output, out, err);
            *sinks.report << echo_config(config);
            write_eta_csv(*sinks.data, table);
            finish(sinks, config.output);
        } else if (*evolve) {
            const auto config = resolve(evolve_opts);
            config.validate();
            const auto traj = simulate(config.qubit, config.bath, initial_state(config.initial_state), config.itm());
            auto sinks = open_sinks(config.output, out, err);
            *sinks.report << echo_config(config);
            write_trajectory_csv(*sinks.data, traj);
            finish(sinks, config.output);
        } else if (*bloch) {
            const auto config = resolve(bloch_opts);
            const auto times = bloch_decoherence_time(config.qubit, config.bath, !bloch_no_cutoff);
            out << echo_config(config) << "bloch_cutoff = " << (bloch_no_cutoff ? "false" : "true") << '\n'
                << "tau1_us = " << format::significant(times.tau1_us, 6) << '\n'
                << "tau2_us = " << format::significant(times.tau2_us, 6) << '\n';
        } else if (*cmp) {
            const auto config = resolve(compare_opts);
            config.validate();
            const auto report = compare(config.qubit, config.bath,
                                        itm_config(config, observable_from_string(observable_name), !compare_no_cutoff));
            out << to_key_value(report);
            if (config.output != "-" && !config.output.empty()) {
                auto sinks = open_sinks(config.output, out, err);
                *sinks.data << comparison_csv_header() << comparison_csv_row(report);
                finish(sinks, config.output);
            }
        } else if (*oracle) {
            const auto config = resolve(oracle_opts);
            if (oracle_steps > oracle_max_steps) {
                throw CapacityError("oracle supports at most " + std::to_string(oracle_max_steps) + " steps, got " +
                                    std::to_string(oracle_steps));
            }
            if (oracle_steps < 1) throw DomainError("--steps must be at least 1");
            config.qubit.validate();
            config.bath.validate();
            const double dev = oracle_deviation(config.qubit, config.bath, initial_state(config.initial_state),
                                                config.dt_ps, oracle_steps);
            out << echo_config(config) << "n_steps = " << oracle_steps << '\n'
                << "max_deviation = " << format::significant(dev, 6) << '\n';
        } else if (*sweep) {
            std::vector<RunConfig> configs;
            for (const auto& f : sweep_files) {
                configs.push_back(load_config_file(f));
                configs.back().validate();
            }
            std::vector<std::future<ComparisonReport>> jobs;
            for (const auto& c : configs) {
                jobs.push_back(std::async(std::launch::async, [c] {
                    return compare(c.qubit, c.bath, itm_config(c, Observable::abs_rho01, true));
                }));
            }
            auto sinks = open_sinks(sweep_output, out, err);
            *sinks.data << comparison_csv_header();
            for (auto& j : jobs) *sinks.data << comparison_csv_row(j.get());
            finish(sinks, sweep_output);
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return config_error;
    } catch (const DomainError& e) {
        err << "invalid input: " << e.what() << '\n';
        return config_error;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << '\n';
        return config_error;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return io_error;
    } catch (const InstabilityError& e) {
        err << "numerical error: " << e.what() << " (step " << e.step() << ")\n";
        return numerical_error;
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << " (residual " << e.residual() << ")\n";
        return numerical_error;
    }
    return ok;
}

} // namespace jcq::cli
