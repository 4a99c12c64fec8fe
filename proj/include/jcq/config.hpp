// config.hpp — run configuration (flat key = value files) and CSV emitters

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "jcq/bath.hpp"
#include "jcq/influence.hpp"
#include "jcq/itm.hpp"
#include "jcq/qubit.hpp"

namespace jcq {

/// Defaults reproduce the reference working point: E_J = 51.8 μeV,
/// E_C = 122 μeV, n_g = ½, α = 5e-6, ω_C = 5 ps⁻¹, T = 30 mK, Δt = 12.707 ps,
/// Δk_max = 1.
struct RunConfig {
    QubitParameters qubit;
    BathModel bath;
    double dt_ps{12.707};
    std::size_t dk_max{1};
    double t_max_ps{3.0e6};
    std::size_t sample_every{64};
    InitialStateKind initial_state{InitialStateKind::plus};
    std::string output{"-"};  // "-" is stdout

    /// Throws DomainError on any violated invariant.
    void validate() const;
    ItmSettings itm() const;

    bool operator==(const RunConfig&) const = default;
};

/// Keys understood by apply_key and the config file parser.
const std::vector<std::string>& config_keys();

/// Sets one field from its textual value. Throws ConfigError for unknown keys
/// or unparsable values.
void apply_key(RunConfig& config, const std::string& key, const std::string& value);

/// Parses `key = value` lines; blank lines and `#` comments are ignored.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// `key = value` lines that parse back to an identical RunConfig.
std::string echo_config(const RunConfig& config);

std::string initial_state_name(InitialStateKind kind);
InitialStateKind initial_state_from_string(const std::string& name);

// CSV emitters: header row first, 12 significant digits, '\n' endings.
void write_response_csv(std::ostream& out, const std::vector<ResponseSample>& samples);
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory);
void write_eta_csv(std::ostream& out, const EtaTable& table);

} // namespace jcq
