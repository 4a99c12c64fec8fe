#include "jcq/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "jcq/errors.hpp"
#include "jcq/format.hpp"

namespace jcq {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end) throw ConfigError("invalid number for " + key + ": '" + text + "'");
    return v;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
    std::size_t v = 0;
    const char* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end) throw ConfigError("invalid count for " + key + ": '" + text + "'");
    return v;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"e_j_ueV", [](RunConfig& c, const auto& k, const auto& v) { c.qubit.e_j = parse_double(k, v); }},
        {"e_c_ueV", [](RunConfig& c, const auto& k, const auto& v) { c.qubit.e_c = parse_double(k, v); }},
        {"n_g", [](RunConfig& c, const auto& k, const auto& v) { c.qubit.n_g = parse_double(k, v); }},
        {"alpha", [](RunConfig& c, const auto& k, const auto& v) { c.bath.alpha = parse_double(k, v); }},
        {"omega_c_per_ps", [](RunConfig& c, const auto& k, const auto& v) { c.bath.omega_c = parse_double(k, v); }},
        {"temperature_mK",
         [](RunConfig& c, const auto& k, const auto& v) { c.bath.temperature_mk = parse_double(k, v); }},
        {"dt_ps", [](RunConfig& c, const auto& k, const auto& v) { c.dt_ps = parse_double(k, v); }},
        {"dk_max", [](RunConfig& c, const auto& k, const auto& v) { c.dk_max = parse_count(k, v); }},
        {"t_max_ps", [](RunConfig& c, const auto& k, const auto& v) { c.t_max_ps = parse_double(k, v); }},
        {"sample_every", [](RunConfig& c, const auto& k, const auto& v) { c.sample_every = parse_count(k, v); }},
        {"initial_state",
         [](RunConfig& c, const auto&, const auto& v) { c.initial_state = initial_state_from_string(v); }},
        {"output", [](RunConfig& c, const auto&, const auto& v) { c.output = v; }},
    };
    return table;
}

} // namespace

void RunConfig::validate() const {
    qubit.validate();
    bath.validate();
    itm().validate();
}

ItmSettings RunConfig::itm() const { return {dt_ps, dk_max, t_max_ps, sample_every}; }

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {"e_j_ueV", "e_c_ueV", "n_g", "alpha", "omega_c_per_ps",
                                                  "temperature_mK", "dt_ps", "dk_max", "t_max_ps", "sample_every",
                                                  "initial_state", "output"};
    return keys;
}

void apply_key(RunConfig& config, const std::string& key, const std::string& value) {
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError("unknown config key '" + key + "'");
    it->second(config, key, trim(value));
}

RunConfig parse_config(std::istream& in, RunConfig base) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        apply_key(base, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
    return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    return parse_config(in, std::move(base));
}

std::string echo_config(const RunConfig& c) {
    using format::exact;
    std::ostringstream out;
    out << "e_j_ueV = " << exact(c.qubit.e_j) << '\n'
        << "e_c_ueV = " << exact(c.qubit.e_c) << '\n'
        << "n_g = " << exact(c.qubit.n_g) << '\n'
        << "alpha = " << exact(c.bath.alpha) << '\n'
        << "omega_c_per_ps = " << exact(c.bath.omega_c) << '\n'
        << "temperature_mK = " << exact(c.bath.temperature_mk) << '\n'
        << "dt_ps = " << exact(c.dt_ps) << '\n'
        << "dk_max = " << c.dk_max << '\n'
        << "t_max_ps = " << exact(c.t_max_ps) << '\n'
        << "sample_every = " << c.sample_every << '\n'
        << "initial_state = " << initial_state_name(c.initial_state) << '\n'
        << "output = " << c.output << '\n';
    return out.str();
}

std::string initial_state_name(InitialStateKind kind) {
    switch (kind) {
    case InitialStateKind::plus:
        return "plus";
    case InitialStateKind::zero:
        return "zero";
    case InitialStateKind::one:
        return "one";
    }
    return "unknown";
}

InitialStateKind initial_state_from_string(const std::string& name) {
    if (name == "plus") return InitialStateKind::plus;
    if (name == "zero") return InitialStateKind::zero;
    if (name == "one") return InitialStateKind::one;
    throw ConfigError("unknown initial_state '" + name + "' (expected plus, zero or one)");
}

void write_response_csv(std::ostream& out, const std::vector<ResponseSample>& samples) {
    out << "t_ps,re_gamma,im_gamma\n";
    for (const auto& s : samples) {
        out << format::csv(s.t) << ',' << format::csv(s.re_gamma) << ',' << format::csv(s.im_gamma) << '\n';
    }
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory) {
    out << "t_ps,rho00,rho11,re_rho01,im_rho01,abs_rho01\n";
    for (const auto& s : trajectory.samples) {
        const auto r01 = s.rho.rho01();
        out << format::csv(s.t) << ',' << format::csv(s.rho.rho00()) << ',' << format::csv(s.rho.rho11()) << ','
            << format::csv(r01.real()) << ',' << format::csv(r01.imag()) << ',' << format::csv(std::abs(r01)) << '\n';
    }
}

void write_eta_csv(std::ostream& out, const EtaTable& table) {
    out << "dk,class,re_eta,im_eta\n";
    auto row = [&](std::size_t dk, const char* cls, Complex eta) {
        out << dk << ',' << cls << ',' << format::csv(eta.real()) << ',' << format::csv(eta.imag()) << '\n';
    };
    row(0, "interior", table.self_interior);
    row(0, "end", table.self_end);
    for (std::size_t dk = 1; dk <= table.dk_max; ++dk) {
        for (const auto c : {PairClass::interior, PairClass::end_interior, PairClass::end_end}) {
            row(dk, to_string(c), table.pair(dk, c));
        }
    }
}

} // namespace jcq
