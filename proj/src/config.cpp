#include "leosim/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace leosim {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0;
    while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    size_t b = s.size();
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

struct Parser {
    const std::string& source;
    int line_no = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError(source + ":" + std::to_string(line_no) + ": " + msg);
    }

    double number(const std::string& key, const std::string& value) const {
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (end == value.c_str() || *end != '\0') fail("key '" + key + "': expected a number, got '" + value + "'");
        return v;
    }

    long long integer(const std::string& key, const std::string& value) const {
        const double v = number(key, value);
        const long long i = static_cast<long long>(v);
        if (static_cast<double>(i) != v) fail("key '" + key + "': expected an integer, got '" + value + "'");
        return i;
    }

    bool on_off(const std::string& key, const std::string& value) const {
        if (value == "on") return true;
        if (value == "off") return false;
        fail("key '" + key + "': expected 'on' or 'off', got '" + value + "'");
    }
};

}  // namespace

ScenarioFile parse_config_text(const std::string& text, const std::string& source_name) {
    ScenarioFile cfg;
    Parser p{source_name};

    std::string section;
    bool saw_constellation = false;
    bool saw_phase_factor = false;

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        ++p.line_no;
        std::string line = raw;
        if (const size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') p.fail("malformed section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "constellation" && section != "link" && section != "search" &&
                section != "traffic" && section != "sim" && section != "experiment")
                p.fail("unknown section '" + section + "'");
            if (section == "constellation") saw_constellation = true;
            continue;
        }

        const size_t eq = line.find('=');
        if (eq == std::string::npos) p.fail("expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) p.fail("empty key");
        if (value.empty()) p.fail("key '" + key + "': empty value");
        if (section.empty()) p.fail("key '" + key + "' outside any section");

        if (section == "constellation") {
            auto& c = cfg.constellation;
            if (key == "num_planes") c.num_planes = static_cast<int>(p.integer(key, value));
            else if (key == "sats_per_plane") c.sats_per_plane = static_cast<int>(p.integer(key, value));
            else if (key == "inclination_deg") c.inclination_deg = p.number(key, value);
            else if (key == "altitude_km") c.altitude_km = p.number(key, value);
            else if (key == "phase_factor") { c.phase_factor = static_cast<int>(p.integer(key, value)); saw_phase_factor = true; }
            else if (key == "raan_spread_deg") c.raan_spread_deg = p.number(key, value);
            else if (key == "earth_radius_km") c.earth_radius_km = p.number(key, value);
            else if (key == "mu_m3s2") c.mu_m3s2 = p.number(key, value);
            else if (key == "earth_rotation") c.earth_rotation = p.on_off(key, value);
            else p.fail("unknown key '" + key + "' in [constellation]");
        } else if (section == "link") {
            auto& l = cfg.link;
            if (key == "tx_power_dbm") l.tx_power_dbm = p.number(key, value);
            else if (key == "aggregate_gain_dbi") l.aggregate_gain_dbi = p.number(key, value);
            else if (key == "freq_ghz") l.freq_ghz = p.number(key, value);
            else if (key == "bandwidth_hz") l.bandwidth_hz = p.number(key, value);
            else if (key == "noise_temp_k") l.noise_temp_k = p.number(key, value);
            else if (key == "excess_loss_db") l.excess_loss_db = p.number(key, value);
            else if (key == "interferer_activity") l.interferer_activity = p.number(key, value);
            else p.fail("unknown key '" + key + "' in [link]");
        } else if (section == "search") {
            auto& s = cfg.search;
            if (key == "eat_min_deg") s.eat_min_deg = p.number(key, value);
            else if (key == "eat_max_deg") s.eat_max_deg = p.number(key, value);
            else if (key == "eat_step_deg") s.eat_step_deg = p.number(key, value);
            else if (key == "window_s") s.window_s = p.number(key, value);
            else if (key == "dt_s") s.dt_s = p.number(key, value);
            else if (key == "cci_weight") s.cci_weight = p.number(key, value);
            else if (key == "objective") {
                if (value == "full_reuse") s.objective = EatObjective::FullReuse;
                else if (value == "zero_interference") s.objective = EatObjective::ZeroInterference;
                else if (value == "weighted") s.objective = EatObjective::Weighted;
                else p.fail("key 'objective': expected full_reuse, zero_interference or weighted");
            } else p.fail("unknown key '" + key + "' in [search]");
        } else if (section == "traffic") {
            auto& t = cfg.traffic;
            if (key == "rate_bps") t.rate_bps = p.number(key, value);
            else if (key == "packet_size_bits") t.packet_size_bits = p.number(key, value);
            else if (key == "duration_s") t.duration_s = p.number(key, value);
            else p.fail("unknown key '" + key + "' in [traffic]");
        } else if (section == "sim") {
            auto& s = cfg.sim;
            if (key == "dt_s") s.dt_s = p.number(key, value);
            else if (key == "ho_interruption_ms") s.ho_interruption_ms = p.number(key, value);
            else if (key == "hysteresis_km") s.hysteresis_km = p.number(key, value);
            else if (key == "packet_jitter") s.packet_jitter = p.on_off(key, value);
            else p.fail("unknown key '" + key + "' in [sim]");
        } else if (section == "experiment") {
            auto& e = cfg.experiment;
            if (key == "sweep_lat_min_deg") e.sweep_lat_min_deg = p.number(key, value);
            else if (key == "sweep_lat_max_deg") e.sweep_lat_max_deg = p.number(key, value);
            else if (key == "sweep_lat_step_deg") e.sweep_lat_step_deg = p.number(key, value);
            else if (key == "lon_deg") e.lon_deg = p.number(key, value);
            else if (key == "fixed_eat_deg") e.fixed_eat_deg = p.number(key, value);
            else if (key == "compare_lat_min_deg") e.compare_lat_min_deg = p.number(key, value);
            else if (key == "compare_lat_max_deg") e.compare_lat_max_deg = p.number(key, value);
            else if (key == "compare_lat_step_deg") e.compare_lat_step_deg = p.number(key, value);
            else if (key == "u_eat_min_deg") e.u_eat_min_deg = p.number(key, value);
            else if (key == "u_eat_max_deg") e.u_eat_max_deg = p.number(key, value);
            else if (key == "u_eat_step_deg") e.u_eat_step_deg = p.number(key, value);
            else if (key == "run_lat_deg") e.run_lat_deg = p.number(key, value);
            else if (key == "run_lon_deg") e.run_lon_deg = p.number(key, value);
            else if (key == "run_eat_deg") e.run_eat_deg = p.number(key, value);
            else if (key == "location") {
                // name, lat_deg, lon_deg
                std::vector<std::string> parts;
                std::string cur;
                std::istringstream vs(value);
                while (std::getline(vs, cur, ',')) parts.push_back(trim(cur));
                if (parts.size() != 3) p.fail("key 'location': expected 'name, lat_deg, lon_deg'");
                NamedLocation loc;
                loc.name = parts[0];
                loc.lat_deg = p.number("location.lat_deg", parts[1]);
                loc.lon_deg = p.number("location.lon_deg", parts[2]);
                if (loc.name.empty()) p.fail("key 'location': empty name");
                e.locations.push_back(loc);
            } else p.fail("unknown key '" + key + "' in [experiment]");
        }
    }

    p.line_no = 0;
    if (!saw_constellation) p.fail("missing required [constellation] section");
    if (!saw_phase_factor) p.fail("missing required key 'phase_factor' in [constellation]");

    // Full validation happens here, before any run starts.
    try {
        build_constellation(cfg.constellation);
        validate_link_budget(cfg.link);
        validate_search_config(cfg.search);
        validate_traffic(cfg.traffic);
        validate_sim(cfg.sim);
        const auto& e = cfg.experiment;
        validate_geodetic({e.run_lat_deg, e.run_lon_deg, 0.0});
        for (const auto& loc : e.locations) validate_geodetic({loc.lat_deg, loc.lon_deg, 0.0});
        if (!(e.sweep_lat_step_deg > 0.0) || !(e.compare_lat_step_deg > 0.0) || !(e.u_eat_step_deg > 0.0))
            throw std::invalid_argument("invalid experiment config: grid steps must be > 0");
        if (e.fixed_eat_deg < 0.0 || e.fixed_eat_deg >= 90.0)
            throw std::invalid_argument("invalid experiment config: fixed_eat_deg must lie in [0, 90)");
        if (e.run_eat_deg < 0.0 || e.run_eat_deg >= 90.0)
            throw std::invalid_argument("invalid experiment config: run_eat_deg must lie in [0, 90)");
        if (e.u_eat_min_deg < 0.0 || e.u_eat_max_deg >= 90.0 || e.u_eat_min_deg > e.u_eat_max_deg)
            throw std::invalid_argument("invalid experiment config: u_eat grid must lie in [0, 90)");
    } catch (const std::invalid_argument& ex) {
        throw ConfigError(source_name + ": " + ex.what());
    }
    return cfg;
}

ScenarioFile parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

std::string print_defaults() {
    return R"(# Scenario configuration, all values at their defaults.
# Angles are degrees, distances km, powers dBm/dBi/dB. Booleans are on/off.

[constellation]
num_planes = 1
sats_per_plane = 1
inclination_deg = 53
altitude_km = 550
phase_factor = 0        # Walker phase factor; always set this explicitly
raan_spread_deg = 360
earth_radius_km = 6371
mu_m3s2 = 3.986004418e14
earth_rotation = off    # when on, [search] window_s must be set explicitly

[link]
tx_power_dbm = 43.01
aggregate_gain_dbi = 70.2
freq_ghz = 11.7
bandwidth_hz = 4.5e6
noise_temp_k = 290
excess_loss_db = 0
interferer_activity = 1

[search]
eat_min_deg = 5
eat_max_deg = 85
eat_step_deg = 0.1
window_s = 0            # 0 = one orbital period
dt_s = 1
objective = full_reuse  # full_reuse | zero_interference | weighted
cci_weight = 0

[traffic]
rate_bps = 8.192e6
packet_size_bits = 12288
duration_s = 200

[sim]
dt_s = 0.01
ho_interruption_ms = 0
hysteresis_km = 0
packet_jitter = off

[experiment]
sweep_lat_min_deg = 0
sweep_lat_max_deg = 60
sweep_lat_step_deg = 0.5
lon_deg = 0
fixed_eat_deg = 25
compare_lat_min_deg = 0
compare_lat_max_deg = 6
compare_lat_step_deg = 0.5
u_eat_min_deg = 5
u_eat_max_deg = 60
u_eat_step_deg = 2.5
run_lat_deg = 0
run_lon_deg = 0
run_eat_deg = 25
# u-curve probe points, repeatable:
# location = Name, lat_deg, lon_deg
)";
}

}  // namespace leosim
