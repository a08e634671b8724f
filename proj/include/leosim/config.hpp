#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "leosim/eatopt.hpp"
#include "leosim/link.hpp"
#include "leosim/orbital.hpp"
#include "leosim/simnet.hpp"

namespace leosim {

struct NamedLocation {
    std::string name;
    double lat_deg = 0.0;
    double lon_deg = 0.0;
};

struct ExperimentConfig {
    // eat-sweep grid
    double sweep_lat_min_deg = 0.0;
    double sweep_lat_max_deg = 60.0;
    double sweep_lat_step_deg = 0.5;
    double lon_deg = 0.0;
    double fixed_eat_deg = 25.0;
    // loss-compare grid
    double compare_lat_min_deg = 0.0;
    double compare_lat_max_deg = 6.0;
    double compare_lat_step_deg = 0.5;
    // u-curve threshold grid and probe locations
    double u_eat_min_deg = 5.0;
    double u_eat_max_deg = 60.0;
    double u_eat_step_deg = 2.5;
    std::vector<NamedLocation> locations;
    // single run
    double run_lat_deg = 0.0;
    double run_lon_deg = 0.0;
    double run_eat_deg = 25.0;
};

struct ScenarioFile {
    ConstellationConfig constellation;
    LinkBudget link;
    EatSearchConfig search;
    TrafficConfig traffic;
    SimConfig sim;
    ExperimentConfig experiment;
};

// Parse or validation failure; message carries "<source>:<line>:" context.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Line-oriented [section] + key = value text. '#' starts a comment, booleans
// are on/off, the phase_factor key is mandatory. Unknown sections or keys are
// hard errors, and every value is validated before any run starts.
ScenarioFile parse_config(const std::string& path);
ScenarioFile parse_config_text(const std::string& text, const std::string& source_name = "<string>");

// Complete annotated default config; parse_config_text() accepts it verbatim.
std::string print_defaults();

}  // namespace leosim
