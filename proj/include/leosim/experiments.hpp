#pragma once

#include <cstdint>
#include <string>

#include "leosim/config.hpp"

namespace leosim {

// Experiment drivers behind the CLI subcommands. Each writes one CSV with a
// fixed header and throws on failure (ConfigError / std::invalid_argument for
// bad inputs, std::runtime_error for runtime trouble).

// eat_sweep.csv: optimal threshold vs latitude plus visibility statistics at
// the optimum and at the fixed reference threshold.
void cmd_eat_sweep(const ScenarioFile& cfg, const std::string& out_path, int threads = 1);

// loss_compare.csv: packet loss under the fixed vs the optimized threshold.
void cmd_loss_compare(const ScenarioFile& cfg, const std::string& out_path, int threads = 1,
                      uint64_t seed = 0);

// u_curve.csv: loss over a threshold grid at each probe location, with the
// optimizer's prediction attached to every row.
void cmd_u_curve(const ScenarioFile& cfg, const std::string& out_path, int threads = 1,
                 uint64_t seed = 0);

// Single scenario: summary CSV at out_path plus events.csv next to it.
void cmd_run(const ScenarioFile& cfg, const std::string& out_path, uint64_t seed = 0);

}  // namespace leosim
