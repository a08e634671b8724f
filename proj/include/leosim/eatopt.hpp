#pragma once

#include <optional>
#include <span>
#include <vector>

#include "leosim/geometry.hpp"
#include "leosim/link.hpp"
#include "leosim/orbital.hpp"

namespace leosim {

enum class EatObjective { FullReuse, ZeroInterference, Weighted };

struct EatSearchConfig {
    double eat_min_deg = 5.0;
    double eat_max_deg = 85.0;
    double eat_step_deg = 0.1;
    double window_s = 0.0;  // 0 = one orbital period (requires non-rotating ground frame)
    double dt_s = 1.0;
    EatObjective objective = EatObjective::FullReuse;
    double cci_weight = 0.0;
};

struct CoverageProfile {
    double eat_deg = 0.0;
    int min_visible = 0;
    int max_visible = 0;
    double mean_visible = 0.0;
    double outage_fraction = 0.0;
    // Linear-domain mean over samples with at least one visible satellite,
    // reported in dBm; -inf when those samples carry no interference.
    double mean_interference_dbm = 0.0;
};

struct EatResult {
    GeodeticPosition user;
    std::optional<double> optimal_eat_deg;
    CoverageProfile profile_at_optimum;
    bool feasible = false;
};

// Aggregate statistics for one candidate threshold over the scan window.
struct CandidateStats {
    double eat_deg = 0.0;
    long long total_samples = 0;
    long long covered_samples = 0;  // samples with >= 1 visible satellite
    int min_visible = 0;
    int max_visible = 0;
    long long sum_visible = 0;
    double sum_interference_mw = 0.0;  // serving-excluded, activity-scaled
};

// Throws std::invalid_argument naming the offending field.
void validate_search_config(const EatSearchConfig& cfg);

// Explicit window, or one orbital period when cfg.window_s == 0. Throws if the
// default is requested together with earth rotation.
double resolve_window_s(const EatSearchConfig& cfg, const ConstellationConfig& constellation);

// Candidate grid eat_min, eat_min + step, ... <= eat_max.
std::vector<double> candidate_grid(const EatSearchConfig& cfg);

// One pass over the scan window evaluating every threshold in
// `thresholds_deg` (must be sorted ascending, all in [0, 90)). At each sample
// the serving satellite is the closest visible one (ties to the lowest
// sat_id) and every other visible satellite contributes interference.
std::vector<CandidateStats> evaluate_candidates(const GeodeticPosition& user,
                                                const Constellation& constellation,
                                                std::span<const double> thresholds_deg,
                                                const EatSearchConfig& cfg,
                                                const LinkBudget& budget);

CoverageProfile to_profile(const CandidateStats& stats);

CoverageProfile coverage_profile(const GeodeticPosition& user, const Constellation& constellation,
                                 double eat_deg, const EatSearchConfig& cfg, const LinkBudget& budget);

// Grid scan for the optimal threshold. FULL_REUSE and ZERO_INTERFERENCE
// return the maximum feasible candidate; WEIGHTED maximizes
// -mean_interference_mw + cci_weight * (eat - eat_min)/(eat_max - eat_min)
// over feasible candidates, ties to the larger threshold. Infeasibility is a
// result, not an error.
EatResult optimal_eat(const GeodeticPosition& user, const Constellation& constellation,
                      const EatSearchConfig& cfg, const LinkBudget& budget);

struct SweepRow {
    double lat_deg = 0.0;
    EatResult result;
    CoverageProfile fixed_profile;  // stats at the caller-supplied reference threshold
};

std::vector<SweepRow> eat_latitude_sweep(double lat_min_deg, double lat_max_deg, double lat_step_deg,
                                         double lon_deg, double fixed_eat_deg,
                                         const Constellation& constellation, const EatSearchConfig& cfg,
                                         const LinkBudget& budget, int threads = 1);

}  // namespace leosim
