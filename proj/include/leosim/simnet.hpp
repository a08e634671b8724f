#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leosim/eatopt.hpp"
#include "leosim/geometry.hpp"
#include "leosim/link.hpp"
#include "leosim/orbital.hpp"

namespace leosim {

struct TrafficConfig {
    double rate_bps = 8.192e6;
    double packet_size_bits = 12288.0;  // 1536 bytes
    double duration_s = 200.0;
};

struct SimConfig {
    double dt_s = 0.01;
    double ho_interruption_ms = 0.0;
    double hysteresis_km = 0.0;
    bool packet_jitter = false;  // jittered packet schedule, the only seed consumer
    uint64_t seed = 0;
};

enum class UeState { Idle, Connected, Outage };

struct UeContext {
    GeodeticPosition position;
    double eat_deg = 25.0;
    std::optional<int> serving_sat;
    std::optional<int> prepared_target;  // CHO candidate
    UeState state = UeState::Idle;
};

// Serving-satellite migration. from_sat is empty for re-acquisition after an
// outage; the initial attach is not recorded as a handover.
struct HandoverEvent {
    double t_s = 0.0;
    std::optional<int> from_sat;
    int to_sat = 0;
    double trigger_range_km = 0.0;
};

enum class SimEventType { Attach, Handover, OutageBegin };

struct SimEvent {
    double t_s = 0.0;
    SimEventType type = SimEventType::Attach;
    std::optional<int> from_sat;
    std::optional<int> to_sat;
    double detail_km = 0.0;  // range to the new serving satellite where applicable
};

struct SimResult {
    long long packets_sent = 0;
    long long packets_lost = 0;
    double loss_rate = 0.0;
    std::vector<HandoverEvent> handover_events;
    double outage_time_s = 0.0;
    double mean_sinr_db = 0.0;  // arithmetic mean over connected steps, NaN if never connected
    std::vector<SimEvent> log;

    // Satellite-to-satellite migrations only.
    long long ho_count() const;
};

struct StepReport {
    long long packets_in_step = 0;
    bool delivered = false;
    double sinr_db = 0.0;  // NaN while not connected
    int visible_count = 0;
    std::optional<HandoverEvent> handover;
    std::vector<SimEvent> events;
};

// Closest visible satellite, ties to the lowest sat_id; empty when `visible`
// is empty.
std::optional<int> csho_select(const Vec3& user_xyz, const std::vector<int>& visible,
                               const std::vector<SatelliteEphemeris>& sats, double t_s);

// One simulation step: re-evaluates visibility at t, maintains the prepared
// CHO target, executes handover when the target is strictly closer than the
// serving link by more than the hysteresis margin (or when the serving
// satellite drops below the threshold), then applies the capacity test to
// every packet scheduled in [t, t+dt).
std::pair<UeContext, StepReport> step(const UeContext& state, double t_s, double dt_s,
                                      const Constellation& constellation, const LinkBudget& budget,
                                      const TrafficConfig& traffic, const SimConfig& sim = {});

SimResult run_scenario(const GeodeticPosition& user, double eat_deg, const Constellation& constellation,
                       const LinkBudget& budget, const TrafficConfig& traffic, const SimConfig& sim);

struct LossCompareRow {
    double lat_deg = 0.0;
    double fixed_eat_deg = 0.0;
    SimResult fixed_run;
    bool feasible = false;
    std::optional<double> optimal_eat_deg;
    SimResult optimal_run;  // empty when infeasible
};

// For each latitude: optimize the threshold, then run the same traffic under
// the fixed reference threshold and under the optimum.
std::vector<LossCompareRow> compare_fixed_vs_optimal(double lat_min_deg, double lat_max_deg,
                                                     double lat_step_deg, double lon_deg,
                                                     double fixed_eat_deg,
                                                     const Constellation& constellation,
                                                     const EatSearchConfig& search,
                                                     const LinkBudget& budget,
                                                     const TrafficConfig& traffic, const SimConfig& sim,
                                                     int threads = 1);

// Throws std::invalid_argument naming the offending field.
void validate_traffic(const TrafficConfig& traffic);
void validate_sim(const SimConfig& sim);

// floor(duration * rate / size): packet k (1-based) completes at k*size/rate.
long long scheduled_packet_count(const TrafficConfig& traffic);

}  // namespace leosim
