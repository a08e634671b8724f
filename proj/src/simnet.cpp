#include "leosim/simnet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "leosim/kernels.hpp"
#include "leosim/parallel.hpp"

namespace leosim {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Candidate {
    double range_km = kInf;
    int sat_id = -1;

    bool valid() const { return sat_id >= 0; }
    bool closer_than(const Candidate& o) const {
        return range_km < o.range_km || (range_km == o.range_km && sat_id < o.sat_id);
    }
};

// Shared per-scenario machinery: SoA sky view plus the link constants that do
// not change between steps.
class ScenarioRunner {
  public:
    ScenarioRunner(const Constellation& constellation, const LinkBudget& budget,
                   const TrafficConfig& traffic, const SimConfig& sim)
        : constellation_(constellation),
          budget_(budget),
          traffic_(traffic),
          sim_(sim),
          view_(constellation.sats),
          sin_elev_(constellation.sats.size()),
          range_km_(constellation.sats.size()) {
        const size_t n = constellation.sats.size();
        sat_ids_.resize(n);
        for (size_t i = 0; i < n; ++i) {
            sat_ids_[i] = constellation.sats[i].sat_id;
            id_to_index_[sat_ids_[i]] = i;
        }
        k_mw_ = dbm_to_mw(budget.tx_power_dbm + budget.aggregate_gain_dbi - 32.45 -
                          20.0 * std::log10(budget.freq_ghz * 1000.0) - budget.excess_loss_db);
        noise_mw_ = dbm_to_mw(noise_power_dbm(budget.bandwidth_hz, budget.noise_temp_k));
    }

    StepReport advance(UeContext& ue, double t_s, long long packets_in_step) {
        StepReport report;
        report.packets_in_step = packets_in_step;
        report.sinr_db = kNan;

        const Vec3 user_xyz = ground_position_at(ue.position, constellation_.config, t_s);
        view_.sample(t_s, user_xyz, sin_elev_, range_km_);

        const double sin_eat = std::sin(deg_to_rad(ue.eat_deg));
        const size_t n = view_.size();

        // Single pass: visible count, total received power, two closest
        // visible satellites, serving link status.
        int visible = 0;
        double total_pwr = 0.0;
        Candidate first, second;
        bool serving_visible = false;
        double serving_range = 0.0, serving_pwr = 0.0;
        const long long serving_idx =
            ue.serving_sat ? static_cast<long long>(id_to_index_.at(*ue.serving_sat)) : -1;

        for (size_t i = 0; i < n; ++i) {
            if (sin_elev_[i] < sin_eat) continue;
            ++visible;
            const double r = range_km_[i];
            const double p = k_mw_ / (r * r);
            total_pwr += p;
            const Candidate c{r, sat_ids_[i]};
            if (c.closer_than(first)) {
                second = first;
                first = c;
            } else if (c.closer_than(second)) {
                second = c;
            }
            if (static_cast<long long>(i) == serving_idx) {
                serving_visible = true;
                serving_range = r;
                serving_pwr = p;
            }
        }
        report.visible_count = visible;

        if (visible == 0) {
            if (ue.state != UeState::Outage) {
                report.events.push_back({t_s, SimEventType::OutageBegin, ue.serving_sat, {}, 0.0});
            }
            ue.state = UeState::Outage;
            ue.serving_sat.reset();
            ue.prepared_target.reset();
            report.delivered = false;
            return report;
        }

        auto closest_excluding = [&](int excluded_id) -> Candidate {
            if (first.valid() && first.sat_id != excluded_id) return first;
            return second;
        };

        if (ue.state == UeState::Connected && serving_visible) {
            const Candidate prepared = closest_excluding(*ue.serving_sat);
            ue.prepared_target = prepared.valid() ? std::optional<int>(prepared.sat_id) : std::nullopt;
            if (prepared.valid() && prepared.range_km < serving_range - sim_.hysteresis_km) {
                HandoverEvent ev{t_s, ue.serving_sat, prepared.sat_id, prepared.range_km};
                report.handover = ev;
                report.events.push_back(
                    {t_s, SimEventType::Handover, ev.from_sat, ev.to_sat, ev.trigger_range_km});
                ue.serving_sat = prepared.sat_id;
                serving_range = prepared.range_km;
                serving_pwr = k_mw_ / (prepared.range_km * prepared.range_km);
                const Candidate next = closest_excluding(prepared.sat_id);
                ue.prepared_target = next.valid() ? std::optional<int>(next.sat_id) : std::nullopt;
            }
        } else {
            // Serving link lost or not yet established: CSHO re-selection.
            const UeState prev = ue.state;
            const std::optional<int> prev_serving = ue.serving_sat;
            ue.serving_sat = first.sat_id;
            ue.state = UeState::Connected;
            serving_range = first.range_km;
            serving_pwr = k_mw_ / (first.range_km * first.range_km);
            const Candidate next = closest_excluding(first.sat_id);
            ue.prepared_target = next.valid() ? std::optional<int>(next.sat_id) : std::nullopt;

            if (prev == UeState::Connected) {
                HandoverEvent ev{t_s, prev_serving, first.sat_id, first.range_km};
                report.handover = ev;
                report.events.push_back(
                    {t_s, SimEventType::Handover, ev.from_sat, ev.to_sat, ev.trigger_range_km});
            } else if (prev == UeState::Outage) {
                // Re-acquisition: a handover without a source satellite.
                HandoverEvent ev{t_s, std::nullopt, first.sat_id, first.range_km};
                report.handover = ev;
                report.events.push_back(
                    {t_s, SimEventType::Attach, std::nullopt, first.sat_id, first.range_km});
            } else {
                report.events.push_back(
                    {t_s, SimEventType::Attach, std::nullopt, first.sat_id, first.range_km});
            }
        }

        double interference_mw = total_pwr - serving_pwr;
        if (interference_mw < 0.0) interference_mw = 0.0;
        interference_mw *= budget_.interferer_activity;

        double linear = serving_pwr / (interference_mw + noise_mw_);
        if (linear > kMaxLinearSinr) linear = kMaxLinearSinr;
        report.sinr_db = 10.0 * std::log10(linear);
        report.delivered = packet_deliverable(traffic_.rate_bps, report.sinr_db, budget_);
        return report;
    }

  private:
    const Constellation& constellation_;
    const LinkBudget& budget_;
    const TrafficConfig& traffic_;
    const SimConfig& sim_;
    SkyView view_;
    std::vector<double> sin_elev_, range_km_;
    std::vector<int> sat_ids_;
    std::unordered_map<int, size_t> id_to_index_;
    double k_mw_ = 0.0;
    double noise_mw_ = 0.0;
};

}  // namespace

void validate_traffic(const TrafficConfig& t) {
    if (!(t.rate_bps > 0.0)) throw std::invalid_argument("invalid traffic config: rate_bps must be > 0");
    if (!(t.packet_size_bits > 0.0))
        throw std::invalid_argument("invalid traffic config: packet_size_bits must be > 0");
    if (t.duration_s < 0.0) throw std::invalid_argument("invalid traffic config: duration_s must be >= 0");
}

void validate_sim(const SimConfig& s) {
    if (!(s.dt_s > 0.0)) throw std::invalid_argument("invalid sim config: dt_s must be > 0");
    if (s.ho_interruption_ms < 0.0)
        throw std::invalid_argument("invalid sim config: ho_interruption_ms must be >= 0");
    if (s.hysteresis_km < 0.0) throw std::invalid_argument("invalid sim config: hysteresis_km must be >= 0");
}

long long scheduled_packet_count(const TrafficConfig& traffic) {
    validate_traffic(traffic);
    return static_cast<long long>(
        std::floor(traffic.duration_s * traffic.rate_bps / traffic.packet_size_bits + 1e-9));
}

long long SimResult::ho_count() const {
    long long n = 0;
    for (const auto& ev : handover_events)
        if (ev.from_sat.has_value()) ++n;
    return n;
}

std::optional<int> csho_select(const Vec3& user_xyz, const std::vector<int>& visible,
                               const std::vector<SatelliteEphemeris>& sats, double t_s) {
    std::optional<int> best;
    double best_range = kInf;
    for (int id : visible) {
        auto it = std::find_if(sats.begin(), sats.end(),
                               [id](const SatelliteEphemeris& e) { return e.sat_id == id; });
        if (it == sats.end()) throw std::invalid_argument("csho_select: unknown sat_id in visible set");
        const double r = norm(propagate(*it, t_s) - user_xyz);
        if (r < best_range || (r == best_range && best && id < *best)) {
            best_range = r;
            best = id;
        }
    }
    return best;
}

std::pair<UeContext, StepReport> step(const UeContext& state, double t_s, double dt_s,
                                      const Constellation& constellation, const LinkBudget& budget,
                                      const TrafficConfig& traffic, const SimConfig& sim) {
    if (!(dt_s > 0.0)) throw std::invalid_argument("step: dt_s must be > 0");
    validate_traffic(traffic);
    validate_sim(sim);
    validate_link_budget(budget);

    // Packets k >= 1 arriving at k * size/rate within [t, t+dt).
    const double spacing = traffic.packet_size_bits / traffic.rate_bps;
    const long long k_lo = std::max<long long>(1, static_cast<long long>(std::ceil(t_s / spacing - 1e-9)));
    const long long k_hi = static_cast<long long>(std::ceil((t_s + dt_s) / spacing - 1e-9)) - 1;
    const long long packets = std::max<long long>(0, k_hi - k_lo + 1);

    ScenarioRunner runner(constellation, budget, traffic, sim);
    UeContext next = state;
    StepReport report = runner.advance(next, t_s, packets);
    if (report.handover && sim.ho_interruption_ms > 0.0) report.delivered = false;
    return {next, report};
}

SimResult run_scenario(const GeodeticPosition& user, double eat_deg, const Constellation& constellation,
                       const LinkBudget& budget, const TrafficConfig& traffic, const SimConfig& sim) {
    validate_geodetic(user);
    validate_traffic(traffic);
    validate_sim(sim);
    validate_link_budget(budget);
    if (eat_deg < 0.0 || eat_deg >= 90.0)
        throw std::invalid_argument("run_scenario: eat_deg must lie in [0, 90)");

    const long long n_packets = scheduled_packet_count(traffic);
    const double spacing = traffic.packet_size_bits / traffic.rate_bps;

    // Jitter shifts each arrival back by a uniform fraction of the spacing;
    // ordering is preserved. This is the only use of the seed.
    std::vector<double> schedule;
    if (sim.packet_jitter) {
        schedule.resize(n_packets);
        std::mt19937_64 rng(sim.seed);
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        for (long long k = 1; k <= n_packets; ++k) schedule[k - 1] = (k - uni(rng)) * spacing;
    }
    auto arrival = [&](long long k) {  // 1-based
        return sim.packet_jitter ? schedule[k - 1] : k * spacing;
    };

    const long long n_steps =
        static_cast<long long>(std::ceil(traffic.duration_s / sim.dt_s - 1e-9));

    ScenarioRunner runner(constellation, budget, traffic, sim);
    UeContext ue;
    ue.position = user;
    ue.eat_deg = eat_deg;

    SimResult result;
    double sinr_sum = 0.0;
    long long connected_steps = 0;
    long long next_packet = 1;
    double interrupt_until = -kInf;

    for (long long s = 0; s < n_steps; ++s) {
        const double t = s * sim.dt_s;
        const double dt_eff = std::min(sim.dt_s, traffic.duration_s - t);
        const bool last = s == n_steps - 1;
        const double step_end = last ? kInf : (s + 1) * sim.dt_s;

        long long packets = 0;
        while (next_packet <= n_packets && arrival(next_packet) < step_end) {
            ++packets;
            ++next_packet;
        }

        StepReport report = runner.advance(ue, t, packets);

        if (report.handover) {
            result.handover_events.push_back(*report.handover);
            if (sim.ho_interruption_ms > 0.0)
                interrupt_until = std::max(interrupt_until, t + sim.ho_interruption_ms / 1000.0);
        }
        for (const auto& ev : report.events) result.log.push_back(ev);

        const bool interrupted = t < interrupt_until;
        const bool delivered = report.delivered && !interrupted;

        result.packets_sent += packets;
        if (!delivered) result.packets_lost += packets;

        if (ue.state == UeState::Outage) result.outage_time_s += dt_eff;
        if (ue.state == UeState::Connected) {
            sinr_sum += report.sinr_db;
            ++connected_steps;
        }
    }

    result.loss_rate =
        result.packets_sent > 0 ? static_cast<double>(result.packets_lost) / result.packets_sent : 0.0;
    result.mean_sinr_db = connected_steps > 0 ? sinr_sum / connected_steps : kNan;
    return result;
}

std::vector<LossCompareRow> compare_fixed_vs_optimal(double lat_min_deg, double lat_max_deg,
                                                     double lat_step_deg, double lon_deg,
                                                     double fixed_eat_deg,
                                                     const Constellation& constellation,
                                                     const EatSearchConfig& search,
                                                     const LinkBudget& budget,
                                                     const TrafficConfig& traffic, const SimConfig& sim,
                                                     int threads) {
    if (!(lat_step_deg > 0.0))
        throw std::invalid_argument("compare_fixed_vs_optimal: lat_step_deg must be > 0");

    std::vector<double> lats;
    if (lat_max_deg >= lat_min_deg) {
        const long long n =
            static_cast<long long>(std::floor((lat_max_deg - lat_min_deg) / lat_step_deg + 1e-9));
        for (long long k = 0; k <= n; ++k) lats.push_back(lat_min_deg + k * lat_step_deg);
    }

    std::vector<LossCompareRow> rows(lats.size());
    parallel_for(lats.size(), threads, [&](size_t i) {
        const GeodeticPosition user{lats[i], lon_deg, 0.0};
        LossCompareRow row;
        row.lat_deg = lats[i];
        row.fixed_eat_deg = fixed_eat_deg;

        const EatResult opt = optimal_eat(user, constellation, search, budget);
        row.feasible = opt.feasible;
        row.optimal_eat_deg = opt.optimal_eat_deg;

        row.fixed_run = run_scenario(user, fixed_eat_deg, constellation, budget, traffic, sim);
        if (opt.feasible)
            row.optimal_run = run_scenario(user, *opt.optimal_eat_deg, constellation, budget, traffic, sim);
        rows[i] = row;
    });
    return rows;
}

}  // namespace leosim
