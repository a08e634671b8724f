#include "leosim/link.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace leosim {

void validate_link_budget(const LinkBudget& b) {
    if (!(b.bandwidth_hz > 0.0)) throw std::invalid_argument("invalid link config: bandwidth_hz must be > 0");
    if (!(b.freq_ghz > 0.0)) throw std::invalid_argument("invalid link config: freq_ghz must be > 0");
    if (b.interferer_activity < 0.0 || b.interferer_activity > 1.0)
        throw std::invalid_argument("invalid link config: interferer_activity must be in [0, 1]");
    if (!(b.noise_temp_k > 0.0)) throw std::invalid_argument("invalid link config: noise_temp_k must be > 0");
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) {
    if (mw <= 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(mw);
}

double free_space_path_loss_db(double freq_ghz, double distance_km) {
    if (!(freq_ghz > 0.0) || !(distance_km > 0.0))
        throw std::invalid_argument("free_space_path_loss: freq_ghz and distance_km must be > 0");
    return 32.45 + 20.0 * std::log10(freq_ghz * 1000.0) + 20.0 * std::log10(distance_km);
}

double received_power_dbm(const LinkBudget& budget, double distance_km) {
    return budget.tx_power_dbm + budget.aggregate_gain_dbi -
           free_space_path_loss_db(budget.freq_ghz, distance_km) - budget.excess_loss_db;
}

double noise_power_dbm(double bandwidth_hz, double noise_temp_k) {
    if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("noise_power: bandwidth_hz must be > 0");
    const double watts = kBoltzmannJPerK * noise_temp_k * bandwidth_hz;
    return mw_to_dbm(watts * 1000.0);
}

double sinr_db(double signal_dbm, std::span<const double> interferer_dbm, double noise_dbm) {
    const double s = dbm_to_mw(signal_dbm);
    double denom = dbm_to_mw(noise_dbm);
    for (double i_dbm : interferer_dbm) denom += dbm_to_mw(i_dbm);
    double linear = denom > 0.0 ? s / denom : kMaxLinearSinr;
    if (linear > kMaxLinearSinr) linear = kMaxLinearSinr;
    return 10.0 * std::log10(linear);
}

double capacity_bps(double sinr_db, double bandwidth_hz) {
    if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("capacity: bandwidth_hz must be > 0");
    double linear = std::pow(10.0, sinr_db / 10.0);
    if (linear > kMaxLinearSinr) linear = kMaxLinearSinr;
    return bandwidth_hz * std::log2(1.0 + linear);
}

bool packet_deliverable(double offered_rate_bps, double sinr_db, const LinkBudget& budget) {
    if (!(offered_rate_bps > 0.0)) throw std::invalid_argument("packet_deliverable: offered_rate_bps must be > 0");
    return capacity_bps(sinr_db, budget.bandwidth_hz) >= offered_rate_bps;
}

}  // namespace leosim
