#pragma once

#include <span>

namespace leosim {

// RF parameters. The aggregate gain is one end-to-end figure with no angular
// pattern, so interferers are discounted only by slant range and the
// interferer_activity duty-cycle factor.
struct LinkBudget {
    double tx_power_dbm = 43.01;        // 20 W
    double aggregate_gain_dbi = 70.2;   // combined satellite + device gain
    double freq_ghz = 11.7;
    double bandwidth_hz = 4.5e6;
    double noise_temp_k = 290.0;
    double excess_loss_db = 0.0;        // fixed additive loss, clear sky = 0
    double interferer_activity = 1.0;   // duty-cycle discount per interferer
};

struct SinrSample {
    double t_s = 0.0;
    int serving_sat = -1;
    double signal_dbm = 0.0;
    double interference_dbm = 0.0;  // -inf when no interferers
    double noise_dbm = 0.0;
    double sinr_db = 0.0;
};

constexpr double kBoltzmannJPerK = 1.380649e-23;

// Linear SINR cap, keeps capacity finite if noise is driven to zero.
constexpr double kMaxLinearSinr = 1e15;

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);  // -inf for mw == 0

// 32.45 + 20 log10(f_MHz) + 20 log10(d_km)
double free_space_path_loss_db(double freq_ghz, double distance_km);

// tx + gain - FSPL - excess_loss
double received_power_dbm(const LinkBudget& budget, double distance_km);

// kTB in dBm
double noise_power_dbm(double bandwidth_hz, double noise_temp_k);

// S / (sum I + N) in dB; empty interferer list gives plain SNR.
double sinr_db(double signal_dbm, std::span<const double> interferer_dbm, double noise_dbm);

// Shannon: B log2(1 + sinr_linear)
double capacity_bps(double sinr_db, double bandwidth_hz);

bool packet_deliverable(double offered_rate_bps, double sinr_db, const LinkBudget& budget);

// Throws std::invalid_argument naming the offending field.
void validate_link_budget(const LinkBudget& budget);

}  // namespace leosim
