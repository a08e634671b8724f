#include "leosim/eatopt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "leosim/kernels.hpp"
#include "leosim/parallel.hpp"

namespace leosim {

void validate_search_config(const EatSearchConfig& cfg) {
    if (!(cfg.eat_min_deg < cfg.eat_max_deg))
        throw std::invalid_argument("invalid search config: eat_min_deg must be < eat_max_deg");
    if (cfg.eat_min_deg < 0.0 || cfg.eat_max_deg >= 90.0)
        throw std::invalid_argument("invalid search config: eat_min_deg/eat_max_deg must lie in [0, 90)");
    if (!(cfg.eat_step_deg > 0.0))
        throw std::invalid_argument("invalid search config: eat_step_deg must be > 0");
    if (!(cfg.dt_s > 0.0)) throw std::invalid_argument("invalid search config: dt_s must be > 0");
    if (cfg.window_s < 0.0) throw std::invalid_argument("invalid search config: window_s must be >= 0");
    if (cfg.window_s != 0.0 && cfg.window_s < cfg.dt_s)
        throw std::invalid_argument("invalid search config: window_s must be >= dt_s");
}

double resolve_window_s(const EatSearchConfig& cfg, const ConstellationConfig& constellation) {
    if (cfg.window_s > 0.0) return cfg.window_s;
    if (constellation.earth_rotation)
        throw std::invalid_argument(
            "invalid search config: window_s must be set explicitly when earth_rotation is on");
    return orbital_period_s(constellation);
}

std::vector<double> candidate_grid(const EatSearchConfig& cfg) {
    const long long n =
        static_cast<long long>(std::floor((cfg.eat_max_deg - cfg.eat_min_deg) / cfg.eat_step_deg + 1e-9));
    std::vector<double> grid;
    grid.reserve(n + 1);
    for (long long k = 0; k <= n; ++k) grid.push_back(cfg.eat_min_deg + k * cfg.eat_step_deg);
    return grid;
}

std::vector<CandidateStats> evaluate_candidates(const GeodeticPosition& user,
                                                const Constellation& constellation,
                                                std::span<const double> thresholds_deg,
                                                const EatSearchConfig& cfg, const LinkBudget& budget) {
    validate_search_config(cfg);
    validate_geodetic(user);
    validate_link_budget(budget);
    if (!std::is_sorted(thresholds_deg.begin(), thresholds_deg.end()))
        throw std::invalid_argument("evaluate_candidates: thresholds must be sorted ascending");

    const double window = resolve_window_s(cfg, constellation.config);
    const long long n_samples = static_cast<long long>(std::floor(window / cfg.dt_s + 1e-9)) + 1;
    const size_t n_cand = thresholds_deg.size();
    const size_t n_sats = constellation.sats.size();

    std::vector<CandidateStats> stats(n_cand);
    for (size_t c = 0; c < n_cand; ++c) {
        stats[c].eat_deg = thresholds_deg[c];
        stats[c].total_samples = n_samples;
        stats[c].min_visible = std::numeric_limits<int>::max();
    }

    std::vector<double> sin_th(n_cand);
    for (size_t c = 0; c < n_cand; ++c) sin_th[c] = std::sin(deg_to_rad(thresholds_deg[c]));

    // Received power falls off as k_mw / range^2 in linear mW.
    const double k_mw = dbm_to_mw(budget.tx_power_dbm + budget.aggregate_gain_dbi - 32.45 -
                                  20.0 * std::log10(budget.freq_ghz * 1000.0) - budget.excess_loss_db);

    SkyView view(constellation.sats);
    std::vector<double> sin_elev(n_sats), range_km(n_sats);
    std::vector<int> sat_ids(n_sats);
    for (size_t i = 0; i < n_sats; ++i) sat_ids[i] = constellation.sats[i].sat_id;

    // Per-sample buckets: a satellite in bucket b clears exactly the first b
    // thresholds, so candidate c aggregates buckets c+1..n_cand.
    std::vector<int> cnt(n_cand + 1, 0);
    std::vector<double> pwr(n_cand + 1, 0.0);
    std::vector<double> best_range(n_cand + 1, 0.0);
    std::vector<double> best_pwr(n_cand + 1, 0.0);
    std::vector<int> best_id(n_cand + 1, -1);
    std::vector<size_t> touched;
    touched.reserve(n_sats);

    const double sin_floor = sin_th.empty() ? 1.0 : sin_th.front();

    for (long long s = 0; s < n_samples; ++s) {
        const double t = s * cfg.dt_s;
        const Vec3 user_xyz = ground_position_at(user, constellation.config, t);
        view.sample(t, user_xyz, sin_elev, range_km);

        for (size_t i = 0; i < n_sats; ++i) {
            if (sin_elev[i] < sin_floor) continue;  // below every threshold
            const size_t b = std::upper_bound(sin_th.begin(), sin_th.end(), sin_elev[i]) - sin_th.begin();
            const double p = k_mw / (range_km[i] * range_km[i]);
            if (cnt[b] == 0) {
                touched.push_back(b);
                best_range[b] = range_km[i];
                best_pwr[b] = p;
                best_id[b] = sat_ids[i];
            } else if (range_km[i] < best_range[b] ||
                       (range_km[i] == best_range[b] && sat_ids[i] < best_id[b])) {
                best_range[b] = range_km[i];
                best_pwr[b] = p;
                best_id[b] = sat_ids[i];
            }
            ++cnt[b];
            pwr[b] += p;
        }

        // Suffix scan from the highest threshold down; ties on range go to
        // the lowest sat_id.
        int acc_count = 0;
        double acc_pwr = 0.0;
        double acc_best_range = 0.0;
        double acc_best_pwr = 0.0;
        int acc_best_id = -1;
        for (size_t c = n_cand; c-- > 0;) {
            const size_t b = c + 1;
            if (cnt[b] > 0) {
                acc_count += cnt[b];
                acc_pwr += pwr[b];
                if (acc_best_id < 0 || best_range[b] < acc_best_range ||
                    (best_range[b] == acc_best_range && best_id[b] < acc_best_id)) {
                    acc_best_range = best_range[b];
                    acc_best_pwr = best_pwr[b];
                    acc_best_id = best_id[b];
                }
            }
            auto& st = stats[c];
            st.min_visible = std::min(st.min_visible, acc_count);
            st.max_visible = std::max(st.max_visible, acc_count);
            st.sum_visible += acc_count;
            if (acc_count > 0) {
                ++st.covered_samples;
                const double interf = acc_pwr - acc_best_pwr;
                if (interf > 0.0) st.sum_interference_mw += interf * budget.interferer_activity;
            }
        }

        for (size_t b : touched) {
            cnt[b] = 0;
            pwr[b] = 0.0;
            best_id[b] = -1;
        }
        touched.clear();
    }

    for (auto& st : stats)
        if (st.min_visible == std::numeric_limits<int>::max()) st.min_visible = 0;
    return stats;
}

CoverageProfile to_profile(const CandidateStats& st) {
    CoverageProfile p;
    p.eat_deg = st.eat_deg;
    p.min_visible = st.min_visible;
    p.max_visible = st.max_visible;
    p.mean_visible = st.total_samples > 0 ? static_cast<double>(st.sum_visible) / st.total_samples : 0.0;
    p.outage_fraction =
        st.total_samples > 0
            ? static_cast<double>(st.total_samples - st.covered_samples) / st.total_samples
            : 0.0;
    p.mean_interference_dbm =
        st.covered_samples > 0 ? mw_to_dbm(st.sum_interference_mw / st.covered_samples)
                               : -std::numeric_limits<double>::infinity();
    return p;
}

CoverageProfile coverage_profile(const GeodeticPosition& user, const Constellation& constellation,
                                 double eat_deg, const EatSearchConfig& cfg, const LinkBudget& budget) {
    if (eat_deg < 0.0 || eat_deg >= 90.0)
        throw std::invalid_argument("coverage_profile: eat_deg must lie in [0, 90)");
    const double th[1] = {eat_deg};
    return to_profile(evaluate_candidates(user, constellation, th, cfg, budget)[0]);
}

namespace {

// Index of the winning candidate among `stats`, or -1 when nothing is
// feasible. `skip` excludes an extra non-grid candidate that rode along.
long long select_optimal(std::span<const CandidateStats> stats, const EatSearchConfig& cfg,
                         long long skip = -1) {
    long long best = -1;
    if (cfg.objective == EatObjective::Weighted) {
        const double span = cfg.eat_max_deg - cfg.eat_min_deg;
        double best_score = 0.0;
        for (size_t c = 0; c < stats.size(); ++c) {
            if (static_cast<long long>(c) == skip) continue;
            const auto& st = stats[c];
            if (st.covered_samples != st.total_samples) continue;
            const double mean_interf_mw =
                st.covered_samples > 0 ? st.sum_interference_mw / st.covered_samples : 0.0;
            const double score =
                -mean_interf_mw + cfg.cci_weight * (st.eat_deg - cfg.eat_min_deg) / span;
            if (best < 0 || score >= best_score) {  // ties go to the larger threshold
                best = static_cast<long long>(c);
                best_score = score;
            }
        }
    } else {
        // FULL_REUSE and ZERO_INTERFERENCE both reduce to the maximum
        // feasible threshold on the grid.
        for (size_t c = 0; c < stats.size(); ++c) {
            if (static_cast<long long>(c) == skip) continue;
            if (stats[c].covered_samples == stats[c].total_samples) best = static_cast<long long>(c);
        }
    }
    return best;
}

EatResult result_from(const GeodeticPosition& user, std::span<const CandidateStats> stats,
                      long long best) {
    EatResult res;
    res.user = user;
    if (best >= 0) {
        res.feasible = true;
        res.optimal_eat_deg = stats[best].eat_deg;
        res.profile_at_optimum = to_profile(stats[best]);
    }
    return res;
}

}  // namespace

EatResult optimal_eat(const GeodeticPosition& user, const Constellation& constellation,
                      const EatSearchConfig& cfg, const LinkBudget& budget) {
    const std::vector<double> grid = candidate_grid(cfg);
    const std::vector<CandidateStats> stats = evaluate_candidates(user, constellation, grid, cfg, budget);
    return result_from(user, stats, select_optimal(stats, cfg));
}

std::vector<SweepRow> eat_latitude_sweep(double lat_min_deg, double lat_max_deg, double lat_step_deg,
                                         double lon_deg, double fixed_eat_deg,
                                         const Constellation& constellation, const EatSearchConfig& cfg,
                                         const LinkBudget& budget, int threads) {
    if (!(lat_step_deg > 0.0)) throw std::invalid_argument("eat_latitude_sweep: lat_step_deg must be > 0");
    validate_search_config(cfg);
    if (fixed_eat_deg < 0.0 || fixed_eat_deg >= 90.0)
        throw std::invalid_argument("eat_latitude_sweep: fixed_eat_deg must lie in [0, 90)");

    std::vector<double> lats;
    if (lat_max_deg >= lat_min_deg) {
        const long long n =
            static_cast<long long>(std::floor((lat_max_deg - lat_min_deg) / lat_step_deg + 1e-9));
        for (long long k = 0; k <= n; ++k) lats.push_back(lat_min_deg + k * lat_step_deg);
    }

    // The reference threshold rides along as an extra candidate so each row
    // costs a single window scan. It is excluded from the optimum selection
    // unless it already sits on the grid.
    std::vector<double> grid = candidate_grid(cfg);
    auto it = std::lower_bound(grid.begin(), grid.end(), fixed_eat_deg);
    const bool on_grid = it != grid.end() && *it == fixed_eat_deg;
    const size_t fixed_idx = it - grid.begin();
    if (!on_grid) grid.insert(it, fixed_eat_deg);

    std::vector<SweepRow> rows(lats.size());
    parallel_for(lats.size(), threads, [&](size_t i) {
        const GeodeticPosition user{lats[i], lon_deg, 0.0};
        const std::vector<CandidateStats> stats =
            evaluate_candidates(user, constellation, grid, cfg, budget);

        SweepRow row;
        row.lat_deg = lats[i];
        row.fixed_profile = to_profile(stats[fixed_idx]);
        const long long skip = on_grid ? -1 : static_cast<long long>(fixed_idx);
        row.result = result_from(user, stats, select_optimal(stats, cfg, skip));
        rows[i] = row;
    });
    return rows;
}

}  // namespace leosim
