#include "leosim/experiments.hpp"

#include <cmath>
#include <filesystem>

#include "leosim/csv.hpp"
#include "leosim/parallel.hpp"

namespace leosim {

namespace {

void finish(CsvWriter& w, const std::string& path) {
    if (!w.close()) throw std::runtime_error("write failed: " + path);
}

std::string event_type_name(SimEventType t) {
    switch (t) {
        case SimEventType::Attach: return "attach";
        case SimEventType::Handover: return "handover";
        case SimEventType::OutageBegin: return "outage";
    }
    return "?";
}

}  // namespace

void cmd_eat_sweep(const ScenarioFile& cfg, const std::string& out_path, int threads) {
    const Constellation cons = make_constellation(cfg.constellation);
    const auto& e = cfg.experiment;
    const auto rows = eat_latitude_sweep(e.sweep_lat_min_deg, e.sweep_lat_max_deg, e.sweep_lat_step_deg,
                                         e.lon_deg, e.fixed_eat_deg, cons, cfg.search, cfg.link, threads);

    CsvWriter w(out_path,
                "lat_deg,optimal_eat_deg,feasible,min_visible_opt,mean_visible_opt,"
                "min_visible_fixed,mean_visible_fixed,mean_interference_dbm");
    for (const auto& row : rows) {
        const bool ok = row.result.feasible;
        const auto& opt = row.result.profile_at_optimum;
        w.row({fmt_g6(row.lat_deg),
               ok ? fmt_g6(*row.result.optimal_eat_deg) : "nan",
               ok ? "1" : "0",
               ok ? fmt_int(opt.min_visible) : "nan",
               ok ? fmt_g6(opt.mean_visible) : "nan",
               fmt_int(row.fixed_profile.min_visible),
               fmt_g6(row.fixed_profile.mean_visible),
               ok ? fmt_g6(opt.mean_interference_dbm) : "nan"});
    }
    finish(w, out_path);
}

void cmd_loss_compare(const ScenarioFile& cfg, const std::string& out_path, int threads, uint64_t seed) {
    const Constellation cons = make_constellation(cfg.constellation);
    const auto& e = cfg.experiment;
    SimConfig sim = cfg.sim;
    sim.seed = seed;

    const auto rows =
        compare_fixed_vs_optimal(e.compare_lat_min_deg, e.compare_lat_max_deg, e.compare_lat_step_deg,
                                 e.lon_deg, e.fixed_eat_deg, cons, cfg.search, cfg.link, cfg.traffic,
                                 sim, threads);

    CsvWriter w(out_path,
                "lat_deg,fixed_eat_deg,fixed_loss_rate,optimal_eat_deg,optimal_loss_rate,"
                "ho_count_fixed,ho_count_optimal");
    for (const auto& row : rows) {
        w.row({fmt_g6(row.lat_deg),
               fmt_g6(row.fixed_eat_deg),
               fmt_g6(row.fixed_run.loss_rate),
               row.feasible ? fmt_g6(*row.optimal_eat_deg) : "nan",
               row.feasible ? fmt_g6(row.optimal_run.loss_rate) : "nan",
               fmt_int(row.fixed_run.ho_count()),
               row.feasible ? fmt_int(row.optimal_run.ho_count()) : "nan"});
    }
    finish(w, out_path);
}

void cmd_u_curve(const ScenarioFile& cfg, const std::string& out_path, int threads, uint64_t seed) {
    const Constellation cons = make_constellation(cfg.constellation);
    const auto& e = cfg.experiment;
    SimConfig sim = cfg.sim;
    sim.seed = seed;

    std::vector<double> grid;
    {
        const long long n = static_cast<long long>(
            std::floor((e.u_eat_max_deg - e.u_eat_min_deg) / e.u_eat_step_deg + 1e-9));
        for (long long k = 0; k <= n; ++k) grid.push_back(e.u_eat_min_deg + k * e.u_eat_step_deg);
    }

    std::vector<EatResult> predicted(e.locations.size());
    parallel_for(e.locations.size(), threads, [&](size_t i) {
        const GeodeticPosition user{e.locations[i].lat_deg, e.locations[i].lon_deg, 0.0};
        predicted[i] = optimal_eat(user, cons, cfg.search, cfg.link);
    });

    std::vector<double> loss(e.locations.size() * grid.size());
    parallel_for(loss.size(), threads, [&](size_t idx) {
        const size_t li = idx / grid.size();
        const size_t gi = idx % grid.size();
        const GeodeticPosition user{e.locations[li].lat_deg, e.locations[li].lon_deg, 0.0};
        loss[idx] = run_scenario(user, grid[gi], cons, cfg.link, cfg.traffic, sim).loss_rate;
    });

    CsvWriter w(out_path, "location,lat_deg,lon_deg,eat_deg,loss_rate,predicted_optimal_eat_deg");
    for (size_t li = 0; li < e.locations.size(); ++li) {
        const auto& loc = e.locations[li];
        const std::string pred =
            predicted[li].feasible ? fmt_g6(*predicted[li].optimal_eat_deg) : "nan";
        for (size_t gi = 0; gi < grid.size(); ++gi) {
            w.row({loc.name, fmt_g6(loc.lat_deg), fmt_g6(loc.lon_deg), fmt_g6(grid[gi]),
                   fmt_g6(loss[li * grid.size() + gi]), pred});
        }
    }
    finish(w, out_path);
}

void cmd_run(const ScenarioFile& cfg, const std::string& out_path, uint64_t seed) {
    const Constellation cons = make_constellation(cfg.constellation);
    const auto& e = cfg.experiment;
    SimConfig sim = cfg.sim;
    sim.seed = seed;

    const GeodeticPosition user{e.run_lat_deg, e.run_lon_deg, 0.0};
    const SimResult res = run_scenario(user, e.run_eat_deg, cons, cfg.link, cfg.traffic, sim);

    CsvWriter w(out_path, "packets_sent,packets_lost,loss_rate,ho_count,outage_time_s,mean_sinr_db");
    w.row({fmt_int(res.packets_sent), fmt_int(res.packets_lost), fmt_g6(res.loss_rate),
           fmt_int(res.ho_count()), fmt_g6(res.outage_time_s), fmt_g6(res.mean_sinr_db)});
    finish(w, out_path);

    const std::filesystem::path events_path =
        std::filesystem::path(out_path).parent_path() / "events.csv";
    CsvWriter ev(events_path.string(), "t_s,event_type,from_sat,to_sat,detail");
    for (const auto& entry : res.log) {
        ev.row({fmt_g6(entry.t_s), event_type_name(entry.type),
                entry.from_sat ? fmt_int(*entry.from_sat) : "",
                entry.to_sat ? fmt_int(*entry.to_sat) : "", fmt_g6(entry.detail_km)});
    }
    finish(ev, events_path.string());
}

}  // namespace leosim
