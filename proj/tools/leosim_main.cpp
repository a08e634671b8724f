#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "leosim/experiments.hpp"

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_path;
    int threads = 1;
    uint64_t seed = 0;
};

void add_common(CLI::App* sub, CommonOpts& opts, const std::string& default_out) {
    sub->add_option("--config", opts.config_path, "Scenario config file")->required();
    opts.out_path = default_out;
    sub->add_option("--out", opts.out_path, "Output CSV path");
    sub->add_option("--threads", opts.threads, "Worker threads for independent rows");
    sub->add_option("--seed", opts.seed, "Seed for jittered packet scheduling");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deterministic LEO direct-to-device coverage and handover simulator"};
    app.require_subcommand(0, 1);

    bool show_defaults = false;
    app.add_flag("--print-defaults", show_defaults, "Print the default config and exit");

    CommonOpts sweep_opts, compare_opts, ucurve_opts, run_opts;
    CLI::App* sweep = app.add_subcommand(
        "eat-sweep", "Optimal elevation threshold vs latitude (writes eat_sweep.csv)");
    add_common(sweep, sweep_opts, "eat_sweep.csv");
    CLI::App* compare = app.add_subcommand(
        "loss-compare", "Packet loss under fixed vs optimized thresholds (writes loss_compare.csv)");
    add_common(compare, compare_opts, "loss_compare.csv");
    CLI::App* ucurve = app.add_subcommand(
        "u-curve", "Loss vs threshold at the configured probe locations (writes u_curve.csv)");
    add_common(ucurve, ucurve_opts, "u_curve.csv");
    CLI::App* run = app.add_subcommand(
        "run", "Single scenario run (writes a summary CSV plus events.csv)");
    add_common(run, run_opts, "run.csv");

    CLI11_PARSE(app, argc, argv);

    if (show_defaults) {
        std::cout << leosim::print_defaults();
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return 1;
    }

    try {
        if (sweep->parsed()) {
            const auto cfg = leosim::parse_config(sweep_opts.config_path);
            leosim::cmd_eat_sweep(cfg, sweep_opts.out_path, sweep_opts.threads);
        } else if (compare->parsed()) {
            const auto cfg = leosim::parse_config(compare_opts.config_path);
            leosim::cmd_loss_compare(cfg, compare_opts.out_path, compare_opts.threads,
                                     compare_opts.seed);
        } else if (ucurve->parsed()) {
            const auto cfg = leosim::parse_config(ucurve_opts.config_path);
            leosim::cmd_u_curve(cfg, ucurve_opts.out_path, ucurve_opts.threads, ucurve_opts.seed);
        } else if (run->parsed()) {
            const auto cfg = leosim::parse_config(run_opts.config_path);
            leosim::cmd_run(cfg, run_opts.out_path, run_opts.seed);
        }
    } catch (const leosim::ConfigError& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 0;
}
