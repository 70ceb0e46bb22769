/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

// beamsweep: mmWave initial-access beam-discovery latency and energy
// simulator. Subcommands reproduce the front-end power table, the omni-SNR
// drop distribution, detector mis-detection curves, discovery-delay bounds
// and discovery-energy reports as CSV (or JSON with --format json).
//
// Exit codes: 0 success, 2 usage error, 3 invalid configuration,
// 4 I/O failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "beamsweep/beamspace.hpp"
#include "beamsweep/channel.hpp"
#include "beamsweep/csv.hpp"
#include "beamsweep/detector.hpp"
#include "beamsweep/quantization.hpp"
#include "beamsweep/rfpower.hpp"
#include "beamsweep/scenario.hpp"
#include "beamsweep/timing_energy.hpp"
#include "beamsweep/units.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitIo = 4;

using beamsweep::ArchitectureKind;

const std::vector<ArchitectureKind> kTableArchitectures = {
    ArchitectureKind::kAnalog,
    ArchitectureKind::kHybrid,
    ArchitectureKind::kDigitalHighRes,
    ArchitectureKind::kDigitalLowRes,
};

const std::vector<ArchitectureKind> kUeArchitectures = {
    ArchitectureKind::kAnalog,
    ArchitectureKind::kDigitalHighRes,
    ArchitectureKind::kDigitalLowRes,
};

struct GlobalOptions {
    std::string config_path;
    std::string format = "csv";
    std::string out_dir;
    std::optional<uint64_t> seed;
    int threads = 0;
};

int resolve_threads(int requested) {
    if (requested > 0) {
        return requested;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(8u, std::max(1u, hw)));
}

beamsweep::LoadedScenario resolve_scenario(const GlobalOptions& g) {
    beamsweep::LoadedScenario loaded;
    if (g.config_path.empty()) {
        loaded = beamsweep::parse_config("");
    } else {
        loaded = beamsweep::load_config(g.config_path);
    }
    if (g.seed.has_value()) {
        loaded.config.rng_seed = *g.seed;
        for (auto& p : loaded.provenance) {
            if (p.key == "rng_seed") {
                p.value = std::to_string(*g.seed);
                p.source = "flag";
            }
        }
    }
    return loaded;
}

// Writes the rendered table plus a run manifest. Without --out the table
// goes to stdout and the manifest to stderr so data stays pipeable.
void emit(const GlobalOptions& g, const std::string& subcommand, const beamsweep::Table& table,
          const beamsweep::LoadedScenario& scenario,
          const std::chrono::steady_clock::time_point& started, int argc, char** argv) {
    const std::string rendered = g.format == "json" ? table.to_json() : table.to_csv();

    nlohmann::json manifest;
    manifest["tool"] = "beamsweep";
    manifest["version"] = kVersion;
    manifest["subcommand"] = subcommand;
    manifest["seed"] = scenario.config.rng_seed;
    manifest["format"] = g.format;
    manifest["threads"] = resolve_threads(g.threads);
    manifest["argv"] = std::vector<std::string>(argv, argv + argc);
    nlohmann::json cfg_json;
    for (const auto& p : scenario.provenance) {
        cfg_json[p.key] = {{"value", p.value}, {"source", p.source}};
    }
    manifest["config"] = cfg_json;

    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started);
    manifest["duration_s"] = elapsed.count();

    if (g.out_dir.empty()) {
        std::cout << rendered;
        std::cerr << manifest.dump() << "\n";
        return;
    }
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(g.out_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory '" + g.out_dir + "'");
    }
    const fs::path data_path =
        fs::path(g.out_dir) / (subcommand + (g.format == "json" ? ".json" : ".csv"));
    const fs::path manifest_path = fs::path(g.out_dir) / (subcommand + "_manifest.json");
    manifest["outputs"] = {data_path.string()};
    {
        std::ofstream out(data_path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write '" + data_path.string() + "'");
        }
        out << rendered;
    }
    {
        std::ofstream out(manifest_path, std::ios::binary);
        if (!out) {
            throw std::runtime_error("cannot write '" + manifest_path.string() + "'");
        }
        out << manifest.dump(2) << "\n";
    }
    std::cout << data_path.string() << "\n";
}

beamsweep::Table run_power_table(const beamsweep::ScenarioConfig& cfg, int n_rx,
                                 int low_res_bits) {
    beamsweep::Table table(
        {"architecture", "n_rx", "adc_bits", "rffe_mw", "vga_mw", "adc_mw", "total_mw"});
    const beamsweep::Dbm rx_edge = beamsweep::cell_edge_rx_power_dbm(cfg);
    for (const ArchitectureKind kind : kTableArchitectures) {
        auto arch = beamsweep::default_architecture(kind, cfg.gnb_rf_chains);
        if (kind == ArchitectureKind::kDigitalLowRes) {
            arch.adc_bits = low_res_bits;
        }
        const auto p = beamsweep::frontend_power(arch, n_rx, rx_edge);
        table.add_row({std::string(beamsweep::to_string(kind)), static_cast<long>(p.n_rx),
                       static_cast<long>(p.adc_bits), p.rffe.value, p.vga.value, p.adc.value,
                       p.total.value});
    }
    return table;
}

beamsweep::Table run_snr_cdf(const beamsweep::ScenarioConfig& cfg, int threads) {
    const auto dist = beamsweep::snr_distribution(cfg, threads);
    beamsweep::Table table({"drop_id", "distance_m", "link_state", "pathloss_db", "snr_db"});
    long id = 0;
    for (const auto& drop : dist.drops()) {
        table.add_row({id++, drop.distance.value, std::string(to_string(drop.link_state)),
                       drop.pathloss.value, drop.omni_snr.value});
    }
    return table;
}

beamsweep::Table run_pmd_curve(const beamsweep::ScenarioConfig& cfg, ArchitectureKind kind,
                               double snr_start, double snr_stop, int snr_points,
                               const std::vector<int>& sweep_counts, long trials, int dims,
                               int threads) {
    const auto arch = beamsweep::default_architecture(kind, cfg.gnb_rf_chains);
    const auto cal = beamsweep::calibrate_threshold(cfg, dims, arch.sampling_rate);
    const long l_eff = beamsweep::effective_beamspace_size(arch, cfg.gnb_array.n_directions(),
                                                           cfg.ue_array.n_directions());
    beamsweep::Table table({"snr_db", "k", "n_trials", "pmd", "stderr", "threshold"});
    for (int i = 0; i < snr_points; ++i) {
        const double snr =
            snr_points == 1
                ? snr_start
                : snr_start + (snr_stop - snr_start) * static_cast<double>(i) / (snr_points - 1);
        for (const int k : sweep_counts) {
            const auto pt = beamsweep::simulate_misdetection(
                beamsweep::Db{snr}, k, cal, l_eff, trials, cfg.rng_seed, threads);
            table.add_row({snr, static_cast<long>(k), static_cast<long>(pt.n_trials), pt.pmd,
                           pt.std_error, pt.rho_threshold});
        }
    }
    return table;
}

struct OperatingPoint {
    std::string name;
    beamsweep::Db omni_snr;
};

std::vector<OperatingPoint> operating_points(const beamsweep::ScenarioConfig& cfg, int threads) {
    const auto dist = beamsweep::snr_distribution(cfg, threads);
    return {{"cell_edge", dist.cell_edge()}, {"median", dist.median()}};
}

int computed_sweeps(const beamsweep::ScenarioConfig& cfg, ArchitectureKind kind,
                    beamsweep::Db omni_snr, double pmd_target, long trials, int k_max,
                    int threads) {
    const auto arch = beamsweep::default_architecture(kind, cfg.gnb_rf_chains);
    beamsweep::Db snr = beamsweep::detection_snr_db(
        omni_snr, beamsweep::linear_to_db(cfg.gnb_array.n_elements()),
        beamsweep::linear_to_db(cfg.ue_array.n_elements()), cfg.gnb_rf_chains,
        cfg.system_bandwidth, cfg.pss_bandwidth);
    if (kind == ArchitectureKind::kDigitalLowRes) {
        snr = beamsweep::effective_snr_db(snr, beamsweep::gamma_for_bits(arch.adc_bits));
    }
    const auto cal = beamsweep::calibrate_threshold(cfg, cfg.signal_dims(), arch.sampling_rate);
    const long l_eff = beamsweep::effective_beamspace_size(arch, cfg.gnb_array.n_directions(),
                                                           cfg.ue_array.n_directions());
    const auto k = beamsweep::sweeps_required(snr, cal, l_eff, pmd_target, trials, k_max,
                                              cfg.rng_seed, threads);
    if (!k.has_value()) {
        throw std::runtime_error("P_MD target unreachable within k-max sweeps for " +
                                 std::string(beamsweep::to_string(kind)));
    }
    return *k;
}

beamsweep::Table run_delay_table(const beamsweep::ScenarioConfig& cfg,
                                 const std::vector<int>& k_edge, const std::vector<int>& k_median,
                                 double pmd_target, long trials, int k_max, int threads) {
    std::vector<OperatingPoint> points;
    const bool need_detector = k_edge.empty() || k_median.empty();
    if (need_detector) {
        points = operating_points(cfg, threads);
    } else {
        points = {{"cell_edge", beamsweep::Db{0.0}}, {"median", beamsweep::Db{0.0}}};
    }
    beamsweep::Table table({"architecture", "operating_point", "k", "periods_per_pass",
                            "delay_lo_ms", "delay_hi_ms"});
    for (std::size_t p = 0; p < points.size(); ++p) {
        const std::vector<int>& forced = p == 0 ? k_edge : k_median;
        for (std::size_t a = 0; a < kUeArchitectures.size(); ++a) {
            const ArchitectureKind kind = kUeArchitectures[a];
            const int k = forced.empty()
                              ? computed_sweeps(cfg, kind, points[p].omni_snr, pmd_target, trials,
                                                k_max, threads)
                              : forced[a];
            const auto arch = beamsweep::default_architecture(kind, cfg.gnb_rf_chains);
            const auto schedule = beamsweep::make_sweep_schedule(cfg, arch);
            const auto bounds = beamsweep::discovery_delay_bounds(
                k, schedule.periods_per_pass, schedule.burst_period, schedule.burst_duration,
                pmd_target);
            table.add_row({std::string(beamsweep::to_string(kind)), points[p].name,
                           static_cast<long>(k), static_cast<long>(schedule.periods_per_pass),
                           bounds.lower.value * 1e3, bounds.upper.value * 1e3});
        }
    }
    return table;
}

beamsweep::Table run_energy_report(const beamsweep::ScenarioConfig& cfg,
                                   const std::vector<int>& sizes,
                                   const std::vector<int>& k_edge,
                                   const std::vector<int>& k_median, double pmd_target,
                                   long trials, int k_max, beamsweep::DutyModel duty,
                                   int low_res_bits, int threads) {
    const auto points = operating_points(cfg, threads);
    beamsweep::Table table({"architecture", "operating_point", "n_rx", "adc_bits", "k",
                            "delay_lo_ms", "delay_hi_ms", "power_mw", "energy_lo_mj",
                            "energy_hi_mj"});
    for (std::size_t p = 0; p < points.size(); ++p) {
        const std::vector<int>& forced = p == 0 ? k_edge : k_median;
        beamsweep::EnergyScanParams params;
        params.omni_snr = points[p].omni_snr;
        params.pmd_target = pmd_target;
        params.detector_trials = trials;
        params.k_max = k_max;
        params.duty_model = duty;
        params.low_res_adc_bits = low_res_bits;
        params.threads = threads;
        for (std::size_t a = 0; a < kUeArchitectures.size(); ++a) {
            const std::vector<ArchitectureKind> one_kind = {kUeArchitectures[a]};
            const int forced_k = forced.empty() ? 0 : forced[a];
            const auto reports =
                beamsweep::energy_vs_array_size(cfg, sizes, one_kind, params, forced_k);
            for (const auto& r : reports) {
                table.add_row({std::string(beamsweep::to_string(r.kind)), points[p].name,
                               static_cast<long>(r.n_rx), static_cast<long>(r.adc_bits),
                               static_cast<long>(r.sweeps), r.delay.lower.value * 1e3,
                               r.delay.upper.value * 1e3, r.power.value, r.energy_lo_mj,
                               r.energy_hi_mj});
            }
        }
    }
    return table;
}

beamsweep::Table run_validate_config(const beamsweep::LoadedScenario& scenario) {
    beamsweep::Table table({"key", "value", "source"});
    for (const auto& p : scenario.provenance) {
        table.add_row({p.key, p.value, p.source});
    }
    return table;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"beamsweep: mmWave initial-access beam-discovery latency and energy simulator"};
    app.set_version_flag("--version", kVersion);
    app.footer(
        "Exit codes: 0 success, 2 usage error, 3 invalid configuration, 4 I/O failure.\n"
        "The " +
        std::string(beamsweep::kSeedEnvVar) +
        " environment variable overrides the config rng_seed; --seed overrides both.");

    GlobalOptions g;
    app.add_option("--config", g.config_path, "Scenario config file (key = value format)");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "Override the scenario rng_seed");
    app.add_option("--out", g.out_dir, "Write outputs (and run manifest) into this directory");
    app.add_option("--threads", g.threads, "Worker threads (0 = auto); results do not depend on this");

    // power-table
    int pt_n_rx = 16;
    int pt_low_bits = 4;
    auto* pt = app.add_subcommand("power-table", "Front-end DC power per architecture");
    pt->add_option("--n-rx", pt_n_rx, "Receiver array size")->check(CLI::PositiveNumber);
    pt->add_option("--adc-bits", pt_low_bits, "Low-resolution digital ADC bits")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();

    // snr-cdf
    auto* sc = app.add_subcommand("snr-cdf", "Omni-directional SNR of random user drops");

    // pmd-curve
    std::string pc_arch = "analog";
    double pc_snr_start = 6.0;
    double pc_snr_stop = 24.0;
    int pc_snr_points = 10;
    std::vector<int> pc_k = {1, 2, 3};
    long pc_trials = 10000;
    int pc_dims = 0;
    int pc_n_rx = 0;
    auto* pc = app.add_subcommand("pmd-curve", "Mis-detection probability vs detection SNR");
    pc->add_option("--arch", pc_arch, "Receiver architecture")
        ->check(CLI::IsMember({"analog", "hybrid", "digital-high", "digital-low"}))
        ->capture_default_str();
    pc->add_option("--n-rx", pc_n_rx, "Override the UE array size (0 = from config)");
    pc->add_option("--snr-start", pc_snr_start, "Grid start, post-BF dB")->capture_default_str();
    pc->add_option("--snr-stop", pc_snr_stop, "Grid stop, post-BF dB")->capture_default_str();
    pc->add_option("--snr-points", pc_snr_points, "Grid size")->check(CLI::PositiveNumber);
    pc->add_option("--k-list", pc_k, "Sweep counts to evaluate")->delimiter(',');
    pc->add_option("--trials", pc_trials, "Monte Carlo trials per point")
        ->check(CLI::PositiveNumber);
    pc->add_option("--dims", pc_dims, "Signal-space dimension override (default: PSS sub-carriers)");

    // delay-table
    std::vector<int> dt_k_edge;
    std::vector<int> dt_k_median;
    double dt_pmd_target = 0.01;
    long dt_trials = 4000;
    int dt_k_max = 40;
    auto* dt = app.add_subcommand("delay-table", "Discovery-delay bounds per architecture");
    dt->add_option("--k-edge", dt_k_edge,
                   "Cell-edge sweep counts for analog,digital-high,digital-low (skips detector)")
        ->delimiter(',')
        ->expected(3);
    dt->add_option("--k-median", dt_k_median, "Median-user sweep counts (same order)")
        ->delimiter(',')
        ->expected(3);
    dt->add_option("--pmd-target", dt_pmd_target, "Mis-detection target for computed K")
        ->capture_default_str();
    dt->add_option("--trials", dt_trials, "Detector trials for computed K")
        ->check(CLI::PositiveNumber);
    dt->add_option("--k-max", dt_k_max, "Sweep-count search limit")->check(CLI::PositiveNumber);

    // energy-report
    std::vector<int> er_sizes = {4, 8, 16};
    std::vector<int> er_k_edge;
    std::vector<int> er_k_median;
    double er_pmd_target = 0.01;
    long er_trials = 4000;
    int er_k_max = 40;
    std::string er_duty = "always-on";
    auto* er = app.add_subcommand("energy-report", "Discovery energy vs UE array size");
    er->add_option("--sizes", er_sizes, "UE array sizes")->delimiter(',');
    er->add_option("--k-edge", er_k_edge,
                   "Cell-edge sweep counts for analog,digital-high,digital-low (skips detector)")
        ->delimiter(',')
        ->expected(3);
    er->add_option("--k-median", er_k_median, "Median-user sweep counts (same order)")
        ->delimiter(',')
        ->expected(3);
    er->add_option("--pmd-target", er_pmd_target, "Mis-detection target for computed K")
        ->capture_default_str();
    er->add_option("--trials", er_trials, "Detector trials per sweep count")
        ->check(CLI::PositiveNumber);
    er->add_option("--k-max", er_k_max, "Sweep-count search limit")->check(CLI::PositiveNumber);
    er->add_option("--duty-model", er_duty, "Receiver on-time model")
        ->check(CLI::IsMember({"always-on", "burst-only"}))
        ->capture_default_str();
    int er_low_bits = 4;
    er->add_option("--adc-bits", er_low_bits, "Low-resolution digital ADC bits")
        ->check(CLI::Range(1, 12))
        ->capture_default_str();

    // validate-config
    auto* vc = app.add_subcommand("validate-config", "Check a config and print its provenance");

    for (auto* sub : {pt, sc, pc, dt, er, vc}) {
        sub->fallthrough();
    }
    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    try {
        const beamsweep::LoadedScenario scenario = resolve_scenario(g);
        const beamsweep::ScenarioConfig& cfg = scenario.config;
        const int threads = resolve_threads(g.threads);

        beamsweep::Table table({"?"});
        std::string name;
        if (pt->parsed()) {
            name = "power-table";
            table = run_power_table(cfg, pt_n_rx, pt_low_bits);
        } else if (sc->parsed()) {
            name = "snr-cdf";
            table = run_snr_cdf(cfg, threads);
        } else if (pc->parsed()) {
            name = "pmd-curve";
            const int dims = pc_dims > 0 ? pc_dims : cfg.signal_dims();
            beamsweep::ScenarioConfig pc_cfg = cfg;
            if (pc_n_rx > 0) {
                pc_cfg.ue_array =
                    beamsweep::ue_array_for_size(pc_n_rx, cfg.ue_array.spacing_wavelengths);
                beamsweep::validate(pc_cfg);
            }
            table = run_pmd_curve(pc_cfg, beamsweep::architecture_from_string(pc_arch),
                                  pc_snr_start, pc_snr_stop, pc_snr_points, pc_k, pc_trials,
                                  dims, threads);
        } else if (dt->parsed()) {
            name = "delay-table";
            table = run_delay_table(cfg, dt_k_edge, dt_k_median, dt_pmd_target, dt_trials,
                                    dt_k_max, threads);
        } else if (er->parsed()) {
            name = "energy-report";
            table = run_energy_report(cfg, er_sizes, er_k_edge, er_k_median, er_pmd_target,
                                      er_trials, er_k_max,
                                      er_duty == "burst-only" ? beamsweep::DutyModel::kBurstOnly
                                                              : beamsweep::DutyModel::kAlwaysOn,
                                      er_low_bits, threads);
        } else if (vc->parsed()) {
            name = "validate-config";
            table = run_validate_config(scenario);
        }
        emit(g, name, table, scenario, started, argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
