/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "beamsweep/timing_energy.hpp"

#include <cmath>
#include <stdexcept>

#include "beamsweep/beamspace.hpp"
#include "beamsweep/channel.hpp"
#include "beamsweep/detector.hpp"
#include "beamsweep/quantization.hpp"

namespace beamsweep {

int scan_periods_per_pass(const ArchitectureSpec& rx_arch, int n_dir_rx) {
    if (n_dir_rx < 1) {
        throw std::invalid_argument("scan_periods_per_pass: n_dir_rx must be >= 1");
    }
    switch (rx_arch.kind) {
        case ArchitectureKind::kAnalog:
            return n_dir_rx;
        case ArchitectureKind::kDigitalHighRes:
        case ArchitectureKind::kDigitalLowRes:
            return 1;
        case ArchitectureKind::kHybrid: {
            const int m = rx_arch.rf_chains;
            if (m < 1 || n_dir_rx % m != 0) {
                throw std::invalid_argument(
                    "scan_periods_per_pass: hybrid rf_chains must divide n_dir_rx");
            }
            return n_dir_rx / m;
        }
    }
    throw std::logic_error("unreachable architecture kind");
}

SweepSchedule make_sweep_schedule(const ScenarioConfig& cfg, const ArchitectureSpec& ue_arch) {
    SweepSchedule s;
    s.burst_period = cfg.ss_burst_period;
    s.burst_duration = cfg.ss_burst_duration;
    s.blocks_per_burst = cfg.ss_blocks_per_burst;
    s.gnb_directions = cfg.gnb_array.n_directions();
    if (s.gnb_directions > s.blocks_per_burst * cfg.gnb_rf_chains) {
        throw std::invalid_argument(
            "make_sweep_schedule: one SS burst cannot cover all gNB directions");
    }
    s.periods_per_pass = scan_periods_per_pass(ue_arch, cfg.ue_array.n_directions());
    return s;
}

DelayBounds discovery_delay_bounds(int sweeps, int periods_per_pass, Seconds burst_period,
                                   Seconds burst_duration, double pmd_target) {
    if (sweeps < 1 || periods_per_pass < 1) {
        throw std::invalid_argument("discovery_delay_bounds: sweeps and periods must be >= 1");
    }
    if (burst_duration.value > burst_period.value) {
        throw std::invalid_argument("discovery_delay_bounds: burst exceeds its period");
    }
    DelayBounds b;
    b.sweeps = sweeps;
    b.pmd_target = pmd_target;
    b.lower = static_cast<double>(sweeps - 1) * periods_per_pass * burst_period + burst_duration;
    b.upper = static_cast<double>(sweeps) * periods_per_pass * burst_period;
    return b;
}

const char* to_string(DutyModel model) {
    return model == DutyModel::kAlwaysOn ? "always-on" : "burst-only";
}

namespace {

// Receiver on-time within a delay, per duty model. Burst-only counts one
// burst duration per elapsed period (plus the final partial burst that
// completes detection on the lower bound).
Seconds on_time(Seconds delay, const SweepSchedule& schedule, DutyModel model) {
    if (model == DutyModel::kAlwaysOn) {
        return delay;
    }
    const double periods = delay.value / schedule.burst_period.value;
    const double whole = std::floor(periods + 1e-9);
    const double partial = std::min(1.0, (periods - whole) * schedule.burst_period.value /
                                             schedule.burst_duration.value);
    return Seconds{(whole + std::max(0.0, partial)) * schedule.burst_duration.value};
}

}  // namespace

EnergyReport discovery_energy(const PowerBreakdown& power, const DelayBounds& delay,
                              const SweepSchedule& schedule, DutyModel model) {
    EnergyReport r;
    r.kind = power.kind;
    r.n_rx = power.n_rx;
    r.adc_bits = power.adc_bits;
    r.sweeps = delay.sweeps;
    r.delay = delay;
    r.power = power.total;
    r.energy_lo_mj = energy_mj(power.total, on_time(delay.lower, schedule, model));
    r.energy_hi_mj = energy_mj(power.total, on_time(delay.upper, schedule, model));
    return r;
}

ArrayGeometry ue_array_for_size(int n_elements, double spacing_wavelengths) {
    if (n_elements < 1) {
        throw std::invalid_argument("ue_array_for_size: need at least one element");
    }
    // Squarest planar factorization: 4 -> 2x2, 8 -> 4x2, 16 -> 4x4.
    int n_el = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n_elements))));
    while (n_el > 1 && n_elements % n_el != 0) {
        --n_el;
    }
    return ArrayGeometry{n_elements / n_el, n_el, spacing_wavelengths};
}

std::vector<EnergyReport> energy_vs_array_size(const ScenarioConfig& cfg,
                                               const std::vector<int>& sizes,
                                               const std::vector<ArchitectureKind>& kinds,
                                               const EnergyScanParams& params,
                                               int forced_sweeps) {
    const Dbm rx_edge_power = cell_edge_rx_power_dbm(cfg);
    std::vector<EnergyReport> reports;
    reports.reserve(sizes.size() * kinds.size());

    for (const int size : sizes) {
        ScenarioConfig sized = cfg;
        sized.ue_array = ue_array_for_size(size, cfg.ue_array.spacing_wavelengths);
        validate(sized);
        const Db tx_gain = linear_to_db(sized.gnb_array.n_elements());
        const Db rx_gain = linear_to_db(sized.ue_array.n_elements());

        for (const ArchitectureKind kind : kinds) {
            ArchitectureSpec arch = default_architecture(kind, sized.gnb_rf_chains);
            if (kind == ArchitectureKind::kDigitalLowRes) {
                arch.adc_bits = params.low_res_adc_bits;
            }
            Db snr = detection_snr_db(params.omni_snr, tx_gain, rx_gain, sized.gnb_rf_chains,
                                      sized.system_bandwidth, sized.pss_bandwidth,
                                      params.bandwidth_adjustment);
            if (kind == ArchitectureKind::kDigitalLowRes) {
                snr = effective_snr_db(snr, gamma_for_bits(arch.adc_bits));
            }

            int sweeps = forced_sweeps;
            if (sweeps <= 0) {
                const DetectorCalibration cal =
                    calibrate_threshold(sized, sized.signal_dims(), arch.sampling_rate);
                const long l_eff = effective_beamspace_size(
                    arch, sized.gnb_array.n_directions(), sized.ue_array.n_directions());
                const auto k = sweeps_required(snr, cal, l_eff, params.pmd_target,
                                               params.detector_trials, params.k_max,
                                               sized.rng_seed, params.threads);
                if (!k.has_value()) {
                    throw std::runtime_error("energy_vs_array_size: P_MD target unreachable at " +
                                             std::string(to_string(kind)) + " size " +
                                             std::to_string(size));
                }
                sweeps = *k;
            }

            const SweepSchedule schedule = make_sweep_schedule(sized, arch);
            const DelayBounds delay =
                discovery_delay_bounds(sweeps, schedule.periods_per_pass, schedule.burst_period,
                                       schedule.burst_duration, params.pmd_target);
            const PowerBreakdown power =
                frontend_power(arch, sized.ue_array.n_elements(), rx_edge_power);
            reports.push_back(discovery_energy(power, delay, schedule, params.duty_model));
        }
    }
    return reports;
}

}  // namespace beamsweep
