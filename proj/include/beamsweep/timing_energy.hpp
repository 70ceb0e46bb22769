/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <vector>

#include "beamsweep/rfpower.hpp"
#include "beamsweep/scenario.hpp"
#include "beamsweep/units.hpp"

namespace beamsweep {

/// How the SS bursts tile the search: the gNB covers all of its directions
/// within each burst, so a full pass over the effective beamspace takes
/// `periods_per_pass` burst periods (receiver-architecture dependent).
struct SweepSchedule {
    Seconds burst_period{20e-3};
    Seconds burst_duration{5e-3};
    int blocks_per_burst = 32;
    int gnb_directions = 64;
    int periods_per_pass = 1;
};

/// Burst periods needed to cover all receive directions once:
/// analog -> n_dir_rx, digital -> 1, hybrid -> n_dir_rx / rf_chains.
int scan_periods_per_pass(const ArchitectureSpec& rx_arch, int n_dir_rx);

SweepSchedule make_sweep_schedule(const ScenarioConfig& cfg, const ArchitectureSpec& ue_arch);

/// Discovery-delay bracket after K sweep cycles:
///   lower = (K - 1) * periods * T + T_ssb
///   upper = K * periods * T
struct DelayBounds {
    Seconds lower{0.0};
    Seconds upper{0.0};
    int sweeps = 1;
    double pmd_target = 0.01;
};

DelayBounds discovery_delay_bounds(int sweeps, int periods_per_pass, Seconds burst_period,
                                   Seconds burst_duration, double pmd_target = 0.01);

enum class DutyModel {
    kAlwaysOn,   // front-end powered for the whole discovery delay
    kBurstOnly,  // powered only while an SS burst is on the air
};

const char* to_string(DutyModel model);

/// Energy drawn by one front-end over the discovery-delay bracket.
struct EnergyReport {
    ArchitectureKind kind = ArchitectureKind::kAnalog;
    int n_rx = 1;
    int adc_bits = 10;
    int sweeps = 1;
    DelayBounds delay;
    MilliWatts power{0.0};
    double energy_lo_mj = 0.0;
    double energy_hi_mj = 0.0;
};

EnergyReport discovery_energy(const PowerBreakdown& power, const DelayBounds& delay,
                              const SweepSchedule& schedule,
                              DutyModel model = DutyModel::kAlwaysOn);

/// Full latency/energy pipeline inputs for one operating point (for
/// example the cell-edge or median omni SNR).
struct EnergyScanParams {
    Db omni_snr{0.0};
    double pmd_target = 0.01;
    long detector_trials = 4000;
    int k_max = 40;
    bool bandwidth_adjustment = true;
    DutyModel duty_model = DutyModel::kAlwaysOn;
    int low_res_adc_bits = 4;  // resolution of the low-res digital receiver
    int threads = 1;
};

/// Recompute sweeps, delay, power and energy for each (architecture, UE
/// array size) pair. Sizes map to planar layouts 4 -> 2x2, 8 -> 4x2,
/// 16 -> 4x4. Low-resolution receivers take the quantizer SNR penalty
/// before the detector runs. If `forced_sweeps` is positive it bypasses the
/// detector (used to reproduce published delay tables exactly).
std::vector<EnergyReport> energy_vs_array_size(const ScenarioConfig& cfg,
                                               const std::vector<int>& sizes,
                                               const std::vector<ArchitectureKind>& kinds,
                                               const EnergyScanParams& params,
                                               int forced_sweeps = 0);

/// Planar layout used for a UE array of `n_elements` antennas.
ArrayGeometry ue_array_for_size(int n_elements, double spacing_wavelengths = 0.5);

}  // namespace beamsweep
