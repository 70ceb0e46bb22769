/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "beamsweep/units.hpp"

namespace beamsweep {

/// Uniform planar array. The sectorized beamspace serves exactly one
/// direction per element, so the direction count equals the element count.
struct ArrayGeometry {
    int n_az = 1;
    int n_el = 1;
    double spacing_wavelengths = 0.5;

    int n_elements() const { return n_az * n_el; }
    int n_directions() const { return n_elements(); }
};

enum class ArchitectureKind {
    kAnalog,
    kHybrid,
    kDigitalHighRes,
    kDigitalLowRes,
};

const char* to_string(ArchitectureKind kind);
ArchitectureKind architecture_from_string(const std::string& name);

/// Receiver front-end hardware description: which beamforming scheme plus
/// the component parameters that drive the DC power model.
struct ArchitectureSpec {
    ArchitectureKind kind = ArchitectureKind::kAnalog;
    int rf_chains = 1;  // M; meaningful for hybrid only
    int adc_bits = 10;
    Db lna_gain{10.0};
    Db lna_noise_figure{3.0};
    double lna_fom_per_mw = 6.5;
    Db ps_insertion_loss{10.0};
    Db mixer_insertion_loss{6.0};
    double adc_fom_j_per_step = 65e-15;
    double vga_fom = 5280.0;
    double vga_active_area_mm2 = 0.01;
    MilliWatts lo_power{10.0};
    Dbm baseband_out{10.0};
    Hertz sampling_rate{1e9};
};

// Effective ADC figure of merit that reproduces the published power table,
// and the as-reported figure of the 4-bit flash part it was taken from.
// The two differ slightly; both are available.
inline constexpr double kAdcFomEffectiveJPerStep = 65e-15;
inline constexpr double kAdcFomFlashReportedJPerStep = 67.6e-15;

/// Hardware preset for one of the four receiver architectures.
/// `rf_chains` is only consulted for the hybrid kind.
ArchitectureSpec default_architecture(ArchitectureKind kind, int rf_chains = 2);

/// Every tunable of a simulation run. Immutable after validation; a config
/// plus its rng_seed pins all Monte Carlo outputs bit-exactly.
struct ScenarioConfig {
    Meters cell_radius{100.0};
    Dbm tx_power{30.0};
    Dbm eirp{43.0};  // used only for the VGA link-budget check
    Db ue_noise_figure{7.0};
    double thermal_noise_dbm_per_hz = -174.0;
    Hertz carrier_freq{28e9};
    Hertz system_bandwidth{400e6};
    Seconds pss_duration{8.91e-6};
    Hertz pss_bandwidth{15.24e6};
    Hertz subcarrier_spacing{120e3};
    Seconds ss_burst_period{20e-3};
    Seconds ss_burst_duration{5e-3};
    int ss_blocks_per_burst = 32;
    double fa_rate_per_cycle = 0.01;
    int n_pss_sequences = 3;
    int n_freq_offset_hyp = 3;
    ArrayGeometry gnb_array{8, 8, 0.5};
    ArrayGeometry ue_array{4, 4, 0.5};
    int gnb_rf_chains = 2;
    double lo_error_ppm = 10.0;
    double max_speed_kmh = 30.0;
    long n_drops = 10000;
    uint64_t rng_seed = 1;

    /// PSS degrees of freedom: the sub-carrier count of the PSS band.
    int signal_dims() const {
        return static_cast<int>(pss_bandwidth.value / subcarrier_spacing.value + 0.5);
    }
};

/// Where a config value came from after load_config resolved it.
struct ConfigProvenance {
    std::string key;
    std::string value;
    std::string source;  // "file", "default" or "env"
};

struct LoadedScenario {
    ScenarioConfig config;
    std::vector<ConfigProvenance> provenance;
};

/// The built-in defaults above, validated.
ScenarioConfig default_config();

/// Throws std::invalid_argument naming the offending key if any invariant
/// fails.
void validate(const ScenarioConfig& cfg);

/// Parse the flat key-value config format (see docs/config_format.md).
/// Missing keys fall back to defaults and are recorded in the provenance
/// log; unknown keys are hard errors. BEAMSWEEP_SEED in the environment
/// overrides rng_seed.
LoadedScenario load_config(const std::string& path);

/// Same as load_config but from an in-memory string (used by tests).
LoadedScenario parse_config(const std::string& text);

/// Emit the config in the exact format load_config parses.
std::string serialize_config(const ScenarioConfig& cfg);

/// Environment variable consulted by load_config for the seed override.
inline constexpr const char* kSeedEnvVar = "BEAMSWEEP_SEED";

}  // namespace beamsweep
