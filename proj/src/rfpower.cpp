/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "beamsweep/rfpower.hpp"

#include <cmath>
#include <stdexcept>

namespace beamsweep {

MilliWatts lna_power_mw(Db gain, Db noise_figure, double fom_per_mw) {
    if (noise_figure.value <= 0.0) {
        throw std::invalid_argument("lna_power_mw: noise figure must be > 0 dB");
    }
    if (fom_per_mw <= 0.0) {
        throw std::invalid_argument("lna_power_mw: FoM must be > 0");
    }
    const double nf_lin = db_to_linear(noise_figure);
    return MilliWatts{db_to_linear(gain) / (fom_per_mw * (nf_lin - 1.0))};
}

MilliWatts adc_power_mw(double fom_j_per_step, Hertz sampling_rate, int bits) {
    if (bits < 1) {
        throw std::invalid_argument("adc_power_mw: bits must be >= 1");
    }
    if (fom_j_per_step <= 0.0 || sampling_rate.value <= 0.0) {
        throw std::invalid_argument("adc_power_mw: FoM and sampling rate must be > 0");
    }
    const double watts = fom_j_per_step * sampling_rate.value * std::pow(2.0, bits);
    return MilliWatts{watts * 1e3};
}

Db vga_max_gain_db(const ArchitectureSpec& arch, int n_rx, Dbm rx_power_at_dmax) {
    if (n_rx < 1) {
        throw std::invalid_argument("vga_max_gain_db: n_rx must be >= 1");
    }
    const bool has_phase_shifters =
        arch.kind == ArchitectureKind::kAnalog || arch.kind == ArchitectureKind::kHybrid;
    // Net amplification in front of the mixer. With phase shifters the LNA
    // runs at gain + IL_PS but the shifter eats IL_PS back.
    const Db net_lna_gain = has_phase_shifters
                                ? (arch.lna_gain + arch.ps_insertion_loss) - arch.ps_insertion_loss
                                : arch.lna_gain;
    const double gain = arch.baseband_out.value - 10.0 * std::log10(n_rx) +
                        arch.mixer_insertion_loss.value - net_lna_gain.value -
                        rx_power_at_dmax.value;
    return Db{gain};
}

MilliWatts vga_power_mw(Db gain, Hertz sampling_rate, double fom, double area_mm2) {
    if (fom <= 0.0 || area_mm2 <= 0.0) {
        throw std::invalid_argument("vga_power_mw: FoM and active area must be > 0");
    }
    const double fs_ghz = sampling_rate.value / 1e9;
    return MilliWatts{gain.value * fs_ghz / (fom * area_mm2)};
}

PowerBreakdown frontend_power(const ArchitectureSpec& arch, int n_rx, Dbm rx_power_at_dmax) {
    if (n_rx < 1) {
        throw std::invalid_argument("frontend_power: n_rx must be >= 1");
    }
    const bool has_phase_shifters =
        arch.kind == ArchitectureKind::kAnalog || arch.kind == ArchitectureKind::kHybrid;
    const Db lna_gain =
        has_phase_shifters ? arch.lna_gain + arch.ps_insertion_loss : arch.lna_gain;
    const MilliWatts p_lna = lna_power_mw(lna_gain, arch.lna_noise_figure, arch.lna_fom_per_mw);
    const MilliWatts p_adc_pair =
        2.0 * adc_power_mw(arch.adc_fom_j_per_step, arch.sampling_rate, arch.adc_bits);
    const MilliWatts p_vga = vga_power_mw(vga_max_gain_db(arch, n_rx, rx_power_at_dmax),
                                          arch.sampling_rate, arch.vga_fom,
                                          arch.vga_active_area_mm2);

    PowerBreakdown out;
    out.kind = arch.kind;
    out.n_rx = n_rx;
    out.adc_bits = arch.adc_bits;
    switch (arch.kind) {
        case ArchitectureKind::kAnalog:
            out.rffe = static_cast<double>(n_rx) * p_lna + arch.lo_power;
            out.vga = p_vga;
            out.adc = p_adc_pair;
            break;
        case ArchitectureKind::kHybrid: {
            const int m = arch.rf_chains;
            if (m < 1 || m >= n_rx) {
                throw std::invalid_argument("frontend_power: hybrid needs 1 <= rf_chains < n_rx");
            }
            out.rffe = static_cast<double>(n_rx) * p_lna + static_cast<double>(m) * arch.lo_power;
            out.vga = static_cast<double>(m) * p_vga;
            out.adc = static_cast<double>(m) * p_adc_pair;
            break;
        }
        case ArchitectureKind::kDigitalHighRes:
        case ArchitectureKind::kDigitalLowRes:
            out.rffe = static_cast<double>(n_rx) * (p_lna + arch.lo_power);
            out.vga = static_cast<double>(n_rx) * p_vga;
            out.adc = static_cast<double>(n_rx) * p_adc_pair;
            break;
    }
    out.total = out.rffe + out.vga + out.adc;
    return out;
}

}  // namespace beamsweep
