/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include "beamsweep/scenario.hpp"
#include "beamsweep/units.hpp"

namespace beamsweep {

/// Per-component DC power of one receiver front-end.
struct PowerBreakdown {
    ArchitectureKind kind = ArchitectureKind::kAnalog;
    int n_rx = 1;
    int adc_bits = 10;
    MilliWatts rffe{0.0};  // LNAs plus local oscillators
    MilliWatts vga{0.0};
    MilliWatts adc{0.0};
    MilliWatts total{0.0};
};

/// LNA DC power: linear(gain) / (fom * (linear(NF) - 1)). Gains that must
/// also cover phase-shifter insertion loss are passed in already raised.
MilliWatts lna_power_mw(Db gain, Db noise_figure, double fom_per_mw);

/// One ADC: fom * F_s * 2^bits. A front-end always uses these in I/Q pairs.
MilliWatts adc_power_mw(double fom_j_per_step, Hertz sampling_rate, int bits);

/// Gain-control headroom the VGA must provide at the cell edge.
/// Analog and hybrid paths subtract the net LNA gain (PS-compensated gain
/// minus the loss itself); digital paths subtract the plain LNA gain.
/// Either way the subtracted term is the same number, but both routes are
/// kept explicit to mirror the circuit.
Db vga_max_gain_db(const ArchitectureSpec& arch, int n_rx, Dbm rx_power_at_dmax);

/// VGA DC power: gain[dB] * F_s[GHz] / (fom * area[mm^2]). The dB-times-GHz
/// form is what the published component survey uses; it is reproduced as-is.
MilliWatts vga_power_mw(Db gain, Hertz sampling_rate, double fom, double area_mm2);

/// Total front-end power:
///   analog:  N_RX * P_LNA + P_LO + P_ADCpair + P_VGA
///   digital: N_RX * (P_LNA + P_LO + P_ADCpair + P_VGA)
///   hybrid:  N_RX * P_LNA + M * (P_LO + P_ADCpair + P_VGA)
PowerBreakdown frontend_power(const ArchitectureSpec& arch, int n_rx, Dbm rx_power_at_dmax);

}  // namespace beamsweep
