/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <complex>
#include <vector>

#include "beamsweep/rng.hpp"
#include "beamsweep/units.hpp"

namespace beamsweep {

/// Additive distortion model of a low-resolution ADC: the output is the
/// input scaled by (1 - gamma) plus an independent Gaussian term whose
/// variance is gamma(1 - gamma) times the input power.
struct QuantizerModel {
    int bits = 4;
    double gamma = 0.0;
};

inline constexpr int kGammaTableMinBits = 1;
inline constexpr int kGammaTableMaxBits = 12;

/// Distortion factor of a minimum-MSE scalar quantizer for Gaussian input
/// at resolution q bits. Table entries were computed offline by
/// tools/gamma_table_gen.cpp (Lloyd-Max) and checked in.
double gamma_for_bits(int bits);

QuantizerModel quantizer_model(int bits);

/// SNR through the quantizer: (1 - gamma) snr / (1 + gamma snr).
/// Never exceeds the input SNR; saturates at (1 - gamma)/gamma.
double effective_snr(double snr_linear, double gamma);

/// effective_snr applied in dB space.
Db effective_snr_db(Db snr, double gamma);

/// Sample-domain form of the model: (1 - gamma) y + v with v circular
/// Gaussian sized from the vector's empirical mean power. Pure noise in,
/// (scaled) pure noise out, so null statistics are unaffected.
std::vector<std::complex<double>> quantize_samples(
    const std::vector<std::complex<double>>& y, double gamma, Rng& rng);

}  // namespace beamsweep
