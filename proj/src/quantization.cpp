/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "beamsweep/quantization.hpp"

#include <cmath>
#include <stdexcept>

namespace beamsweep {

namespace {

// Generated by tools/gamma_table_gen.cpp; do not edit by hand.
constexpr double kGammaTable[] = {
    3.6338022763e-01,  // q = 1
    1.1748184783e-01,  // q = 2
    3.4547760789e-02,  // q = 3
    9.5010080082e-03,  // q = 4
    2.5046683557e-03,  // q = 5
    6.4423966539e-04,  // q = 6
    1.6347823054e-04,  // q = 7
    4.1185088977e-05,  // q = 8
    1.0336876572e-05,  // q = 9
    2.5894051028e-06,  // q = 10
    6.4800814348e-07,  // q = 11
    1.6208473053e-07,  // q = 12
};

}  // namespace

double gamma_for_bits(int bits) {
    if (bits < kGammaTableMinBits || bits > kGammaTableMaxBits) {
        throw std::invalid_argument("gamma_for_bits: bits must be in [1, 12]");
    }
    return kGammaTable[bits - 1];
}

QuantizerModel quantizer_model(int bits) { return QuantizerModel{bits, gamma_for_bits(bits)}; }

double effective_snr(double snr_linear, double gamma) {
    if (snr_linear < 0.0) {
        throw std::invalid_argument("effective_snr: SNR must be >= 0");
    }
    if (gamma < 0.0 || gamma >= 1.0) {
        throw std::invalid_argument("effective_snr: gamma must be in [0, 1)");
    }
    return (1.0 - gamma) * snr_linear / (1.0 + gamma * snr_linear);
}

Db effective_snr_db(Db snr, double gamma) {
    return linear_to_db(effective_snr(db_to_linear(snr), gamma));
}

std::vector<std::complex<double>> quantize_samples(const std::vector<std::complex<double>>& y,
                                                   double gamma, Rng& rng) {
    if (gamma < 0.0 || gamma >= 1.0) {
        throw std::invalid_argument("quantize_samples: gamma must be in [0, 1)");
    }
    if (gamma == 0.0 || y.empty()) {
        return y;
    }
    double power = 0.0;
    for (const auto& s : y) {
        power += std::norm(s);
    }
    power /= static_cast<double>(y.size());

    const double sigma_q = std::sqrt(gamma * (1.0 - gamma) * power);
    std::vector<std::complex<double>> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        out[i] = (1.0 - gamma) * y[i] + sigma_q * rng.cnormal();
    }
    return out;
}

}  // namespace beamsweep
