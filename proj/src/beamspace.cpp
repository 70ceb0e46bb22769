/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "beamsweep/beamspace.hpp"

#include <cmath>
#include <stdexcept>

namespace beamsweep {

SteeringVector steering_vector(const ArrayGeometry& geometry, double azimuth_rad,
                               double elevation_rad) {
    if (geometry.n_az < 1 || geometry.n_el < 1) {
        throw std::invalid_argument("steering_vector: array dims must be >= 1");
    }
    SteeringVector sv;
    sv.azimuth_rad = azimuth_rad;
    sv.elevation_rad = elevation_rad;
    sv.spacing_wavelengths = geometry.spacing_wavelengths;
    sv.coeffs.reserve(static_cast<std::size_t>(geometry.n_elements()));

    const double two_pi_delta = 2.0 * M_PI * geometry.spacing_wavelengths;
    const double step_az = -two_pi_delta * std::cos(azimuth_rad);
    const double step_el = -two_pi_delta * std::cos(elevation_rad);
    for (int a = 0; a < geometry.n_az; ++a) {
        for (int e = 0; e < geometry.n_el; ++e) {
            const double phase = step_az * a + step_el * e;
            sv.coeffs.emplace_back(std::cos(phase), std::sin(phase));
        }
    }
    return sv;
}

std::vector<double> codebook_direction_cosines(int n_axis) {
    if (n_axis < 1) {
        throw std::invalid_argument("codebook_direction_cosines: n_axis must be >= 1");
    }
    std::vector<double> cosines(static_cast<std::size_t>(n_axis));
    for (int i = 0; i < n_axis; ++i) {
        cosines[static_cast<std::size_t>(i)] = -1.0 + 2.0 * i / n_axis;
    }
    return cosines;
}

Db aligned_bf_gain_db(const ArrayGeometry& tx, const ArrayGeometry& rx) {
    return linear_to_db(static_cast<double>(tx.n_elements())) +
           linear_to_db(static_cast<double>(rx.n_elements()));
}

long effective_beamspace_size(const ArchitectureSpec& rx_arch, int n_dir_tx, int n_dir_rx) {
    const long l = static_cast<long>(n_dir_tx) * n_dir_rx;
    switch (rx_arch.kind) {
        case ArchitectureKind::kAnalog:
            return l;
        case ArchitectureKind::kDigitalHighRes:
        case ArchitectureKind::kDigitalLowRes:
            return n_dir_tx;
        case ArchitectureKind::kHybrid: {
            const int m = rx_arch.rf_chains;
            if (m <= 1 || m >= n_dir_rx) {
                throw std::invalid_argument(
                    "hybrid receiver needs 1 < rf_chains < n_dir_rx");
            }
            if (n_dir_rx % m != 0) {
                throw std::invalid_argument(
                    "hybrid rf_chains must divide the receiver direction count");
            }
            return l / m;
        }
    }
    throw std::logic_error("unreachable architecture kind");
}

BeamspaceLayout make_beamspace_layout(const ArchitectureSpec& rx_arch, int n_dir_tx,
                                      int n_dir_rx, long true_direction) {
    BeamspaceLayout layout;
    layout.n_dir_tx = n_dir_tx;
    layout.n_dir_rx = n_dir_rx;
    layout.total_size = static_cast<long>(n_dir_tx) * n_dir_rx;
    layout.effective_size = effective_beamspace_size(rx_arch, n_dir_tx, n_dir_rx);
    if (true_direction < 0 || true_direction >= layout.total_size) {
        throw std::invalid_argument("true_direction out of range");
    }
    layout.true_direction = true_direction;
    return layout;
}

}  // namespace beamsweep
