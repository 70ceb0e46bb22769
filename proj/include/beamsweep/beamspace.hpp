/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <complex>
#include <vector>

#include "beamsweep/scenario.hpp"
#include "beamsweep/units.hpp"

namespace beamsweep {

/// Array response for a plane wave at (azimuth, elevation); every entry has
/// unit modulus and the vector has squared norm equal to the element count.
struct SteeringVector {
    std::vector<std::complex<double>> coeffs;
    double azimuth_rad = 0.0;
    double elevation_rad = 0.0;
    double spacing_wavelengths = 0.5;
};

/// The transmitter-beam x receiver-beam direction grid and how much of it
/// one observation covers for a given receiver architecture.
struct BeamspaceLayout {
    int n_dir_tx = 1;
    int n_dir_rx = 1;
    long total_size = 1;      // L = n_dir_tx * n_dir_rx
    long effective_size = 1;  // directions that must be visited sequentially
    long true_direction = 0;  // index of the aligned pair, in [0, total_size)
};

/// Uniform planar array response: per-axis phase progression
/// exp(-j 2 pi spacing n cos(angle)), combined across azimuth and elevation.
SteeringVector steering_vector(const ArrayGeometry& geometry, double azimuth_rad,
                               double elevation_rad);

/// cos(angle) grid for the sectorized beam codebook: uniformly spaced over
/// [-1, 1), one beam per element along the axis. At half-wavelength spacing
/// these beams are exactly orthogonal.
std::vector<double> codebook_direction_cosines(int n_axis);

/// Combined transmit and receive array gain when both sides are aligned
/// with the propagation path: 10log10(N_tx) + 10log10(N_rx).
Db aligned_bf_gain_db(const ArrayGeometry& tx, const ArrayGeometry& rx);

/// Number of sequential observations required to cover the beamspace.
/// Analog receivers see one direction per observation, digital receivers all
/// of them, hybrid receivers rf_chains at a time.
long effective_beamspace_size(const ArchitectureSpec& rx_arch, int n_dir_tx, int n_dir_rx);

BeamspaceLayout make_beamspace_layout(const ArchitectureSpec& rx_arch, int n_dir_tx,
                                      int n_dir_rx, long true_direction = 0);

}  // namespace beamsweep
