/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <cmath>
#include <stdexcept>
#include <complex>

#include "beamsweep/beamspace.hpp"
#include "beamsweep/rng.hpp"
#include "doctest.h"

using namespace beamsweep;

namespace {

std::complex<double> inner(const SteeringVector& a, const SteeringVector& b) {
    std::complex<double> s{0.0, 0.0};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        s += std::conj(a.coeffs[i]) * b.coeffs[i];
    }
    return s;
}

}  // namespace

TEST_CASE("single element array responds with [1]") {
    const auto sv = steering_vector(ArrayGeometry{1, 1, 0.5}, 0.3, 1.2);
    REQUIRE(sv.coeffs.size() == 1);
    CHECK(std::abs(sv.coeffs[0] - std::complex<double>{1.0, 0.0}) < 1e-15);
}

TEST_CASE("broadside arrival gives the all-ones vector") {
    const auto sv = steering_vector(ArrayGeometry{4, 1, 0.5}, M_PI / 2.0, M_PI / 2.0);
    REQUIRE(sv.coeffs.size() == 4);
    for (const auto& c : sv.coeffs) {
        CHECK(std::abs(c - std::complex<double>{1.0, 0.0}) < 1e-12);
    }
}

TEST_CASE("steering entries have unit modulus and the norm is the element count") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const ArrayGeometry g{1 + static_cast<int>(rng.next_u64() % 8),
                              1 + static_cast<int>(rng.next_u64() % 8), 0.5};
        const double az = rng.uniform() * M_PI;
        const double el = rng.uniform() * M_PI;
        const auto sv = steering_vector(g, az, el);
        double norm2 = 0.0;
        for (const auto& c : sv.coeffs) {
            CHECK(std::abs(c) == doctest::Approx(1.0).epsilon(1e-12));
            norm2 += std::norm(c);
        }
        CHECK(norm2 == doctest::Approx(static_cast<double>(g.n_elements())).epsilon(1e-12));
    }
}

TEST_CASE("aligned beamforming gain in dB") {
    CHECK(aligned_bf_gain_db(ArrayGeometry{1, 1, 0.5}, ArrayGeometry{1, 1, 0.5}).value ==
          doctest::Approx(0.0));
    CHECK(aligned_bf_gain_db(ArrayGeometry{8, 8, 0.5}, ArrayGeometry{4, 4, 0.5}).value ==
          doctest::Approx(30.1030).epsilon(1e-5));
    // Additivity across sides.
    const double both = aligned_bf_gain_db(ArrayGeometry{8, 8, 0.5}, ArrayGeometry{4, 4, 0.5}).value;
    const double tx = aligned_bf_gain_db(ArrayGeometry{8, 8, 0.5}, ArrayGeometry{1, 1, 0.5}).value;
    const double rx = aligned_bf_gain_db(ArrayGeometry{1, 1, 0.5}, ArrayGeometry{4, 4, 0.5}).value;
    CHECK(both == doctest::Approx(tx + rx).epsilon(1e-12));
}

TEST_CASE("codebook beams are orthogonal at half-wavelength spacing") {
    const int n = 8;
    const auto cosines = codebook_direction_cosines(n);
    REQUIRE(cosines.size() == static_cast<std::size_t>(n));
    std::vector<SteeringVector> beams;
    for (double c : cosines) {
        beams.push_back(steering_vector(ArrayGeometry{n, 1, 0.5}, std::acos(c), M_PI / 2.0));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double mag = std::abs(inner(beams[static_cast<std::size_t>(i)],
                                              beams[static_cast<std::size_t>(j)]));
            if (i == j) {
                CHECK(mag == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
            } else {
                CHECK(mag < 1e-9);
            }
        }
    }
}

TEST_CASE("self correlation is the strict maximum over distinct directions") {
    Rng rng(29);
    const ArrayGeometry g{6, 1, 0.5};
    for (int trial = 0; trial < 100; ++trial) {
        const double az1 = std::acos(-1.0 + 2.0 * rng.uniform());
        const double az2 = std::acos(-1.0 + 2.0 * rng.uniform());
        if (std::abs(std::cos(az1) - std::cos(az2)) < 1e-3) {
            continue;
        }
        const auto u1 = steering_vector(g, az1, M_PI / 2.0);
        const auto u2 = steering_vector(g, az2, M_PI / 2.0);
        CHECK(std::abs(inner(u1, u2)) < static_cast<double>(g.n_elements()));
    }
}

TEST_CASE("effective beamspace per receiver architecture") {
    const auto analog = default_architecture(ArchitectureKind::kAnalog);
    const auto digital = default_architecture(ArchitectureKind::kDigitalHighRes);
    const auto lowres = default_architecture(ArchitectureKind::kDigitalLowRes);
    const auto hybrid = default_architecture(ArchitectureKind::kHybrid, 2);

    CHECK(effective_beamspace_size(analog, 64, 16) == 1024);
    CHECK(effective_beamspace_size(digital, 64, 16) == 64);
    CHECK(effective_beamspace_size(lowres, 64, 16) == 64);
    CHECK(effective_beamspace_size(hybrid, 64, 16) == 512);

    // analog = M x hybrid(M), exactly.
    CHECK(effective_beamspace_size(analog, 64, 16) ==
          hybrid.rf_chains * effective_beamspace_size(hybrid, 64, 16));

    auto bad = hybrid;
    bad.rf_chains = 3;
    CHECK_THROWS_AS(effective_beamspace_size(bad, 64, 16), std::invalid_argument);
    bad.rf_chains = 16;
    CHECK_THROWS_AS(effective_beamspace_size(bad, 64, 16), std::invalid_argument);
}

TEST_CASE("beamspace layout bounds the true direction") {
    const auto analog = default_architecture(ArchitectureKind::kAnalog);
    const auto layout = make_beamspace_layout(analog, 64, 16, 100);
    CHECK(layout.total_size == 1024);
    CHECK(layout.effective_size == 1024);
    CHECK(layout.true_direction == 100);
    CHECK_THROWS_AS(make_beamspace_layout(analog, 64, 16, 1024), std::invalid_argument);
    CHECK_THROWS_AS(make_beamspace_layout(analog, 64, 16, -1), std::invalid_argument);
}
