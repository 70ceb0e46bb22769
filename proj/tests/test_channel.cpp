/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <random>
#include <vector>

#include "beamsweep/channel.hpp"
#include "beamsweep/scenario.hpp"
#include "doctest.h"

using namespace beamsweep;

namespace {

// Independent drop sampler used as the Monte Carlo oracle: same statistical
// model, entirely different RNG machinery (mt19937_64 and the standard
// library distributions).
std::vector<double> oracle_snr_samples(const ScenarioConfig& cfg, uint64_t seed, long n) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> norm(0.0, 1.0);
    std::vector<double> snrs;
    snrs.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        const double d = std::max(1.0, cfg.cell_radius.value * std::sqrt(unif(gen)));
        const bool los = unif(gen) < std::exp(-d / kLosDecayMeters);
        const PathlossParams& p = los ? kLosPathloss : kNlosPathloss;
        const double shadow = norm(gen) * std::sqrt(p.shadow_var_db2);
        const double pl = p.mu_db + 10.0 * p.nu * std::log10(d) + shadow;
        const double noise = cfg.thermal_noise_dbm_per_hz + cfg.ue_noise_figure.value +
                             10.0 * std::log10(cfg.system_bandwidth.value);
        snrs.push_back(cfg.tx_power.value - pl - noise);
    }
    std::sort(snrs.begin(), snrs.end());
    return snrs;
}

double nearest_rank(const std::vector<double>& sorted, double p) {
    const auto n = sorted.size();
    const auto rank = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(p / 100.0 * static_cast<double>(n))));
    return sorted[std::min(rank, n) - 1];
}

}  // namespace

TEST_CASE("LOS probability closed form") {
    CHECK(los_probability(Meters{0.0}) == doctest::Approx(1.0));
    CHECK(los_probability(Meters{67.1}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(los_probability(Meters{200.0}) == doctest::Approx(0.0507657).epsilon(1e-4));
    CHECK_THROWS_AS(los_probability(Meters{-1.0}), std::invalid_argument);
}

TEST_CASE("LOS probability is monotone non-increasing") {
    double prev = 1.0;
    for (double d = 0.0; d <= 300.0; d += 0.5) {
        const double p = los_probability(Meters{d});
        CHECK(p <= prev + 1e-15);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        prev = p;
    }
}

TEST_CASE("pathloss matches the fitted urban model") {
    CHECK(pathloss_db(Meters{100.0}, LinkState::kLos, Db{0.0}).value ==
          doctest::Approx(101.4).epsilon(1e-9));
    CHECK(pathloss_db(Meters{100.0}, LinkState::kNlos, Db{0.0}).value ==
          doctest::Approx(130.4).epsilon(1e-9));
    CHECK(pathloss_db(Meters{50.0}, LinkState::kLos, Db{2.5}).value ==
          doctest::Approx(61.4 + 20.0 * std::log10(50.0) + 2.5));
    CHECK_THROWS_AS(pathloss_db(Meters{0.0}, LinkState::kLos, Db{0.0}), std::invalid_argument);

    double prev = 0.0;
    for (double d = 1.0; d <= 200.0; d += 1.0) {
        const double pl = pathloss_db(Meters{d}, LinkState::kNlos, Db{0.0}).value;
        CHECK(pl > prev);
        prev = pl;
    }
}

TEST_CASE("cell-edge link budget: EIRP minus NLOS pathloss at 100 m") {
    const ScenarioConfig cfg = default_config();
    // 43 dBm - 130.4 dB, the "-87 dBm" round number in component surveys.
    CHECK(cell_edge_rx_power_dbm(cfg).value == doctest::Approx(-87.4).epsilon(1e-9));
}

TEST_CASE("omni SNR link budget") {
    CHECK(omni_snr_db(Dbm{30.0}, Db{130.4}, Db{7.0}, Hertz{400e6}).value ==
          doctest::Approx(-19.4206).epsilon(1e-4));
    CHECK(omni_snr_db(Dbm{30.0}, Db{101.4}, Db{7.0}, Hertz{400e6}).value ==
          doctest::Approx(9.5794).epsilon(1e-4));
    // Constructed identity: pathloss equals the whole budget -> exactly 0 dB.
    const double pl = 30.0 + 174.0 - 7.0 - 10.0 * std::log10(400e6);
    CHECK(omni_snr_db(Dbm{30.0}, Db{pl}, Db{7.0}, Hertz{400e6}).value ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(noise_floor_dbm(Db{7.0}, Hertz{0.0}), std::invalid_argument);
}

TEST_CASE("single seeded drop is deterministic") {
    ScenarioConfig cfg = default_config();
    cfg.n_drops = 1;
    const auto a = snr_distribution(cfg);
    const auto b = snr_distribution(cfg);
    REQUIRE(a.drops().size() == 1);
    CHECK(a.drops()[0].omni_snr.value == b.drops()[0].omni_snr.value);
    CHECK(a.drops()[0].distance.value == b.drops()[0].distance.value);
    CHECK(a.drops()[0].link_state == b.drops()[0].link_state);
}

TEST_CASE("drop fields are internally consistent") {
    ScenarioConfig cfg = default_config();
    cfg.n_drops = 2000;
    const auto dist = snr_distribution(cfg);
    for (const auto& d : dist.drops()) {
        CHECK(d.distance.value >= 1.0);
        CHECK(d.distance.value <= cfg.cell_radius.value);
        CHECK(d.pathloss.value ==
              doctest::Approx(pathloss_db(d.distance, d.link_state, d.shadowing).value));
        CHECK(d.omni_snr.value ==
              doctest::Approx(omni_snr_db(cfg.tx_power, d.pathloss, cfg.ue_noise_figure,
                                          cfg.system_bandwidth)
                                  .value));
    }
}

TEST_CASE("distribution percentiles: ordering, goldens and oracle agreement") {
    const ScenarioConfig cfg = default_config();
    const auto dist = snr_distribution(cfg, 2);
    const double p1 = dist.cell_edge().value;
    const double p50 = dist.median().value;
    CHECK(p1 < p50);

    // Frozen goldens for the default seed (10,000 drops, rng_seed = 1).
    CHECK(p1 == doctest::Approx(-23.539310).epsilon(1e-6));
    CHECK(p50 == doctest::Approx(-10.017081).epsilon(1e-6));

    // Independent-sampler oracle: both percentiles within 0.5 dB.
    const auto oracle = oracle_snr_samples(cfg, 777, cfg.n_drops);
    CHECK(std::abs(nearest_rank(oracle, 1.0) - p1) < 0.5);
    CHECK(std::abs(nearest_rank(oracle, 50.0) - p50) < 0.5);
}

TEST_CASE("percentiles use the nearest-rank convention") {
    std::vector<UserDrop> drops(10);
    for (int i = 0; i < 10; ++i) {
        drops[static_cast<std::size_t>(i)].omni_snr = Db{static_cast<double>(i)};
        drops[static_cast<std::size_t>(i)].distance = Meters{10.0};
    }
    const SnrDistribution dist(drops);
    CHECK(dist.percentile(1.0).value == doctest::Approx(0.0));    // ceil(0.1) = rank 1
    CHECK(dist.percentile(10.0).value == doctest::Approx(0.0));   // rank 1
    CHECK(dist.percentile(10.1).value == doctest::Approx(1.0));   // rank 2
    CHECK(dist.percentile(50.0).value == doctest::Approx(4.0));   // rank 5
    CHECK(dist.percentile(100.0).value == doctest::Approx(9.0));  // rank 10
    CHECK_THROWS_AS(dist.percentile(0.0), std::invalid_argument);
    CHECK_THROWS_AS(dist.percentile(100.5), std::invalid_argument);
}

TEST_CASE("drop sampling is independent of worker count") {
    ScenarioConfig cfg = default_config();
    cfg.n_drops = 3000;
    const auto a = snr_distribution(cfg, 1);
    const auto b = snr_distribution(cfg, 3);
    REQUIRE(a.drops().size() == b.drops().size());
    for (std::size_t i = 0; i < a.drops().size(); ++i) {
        CHECK(a.drops()[i].omni_snr.value == b.drops()[i].omni_snr.value);
    }
}

TEST_CASE("shadowing statistics match the configured variances") {
    ScenarioConfig cfg = default_config();
    cfg.n_drops = 100000;
    const auto dist = snr_distribution(cfg, 2);
    for (const LinkState state : {LinkState::kLos, LinkState::kNlos}) {
        const double var_cfg =
            state == LinkState::kLos ? kLosPathloss.shadow_var_db2 : kNlosPathloss.shadow_var_db2;
        double sum = 0.0;
        double sum2 = 0.0;
        long n = 0;
        for (const auto& d : dist.drops()) {
            if (d.link_state == state) {
                sum += d.shadowing.value;
                sum2 += d.shadowing.value * d.shadowing.value;
                ++n;
            }
        }
        REQUIRE(n > 10000);
        const double mean = sum / static_cast<double>(n);
        const double var = sum2 / static_cast<double>(n) - mean * mean;
        CHECK(std::abs(mean) < 3.0 * std::sqrt(var_cfg / static_cast<double>(n)));
        CHECK(var == doctest::Approx(var_cfg).epsilon(0.05));
    }
}

TEST_CASE("SNR CDF converges to the zero-shadowing CDF as variance shrinks") {
    // Built from the public pathloss/SNR operations: same distances and
    // states, shadowing scaled down, compared against the deterministic
    // curve by Kolmogorov-Smirnov distance.
    const ScenarioConfig cfg = default_config();
    ScenarioConfig small = cfg;
    small.n_drops = 4000;
    const auto dist = snr_distribution(small, 2);

    const auto ks_to_reference = [&](double shadow_scale) {
        std::vector<double> scaled;
        std::vector<double> reference;
        for (const auto& d : dist.drops()) {
            const Db sh{d.shadowing.value * shadow_scale};
            scaled.push_back(omni_snr_db(cfg.tx_power, pathloss_db(d.distance, d.link_state, sh),
                                         cfg.ue_noise_figure, cfg.system_bandwidth)
                                 .value);
            reference.push_back(omni_snr_db(cfg.tx_power,
                                            pathloss_db(d.distance, d.link_state, Db{0.0}),
                                            cfg.ue_noise_figure, cfg.system_bandwidth)
                                    .value);
        }
        std::sort(scaled.begin(), scaled.end());
        std::sort(reference.begin(), reference.end());
        // Two-sample KS over the pooled grid.
        double ks = 0.0;
        std::size_t i = 0;
        std::size_t j = 0;
        const double n = static_cast<double>(scaled.size());
        while (i < scaled.size() && j < reference.size()) {
            if (scaled[i] <= reference[j]) {
                ++i;
            } else {
                ++j;
            }
            ks = std::max(ks, std::abs(static_cast<double>(i) - static_cast<double>(j)) / n);
        }
        return ks;
    };

    const double ks_full = ks_to_reference(1.0);
    const double ks_tenth = ks_to_reference(0.1);
    const double ks_hundredth = ks_to_reference(0.01);
    CHECK(ks_tenth < ks_full);
    CHECK(ks_hundredth < ks_tenth);
    CHECK(ks_hundredth < 0.02);
}
