/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "beamsweep/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "beamsweep/rng.hpp"

namespace beamsweep {

namespace {

constexpr uint64_t kDropSalt = 0xD409;

const PathlossParams& params_for(LinkState state) {
    return state == LinkState::kLos ? kLosPathloss : kNlosPathloss;
}

UserDrop sample_drop(const ScenarioConfig& cfg, uint64_t index) {
    Rng rng = Rng::stream(cfg.rng_seed, kDropSalt, index);
    UserDrop drop;
    // Area-uniform placement; clamp at 1 m so log10 stays finite.
    const double d = cfg.cell_radius.value * std::sqrt(rng.uniform());
    drop.distance = Meters{std::max(1.0, d)};
    drop.link_state =
        rng.bernoulli(los_probability(drop.distance)) ? LinkState::kLos : LinkState::kNlos;
    const PathlossParams& pl = params_for(drop.link_state);
    drop.shadowing = Db{rng.normal() * std::sqrt(pl.shadow_var_db2)};
    drop.pathloss = pathloss_db(drop.distance, drop.link_state, drop.shadowing);
    drop.omni_snr = omni_snr_db(cfg.tx_power, drop.pathloss, cfg.ue_noise_figure,
                                cfg.system_bandwidth, cfg.thermal_noise_dbm_per_hz);
    return drop;
}

}  // namespace

const char* to_string(LinkState state) { return state == LinkState::kLos ? "los" : "nlos"; }

double los_probability(Meters d) {
    if (d.value < 0.0) {
        throw std::invalid_argument("los_probability: negative distance");
    }
    return std::exp(-d.value / kLosDecayMeters);
}

Db pathloss_db(Meters d, LinkState state, Db shadowing) {
    if (d.value <= 0.0) {
        throw std::invalid_argument("pathloss_db: distance must be > 0");
    }
    const PathlossParams& p = params_for(state);
    return Db{p.mu_db + 10.0 * p.nu * std::log10(d.value) + shadowing.value};
}

Dbm noise_floor_dbm(Db noise_figure, Hertz bandwidth, double thermal_noise_dbm_per_hz) {
    if (bandwidth.value <= 0.0) {
        throw std::invalid_argument("noise_floor_dbm: bandwidth must be > 0");
    }
    return Dbm{thermal_noise_dbm_per_hz + noise_figure.value + 10.0 * std::log10(bandwidth.value)};
}

Db omni_snr_db(Dbm tx_power, Db pathloss, Db noise_figure, Hertz bandwidth,
               double thermal_noise_dbm_per_hz) {
    const Dbm rx_power = tx_power - pathloss;
    return rx_power - noise_floor_dbm(noise_figure, bandwidth, thermal_noise_dbm_per_hz);
}

Dbm cell_edge_rx_power_dbm(const ScenarioConfig& cfg) {
    const Db pl = pathloss_db(cfg.cell_radius, LinkState::kNlos, Db{0.0});
    return cfg.eirp - pl;
}

SnrDistribution::SnrDistribution(std::vector<UserDrop> drops) : drops_(std::move(drops)) {
    if (drops_.empty()) {
        throw std::invalid_argument("SnrDistribution: need at least one drop");
    }
    sorted_snr_.reserve(drops_.size());
    for (const UserDrop& d : drops_) {
        sorted_snr_.push_back(d.omni_snr.value);
    }
    std::sort(sorted_snr_.begin(), sorted_snr_.end());
}

Db SnrDistribution::percentile(double p) const {
    if (p <= 0.0 || p > 100.0) {
        throw std::invalid_argument("percentile: p must be in (0, 100]");
    }
    const auto n = sorted_snr_.size();
    auto rank = static_cast<std::size_t>(std::ceil(p / 100.0 * static_cast<double>(n)));
    rank = std::max<std::size_t>(1, std::min(rank, n));
    return Db{sorted_snr_[rank - 1]};
}

SnrDistribution snr_distribution(const ScenarioConfig& cfg, int threads) {
    const long n = cfg.n_drops;
    std::vector<UserDrop> drops(static_cast<std::size_t>(n));
    const int workers = std::max(1, threads);
    if (workers == 1 || n < 256) {
        for (long i = 0; i < n; ++i) {
            drops[static_cast<std::size_t>(i)] = sample_drop(cfg, static_cast<uint64_t>(i));
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (long i = w; i < n; i += workers) {
                    drops[static_cast<std::size_t>(i)] =
                        sample_drop(cfg, static_cast<uint64_t>(i));
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    return SnrDistribution(std::move(drops));
}

}  // namespace beamsweep
