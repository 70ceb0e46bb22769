/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <vector>

#include "beamsweep/scenario.hpp"
#include "beamsweep/units.hpp"

namespace beamsweep {

enum class LinkState { kLos, kNlos };

const char* to_string(LinkState state);

/// Pathloss law PL = mu + 10 nu log10(d) + shadowing, per link state.
struct PathlossParams {
    double mu_db;
    double nu;
    double shadow_var_db2;
};

// 28 GHz urban measurement fit.
inline constexpr PathlossParams kLosPathloss{61.4, 2.0, 5.8};
inline constexpr PathlossParams kNlosPathloss{72.0, 2.92, 8.7};

/// Distance scale of the LOS probability decay exp(-d / 67.1 m).
inline constexpr double kLosDecayMeters = 67.1;

struct UserDrop {
    Meters distance{0.0};
    LinkState link_state = LinkState::kNlos;
    Db shadowing{0.0};
    Db pathloss{0.0};
    Db omni_snr{0.0};
};

/// P(link is LOS) at distance d; monotone non-increasing, 1 at d = 0.
double los_probability(Meters d);

Db pathloss_db(Meters d, LinkState state, Db shadowing);

/// Omni-directional SNR before any beamforming gain:
/// tx_power - pathloss - (kT + NF + 10log10(bandwidth)).
Db omni_snr_db(Dbm tx_power, Db pathloss, Db noise_figure, Hertz bandwidth,
               double thermal_noise_dbm_per_hz = -174.0);

/// Receiver noise floor over `bandwidth` in dBm.
Dbm noise_floor_dbm(Db noise_figure, Hertz bandwidth, double thermal_noise_dbm_per_hz = -174.0);

/// Received power for the worst-case link-budget check: EIRP minus the
/// zero-shadowing NLOS pathloss at the cell edge.
Dbm cell_edge_rx_power_dbm(const ScenarioConfig& cfg);

/// Empirical omni-SNR distribution over random user drops.
class SnrDistribution {
  public:
    explicit SnrDistribution(std::vector<UserDrop> drops);

    const std::vector<UserDrop>& drops() const { return drops_; }

    /// Nearest-rank percentile of the omni SNR, p in (0, 100].
    Db percentile(double p) const;

    Db cell_edge() const { return percentile(1.0); }
    Db median() const { return percentile(50.0); }

  private:
    std::vector<UserDrop> drops_;     // in drop order
    std::vector<double> sorted_snr_;  // ascending
};

/// Monte Carlo drop sampler: distance uniform over the disk area (minimum
/// 1 m), link state Bernoulli(los_probability), shadowing normal with the
/// state's variance. Per-drop substreams keyed on cfg.rng_seed make the
/// result independent of `threads`.
SnrDistribution snr_distribution(const ScenarioConfig& cfg, int threads = 1);

}  // namespace beamsweep
