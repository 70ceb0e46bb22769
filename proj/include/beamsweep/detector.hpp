/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "beamsweep/scenario.hpp"
#include "beamsweep/units.hpp"

namespace beamsweep {

/// Known synchronization waveform, unit norm, D degrees of freedom.
struct PssSignal {
    std::vector<std::complex<double>> coeffs;
    int sequence_id = 0;

    int dims() const { return static_cast<int>(coeffs.size()); }
};

/// Deterministic BPSK m-sequence waveform of length `dims`, normalized to
/// unit norm. The three sequence ids are cyclic shifts with low mutual
/// correlation; at dims = 127 this is the standard NR PSS family.
PssSignal make_pss(int dims, int sequence_id);

/// Normalized correlation energy |x*y|^2 / (||x||^2 ||y||^2), in [0, 1].
double correlation_stat(std::span<const std::complex<double>> x,
                        std::span<const std::complex<double>> y);

/// Least-squares channel coefficient x*y / ||x||^2.
std::complex<double> estimate_alpha(std::span<const std::complex<double>> x,
                                    std::span<const std::complex<double>> y);

enum class Hypothesis { kNoise, kSignal };

/// ML noise-variance estimate under either hypothesis. The signal
/// hypothesis subtracts the energy captured by the template.
double estimate_sigma2(std::span<const std::complex<double>> x,
                       std::span<const std::complex<double>> y, Hypothesis hyp);

/// GLRT statistic for one direction over several sweep cycles:
/// sum_k -D ln(1 - rho_k). A rho of exactly 1 yields +infinity
/// (saturated detection).
double glrt_statistic(std::span<const double> rhos, int dims);

/// Number of timing hypotheses: samples within one SS burst period
/// (the search is bounded by the signal's periodicity).
long n_delay_hypotheses(Seconds burst_period, Hertz sampling_rate);

/// Frequency-offset bins covering +/-(LO error + Doppler) at a bin width
/// keeping phase rotation below pi/4 over one symbol; advisory only, the
/// pipeline uses the configured hypothesis count.
int n_freq_offset_hypotheses(double lo_error_ppm, double max_speed_kmh, Hertz carrier_freq,
                             Seconds symbol_duration);

/// Threshold calibration from the per-cycle false-alarm budget
/// P_FA = R_FA / (N_PSS * N_dly * N_FO). Under the noise-only hypothesis
/// rho ~ Beta(1, D-1), so the single-observation threshold is
/// 1 - P_FA^(1/(D-1)). Thresholds for multi-cycle sums come from the exact
/// null law of the summed statistic (Erlang); see h0_statistic_survival.
struct DetectorCalibration {
    double fa_rate_per_cycle = 0.01;
    long n_pss = 3;
    long n_delay = 1;
    long n_freq_offset = 3;
    int dims = 127;
    double per_test_fa = 0.0;
    double rho_threshold = 0.0;

    /// Threshold on the K-cycle summed statistic at the same per-test
    /// false-alarm probability.
    double glrt_threshold(int sweeps) const;
};

DetectorCalibration calibrate_threshold(double fa_rate_per_cycle, long n_pss, long n_delay,
                                        long n_freq_offset, int dims);

/// Convenience overload pulling the budget factors from the scenario.
DetectorCalibration calibrate_threshold(const ScenarioConfig& cfg, int dims,
                                        Hertz sampling_rate);

/// Exact survival function P(Lambda > threshold | H0) of the K-cycle summed
/// statistic: each term -D ln(1 - rho) is exponential with rate (D-1)/D
/// under H0, so the sum is Erlang.
double h0_statistic_survival(int sweeps, int dims, double threshold);

/// SNR entering the detection statistic: omni SNR plus both aligned array
/// gains, minus the transmit power split across simultaneous beams, plus
/// the noise-bandwidth ratio of system band to signal band (the statistic
/// only sees noise in the signal band). The bandwidth term can be disabled.
Db detection_snr_db(Db omni_snr, Db tx_gain, Db rx_gain, int tx_power_split, Hertz system_bw,
                    Hertz signal_bw, bool bandwidth_adjustment = true);

/// One probed beamspace direction in one sweep cycle, reduced to its
/// sufficient statistic.
struct SweepObservation {
    int cycle = 0;
    long direction = 0;
    double rho = 0.0;
    double noise_variance = 1.0;
    bool true_direction = false;
};

struct DetectionResult {
    long chosen_direction = -1;
    double statistic = 0.0;
    bool above_threshold = false;
    bool success = false;  // implies above_threshold
};

/// GLRT decision over a batch of observations spanning `sweeps` cycles:
/// sums each direction's statistic, picks the largest and compares it to
/// the calibrated threshold. Success means the chosen direction is the
/// true one and the threshold is met.
DetectionResult detect(std::span<const SweepObservation> observations, int sweeps,
                       const DetectorCalibration& cal);

/// One Monte Carlo estimate of the mis-detection probability.
struct MisdetectionPoint {
    Db post_bf_snr{0.0};
    int sweeps = 1;
    long n_trials = 0;
    double pmd = 0.0;
    double std_error = 0.0;
    double rho_threshold = 0.0;
};

/// Monte Carlo beamsweep: per trial, every beamspace direction accumulates
/// its summed statistic over `sweeps` cycles; the true direction carries a
/// Rayleigh-faded signal redrawn per cycle. Detection succeeds when the
/// true direction has the largest statistic and exceeds the calibrated
/// threshold. Per-trial substreams keyed on `seed` make the estimate
/// independent of `threads`; reusing a seed across calls couples the trials
/// (common random numbers), which stabilizes curve comparisons.
MisdetectionPoint simulate_misdetection(Db post_bf_snr, int sweeps,
                                        const DetectorCalibration& cal, long effective_beamspace,
                                        long n_trials, uint64_t seed, int threads = 1);

/// Sample-domain variant: materializes the D-dimensional observations,
/// optionally passes them through the quantizer distortion model
/// (quantize_samples) and runs the full correlation statistic. `per_sample`
/// SNR here is per signal-space dimension; the equivalent statistic-level
/// SNR is dims * effective_snr(per_sample). Slower; used for
/// cross-validation.
MisdetectionPoint simulate_misdetection_samples(Db per_sample_snr, double gamma, int sweeps,
                                                const DetectorCalibration& cal,
                                                long effective_beamspace, long n_trials,
                                                uint64_t seed, int threads = 1);

/// Smallest sweep count whose estimated Pmd meets the target; nullopt if
/// k_max sweeps are not enough.
std::optional<int> sweeps_required(Db post_bf_snr, const DetectorCalibration& cal,
                                   long effective_beamspace, double pmd_target, long n_trials,
                                   int k_max, uint64_t seed, int threads = 1);

}  // namespace beamsweep
