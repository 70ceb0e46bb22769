/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "beamsweep/detector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "beamsweep/quantization.hpp"
#include "beamsweep/rng.hpp"

namespace beamsweep {

namespace {

constexpr uint64_t kTrueDirSalt = 0x7E57;
constexpr uint64_t kNullDirSalt = 0x0FF5;

constexpr double kSpeedOfLight = 299792458.0;

struct LfsrSpec {
    int degree;
    int taps[3];  // feedback offsets t: x(i+deg) = sum x(i+t), t=0 implied
    int n_taps;
};

// Primitive feedback polynomials, one per degree. Degree 7 is the NR PSS
// generator.
constexpr LfsrSpec kLfsrSpecs[] = {
    {2, {1, 0, 0}, 1},  {3, {1, 0, 0}, 1},   {4, {1, 0, 0}, 1},       {5, {2, 0, 0}, 1},
    {6, {1, 0, 0}, 1},  {7, {4, 0, 0}, 1},   {8, {6, 5, 4}, 3},       {9, {5, 0, 0}, 1},
    {10, {3, 0, 0}, 1}, {11, {2, 0, 0}, 1},  {12, {6, 4, 1}, 3},      {13, {4, 3, 1}, 3},
    {14, {10, 6, 1}, 3},
};

std::vector<int> m_sequence(int degree) {
    const LfsrSpec* spec = nullptr;
    for (const auto& s : kLfsrSpecs) {
        if (s.degree == degree) {
            spec = &s;
            break;
        }
    }
    if (spec == nullptr) {
        throw std::invalid_argument("make_pss: unsupported sequence length");
    }
    const int period = (1 << degree) - 1;
    std::vector<int> x(static_cast<std::size_t>(period));
    if (degree == 7) {
        // NR PSS register initialization.
        const int init[7] = {0, 1, 1, 0, 1, 1, 1};
        std::copy(init, init + 7, x.begin());
    } else {
        std::fill(x.begin(), x.begin() + degree, 1);
    }
    for (int i = 0; i + degree < period; ++i) {
        int v = x[static_cast<std::size_t>(i)];
        for (int t = 0; t < spec->n_taps; ++t) {
            v ^= x[static_cast<std::size_t>(i + spec->taps[t])];
        }
        x[static_cast<std::size_t>(i + degree)] = v;
    }
    return x;
}

double sum_norm(std::span<const std::complex<double>> v) {
    double s = 0.0;
    for (const auto& e : v) {
        s += std::norm(e);
    }
    return s;
}

std::complex<double> inner(std::span<const std::complex<double>> x,
                           std::span<const std::complex<double>> y) {
    std::complex<double> s{0.0, 0.0};
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += std::conj(x[i]) * y[i];
    }
    return s;
}

void check_dims(std::span<const std::complex<double>> x,
                std::span<const std::complex<double>> y) {
    if (x.size() != y.size() || x.empty()) {
        throw std::invalid_argument("template/observation dimensions do not match");
    }
}

// Partitions trials across workers; each trial is seeded independently so
// the aggregate count is identical for any worker count.
template <typename TrialFn>
long count_successes(long n_trials, int threads, const TrialFn& trial_fn) {
    const int workers = std::max(1, threads);
    if (workers == 1 || n_trials < 64) {
        long ok = 0;
        for (long t = 0; t < n_trials; ++t) {
            ok += trial_fn(t) ? 1 : 0;
        }
        return ok;
    }
    std::vector<long> per_worker(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            long ok = 0;
            for (long t = w; t < n_trials; t += workers) {
                ok += trial_fn(t) ? 1 : 0;
            }
            per_worker[static_cast<std::size_t>(w)] = ok;
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    long ok = 0;
    for (long c : per_worker) {
        ok += c;
    }
    return ok;
}

MisdetectionPoint finish_point(Db snr, int sweeps, const DetectorCalibration& cal, long n_trials,
                               long n_success) {
    MisdetectionPoint pt;
    pt.post_bf_snr = snr;
    pt.sweeps = sweeps;
    pt.n_trials = n_trials;
    pt.pmd = 1.0 - static_cast<double>(n_success) / static_cast<double>(n_trials);
    pt.std_error = std::sqrt(std::max(0.0, pt.pmd * (1.0 - pt.pmd)) /
                             static_cast<double>(n_trials));
    pt.rho_threshold = cal.rho_threshold;
    return pt;
}

}  // namespace

PssSignal make_pss(int dims, int sequence_id) {
    if (dims < 2) {
        throw std::invalid_argument("make_pss: dims must be >= 2");
    }
    if (sequence_id < 0 || sequence_id > 2) {
        throw std::invalid_argument("make_pss: sequence_id must be 0, 1 or 2");
    }
    int degree = 2;
    while (((1 << degree) - 1) < dims) {
        ++degree;
        if (degree > 14) {
            throw std::invalid_argument("make_pss: dims too large");
        }
    }
    const std::vector<int> seq = m_sequence(degree);
    const int period = static_cast<int>(seq.size());
    // NR uses shift 43 between the three ids at period 127; scale the same
    // fraction of the period elsewhere.
    const int shift = (period == 127) ? 43 * sequence_id : (period / 3) * sequence_id;

    PssSignal pss;
    pss.sequence_id = sequence_id;
    pss.coeffs.resize(static_cast<std::size_t>(dims));
    const double scale = 1.0 / std::sqrt(static_cast<double>(dims));
    for (int n = 0; n < dims; ++n) {
        const int bit = seq[static_cast<std::size_t>((n + shift) % period)];
        pss.coeffs[static_cast<std::size_t>(n)] = {scale * (1.0 - 2.0 * bit), 0.0};
    }
    return pss;
}

double correlation_stat(std::span<const std::complex<double>> x,
                        std::span<const std::complex<double>> y) {
    check_dims(x, y);
    const double ny = sum_norm(y);
    if (ny <= 0.0) {
        throw std::invalid_argument("correlation_stat: zero received vector");
    }
    const double nx = sum_norm(x);
    const double c = std::norm(inner(x, y));
    return std::min(1.0, c / (nx * ny));
}

std::complex<double> estimate_alpha(std::span<const std::complex<double>> x,
                                    std::span<const std::complex<double>> y) {
    check_dims(x, y);
    return inner(x, y) / sum_norm(x);
}

double estimate_sigma2(std::span<const std::complex<double>> x,
                       std::span<const std::complex<double>> y, Hypothesis hyp) {
    check_dims(x, y);
    const double d = static_cast<double>(y.size());
    if (hyp == Hypothesis::kNoise) {
        return sum_norm(y) / d;
    }
    const double captured = std::norm(inner(x, y)) / sum_norm(x);
    return std::max(0.0, sum_norm(y) - captured) / d;
}

double glrt_statistic(std::span<const double> rhos, int dims) {
    if (dims < 2) {
        throw std::invalid_argument("glrt_statistic: dims must be >= 2");
    }
    double sum = 0.0;
    for (double rho : rhos) {
        if (rho < 0.0 || rho > 1.0) {
            throw std::invalid_argument("glrt_statistic: rho out of [0, 1]");
        }
        if (rho == 1.0) {
            return std::numeric_limits<double>::infinity();
        }
        sum += -static_cast<double>(dims) * std::log1p(-rho);
    }
    return sum;
}

long n_delay_hypotheses(Seconds burst_period, Hertz sampling_rate) {
    if (burst_period.value <= 0.0 || sampling_rate.value <= 0.0) {
        throw std::invalid_argument("n_delay_hypotheses: inputs must be > 0");
    }
    const double v = burst_period.value * sampling_rate.value;
    const double r = std::round(v);
    // Products like 20 ms x 1 GHz should land on the integer they denote.
    if (std::abs(v - r) <= 1e-9 * std::max(1.0, v)) {
        return std::max(1L, static_cast<long>(r));
    }
    return std::max(1L, static_cast<long>(std::ceil(v)));
}

int n_freq_offset_hypotheses(double lo_error_ppm, double max_speed_kmh, Hertz carrier_freq,
                             Seconds symbol_duration) {
    if (lo_error_ppm < 0.0 || max_speed_kmh < 0.0 || carrier_freq.value <= 0.0 ||
        symbol_duration.value <= 0.0) {
        throw std::invalid_argument("n_freq_offset_hypotheses: invalid inputs");
    }
    const double lo_error_hz = lo_error_ppm * 1e-6 * carrier_freq.value;
    const double doppler_hz = (max_speed_kmh / 3.6) / kSpeedOfLight * carrier_freq.value;
    const double span_hz = 2.0 * (lo_error_hz + doppler_hz);
    // Bin width so residual offset rotates the channel at most pi/4 per
    // symbol.
    const double bin_width_hz = 1.0 / (8.0 * symbol_duration.value);
    return std::max(1, static_cast<int>(std::ceil(span_hz / bin_width_hz)));
}

double h0_statistic_survival(int sweeps, int dims, double threshold) {
    if (sweeps < 1 || dims < 2) {
        throw std::invalid_argument("h0_statistic_survival: sweeps >= 1, dims >= 2 required");
    }
    if (threshold <= 0.0) {
        return 1.0;
    }
    const double rate = static_cast<double>(dims - 1) / static_cast<double>(dims);
    const double x = rate * threshold;
    // Erlang survival: exp(-x) sum_{j<K} x^j / j!
    double term = 1.0;
    double sum = 1.0;
    for (int j = 1; j < sweeps; ++j) {
        term *= x / j;
        sum += term;
    }
    return std::exp(-x) * sum;
}

double DetectorCalibration::glrt_threshold(int sweeps) const {
    if (sweeps < 1) {
        throw std::invalid_argument("glrt_threshold: sweeps must be >= 1");
    }
    const double rate = static_cast<double>(dims - 1) / static_cast<double>(dims);
    if (sweeps == 1) {
        return -std::log(per_test_fa) / rate;
    }
    double lo = 0.0;
    double hi = (-std::log(per_test_fa) + 2.0 * sweeps) / rate;
    while (h0_statistic_survival(sweeps, dims, hi) > per_test_fa) {
        hi *= 2.0;
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (h0_statistic_survival(sweeps, dims, mid) > per_test_fa) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

DetectorCalibration calibrate_threshold(double fa_rate_per_cycle, long n_pss, long n_delay,
                                        long n_freq_offset, int dims) {
    if (dims < 2) {
        throw std::invalid_argument("calibrate_threshold: dims must be >= 2");
    }
    if (n_pss < 1 || n_delay < 1 || n_freq_offset < 1) {
        throw std::invalid_argument("calibrate_threshold: hypothesis counts must be >= 1");
    }
    DetectorCalibration cal;
    cal.fa_rate_per_cycle = fa_rate_per_cycle;
    cal.n_pss = n_pss;
    cal.n_delay = n_delay;
    cal.n_freq_offset = n_freq_offset;
    cal.dims = dims;
    cal.per_test_fa = fa_rate_per_cycle / (static_cast<double>(n_pss) *
                                           static_cast<double>(n_delay) *
                                           static_cast<double>(n_freq_offset));
    // P_FA of exactly 1 is the accept-everything limit (threshold 0).
    if (cal.per_test_fa <= 0.0 || cal.per_test_fa > 1.0) {
        throw std::invalid_argument("calibrate_threshold: per-test P_FA must be in (0, 1]");
    }
    cal.rho_threshold = 1.0 - std::pow(cal.per_test_fa, 1.0 / (dims - 1));
    return cal;
}

DetectorCalibration calibrate_threshold(const ScenarioConfig& cfg, int dims,
                                        Hertz sampling_rate) {
    return calibrate_threshold(cfg.fa_rate_per_cycle, cfg.n_pss_sequences,
                               n_delay_hypotheses(cfg.ss_burst_period, sampling_rate),
                               cfg.n_freq_offset_hyp, dims);
}

Db detection_snr_db(Db omni_snr, Db tx_gain, Db rx_gain, int tx_power_split, Hertz system_bw,
                    Hertz signal_bw, bool bandwidth_adjustment) {
    if (tx_power_split < 1) {
        throw std::invalid_argument("detection_snr_db: tx_power_split must be >= 1");
    }
    Db snr = omni_snr + tx_gain + rx_gain - linear_to_db(static_cast<double>(tx_power_split));
    if (bandwidth_adjustment) {
        snr = snr + linear_to_db(system_bw.value / signal_bw.value);
    }
    return snr;
}

DetectionResult detect(std::span<const SweepObservation> observations, int sweeps,
                       const DetectorCalibration& cal) {
    if (observations.empty()) {
        throw std::invalid_argument("detect: no observations");
    }
    std::map<long, double> stats;
    std::map<long, bool> is_true;
    const double d = static_cast<double>(cal.dims);
    for (const SweepObservation& obs : observations) {
        if (obs.rho < 0.0 || obs.rho > 1.0) {
            throw std::invalid_argument("detect: rho out of [0, 1]");
        }
        stats[obs.direction] += obs.rho == 1.0 ? std::numeric_limits<double>::infinity()
                                               : -d * std::log1p(-obs.rho);
        is_true[obs.direction] = is_true[obs.direction] || obs.true_direction;
    }
    DetectionResult result;
    for (const auto& [direction, stat] : stats) {
        if (result.chosen_direction < 0 || stat > result.statistic) {
            result.chosen_direction = direction;
            result.statistic = stat;
        }
    }
    result.above_threshold = result.statistic > cal.glrt_threshold(sweeps);
    result.success = result.above_threshold && is_true[result.chosen_direction];
    return result;
}

MisdetectionPoint simulate_misdetection(Db post_bf_snr, int sweeps,
                                        const DetectorCalibration& cal, long effective_beamspace,
                                        long n_trials, uint64_t seed, int threads) {
    if (sweeps < 1 || n_trials < 1 || effective_beamspace < 2) {
        throw std::invalid_argument("simulate_misdetection: invalid sweep/trial/beamspace count");
    }
    const double snr_lin = db_to_linear(post_bf_snr);
    const double amp = std::sqrt(snr_lin);
    const int dims = cal.dims;
    const double d = static_cast<double>(dims);
    const double null_scale = d / (d - 1.0);
    const double threshold = cal.glrt_threshold(sweeps);
    const long n_null = effective_beamspace - 1;

    const auto trial_fn = [&](long trial) -> bool {
        // True-direction statistic: rho = A / (A + B) with A the energy
        // captured by the template (faded signal plus noise along it) and B
        // the chi-squared energy of the D-1 orthogonal noise dimensions.
        Rng true_base = Rng::stream(seed, kTrueDirSalt, static_cast<uint64_t>(trial));
        double stat_true = 0.0;
        for (int k = 0; k < sweeps; ++k) {
            Rng rng = true_base.fork(static_cast<uint64_t>(k));
            const std::complex<double> h = rng.cnormal();
            const std::complex<double> g = rng.cnormal();
            const double a = std::norm(amp * h + g);
            const double b = rng.gamma(d - 1.0);
            stat_true += d * std::log1p(a / b);
        }
        if (stat_true <= threshold) {
            return false;
        }
        // Noise directions carry exponentially distributed per-cycle
        // statistics; the true direction must also beat their running max.
        Rng null_base = Rng::stream(seed, kNullDirSalt, static_cast<uint64_t>(trial));
        if (sweeps == 1) {
            Rng rng = null_base.fork(0);
            for (long l = 0; l < n_null; ++l) {
                if (null_scale * rng.exponential() >= stat_true) {
                    return false;
                }
            }
            return true;
        }
        thread_local std::vector<double> acc;
        acc.assign(static_cast<std::size_t>(n_null), 0.0);
        for (int k = 0; k < sweeps; ++k) {
            Rng rng = null_base.fork(static_cast<uint64_t>(k));
            for (long l = 0; l < n_null; ++l) {
                acc[static_cast<std::size_t>(l)] += null_scale * rng.exponential();
            }
        }
        for (double v : acc) {
            if (v >= stat_true) {
                return false;
            }
        }
        return true;
    };

    const long ok = count_successes(n_trials, threads, trial_fn);
    return finish_point(post_bf_snr, sweeps, cal, n_trials, ok);
}

MisdetectionPoint simulate_misdetection_samples(Db per_sample_snr, double gamma, int sweeps,
                                                const DetectorCalibration& cal,
                                                long effective_beamspace, long n_trials,
                                                uint64_t seed, int threads) {
    if (sweeps < 1 || n_trials < 1 || effective_beamspace < 2) {
        throw std::invalid_argument("simulate_misdetection_samples: invalid counts");
    }
    const int dims = cal.dims;
    const double d = static_cast<double>(dims);
    // Per-sample SNR spread over D unit-modulus template samples.
    const double amp = std::sqrt(db_to_linear(per_sample_snr) * d);
    const double threshold = cal.glrt_threshold(sweeps);
    const long n_null = effective_beamspace - 1;
    const PssSignal pss = make_pss(dims, 0);

    const auto trial_fn = [&](long trial) -> bool {
        std::vector<std::complex<double>> y(static_cast<std::size_t>(dims));
        const auto observe = [&](Rng& rng, bool with_signal) {
            const std::complex<double> h = with_signal ? rng.cnormal() : std::complex<double>{};
            for (int i = 0; i < dims; ++i) {
                y[static_cast<std::size_t>(i)] =
                    (with_signal ? amp * h * pss.coeffs[static_cast<std::size_t>(i)]
                                 : std::complex<double>{}) +
                    rng.cnormal();
            }
            if (gamma > 0.0) {
                y = quantize_samples(y, gamma, rng);
            }
            const double rho = correlation_stat(pss.coeffs, y);
            return d * std::log1p(rho / (1.0 - rho));
        };

        Rng true_base = Rng::stream(seed, kTrueDirSalt, static_cast<uint64_t>(trial));
        double stat_true = 0.0;
        for (int k = 0; k < sweeps; ++k) {
            Rng rng = true_base.fork(static_cast<uint64_t>(k));
            stat_true += observe(rng, true);
        }
        if (stat_true <= threshold) {
            return false;
        }
        Rng null_base = Rng::stream(seed, kNullDirSalt, static_cast<uint64_t>(trial));
        std::vector<double> acc(static_cast<std::size_t>(n_null), 0.0);
        for (int k = 0; k < sweeps; ++k) {
            Rng rng = null_base.fork(static_cast<uint64_t>(k));
            for (long l = 0; l < n_null; ++l) {
                acc[static_cast<std::size_t>(l)] += observe(rng, false);
            }
        }
        for (double v : acc) {
            if (v >= stat_true) {
                return false;
            }
        }
        return true;
    };

    const long ok = count_successes(n_trials, threads, trial_fn);
    return finish_point(per_sample_snr, sweeps, cal, n_trials, ok);
}

std::optional<int> sweeps_required(Db post_bf_snr, const DetectorCalibration& cal,
                                   long effective_beamspace, double pmd_target, long n_trials,
                                   int k_max, uint64_t seed, int threads) {
    if (pmd_target <= 0.0 || pmd_target >= 1.0) {
        throw std::invalid_argument("sweeps_required: target must be in (0, 1)");
    }
    for (int k = 1; k <= k_max; ++k) {
        const MisdetectionPoint pt =
            simulate_misdetection(post_bf_snr, k, cal, effective_beamspace, n_trials, seed,
                                  threads);
        if (pt.pmd <= pmd_target) {
            return k;
        }
    }
    return std::nullopt;
}

}  // namespace beamsweep
