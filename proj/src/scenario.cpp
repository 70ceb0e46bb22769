/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include "beamsweep/scenario.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace beamsweep {

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& why) {
    throw std::invalid_argument("config key '" + key + "': " + why);
}

void require(bool ok, const std::string& key, const std::string& why) {
    if (!ok) {
        fail(key, why);
    }
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& text) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        fail(key, "not a number: '" + text + "'");
    }
    if (pos != text.size()) {
        fail(key, "trailing characters in '" + text + "'");
    }
    return v;
}

long parse_integer(const std::string& key, const std::string& text) {
    const double v = parse_number(key, text);
    const long i = static_cast<long>(v);
    if (static_cast<double>(i) != v) {
        fail(key, "expected an integer, got '" + text + "'");
    }
    return i;
}

std::string format_full(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

const char* to_string(ArchitectureKind kind) {
    switch (kind) {
        case ArchitectureKind::kAnalog:
            return "analog";
        case ArchitectureKind::kHybrid:
            return "hybrid";
        case ArchitectureKind::kDigitalHighRes:
            return "digital-high";
        case ArchitectureKind::kDigitalLowRes:
            return "digital-low";
    }
    return "?";
}

ArchitectureKind architecture_from_string(const std::string& name) {
    if (name == "analog") {
        return ArchitectureKind::kAnalog;
    }
    if (name == "hybrid") {
        return ArchitectureKind::kHybrid;
    }
    if (name == "digital-high") {
        return ArchitectureKind::kDigitalHighRes;
    }
    if (name == "digital-low") {
        return ArchitectureKind::kDigitalLowRes;
    }
    throw std::invalid_argument("unknown architecture '" + name +
                                "' (expected analog|hybrid|digital-high|digital-low)");
}

ArchitectureSpec default_architecture(ArchitectureKind kind, int rf_chains) {
    ArchitectureSpec spec;
    spec.kind = kind;
    switch (kind) {
        case ArchitectureKind::kAnalog:
            spec.rf_chains = 1;
            spec.adc_bits = 10;
            break;
        case ArchitectureKind::kHybrid:
            spec.rf_chains = rf_chains;
            spec.adc_bits = 10;
            break;
        case ArchitectureKind::kDigitalHighRes:
            spec.rf_chains = 0;  // one chain per element; resolved against the array
            spec.adc_bits = 10;
            break;
        case ArchitectureKind::kDigitalLowRes:
            spec.rf_chains = 0;
            spec.adc_bits = 4;
            break;
    }
    return spec;
}

ScenarioConfig default_config() {
    ScenarioConfig cfg;
    validate(cfg);
    return cfg;
}

void validate(const ScenarioConfig& cfg) {
    require(cfg.cell_radius.value > 0, "cell_radius_m", "must be > 0");
    require(cfg.ue_noise_figure.value >= 0, "ue_noise_figure_db", "must be >= 0");
    require(cfg.thermal_noise_dbm_per_hz < 0, "thermal_noise_dbm_per_hz", "must be < 0");
    require(cfg.carrier_freq.value > 0, "carrier_freq_hz", "must be > 0");
    require(cfg.system_bandwidth.value > 0, "system_bandwidth_hz", "must be > 0");
    require(cfg.pss_duration.value > 0, "pss_duration_s", "must be > 0");
    require(cfg.pss_bandwidth.value > 0, "pss_bandwidth_hz", "must be > 0");
    require(cfg.subcarrier_spacing.value > 0, "subcarrier_spacing_hz", "must be > 0");
    require(cfg.ss_burst_period.value > 0, "ss_burst_period_s", "must be > 0");
    require(cfg.ss_burst_duration.value > 0, "ss_burst_duration_s", "must be > 0");
    require(cfg.ss_burst_duration.value <= cfg.ss_burst_period.value, "ss_burst_duration_s",
            "burst duration exceeds the burst period");
    require(cfg.ss_blocks_per_burst >= 1 && cfg.ss_blocks_per_burst <= 32, "ss_blocks_per_burst",
            "must be in [1, 32]");
    require(cfg.fa_rate_per_cycle > 0 && cfg.fa_rate_per_cycle < 1, "fa_rate_per_cycle",
            "must be in (0, 1)");
    require(cfg.n_pss_sequences >= 1, "n_pss_sequences", "must be >= 1");
    require(cfg.n_freq_offset_hyp >= 1, "n_freq_offset_hyp", "must be >= 1");
    require(cfg.gnb_array.n_az >= 1 && cfg.gnb_array.n_el >= 1, "gnb_array", "dims must be >= 1");
    require(cfg.ue_array.n_az >= 1 && cfg.ue_array.n_el >= 1, "ue_array", "dims must be >= 1");
    require(cfg.gnb_array.spacing_wavelengths > 0, "gnb_array_spacing_wl", "must be > 0");
    require(cfg.ue_array.spacing_wavelengths > 0, "ue_array_spacing_wl", "must be > 0");
    require(cfg.gnb_rf_chains >= 1, "gnb_rf_chains", "must be >= 1");
    require(cfg.gnb_array.n_directions() % cfg.gnb_rf_chains == 0, "gnb_rf_chains",
            "must divide the gNB direction count");
    // One SS burst must cover all gNB directions; otherwise the per-pass
    // delay arithmetic does not hold.
    require(cfg.gnb_array.n_directions() <= cfg.ss_blocks_per_burst * cfg.gnb_rf_chains,
            "ss_blocks_per_burst", "one burst cannot cover all gNB directions");
    require(cfg.lo_error_ppm >= 0, "lo_error_ppm", "must be >= 0");
    require(cfg.max_speed_kmh >= 0, "max_speed_kmh", "must be >= 0");
    require(cfg.n_drops >= 1, "n_drops", "must be >= 1");
    require(cfg.signal_dims() >= 2, "pss_bandwidth_hz", "PSS band must span >= 2 sub-carriers");
}

namespace {

// Field table driving parse/serialize; keeps the two in lockstep.
struct FieldDef {
    const char* key;
    bool is_integer;
    double (*get)(const ScenarioConfig&);
    void (*set)(ScenarioConfig&, double);
};

const FieldDef kFields[] = {
    {"cell_radius_m", false, [](const ScenarioConfig& c) { return c.cell_radius.value; },
     [](ScenarioConfig& c, double v) { c.cell_radius.value = v; }},
    {"tx_power_dbm", false, [](const ScenarioConfig& c) { return c.tx_power.value; },
     [](ScenarioConfig& c, double v) { c.tx_power.value = v; }},
    {"eirp_dbm", false, [](const ScenarioConfig& c) { return c.eirp.value; },
     [](ScenarioConfig& c, double v) { c.eirp.value = v; }},
    {"ue_noise_figure_db", false, [](const ScenarioConfig& c) { return c.ue_noise_figure.value; },
     [](ScenarioConfig& c, double v) { c.ue_noise_figure.value = v; }},
    {"thermal_noise_dbm_per_hz", false,
     [](const ScenarioConfig& c) { return c.thermal_noise_dbm_per_hz; },
     [](ScenarioConfig& c, double v) { c.thermal_noise_dbm_per_hz = v; }},
    {"carrier_freq_hz", false, [](const ScenarioConfig& c) { return c.carrier_freq.value; },
     [](ScenarioConfig& c, double v) { c.carrier_freq.value = v; }},
    {"system_bandwidth_hz", false,
     [](const ScenarioConfig& c) { return c.system_bandwidth.value; },
     [](ScenarioConfig& c, double v) { c.system_bandwidth.value = v; }},
    {"pss_duration_s", false, [](const ScenarioConfig& c) { return c.pss_duration.value; },
     [](ScenarioConfig& c, double v) { c.pss_duration.value = v; }},
    {"pss_bandwidth_hz", false, [](const ScenarioConfig& c) { return c.pss_bandwidth.value; },
     [](ScenarioConfig& c, double v) { c.pss_bandwidth.value = v; }},
    {"subcarrier_spacing_hz", false,
     [](const ScenarioConfig& c) { return c.subcarrier_spacing.value; },
     [](ScenarioConfig& c, double v) { c.subcarrier_spacing.value = v; }},
    {"ss_burst_period_s", false, [](const ScenarioConfig& c) { return c.ss_burst_period.value; },
     [](ScenarioConfig& c, double v) { c.ss_burst_period.value = v; }},
    {"ss_burst_duration_s", false,
     [](const ScenarioConfig& c) { return c.ss_burst_duration.value; },
     [](ScenarioConfig& c, double v) { c.ss_burst_duration.value = v; }},
    {"ss_blocks_per_burst", true,
     [](const ScenarioConfig& c) { return static_cast<double>(c.ss_blocks_per_burst); },
     [](ScenarioConfig& c, double v) { c.ss_blocks_per_burst = static_cast<int>(v); }},
    {"fa_rate_per_cycle", false, [](const ScenarioConfig& c) { return c.fa_rate_per_cycle; },
     [](ScenarioConfig& c, double v) { c.fa_rate_per_cycle = v; }},
    {"n_pss_sequences", true,
     [](const ScenarioConfig& c) { return static_cast<double>(c.n_pss_sequences); },
     [](ScenarioConfig& c, double v) { c.n_pss_sequences = static_cast<int>(v); }},
    {"n_freq_offset_hyp", true,
     [](const ScenarioConfig& c) { return static_cast<double>(c.n_freq_offset_hyp); },
     [](ScenarioConfig& c, double v) { c.n_freq_offset_hyp = static_cast<int>(v); }},
    {"gnb_array_az", true,
     [](const ScenarioConfig& c) { return static_cast<double>(c.gnb_array.n_az); },
     [](ScenarioConfig& c, double v) { c.gnb_array.n_az = static_cast<int>(v); }},
    {"gnb_array_el", true,
     [](const ScenarioConfig& c) { return static_cast<double>(c.gnb_array.n_el); },
     [](ScenarioConfig& c, double v) { c.gnb_array.n_el = static_cast<int>(v); }},
    {"gnb_array_spacing_wl", false,
     [](const ScenarioConfig& c) { return c.gnb_array.spacing_wavelengths; },
     [](ScenarioConfig& c, double v) { c.gnb_array.spacing_wavelengths = v; }},
    {"ue_array_az", true,
     [](const ScenarioConfig& c) { return static_cast<double>(c.ue_array.n_az); },
     [](ScenarioConfig& c, double v) { c.ue_array.n_az = static_cast<int>(v); }},
    {"ue_array_el", true,
     [](const ScenarioConfig& c) { return static_cast<double>(c.ue_array.n_el); },
     [](ScenarioConfig& c, double v) { c.ue_array.n_el = static_cast<int>(v); }},
    {"ue_array_spacing_wl", false,
     [](const ScenarioConfig& c) { return c.ue_array.spacing_wavelengths; },
     [](ScenarioConfig& c, double v) { c.ue_array.spacing_wavelengths = v; }},
    {"gnb_rf_chains", true,
     [](const ScenarioConfig& c) { return static_cast<double>(c.gnb_rf_chains); },
     [](ScenarioConfig& c, double v) { c.gnb_rf_chains = static_cast<int>(v); }},
    {"lo_error_ppm", false, [](const ScenarioConfig& c) { return c.lo_error_ppm; },
     [](ScenarioConfig& c, double v) { c.lo_error_ppm = v; }},
    {"max_speed_kmh", false, [](const ScenarioConfig& c) { return c.max_speed_kmh; },
     [](ScenarioConfig& c, double v) { c.max_speed_kmh = v; }},
    {"n_drops", true, [](const ScenarioConfig& c) { return static_cast<double>(c.n_drops); },
     [](ScenarioConfig& c, double v) { c.n_drops = static_cast<long>(v); }},
};

}  // namespace

LoadedScenario parse_config(const std::string& text) {
    std::map<std::string, std::string> entries;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (entries.count(key) != 0) {
            fail(key, "duplicate entry");
        }
        entries[key] = value;
    }

    LoadedScenario out;
    std::map<std::string, std::string> sources;
    for (const FieldDef& field : kFields) {
        const auto it = entries.find(field.key);
        if (it == entries.end()) {
            sources[field.key] = "default";
            continue;
        }
        if (field.is_integer) {
            field.set(out.config, static_cast<double>(parse_integer(field.key, it->second)));
        } else {
            field.set(out.config, parse_number(field.key, it->second));
        }
        sources[field.key] = "file";
        entries.erase(it);
    }

    // rng_seed is a full 64-bit value; parse it without a double round-trip.
    sources["rng_seed"] = "default";
    if (const auto it = entries.find("rng_seed"); it != entries.end()) {
        try {
            out.config.rng_seed = std::stoull(it->second);
        } catch (const std::exception&) {
            fail("rng_seed", "not an unsigned integer: '" + it->second + "'");
        }
        sources["rng_seed"] = "file";
        entries.erase(it);
    }
    if (!entries.empty()) {
        fail(entries.begin()->first, "unknown key");
    }

    if (const char* env = std::getenv(kSeedEnvVar)) {
        try {
            out.config.rng_seed = std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string(kSeedEnvVar) +
                                        ": not an unsigned integer: '" + env + "'");
        }
        sources["rng_seed"] = "env";
    }

    validate(out.config);

    for (const FieldDef& field : kFields) {
        out.provenance.push_back({field.key, format_full(field.get(out.config)),
                                  sources[field.key]});
    }
    out.provenance.push_back(
        {"rng_seed", std::to_string(out.config.rng_seed), sources["rng_seed"]});
    return out;
}

LoadedScenario load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    out << "# beamsweep scenario configuration\n";
    for (const FieldDef& field : kFields) {
        out << field.key << " = ";
        if (field.is_integer) {
            out << static_cast<long long>(field.get(cfg));
        } else {
            out << format_full(field.get(cfg));
        }
        out << "\n";
    }
    out << "rng_seed = " << cfg.rng_seed << "\n";
    return out.str();
}

}  // namespace beamsweep
