/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cmath>

namespace beamsweep {

// Semantic unit wrappers for the quantities the link and power budgets
// mix: decibel ratios, absolute dBm powers, linear milliwatts, and the SI
// scalars. Conversions are explicit; no implicit unit crossings.
struct Db {
    double value = 0.0;
};

struct Dbm {
    double value = 0.0;
};

struct MilliWatts {
    double value = 0.0;
};

struct Hertz {
    double value = 0.0;
};

struct Seconds {
    double value = 0.0;
};

struct Meters {
    double value = 0.0;
};

inline double db_to_linear(Db g) { return std::pow(10.0, g.value / 10.0); }

inline Db linear_to_db(double ratio) { return Db{10.0 * std::log10(ratio)}; }

inline MilliWatts dbm_to_mw(Dbm p) { return MilliWatts{std::pow(10.0, p.value / 10.0)}; }

inline Dbm mw_to_dbm(MilliWatts p) { return Dbm{10.0 * std::log10(p.value)}; }

constexpr Db operator+(Db a, Db b) { return Db{a.value + b.value}; }
constexpr Db operator-(Db a, Db b) { return Db{a.value - b.value}; }
constexpr Db operator-(Db a) { return Db{-a.value}; }
constexpr Dbm operator+(Dbm p, Db g) { return Dbm{p.value + g.value}; }
constexpr Dbm operator-(Dbm p, Db g) { return Dbm{p.value - g.value}; }
constexpr Db operator-(Dbm a, Dbm b) { return Db{a.value - b.value}; }

constexpr MilliWatts operator+(MilliWatts a, MilliWatts b) { return MilliWatts{a.value + b.value}; }
constexpr MilliWatts operator*(double s, MilliWatts p) { return MilliWatts{s * p.value}; }

constexpr Seconds operator+(Seconds a, Seconds b) { return Seconds{a.value + b.value}; }
constexpr Seconds operator*(double s, Seconds t) { return Seconds{s * t.value}; }

// Energy in millijoule from DC power held for a duration.
constexpr double energy_mj(MilliWatts p, Seconds t) { return p.value * t.value; }

}  // namespace beamsweep
