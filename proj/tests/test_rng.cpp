/*
 * Copyright (c) 2026 beamsweep contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#include <cmath>
#include <set>
#include <vector>

#include "beamsweep/rng.hpp"
#include "doctest.h"

using namespace beamsweep;

TEST_CASE("streams are reproducible and index-distinct") {
    Rng a = Rng::stream(42, 7, 100);
    Rng b = Rng::stream(42, 7, 100);
    Rng c = Rng::stream(42, 7, 101);
    for (int i = 0; i < 64; ++i) {
        const uint64_t av = a.next_u64();
        CHECK(av == b.next_u64());
        CHECK(av != c.next_u64());
    }
    // Distinct salts decouple streams at the same index.
    Rng d = Rng::stream(42, 8, 100);
    Rng e = Rng::stream(42, 7, 100);
    CHECK(d.next_u64() != e.next_u64());
}

TEST_CASE("fork gives a prefix-stable family") {
    // The k-th child draws the same values no matter how many siblings
    // exist or in which order they are created.
    Rng parent = Rng::stream(5, 1, 0);
    std::vector<uint64_t> first;
    for (uint64_t k = 0; k < 8; ++k) {
        Rng child = parent.fork(k);
        first.push_back(child.next_u64());
    }
    for (uint64_t k = 8; k-- > 0;) {
        Rng child = parent.fork(k);
        CHECK(child.next_u64() == first[static_cast<std::size_t>(k)]);
    }
    const std::set<uint64_t> unique(first.begin(), first.end());
    CHECK(unique.size() == first.size());
}

TEST_CASE("uniform moments") {
    Rng rng(777);
    const long n = 200000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (long i = 0; i < n; ++i) {
        const double u = rng.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
        sum2 += u * u;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(mean == doctest::Approx(0.5).epsilon(0.005));
    CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.01));
}

TEST_CASE("normal and complex normal moments") {
    Rng rng(888);
    const long n = 200000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (long i = 0; i < n; ++i) {
        const double x = rng.normal();
        sum += x;
        sum2 += x * x;
    }
    CHECK(sum / n == doctest::Approx(0.0).epsilon(0.01));
    CHECK(std::abs(sum / n) < 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(sum2 / n == doctest::Approx(1.0).epsilon(0.02));

    double cpow = 0.0;
    double re = 0.0;
    for (long i = 0; i < n; ++i) {
        const auto z = rng.cnormal();
        cpow += std::norm(z);
        re += z.real();
    }
    CHECK(cpow / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(std::abs(re / n) < 3.0 / std::sqrt(2.0 * static_cast<double>(n)));
}

TEST_CASE("gamma sampler moments") {
    Rng rng(999);
    const double shape = 126.0;
    const long n = 50000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (long i = 0; i < n; ++i) {
        const double g = rng.gamma(shape);
        sum += g;
        sum2 += g * g;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(mean == doctest::Approx(shape).epsilon(0.005));
    CHECK(var == doctest::Approx(shape).epsilon(0.05));
}

TEST_CASE("exponential moments") {
    Rng rng(1010);
    const long n = 200000;
    double sum = 0.0;
    for (long i = 0; i < n; ++i) {
        sum += rng.exponential();
    }
    CHECK(sum / n == doctest::Approx(1.0).epsilon(0.01));
}
