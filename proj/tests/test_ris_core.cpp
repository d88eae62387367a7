// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "ewris/ris_core.hpp"

using namespace ewris;
using doctest::Approx;

TEST_CASE("discrete phase grid")
{
    const RVec d1 = discrete_phase_set(1);
    REQUIRE(d1.size() == 2);
    CHECK(d1[0] == 0.0);
    CHECK(d1[1] == Approx(kPi));
    const RVec d2 = discrete_phase_set(2);
    REQUIRE(d2.size() == 4);
    CHECK(d2[1] == Approx(kPi / 2));
    CHECK(d2[3] == Approx(3 * kPi / 2));
    for (int b = 1; b <= 6; ++b) {
        const RVec s = discrete_phase_set(b);
        CHECK(s.size() == (std::size_t{1} << b));
        for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] - s[i - 1] == Approx(kTwoPi / s.size()));
    }
    CHECK_THROWS(discrete_phase_set(0));
}

TEST_CASE("phase quantiser")
{
    for (int b = 1; b <= 4; ++b)
        for (double g : discrete_phase_set(b)) CHECK(quantize_phase(g, b) == g);
    CHECK(quantize_phase(kPi / 2 + 1e-9, 1) == Approx(kPi));
    CHECK(quantize_phase(kPi / 2, 1) == Approx(kPi)); // tie goes up
    CHECK(quantize_phase(kPi / 2 - 1e-9, 1) == 0.0);
    CHECK(quantize_phase(-0.1, 2) == 0.0);
    CHECK(quantize_phase(kTwoPi - 0.1, 1) == 0.0);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> th(-10.0, 10.0);
    for (int b = 1; b <= 3; ++b) {
        double worst = 0.0;
        for (int i = 0; i < 1000000; ++i) {
            const double t = th(rng);
            const double q = quantize_phase(t, b);
            worst = std::max(worst, std::abs(wrap_pi(t - q)));
        }
        CHECK(worst <= kPi / (1 << b) + 1e-12);
        CHECK(worst == Approx(kPi / (1 << b)).epsilon(1e-5));
    }
}

TEST_CASE("configuration invariants")
{
    const double eff = 0.9;
    const auto ok = RisConfiguration::make(1, 2.0, {1, 0}, {kPi, 0.0}, {0.0, eff}, {0, 1}, eff);
    CHECK(ok.reflective_count() == 1);
    const CVec r = ok.reflection();
    CHECK(std::abs(r[0] - cplx{-2.0, 0.0}) < 1e-12);
    CHECK(r[1] == cplx{});
    // overlapping supports
    CHECK_THROWS_AS(RisConfiguration::make(1, 1.0, {1, 0}, {0.0, 0.0}, {eff, eff}, {0, 0}, eff), std::invalid_argument);
    // off-grid phase
    CHECK_THROWS_AS(RisConfiguration::make(1, 1.0, {1, 0}, {1.0, 0.0}, {0.0, eff}, {0, 0}, eff), std::invalid_argument);
    // rho below one
    CHECK_THROWS_AS(RisConfiguration::make(1, 0.5, {1, 0}, {0.0, 0.0}, {0.0, eff}, {0, 0}, eff), std::invalid_argument);
    // absorptive value other than the efficiency
    CHECK_THROWS_AS(RisConfiguration::make(1, 1.0, {0, 0}, {0.0, 0.0}, {0.5, eff}, {0, 0}, eff), std::invalid_argument);
    // size mismatch
    CHECK_THROWS_AS(RisConfiguration::make(1, 1.0, {0}, {0.0, 0.0}, {eff}, {0}, eff), std::invalid_argument);
    // continuous phases accept any angle in [0, 2pi)
    CHECK_NOTHROW(RisConfiguration::make(0, 1.0, {1}, {1.234}, {0.0}, {0}, eff));
    auto inactive = ok;
    inactive.active = false;
    for (const auto &x : inactive.reflection()) CHECK(x == cplx{});
}

TEST_CASE("harvested power")
{
    const double s2 = 1e-12, eta = 0.9, eff = 0.9;
    CHECK(harvested_power({0, 0}, {0.0, 0.0}, {{1, 0}, {0, 1}}, s2, eta) == Approx(eta * s2));
    CHECK(harvested_power({0}, {eff}, {{1, 0}}, s2, eta) == Approx(eta * eff * eff + eta * s2));
    // opposite phasors: the switch folds the second onto the first
    const CVec z{{1e-3, 0}, {-1e-3, 0}};
    const double single = harvested_power({0}, {eff}, {z[0]}, 0.0, eta);
    CHECK(harvested_power({0, 1}, {eff, eff}, z, 0.0, eta) == Approx(4.0 * single));
    CHECK(harvested_power({0, 0}, {eff, eff}, z, 0.0, eta) == Approx(0.0));
    CHECK_THROWS_AS(harvested_power({0}, {eff, eff}, z, 0.0, eta), std::invalid_argument);
    Rng r1(3), r2(3);
    CHECK(harvested_power({0, 1}, {eff, eff}, z, s2, eta, r1) == harvested_power({0, 1}, {eff, eff}, z, s2, eta, r2));
    // sampled mode is unbiased
    Rng rng(8);
    double acc = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i) acc += harvested_power({0}, {eff}, {cplx{1e-6, 0}}, 1e-12, eta, rng);
    CHECK(acc / n == Approx(harvested_power({0}, {eff}, {cplx{1e-6, 0}}, 1e-12, eta)).epsilon(0.01));
}

TEST_CASE("budget bookkeeping")
{
    PowerModel pm;
    CHECK(available_power(1e-3, pm, 2500, 1) == Approx(0.9e-3));
    pm.controller_w = 1e-3;
    pm.dc_bias_w = 2e-3;
    pm.tech = ElementTech::Pin;
    CHECK(available_power(0.0, pm, 100, 2) == Approx(-(3e-3 + 100 * 2 * pm.c_pin_w_per_bit)));
    CHECK(sustainability_check(1e-6));
    CHECK_FALSE(sustainability_check(0.0));
    CHECK_FALSE(sustainability_check(-1.0));
    CHECK(feasible_amplification(0.0, 10, 1e-3, 10) == 1.0);
    CHECK(feasible_amplification(1e9, 10, 1e-3, 10) == 10.0);
    CHECK(feasible_amplification(3 * 10 * 1e-6, 10, 1e-3, 10) == Approx(2.0));
    CHECK_THROWS(feasible_amplification(1.0, 0, 1e-3, 10));
    double prev = 0.0;
    for (double pa = 0.0; pa < 1e-2; pa += 1e-4) {
        const double r = feasible_amplification(pa, 50, 1e-3, 10);
        CHECK(r >= prev);
        CHECK(r <= 10.0);
        prev = r;
    }
}

TEST_CASE("budget settles energy conservation")
{
    PowerModel pm;
    pm.controller_w = 1e-4;
    pm.dc_bias_w = 5e-5;
    pm.tech = ElementTech::Varactor;
    pm.c_var_w = 1e-6;
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> pk(0.0, 5e-3), in(1e-9, 1e-4), duty(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double p = pk(rng), d = duty(rng), refl = in(rng);
        const Budget b = settle_budget(p, refl, 40, pm, 100, 1, d);
        const double circ = pm.controller_w + pm.dc_bias_w + 100 * pm.c_var_w;
        CHECK(b.available_w + circ == Approx(pm.eta2 * p).epsilon(1e-12));
        CHECK(b.available_w == Approx(b.amplification_w + b.surplus_w).epsilon(1e-12));
        CHECK(b.sustainable == (b.available_w > 0.0));
        if (b.sustainable) CHECK(b.surplus_w >= -1e-15);
        CHECK(b.rho >= 1.0);
        CHECK(b.rho <= pm.rho_max);
    }
}

TEST_CASE("incident field")
{
    CMat h(2, 3);
    for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t n = 0; n < 3; ++n) h(t, n) = std::polar(1e-3 * (n + 1), 0.3 * t + 0.7 * n);
    const CVec w{{0.6, 0.0}, {0.0, 0.8}};
    const CVec z = incident_field(h, w, 4.0);
    for (std::size_t n = 0; n < 3; ++n) {
        const cplx want = 2.0 * (std::conj(h(0, n)) * w[0] + std::conj(h(1, n)) * w[1]);
        CHECK(std::abs(z[n] - want) < 1e-15);
    }
}
