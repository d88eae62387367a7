// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "ewris/metrics.hpp"
#include "oracle_values.hpp"

using namespace ewris;
using doctest::Approx;

namespace {

double grid_argmax(const AsymptoticParams &a, double step = 1e-4)
{
    double best = -1.0, arg = 0.0;
    for (int i = 1; i * step <= 1.0 + 1e-12; ++i) {
        const double p = i * step;
        const double v = power_gain(p, a);
        if (v > best) {
            best = v;
            arg = p;
        }
    }
    return arg;
}

// Element-by-element superposition, independent of the kernels.
double brute_snr(const ChannelSet &ch, const CVec &w, const std::vector<CVec> &phi, double pt, double su, double sr)
{
    cplx s{};
    for (std::size_t t = 0; t < w.size(); ++t) s += std::conj(ch.f[t]) * w[t];
    double noise = 0.0;
    for (std::size_t k = 0; k < phi.size(); ++k)
        for (std::size_t n = 0; n < phi[k].size(); ++n) {
            cplx in{};
            for (std::size_t t = 0; t < w.size(); ++t) in += std::conj(ch.h[k](t, n)) * w[t];
            s += std::conj(ch.g[k][n]) * phi[k][n] * in;
            noise += std::norm(ch.g[k][n]) * std::norm(phi[k][n]);
        }
    return pt * std::norm(s) / (noise * sr + su);
}

} // namespace

TEST_CASE("snr special cases")
{
    ChannelSet ch;
    ch.f = {{3e-4, 1e-4}, {-2e-4, 0}};
    ch.h = {CMat(2, 3)};
    ch.g = {CVec(3, cplx{1e-3, 0})};
    const CVec w{{0.6, 0}, {0, 0.8}};
    cplx d = std::conj(ch.f[0]) * w[0] + std::conj(ch.f[1]) * w[1];
    CHECK(snr(ch, w, {CVec(3)}, 2.0, 1e-12, 1e-12) == Approx(2.0 * std::norm(d) / 1e-12));

    ChannelSet s1;
    s1.f = {cplx{}};
    s1.h = {CMat(1, 1)};
    s1.h[0](0, 0) = {2e-3, 1e-3};
    s1.g = {CVec{cplx{0, 5e-4}}};
    const cplx phi = std::polar(3.0, 0.7);
    const double want = 4.0 * std::norm(std::conj(s1.g[0][0]) * phi * std::conj(s1.h[0](0, 0))) /
                        (std::norm(s1.g[0][0] * phi) * 1e-10 + 1e-12);
    CHECK(snr(s1, {cplx{1, 0}}, {CVec{phi}}, 4.0, 1e-12, 1e-10) == Approx(want).epsilon(1e-12));
    CHECK_THROWS(snr(s1, {cplx{1, 0}, cplx{}}, {CVec{phi}}, 4.0, 1e-12, 1e-10));
}

TEST_CASE("snr matches brute-force superposition")
{
    std::mt19937_64 rng(3);
    std::normal_distribution<double> n01;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t nt = 1 + trial % 4, nr = 1 + (trial * 7) % 64, nk = 1 + trial % 2;
        ChannelSet ch;
        ch.f.resize(nt);
        for (auto &x : ch.f) x = 1e-4 * cplx{n01(rng), n01(rng)};
        std::vector<CVec> phi(nk);
        for (std::size_t k = 0; k < nk; ++k) {
            CMat h(nt, nr);
            for (auto &x : h.data) x = 1e-3 * cplx{n01(rng), n01(rng)};
            CVec g(nr);
            for (auto &x : g) x = 1e-3 * cplx{n01(rng), n01(rng)};
            ch.h.push_back(h);
            ch.g.push_back(g);
            phi[k].resize(nr);
            for (auto &x : phi[k]) x = (rng() % 3 == 0) ? cplx{} : std::polar(1.0 + 3.0 * (rng() % 4), 0.1 * (rng() % 63));
        }
        CVec w(nt);
        for (auto &x : w) x = {n01(rng), n01(rng)};
        const double ref = brute_snr(ch, w, phi, 1.5, 1e-12, 1e-11);
        for (Exec e : {Exec::Serial, Exec::Parallel})
            REQUIRE(snr(ch, w, phi, 1.5, 1e-12, 1e-11, e) == Approx(ref).epsilon(1e-10));
    }
}

TEST_CASE("spectrum and energy efficiency")
{
    CHECK(spectrum_efficiency(0.0) == 0.0);
    CHECK(spectrum_efficiency(1.0) == Approx(1.0));
    CHECK(spectrum_efficiency(3.0) == Approx(2.0));
    CHECK_THROWS(spectrum_efficiency(-1.0));
    double prev = -1.0;
    for (double g = 0.0; g < 1e6; g = g * 1.7 + 0.1) {
        CHECK(spectrum_efficiency(g) > prev);
        prev = spectrum_efficiency(g);
    }
    CHECK(energy_efficiency(4.0, 2.0) == Approx(2.0));
    CHECK(energy_efficiency(4.0, 4.0) == Approx(1.0));
    CHECK(energy_efficiency(4.0, 1.0) / energy_efficiency(4.0, 1.0, 0.5) == Approx(1.5));
    for (double k : {0.5, 2.0, 7.0}) CHECK(energy_efficiency(3.0, k * 1.0, k * 0.3) == Approx(energy_efficiency(3.0, 1.0, 0.3) / k));
    CHECK_THROWS(energy_efficiency(1.0, 0.0));
}

TEST_CASE("power gain as printed")
{
    AsymptoticParams a;
    a.n_r = 1e6;
    CHECK(power_gain(1e-12, a) == Approx(0.0).epsilon(1e-6));
    CHECK(power_gain(1.0, a) == 0.0);
    // the printed expression peaks at its own stationary point
    CHECK(grid_argmax(a) == Approx(oracle::kGainArgmaxNoCircuit).epsilon(1e-9));
    const OptimalP st = power_gain_stationary(a);
    REQUIRE(st.valid);
    CHECK(st.p == Approx(1.0 / 3.0));
    CHECK(std::abs(grid_argmax(a) - st.p) <= 1e-3);

    AsymptoticParams b;
    b.n_r = 1e4;
    b.h = 1e-3;
    b.controller_w = 2.0;
    CHECK(grid_argmax(b) == Approx(oracle::kGainArgmaxCircuit).epsilon(1e-9));
    CHECK(std::abs(power_gain_stationary(b).p - grid_argmax(b)) <= 1e-3);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int tested = 0;
    while (tested < 100) {
        AsymptoticParams r;
        r.absorb_eff = 0.5 + 0.5 * u(rng);
        r.eta1 = 0.5 + 0.5 * u(rng);
        r.eta2 = 0.5 + 0.5 * u(rng);
        r.n_r = std::pow(10.0, 2.0 + 4.0 * u(rng));
        r.h = std::pow(10.0, -4.0 + 2.0 * u(rng));
        r.controller_w = u(rng) * std::pow(r.n_r * r.h * r.efficiency(), 2) * 0.3;
        const OptimalP s = power_gain_stationary(r);
        if (!s.valid) continue;
        // large circuit terms can push the global maximum to the p = 1 end
        if (power_gain(1.0, r) >= power_gain(s.p, r)) continue;
        ++tested;
        REQUIRE(std::abs(grid_argmax(r) - s.p) <= 1e-3);
        REQUIRE(power_gain(s.p, r) >= power_gain(s.p - 1e-3, r));
        REQUIRE(power_gain(s.p, r) >= power_gain(s.p + 1e-3, r));
    }
}

TEST_CASE("closed-form optimal proportion")
{
    AsymptoticParams a;
    a.n_r = 1e8;
    const OptimalP p = optimal_p(a);
    REQUIRE(p.valid);
    CHECK(p.p == Approx(oracle::kPoptLimit).epsilon(1e-6));
    CHECK(optimal_p_limit(0.729) == Approx(oracle::kPoptLimit).epsilon(1e-12));
    CHECK(optimal_p_limit(1.0) == Approx(1.0 / 3.0));
    a.absorb_eff = a.eta1 = a.eta2 = 1.0;
    CHECK(optimal_p(a).p == Approx(1.0 / 3.0).epsilon(1e-6));
    AsymptoticParams neg;
    neg.n_r = 10;
    neg.h = 1e-3;
    neg.controller_w = 1.0;
    CHECK_FALSE(optimal_p(neg).valid);
    CHECK_FALSE(power_gain_stationary(neg).valid);
}

TEST_CASE("optimal half-angle and maximum gain")
{
    CHECK(optimal_chi(oracle::kPoptLimit, 1) == Approx(oracle::kChiOptD1).epsilon(1e-12));
    const double c = 0.729;
    CHECK(optimal_chi(optimal_p_limit(c), 1) == Approx((2 * c - 1) * kPi / (3 * c * 2)));
    CHECK(optimal_chi(1.0, 3) == Approx(kPi / 8));
    CHECK(optimal_chi(0.3, 20) < 1e-6);
    CHECK(max_power_gain(10.0, c) == Approx(oracle::kMaxGainRho10).epsilon(1e-10));
    CHECK(max_power_gain(10.0, 0.5) == Approx(0.0));
    CHECK(max_power_gain(20.0, c) == Approx(4.0 * max_power_gain(10.0, c)));
}

TEST_CASE("sustainability boundary")
{
    AsymptoticParams free;
    const auto fb = sustainability_boundary(free);
    CHECK_FALSE(fb.empty);
    CHECK(fb.p_max == Approx(1.0));
    AsymptoticParams heavy;
    heavy.n_r = 100;
    heavy.h = 1e-4;
    heavy.controller_w = 1.0;
    CHECK(sustainability_boundary(heavy).empty);

    AsymptoticParams b;
    b.n_r = 1e4;
    b.h = 1e-3;
    b.controller_w = 2.0;
    const auto bb = sustainability_boundary(b);
    CHECK(bb.p_max == Approx(oracle::kSustainPmaxCircuit).epsilon(1e-9));
    double grid_max = 0.0;
    for (int i = 0; i <= 10000; ++i)
        if (sustainable_at(i * 1e-4, b)) grid_max = i * 1e-4;
    CHECK(std::abs(grid_max - bb.p_max) <= 1e-4);
    CHECK(bb.p_opt_feasible == sustainable_at(optimal_p(b).p, b));
}

TEST_CASE("near-field region")
{
    CHECK(upd(0.95, oracle::kRisDiagonal) == Approx(oracle::kUpd).epsilon(1e-10));
    CHECK(rayleigh_distance(oracle::kRisDiagonal, 0.01) == Approx(oracle::kRayleigh).epsilon(1e-10));
    CHECK(upd(0.95, 2 * oracle::kRisDiagonal) == Approx(2 * oracle::kUpd));
    CHECK(upd(1 - 1e-9, 1.0) > 1e3);
    CHECK_THROWS(upd(1.0, 1.0));
    CHECK_THROWS(upd(0.5, 0.0));
    CHECK_THROWS(rayleigh_distance(1.0, 0.0));
    ScenarioConfig cfg;
    CHECK(cfg.ris[0].diagonal(cfg.lambda) == Approx(oracle::kRisDiagonal).epsilon(1e-10));
}

TEST_CASE("asymptotic parameters from the scenario")
{
    ScenarioConfig cfg;
    cfg.power.tech = ElementTech::Pin;
    const AsymptoticParams a = asymptotic_params(cfg, 1e4, 2);
    CHECK(a.n_r == 1e4);
    CHECK(a.per_element_w == Approx(2 * cfg.power.c_pin_w_per_bit));
    CHECK(a.h > 0.0);
    cfg.tx_power_w = 4.0;
    CHECK(asymptotic_params(cfg, 1e4, 2).h == Approx(2.0 * a.h));
}
