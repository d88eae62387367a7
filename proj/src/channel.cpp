// SPDX-License-Identifier: Apache-2.0
#include "ewris/channel.hpp"

#include <stdexcept>

#include "ewris/kernels.hpp"

namespace ewris {

namespace {

double wallis(double q)
{
    const double r = std::round(q);
    if (std::abs(q - r) < 1e-12 && r >= 0.0) {
        auto n = static_cast<int>(r);
        double w = (n % 2 == 0) ? 0.5 * kPi : 1.0;
        for (int m = (n % 2 == 0) ? 2 : 3; m <= n; m += 2) w *= static_cast<double>(m - 1) / m;
        return w;
    }
    return 0.5 * std::beta(0.5 * (q + 1.0), 0.5);
}

} // namespace

double radiation_gain(double theta, double q)
{
    if (q < 0.0) throw std::domain_error("radiation_gain: negative exponent");
    if (!(std::abs(theta) <= 0.5 * kPi)) return 0.0;
    return 2.0 * std::pow(std::cos(theta), q) / wallis(q);
}

cplx los_coefficient(const Point3 &p1, const Point3 &p2, double g_tx, double g_rx, double lambda)
{
    const double d = distance(p1, p2);
    if (!(d > 0.0)) throw std::invalid_argument("los_coefficient: coincident points");
    const double mag = std::sqrt(g_tx * g_rx) * lambda / (4.0 * kPi * d);
    const double cycles = d / lambda;
    return std::polar(mag, -kTwoPi * (cycles - std::floor(cycles)));
}

CVec direct_los(const ScenarioConfig &cfg, const Point3 &ue)
{
    CVec f(cfg.n_tx());
    for (std::size_t t = 0; t < cfg.n_tx(); ++t) {
        const Point3 &tx = cfg.bs_antennas[t];
        f[t] = los_coefficient(tx, ue, cfg.bs_pattern.gain(ue - tx), cfg.ue_pattern.gain(tx - ue), cfg.lambda);
    }
    return f;
}

ChannelSet build_channels(const ScenarioConfig &cfg, const Point3 &ue_offset, Exec exec)
{
    const Point3 ue = cfg.ue + ue_offset;
    ChannelSet ch;
    ch.f = direct_los(cfg, ue);
    for (const auto &panel : cfg.ris) {
        const auto elems = panel.elements(cfg.lambda);
        kernels::PanelLinks in;
        in.tx = &cfg.bs_antennas;
        in.elements = &elems;
        in.ue = ue;
        in.tx_pattern = &cfg.bs_pattern;
        in.ue_pattern = &cfg.ue_pattern;
        in.element_pattern = cfg.ris_pattern;
        in.element_pattern.boresight = panel.normal;
        in.lambda = cfg.lambda;
        CMat h;
        CVec g;
        kernels::ris_channels(in, h, g, exec);
        ch.h.push_back(std::move(h));
        ch.g.push_back(std::move(g));
    }
    return ch;
}

CVec nlos_component(const ScenarioConfig &cfg, double rician_db, Rng &rng)
{
    CVec out(cfg.n_tx(), cplx{});
    if (std::isinf(rician_db) && rician_db > 0.0) return out;
    const double k = std::pow(10.0, rician_db / 10.0);
    const CVec los = direct_los(cfg, cfg.ue);
    std::normal_distribution<double> n01(0.0, 1.0);
    for (std::size_t t = 0; t < out.size(); ++t) {
        const double s = std::sqrt(std::norm(los[t]) / k / 2.0);
        const double re = n01(rng);
        const double im = n01(rng);
        out[t] = {s * re, s * im};
    }
    return out;
}

double vec_norm(const CVec &v)
{
    double s = 0.0;
    for (const auto &x : v) s += std::norm(x);
    return std::sqrt(s);
}

CVec apply_ce_error(const CVec &f, double sigma_ce, Rng &rng)
{
    if (sigma_ce < 0.0) throw std::domain_error("apply_ce_error: negative std");
    CVec out = f;
    if (sigma_ce == 0.0 || f.empty()) return out;
    const double s = sigma_ce * vec_norm(f) / std::sqrt(static_cast<double>(f.size())) / std::sqrt(2.0);
    std::normal_distribution<double> n01(0.0, 1.0);
    for (auto &x : out) {
        const double re = n01(rng);
        const double im = n01(rng);
        x += cplx{s * re, s * im};
    }
    return out;
}

} // namespace ewris
