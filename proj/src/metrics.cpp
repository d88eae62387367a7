// SPDX-License-Identifier: Apache-2.0
#include "ewris/metrics.hpp"

#include <stdexcept>

#include "ewris/kernels.hpp"

namespace ewris {

double snr(const ChannelSet &ch, const CVec &w, const std::vector<CVec> &phi, double p_t, double sigma_u2,
           double sigma_r2, Exec exec)
{
    if (w.size() != ch.f.size()) throw std::invalid_argument("snr: precoder length");
    if (phi.size() != ch.h.size() || ch.g.size() != ch.h.size()) throw std::invalid_argument("snr: RIS count");
    cplx s{};
    for (std::size_t t = 0; t < w.size(); ++t) s += std::conj(ch.f[t]) * w[t];
    double noise_gain = 0.0;
    CVec z;
    for (std::size_t k = 0; k < phi.size(); ++k) {
        if (phi[k].size() != ch.g[k].size() || ch.h[k].cols != ch.g[k].size() || ch.h[k].rows != w.size())
            throw std::invalid_argument("snr: RIS dimensions");
        kernels::incident(ch.h[k], w, 1.0, z, exec);
        const kernels::CascadeSum c = kernels::cascade(ch.g[k], phi[k], z, exec);
        s += c.field;
        noise_gain += c.noise_gain;
    }
    return p_t * std::norm(s) / (noise_gain * sigma_r2 + sigma_u2);
}

double snr(const ChannelSet &ch, const CVec &w, const std::vector<RisConfiguration> &configs, double p_t,
           double sigma_u2, double sigma_r2, Exec exec)
{
    std::vector<CVec> phi;
    phi.reserve(configs.size());
    for (const auto &c : configs) phi.push_back(c.reflection());
    return snr(ch, w, phi, p_t, sigma_u2, sigma_r2, exec);
}

double spectrum_efficiency(double gamma)
{
    if (!(gamma >= 0.0)) throw std::domain_error("spectrum_efficiency: negative SNR");
    return std::log2(1.0 + gamma);
}

double energy_efficiency(double se, double p_t, double p_external)
{
    const double total = p_t + p_external;
    if (!(total > 0.0)) throw std::domain_error("energy_efficiency: total power must be positive");
    return se / total;
}

AsymptoticParams asymptotic_params(const ScenarioConfig &cfg, double n_r, int bits)
{
    AsymptoticParams a;
    a.absorb_eff = cfg.power.absorb_eff;
    a.eta1 = cfg.power.eta1;
    a.eta2 = cfg.power.eta2;
    a.n_r = n_r;
    a.controller_w = cfg.power.controller_w;
    a.dc_bias_w = cfg.power.dc_bias_w;
    a.per_element_w = cfg.power.per_element_w(bits);
    a.rho = cfg.power.rho_max;
    Point3 bs{};
    for (const auto &t : cfg.bs_antennas) bs += t;
    bs = bs / static_cast<double>(cfg.n_tx());
    const Point3 c = cfg.ris.front().center;
    const double g_tx = cfg.bs_pattern.gain(c - bs);
    const double g_rx = cfg.ris_pattern.gain(bs - c);
    a.h = std::sqrt(cfg.tx_power_w) * std::abs(los_coefficient(bs, c, g_tx, g_rx, cfg.lambda));
    return a;
}

double power_gain(double p, const AsymptoticParams &a)
{
    const double c = a.efficiency();
    const double x = c * (1.0 - p);
    return p * x * x * a.n_r + a.circuit_w() * p / (a.n_r * a.h * a.h);
}

OptimalP optimal_p(const AsymptoticParams &a)
{
    const double disc = a.n_r * a.n_r * a.h * a.h - a.circuit_w();
    if (disc < 0.0) return {0.0, false};
    return {2.0 / 3.0 - std::sqrt(disc) / (3.0 * a.n_r * a.h * a.efficiency()), true};
}

double optimal_p_limit(double efficiency) { return 2.0 / 3.0 - 1.0 / (3.0 * efficiency); }

OptimalP power_gain_stationary(const AsymptoticParams &a)
{
    const double nhc = a.n_r * a.h * a.efficiency();
    const double k = a.circuit_w() / (nhc * nhc);
    const double disc = 1.0 - 3.0 * k;
    if (disc < 0.0) return {0.0, false};
    return {2.0 / 3.0 - std::sqrt(disc) / 3.0, true};
}

double optimal_chi(double p_opt, int bits) { return p_opt * kPi / static_cast<double>(1 << bits); }

double max_power_gain(double rho, double efficiency)
{
    const double v = 2.0 * rho / 3.0 - rho / (3.0 * efficiency);
    return v * v;
}

bool sustainable_at(double p, const AsymptoticParams &a)
{
    const double x = a.efficiency() * (1.0 - p) * a.n_r * a.h;
    return x * x > a.circuit_w();
}

SustainabilityBoundary sustainability_boundary(const AsymptoticParams &a, double tol)
{
    SustainabilityBoundary b;
    if (!sustainable_at(0.0, a)) {
        b.empty = true;
        b.p_max = 0.0;
        return b;
    }
    // the harvest term is decreasing in p, so the feasible set is [0, p_max)
    double lo = 0.0, hi = 1.0;
    if (sustainable_at(1.0, a)) {
        lo = hi = 1.0;
    } else {
        while (hi - lo > tol) {
            const double mid = 0.5 * (lo + hi);
            (sustainable_at(mid, a) ? lo : hi) = mid;
        }
    }
    b.p_max = hi;
    const OptimalP po = optimal_p(a);
    b.p_opt_feasible = po.valid && sustainable_at(po.p, a);
    return b;
}

double upd(double gamma_th, double l_r)
{
    if (!(gamma_th > 0.0 && gamma_th < 1.0)) throw std::domain_error("upd: threshold must lie in (0, 1)");
    if (!(l_r > 0.0)) throw std::domain_error("upd: aperture must be positive");
    const double g = std::pow(gamma_th, 2.0 / 3.0);
    return std::sqrt(g / (1.0 - g)) * l_r / 2.0;
}

double rayleigh_distance(double l_r, double lambda)
{
    if (!(l_r > 0.0 && lambda > 0.0)) throw std::domain_error("rayleigh_distance: non-positive input");
    return 2.0 * l_r * l_r / lambda;
}

} // namespace ewris
