// SPDX-License-Identifier: Apache-2.0
#include "ewris/localization.hpp"

#include <stdexcept>

#include "ewris/kernels.hpp"

namespace ewris {

RVec distance_vector(const std::vector<Point3> &elements, const Point3 &u_hat)
{
    RVec d(elements.size());
    for (std::size_t n = 0; n < elements.size(); ++n) d[n] = distance(elements[n], u_hat);
    return d;
}

std::vector<std::uint8_t> le_switch_config(const RVec &d, double lambda)
{
    if (!(lambda > 0.0)) throw std::domain_error("le_switch_config: wavelength must be positive");
    std::vector<std::uint8_t> out(d.size());
    for (std::size_t n = 0; n < d.size(); ++n) {
        const double cycles = d[n] / lambda;
        const double phase = wrap_pi(kTwoPi * (cycles - std::floor(cycles)));
        out[n] = (phase > -0.5 * kPi && phase <= 0.5 * kPi) ? 0 : 1;
    }
    return out;
}

double indicator_power(const std::vector<std::uint8_t> &switch_pi, const CVec &g, double absorb_eff)
{
    if (switch_pi.size() != g.size()) throw std::invalid_argument("indicator_power: size mismatch");
    cplx a{}, b{};
    for (std::size_t n = 0; n < g.size(); ++n) (switch_pi[n] ? b : a) += g[n];
    const double s = absorb_eff * (std::abs(a) + std::abs(b));
    return s * s;
}

std::vector<Point3> make_grid(const Point3 &prior, double extent, double step)
{
    if (!(step > 0.0) || !(extent >= 0.0)) throw std::domain_error("make_grid: step > 0 and extent >= 0 required");
    const auto k = static_cast<int>(std::floor(extent / step + 1e-9));
    std::vector<Point3> out;
    out.reserve(static_cast<std::size_t>((2 * k + 1) * (2 * k + 1) * (2 * k + 1)));
    for (int i = -k; i <= k; ++i)
        for (int j = -k; j <= k; ++j)
            for (int l = -k; l <= k; ++l) out.push_back(prior + Vec3{i * step, j * step, l * step});
    return out;
}

LocationEstimate estimate_location(const ScenarioConfig &cfg, const ChannelSet &channels,
                                   const std::vector<Point3> &grid, std::size_t ris_index, Exec exec)
{
    if (grid.empty()) throw std::invalid_argument("estimate_location: empty grid");
    const auto elems = cfg.ris.at(ris_index).elements(cfg.lambda);
    RVec power;
    kernels::indicator_scan(elems, channels.g.at(ris_index), grid, cfg.lambda, cfg.power.absorb_eff, power, exec);
    LocationEstimate est;
    est.evaluations = grid.size();
    std::size_t best = 0, ties = 1;
    for (std::size_t i = 1; i < power.size(); ++i) {
        if (power[i] > power[best]) {
            best = i;
            ties = 1;
        } else if (power[i] == power[best]) {
            ++ties;
        }
    }
    est.index = best;
    est.position = grid[best];
    est.indicator_w = power[best];
    est.degenerate = ties > 1;
    if (grid.size() > 1) {
        double step = 0.0, ext = 0.0;
        for (const auto &p : grid) {
            const double dx = distance(p, grid.front());
            if (dx > 0.0 && (step == 0.0 || dx < step)) step = dx;
            ext = std::max(ext, std::abs(p.x - grid[grid.size() / 2].x));
        }
        est.grid_step = step;
        est.grid_extent = ext;
    }
    return est;
}

Point3 sample_location_noise(double sigma_l, Rng &rng)
{
    if (sigma_l < 0.0) throw std::domain_error("sample_location_noise: negative std");
    if (sigma_l == 0.0) return {};
    std::normal_distribution<double> n(0.0, sigma_l);
    const double x = n(rng);
    const double y = n(rng);
    const double z = n(rng);
    return {x, y, z};
}

} // namespace ewris
