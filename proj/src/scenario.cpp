// SPDX-License-Identifier: Apache-2.0
#include "ewris/scenario.hpp"

#include <algorithm>
#include <cmath>

#include "ewris/channel.hpp"

namespace ewris {

double AntennaPattern::gain(const Vec3 &dir) const
{
    const double g0 = std::pow(10.0, gain_dbi / 10.0);
    const double nb = norm(boresight);
    if (nb == 0.0) return g0;
    const double nd = norm(dir);
    if (nd == 0.0) return 0.0;
    const double c = std::clamp(dot(dir, boresight) / (nd * nb), -1.0, 1.0);
    const double theta = std::acos(c);
    if (normalized) return g0 * radiation_gain(theta, q);
    if (theta > 0.5 * kPi) return 0.0;
    return g0 * std::pow(c, q);
}

std::vector<Point3> RisPanel::elements(double lambda) const
{
    const double s = pitch(lambda);
    const Vec3 n = normal / norm(normal);
    Vec3 e1 = row_axis - dot(row_axis, n) * n;
    e1 = e1 / norm(e1);
    const Vec3 e2 = cross(n, e1);
    std::vector<Point3> out;
    out.reserve(size());
    for (int r = 0; r < rows; ++r) {
        const double y = (r - 0.5 * (rows - 1)) * s;
        for (int c = 0; c < cols; ++c) {
            const double x = (c - 0.5 * (cols - 1)) * s;
            out.push_back(center + x * e1 + y * e2);
        }
    }
    return out;
}

double RisPanel::diagonal(double lambda) const
{
    const double s = pitch(lambda);
    return std::hypot(cols * s, rows * s);
}

std::vector<Point3> linear_array(const Point3 &c, int n, double spacing)
{
    std::vector<Point3> out;
    for (int i = 0; i < n; ++i) out.push_back(c + Vec3{(i - 0.5 * (n - 1)) * spacing, 0.0, 0.0});
    return out;
}

namespace {
void require(bool ok, const std::string &field, const std::string &what)
{
    if (!ok) throw ValidationError(field + ": " + what);
}
} // namespace

std::vector<std::string> validate(const ScenarioConfig &cfg)
{
    std::vector<std::string> warnings;
    require(std::isfinite(cfg.lambda) && cfg.lambda > 0.0, "lambda", "must be positive");
    require(!cfg.bs_antennas.empty(), "bs.antennas", "at least one antenna required");
    for (const auto &t : cfg.bs_antennas) require(finite(t), "bs.antennas", "non-finite position");
    require(!cfg.ris.empty(), "ris", "at least one RIS required");
    require(finite(cfg.ue), "ue", "non-finite position");
    for (std::size_t k = 0; k < cfg.ris.size(); ++k) {
        const auto &p = cfg.ris[k];
        const std::string f = "ris[" + std::to_string(k) + "]";
        require(p.rows >= 1 && p.cols >= 1, f + ".rows/cols", "must be >= 1");
        require(finite(p.center), f + ".center", "non-finite position");
        require(norm(p.normal) > 1e-12, f + ".normal", "degenerate normal");
        require(norm(cross(p.normal, p.row_axis)) > 1e-12, f + ".row_axis", "parallel to normal");
        const double s = p.pitch(cfg.lambda);
        require(std::isfinite(s) && s > 0.0, f + ".spacing", "must be positive");
        if (s < cfg.lambda / 10.0 - 1e-15 || s > cfg.lambda / 2.0 + 1e-15)
            warnings.push_back(f + ".spacing outside [lambda/10, lambda/2]");
        // the UE must not sit in the RIS plane
        require(std::abs(dot(cfg.ue - p.center, p.normal)) > 1e-9, "ue", "lies in the RIS plane");
    }
    auto nonneg = [](double v) { return std::isfinite(v) && v >= 0.0; };
    require(nonneg(cfg.loc_noise_std), "loc_noise_std", "must be >= 0");
    require(nonneg(cfg.ce_error_std), "ce_error_std", "must be >= 0");
    require(!std::isnan(cfg.rician_db), "rician_db", "must be a number or +inf");
    require(nonneg(cfg.ris_noise_w), "ris_noise_w", "must be >= 0");
    require(nonneg(cfg.ue_noise_w) && cfg.ue_noise_w > 0.0, "ue_noise_w", "must be > 0");
    require(nonneg(cfg.tx_power_w), "tx_power_w", "must be >= 0");
    require(cfg.phase_bits >= 1 && cfg.phase_bits <= 16, "phase_bits", "must be in [1, 16]");
    const auto &pm = cfg.power;
    require(pm.eta1 > 0.0 && pm.eta1 <= 1.0, "power.eta1", "must be in (0, 1]");
    require(pm.eta2 > 0.0 && pm.eta2 <= 1.0, "power.eta2", "must be in (0, 1]");
    require(pm.absorb_eff > 0.0 && pm.absorb_eff <= 1.0, "power.absorb_eff", "must be in (0, 1]");
    require(nonneg(pm.controller_w), "power.controller_w", "must be >= 0");
    require(nonneg(pm.dc_bias_w), "power.dc_bias_w", "must be >= 0");
    require(nonneg(pm.c_pin_w_per_bit), "power.c_pin_w_per_bit", "must be >= 0");
    require(nonneg(pm.c_var_w), "power.c_var_w", "must be >= 0");
    require(std::isfinite(pm.rho_max) && pm.rho_max >= 1.0, "power.rho_max", "must be >= 1");
    require(cfg.design.curve_gap > 0.0 && cfg.design.curve_gap <= 1.0, "design.curve_gap", "must be in (0, 1]");
    require(cfg.design.coupling_bits >= 0, "design.coupling_bits", "must be >= 0");
    require(cfg.design.factor_step > 0.0 && cfg.design.factor_step <= 0.5, "design.factor_step",
            "must be in (0, 0.5]");
    return warnings;
}

} // namespace ewris
