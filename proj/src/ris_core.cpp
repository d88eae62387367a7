// SPDX-License-Identifier: Apache-2.0
#include "ewris/ris_core.hpp"

#include <stdexcept>

#include "ewris/kernels.hpp"

namespace ewris {

RVec discrete_phase_set(int bits)
{
    if (bits < 1) throw std::domain_error("discrete_phase_set: bits must be >= 1");
    const std::size_t m = std::size_t{1} << bits;
    RVec out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(m);
    return out;
}

double quantize_phase(double theta, int bits)
{
    if (bits < 1) throw std::domain_error("quantize_phase: bits must be >= 1");
    const double m = static_cast<double>(std::size_t{1} << bits);
    const double u = wrap_2pi(theta) * m / kTwoPi;
    double k = std::floor(u + 0.5);
    if (k >= m) k -= m;
    return kTwoPi * k / m;
}

std::size_t RisConfiguration::reflective_count() const
{
    std::size_t c = 0;
    for (auto r : reflective) c += r ? 1 : 0;
    return c;
}

CVec RisConfiguration::reflection() const
{
    CVec out(size(), cplx{});
    if (!active) return out;
    for (std::size_t n = 0; n < size(); ++n)
        if (reflective[n]) out[n] = std::polar(rho, phase[n]);
    return out;
}

void RisConfiguration::check(double absorb_eff) const
{
    const std::size_t n = reflective.size();
    if (phase.size() != n || absorptive.size() != n || switch_pi.size() != n)
        throw std::invalid_argument("configuration: size mismatch");
    if (bits < 0) throw std::invalid_argument("configuration: negative resolution");
    if (!(rho >= 1.0) || !std::isfinite(rho)) throw std::invalid_argument("configuration: rho must be >= 1");
    const double m = bits > 0 ? static_cast<double>(std::size_t{1} << bits) : 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (reflective[i] > 1 || switch_pi[i] > 1) throw std::invalid_argument("configuration: flag out of range");
        if (reflective[i]) {
            if (absorptive[i] != 0.0) throw std::invalid_argument("configuration: overlapping supports");
            if (!(phase[i] >= 0.0 && phase[i] < kTwoPi)) throw std::invalid_argument("configuration: phase range");
            if (bits > 0) {
                const double u = phase[i] * m / kTwoPi;
                if (std::abs(u - std::round(u)) > 1e-9 || kTwoPi * std::round(u) / m != phase[i])
                    throw std::invalid_argument("configuration: phase off the discrete grid");
            }
        } else if (absorptive[i] != 0.0 && absorptive[i] != absorb_eff) {
            throw std::invalid_argument("configuration: absorptive entry not in {0, efficiency}");
        }
    }
}

RisConfiguration RisConfiguration::make(int bits, double rho, std::vector<std::uint8_t> reflective, RVec phase,
                                        RVec absorptive, std::vector<std::uint8_t> switch_pi, double absorb_eff)
{
    RisConfiguration c;
    c.bits = bits;
    c.rho = rho;
    c.reflective = std::move(reflective);
    c.phase = std::move(phase);
    c.absorptive = std::move(absorptive);
    c.switch_pi = std::move(switch_pi);
    c.check(absorb_eff);
    return c;
}

namespace {
double stream_amplitude(const std::vector<std::uint8_t> &switch_pi, const RVec &absorptive, const CVec &z)
{
    if (switch_pi.size() != absorptive.size() || z.size() != absorptive.size())
        throw std::invalid_argument("harvested_power: dimension mismatch");
    cplx a{}, b{};
    for (std::size_t n = 0; n < z.size(); ++n) {
        if (absorptive[n] == 0.0) continue;
        (switch_pi[n] ? b : a) += absorptive[n] * z[n];
    }
    return std::abs(a) + std::abs(b);
}
} // namespace

double harvested_power(const std::vector<std::uint8_t> &switch_pi, const RVec &absorptive, const CVec &z,
                       double sigma_r2, double eta1)
{
    const double s = stream_amplitude(switch_pi, absorptive, z);
    return eta1 * (s * s + sigma_r2);
}

double harvested_power(const std::vector<std::uint8_t> &switch_pi, const RVec &absorptive, const CVec &z,
                       double sigma_r2, double eta1, Rng &rng)
{
    const double s = stream_amplitude(switch_pi, absorptive, z);
    std::normal_distribution<double> n01(0.0, 1.0);
    const double sd = std::sqrt(sigma_r2 / 2.0);
    const double re = n01(rng);
    const double im = n01(rng);
    return eta1 * std::norm(cplx{s + sd * re, sd * im});
}

CVec incident_field(const CMat &h, const CVec &w, double p_t, Exec exec)
{
    CVec z;
    kernels::incident(h, w, std::sqrt(p_t), z, exec);
    return z;
}

double available_power(double p_k, const PowerModel &model, std::size_t n_elements, int bits)
{
    return model.eta2 * p_k - model.controller_w - model.dc_bias_w -
           model.per_element_w(bits) * static_cast<double>(n_elements);
}

bool sustainability_check(double p_a) { return p_a > 0.0; }

double feasible_amplification(double p_a, std::size_t n_reflective, double h_inc, double rho_max)
{
    if (n_reflective == 0) throw std::domain_error("feasible_amplification: no reflective elements");
    if (!(p_a > 0.0)) return 1.0;
    const double load = static_cast<double>(n_reflective) * h_inc * h_inc;
    if (!(load > 0.0)) return rho_max;
    return std::min(rho_max, std::sqrt(1.0 + p_a / load));
}

Budget settle_budget(double p_k, double reflected_in_w, std::size_t n_reflective, const PowerModel &model,
                     std::size_t n_elements, int bits, double duty)
{
    Budget b;
    b.harvested_w = p_k;
    b.available_w = available_power(p_k, model, n_elements, bits);
    b.sustainable = sustainability_check(b.available_w);
    if (n_reflective > 0 && duty > 0.0) {
        const double h_inc = std::sqrt(reflected_in_w * duty / static_cast<double>(n_reflective));
        b.rho = feasible_amplification(b.available_w, n_reflective, h_inc, model.rho_max);
        b.amplification_w = (b.rho * b.rho - 1.0) * reflected_in_w * duty;
    }
    b.surplus_w = b.available_w - b.amplification_w;
    return b;
}

} // namespace ewris
