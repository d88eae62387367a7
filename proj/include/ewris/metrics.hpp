// SPDX-License-Identifier: Apache-2.0
// Link quality, efficiency and the large-array power-gain model.
#pragma once

#include <vector>

#include "ewris/channel.hpp"
#include "ewris/ris_core.hpp"

namespace ewris {

// SNR at the UE. phi[k] is the reflection diagonal of RIS k. RIS noise is
// taken in expectation, so the denominator is deterministic.
double snr(const ChannelSet &ch, const CVec &w, const std::vector<CVec> &phi, double p_t, double sigma_u2,
           double sigma_r2, Exec exec = Exec::Parallel);
double snr(const ChannelSet &ch, const CVec &w, const std::vector<RisConfiguration> &configs, double p_t,
           double sigma_u2, double sigma_r2, Exec exec = Exec::Parallel);

double spectrum_efficiency(double gamma);
// se / (p_t + p_external)
double energy_efficiency(double se, double p_t, double p_external = 0.0);

struct AsymptoticParams {
    double absorb_eff = 0.9;
    double eta1 = 0.9;
    double eta2 = 0.9;
    double n_r = 2500.0;
    double h = 1.0;          // uniform BS-to-element amplitude
    double controller_w = 0.0;
    double dc_bias_w = 0.0;
    double per_element_w = 0.0;
    double rho = 10.0;

    double efficiency() const { return absorb_eff * eta1 * eta2; }
    double circuit_w() const { return controller_w + dc_bias_w + per_element_w * n_r; }
};

// h from the BS array centre to the centre of RIS 0 (amplitude incl. sqrt(P_t)).
AsymptoticParams asymptotic_params(const ScenarioConfig &cfg, double n_r, int bits);

// Large-array gain over a passive RIS, evaluated as printed:
// p (c (1-p))^2 N + P_circ p / (N h^2), c = absorb * eta1 * eta2.
double power_gain(double p, const AsymptoticParams &a);

struct OptimalP {
    double p = 0.0;
    bool valid = false; // false: negative discriminant, p holds the boundary 0
};

// Closed form 2/3 - sqrt(N^2 h^2 - P_circ) / (3 N h c).
OptimalP optimal_p(const AsymptoticParams &a);
// Limit of optimal_p for N -> inf: 2/3 - 1/(3c).
double optimal_p_limit(double efficiency);
// Stationary point of power_gain itself: root of 3p^2 - 4p + 1 + P_circ/(N h c)^2.
OptimalP power_gain_stationary(const AsymptoticParams &a);

// p * pi / 2^bits
double optimal_chi(double p_opt, int bits);
// (rho * p_opt)^2 with the limiting p_opt.
double max_power_gain(double rho, double efficiency);

struct SustainabilityBoundary {
    bool empty = false;   // no p in [0, 1) is sustainable
    double p_max = 1.0;   // sustainable for p in [0, p_max)
    bool p_opt_feasible = false;
};
SustainabilityBoundary sustainability_boundary(const AsymptoticParams &a, double tol = 1e-12);
bool sustainable_at(double p, const AsymptoticParams &a);

// Uniform-power distance and Rayleigh distance.
double upd(double gamma_th, double l_r);
double rayleigh_distance(double l_r, double lambda);

} // namespace ewris
