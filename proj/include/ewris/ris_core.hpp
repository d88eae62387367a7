// SPDX-License-Identifier: Apache-2.0
// Element-wise RIS state and the harvesting power budget.
#pragma once

#include <cstdint>
#include <vector>

#include "ewris/channel.hpp"
#include "ewris/rng.hpp"
#include "ewris/scenario.hpp"

namespace ewris {

RVec discrete_phase_set(int bits);

// Nearest grid point in [0, 2pi); exact ties go to the larger point.
double quantize_phase(double theta, int bits);

// Per-element state of one RIS. Build through RisConfiguration::make so the
// invariants are always checked.
struct RisConfiguration {
    int bits = 1;            // 0 means continuous phases
    double rho = 1.0;        // shared reflective magnitude
    std::vector<std::uint8_t> reflective;
    RVec phase;              // radians, used where reflective
    RVec absorptive;         // 0 or the absorptive efficiency
    std::vector<std::uint8_t> switch_pi; // 1: switch state pi
    bool active = true;      // false: reverted to all-absorptive for the slot

    std::size_t size() const { return reflective.size(); }
    std::size_t reflective_count() const;
    // Diagonal of the reflective matrix, zero where not reflecting.
    CVec reflection() const;

    // Throws std::invalid_argument on any invariant violation.
    void check(double absorb_eff) const;
    static RisConfiguration make(int bits, double rho, std::vector<std::uint8_t> reflective, RVec phase,
                                 RVec absorptive, std::vector<std::uint8_t> switch_pi, double absorb_eff);
};

// eta1 * (|A| + |B|)^2 + noise, A and B the two switch streams of the
// absorptive field amp_n * z_n. Expectation mode adds eta1 * sigma_r^2.
double harvested_power(const std::vector<std::uint8_t> &switch_pi, const RVec &absorptive, const CVec &z,
                       double sigma_r2, double eta1);
// Monte Carlo mode: the RIS noise sample is added to the combined stream.
double harvested_power(const std::vector<std::uint8_t> &switch_pi, const RVec &absorptive, const CVec &z,
                       double sigma_r2, double eta1, Rng &rng);

// Incident field for precoder w at power p_t: z = sqrt(p_t) h^H w.
CVec incident_field(const CMat &h, const CVec &w, double p_t, Exec exec = Exec::Parallel);

double available_power(double p_k, const PowerModel &model, std::size_t n_elements, int bits);
bool sustainability_check(double p_a);
double feasible_amplification(double p_a, std::size_t n_reflective, double h_inc, double rho_max);

// Full budget settlement for one RIS.
struct Budget {
    double harvested_w = 0.0;
    double available_w = 0.0;
    double amplification_w = 0.0; // (rho^2 - 1) * reflected input power * duty
    double surplus_w = 0.0;
    double rho = 1.0;
    bool sustainable = false;
};

// reflected_in_w: total incident power on reflective elements (before any
// split); duty: fraction of the slot spent reflecting.
Budget settle_budget(double p_k, double reflected_in_w, std::size_t n_reflective, const PowerModel &model,
                     std::size_t n_elements, int bits, double duty = 1.0);

} // namespace ewris
