// SPDX-License-Identifier: Apache-2.0
// BS precoding and the per-RIS zone-driven configuration.
#pragma once

#include <cstdint>
#include <vector>

#include "ewris/channel.hpp"
#include "ewris/ris_core.hpp"
#include "ewris/zones.hpp"

namespace ewris {

struct Precoder {
    CVec w;
    RVec psi;
};

// w = f/|f| so that f^H w = |f|; psi = arg f.
Precoder mrt_precoder(const CVec &f_hat);

// Zone axes with the precoding phase psi absorbed into the focal sum
// d + j*lambda - psi*lambda/(2pi).
Axes modified_axes(double d, double j, double lambda, double psi, AxisMode mode = AxisMode::Exact);

// min pairwise distance(curve_j, curve_next) * 2^bits * chi / pi.
double decision_threshold(const std::vector<Point3> &curve_j, const std::vector<Point3> &curve_next, int bits,
                          double chi);

// Largest zone index whose spacing to the next zone (1/2^bits further) on the
// RIS exceeds the element pitch; 0 when the first zone already fails.
double max_zone_index(const ZoneSystem &sys, const std::vector<Point3> &elements_local, double pitch, int bits,
                      double lambda, AxisMode mode = AxisMode::Exact);

// Brute-force selection: element n is marked iff its distance to some
// curve sample is <= tau.
std::vector<std::uint8_t> select_elements(const std::vector<Point3> &elements, const std::vector<CurveSample> &curve,
                                          double tau);

std::vector<std::uint8_t> combine_across_antennas(const std::vector<std::vector<std::uint8_t>> &masks);

// mod(-2 pi j, 2 pi), exactly on the 2^bits grid.
double zone_phase(double j, int bits);

RVec absorptive_complement(const std::vector<std::uint8_t> &reflective, double absorb_eff);

// distances[t][n]: antenna t to element n. State pi where the precoded
// incident phasor points into the left half-plane.
std::vector<std::uint8_t> eh_switch_design(const std::vector<RVec> &distances, const RVec &psi, double lambda);

// Everything Algorithm 1 needs on one RIS that does not depend on chi.
struct RisPlan {
    RisFrame frame;
    std::vector<Point3> elements;       // world frame
    std::vector<Point3> elements_local; // RIS-local frame
    std::vector<ZoneLayout> layouts;    // one per zone system
    std::vector<int> full_zone;         // zone slot at full selection, -1 if none
    RVec model_phase;                   // predicted composite excess phase per element
    std::vector<RVec> tx_dist;          // [antenna][element]
    std::vector<std::uint8_t> switch_pi;
    CVec z;                             // incident field at the configured precoder
    double pitch = 0.0;
};

struct Algorithm1Plan {
    Precoder precoder;
    RVec residual;     // per-antenna precoding residual
    int layout_bits = 1;
    std::vector<RisPlan> ris;
};

// h: BS-to-RIS channels (known geometry); f_hat: estimated direct channel;
// u_hat: estimated UE position.
Algorithm1Plan prepare_algorithm1(const ScenarioConfig &cfg, const std::vector<CMat> &h, const CVec &f_hat,
                                  const Point3 &u_hat, Exec exec = Exec::Parallel);

// Reflective mask and phases for half-angle chi.
struct RisSelection {
    std::vector<std::uint8_t> reflective;
    RVec phase;
};
RisSelection select_for_chi(const ScenarioConfig &cfg, const RisPlan &plan, double chi);

// Zone slot (of the first layout) assigned to element n, or -1. With several
// layouts the element must be selected at the same zone index in all of them.
int zone_for(const RisPlan &plan, std::size_t n, double chi);

struct RisOutcome {
    RisConfiguration config;
    Budget budget;
};

// Complement, switch, budget and clamp.
RisOutcome finalize_selection(const ScenarioConfig &cfg, const RisPlan &plan, const RisSelection &sel);

std::vector<RisOutcome> configure_algorithm1(const ScenarioConfig &cfg, const Algorithm1Plan &plan, double chi);

std::vector<RisOutcome> run_algorithm1(const ScenarioConfig &cfg, const std::vector<CMat> &h, const CVec &f_hat,
                                       const Point3 &u_hat, double chi, Exec exec = Exec::Parallel);

// Incident field for a new precoder (recomputes z and the EH switch).
void retarget_precoder(const ScenarioConfig &cfg, const std::vector<CMat> &h, const CVec &w, Algorithm1Plan &plan,
                       Exec exec = Exec::Parallel);

} // namespace ewris
