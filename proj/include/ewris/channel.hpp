// SPDX-License-Identifier: Apache-2.0
// Near-field line-of-sight channels and their impairments.
#pragma once

#include <vector>

#include "ewris/exec.hpp"
#include "ewris/rng.hpp"
#include "ewris/scenario.hpp"

namespace ewris {

// N_T x N_R, row-major by transmit antenna.
struct CMat {
    std::size_t rows = 0, cols = 0;
    CVec data;

    CMat() = default;
    CMat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
    cplx &operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

struct ChannelSet {
    CVec f;              // BS -> UE, length N_T
    std::vector<CMat> h; // BS -> RIS k
    std::vector<CVec> g; // RIS k -> UE
};

// cos^q pattern normalised over the front hemisphere; 0 behind.
double radiation_gain(double theta, double q);

cplx los_coefficient(const Point3 &p1, const Point3 &p2, double g_tx, double g_rx, double lambda);

// Physical channels with the UE at cfg.ue + ue_offset (pure LoS).
ChannelSet build_channels(const ScenarioConfig &cfg, const Point3 &ue_offset = {}, Exec exec = Exec::Parallel);

// LoS part of the direct link only.
CVec direct_los(const ScenarioConfig &cfg, const Point3 &ue);

// Per-antenna CN(0, |f_los|^2 / K) draws; zero for K = +inf.
CVec nlos_component(const ScenarioConfig &cfg, double rician_db, Rng &rng);

// f + e with e ~ CN(0, (sigma |f| / sqrt(N_T))^2) per entry.
CVec apply_ce_error(const CVec &f, double sigma_ce, Rng &rng);

double vec_norm(const CVec &v);

} // namespace ewris
