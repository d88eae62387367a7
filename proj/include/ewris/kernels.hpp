// SPDX-License-Identifier: Apache-2.0
// Element-level hot loops. Each kernel has a plain reference version kept
// for tests and benchmarks, and a production version whose result is
// identical under Exec::Serial and Exec::Parallel (reductions run over
// fixed-size blocks combined in block order).
#pragma once

#include <cstddef>
#include <vector>

#include "ewris/channel.hpp"

namespace ewris::kernels {

constexpr std::size_t kBlock = 256;

struct PanelLinks {
    const std::vector<Point3> *tx = nullptr;
    const std::vector<Point3> *elements = nullptr;
    Point3 ue;
    const AntennaPattern *tx_pattern = nullptr;
    const AntennaPattern *ue_pattern = nullptr;
    AntennaPattern element_pattern; // boresight set to the panel normal
    double lambda = 0.0;
};

void ris_channels(const PanelLinks &in, CMat &h, CVec &g, Exec exec);
void ris_channels_ref(const PanelLinks &in, CMat &h, CVec &g);

// z_n = amp * sum_t conj(h(t, n)) w_t : field incident on each element.
void incident(const CMat &h, const CVec &w, double amp, CVec &z, Exec exec);

struct CascadeSum {
    cplx field;        // sum_n conj(g_n) phi_n z_n
    double noise_gain; // sum_n |g_n phi_n|^2
};

CascadeSum cascade(const CVec &g, const CVec &phi, const CVec &z, Exec exec);
CascadeSum cascade_ref(const CVec &g, const CVec &phi, const CVec &z);

// Power indicator for every hypothesised UE position.
void indicator_scan(const std::vector<Point3> &elements, const CVec &uplink, const std::vector<Point3> &grid,
                    double lambda, double absorb_eff, RVec &out, Exec exec);
void indicator_scan_ref(const std::vector<Point3> &elements, const CVec &uplink,
                        const std::vector<Point3> &grid, double lambda, double absorb_eff, RVec &out);

} // namespace ewris::kernels
