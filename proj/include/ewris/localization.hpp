// SPDX-License-Identifier: Apache-2.0
// Uplink grid-search localisation with the absorptive switch array.
#pragma once

#include <cstdint>
#include <vector>

#include "ewris/channel.hpp"

namespace ewris {

struct LocationEstimate {
    Point3 position;
    double indicator_w = 0.0;
    std::size_t index = 0;
    bool degenerate = false; // more than one grid point attains the maximum
    double grid_step = 0.0;
    double grid_extent = 0.0;
    std::size_t evaluations = 0;
};

RVec distance_vector(const std::vector<Point3> &elements, const Point3 &u_hat);

// 1 where the propagation phase falls in a destructive half-cycle.
std::vector<std::uint8_t> le_switch_config(const RVec &d, double lambda);

// (absorb_eff * (|A| + |B|))^2 over the two switch streams.
double indicator_power(const std::vector<std::uint8_t> &switch_pi, const CVec &g, double absorb_eff);

// Cubic grid centred on prior, axis offsets k*step with |k*step| <= extent.
std::vector<Point3> make_grid(const Point3 &prior, double extent, double step);

LocationEstimate estimate_location(const ScenarioConfig &cfg, const ChannelSet &channels,
                                   const std::vector<Point3> &grid, std::size_t ris_index = 0,
                                   Exec exec = Exec::Parallel);

Point3 sample_location_noise(double sigma_l, Rng &rng);

} // namespace ewris
