// SPDX-License-Identifier: Apache-2.0
// Sampled fractional-zone curves on one RIS and the element-to-curve
// distance tables used for element selection.
#pragma once

#include <cstdint>
#include <vector>

#include "ewris/exec.hpp"
#include "ewris/geometry.hpp"

namespace ewris {

// Uniform bucket grid over polyline segments in the RIS plane.
class SegmentIndex {
public:
    struct Segment {
        double ax, ay, bx, by;
        int curve;
    };

    SegmentIndex(const Box2 &box, double cell);

    void add(int curve, const std::vector<std::vector<Point3>> &arcs);

    // Calls f(curve, distance) for every segment within radius r of (x, y).
    template <class F>
    void visit(double x, double y, double r, F &&f) const
    {
        const int i0 = cell_x(x - r), i1 = cell_x(x + r);
        const int k0 = cell_y(y - r), k1 = cell_y(y + r);
        for (int k = k0; k <= k1; ++k)
            for (int i = i0; i <= i1; ++i)
                for (auto s : cells_[static_cast<std::size_t>(k) * nx_ + static_cast<std::size_t>(i)]) {
                    const Segment &g = segs_[s];
                    f(g.curve, point_segment(x, y, g));
                }
    }

    static double point_segment(double x, double y, const Segment &s);

private:
    int cell_x(double x) const;
    int cell_y(double y) const;

    Box2 box_;
    double cell_;
    std::size_t nx_, ny_;
    std::vector<Segment> segs_;
    std::vector<std::vector<std::uint32_t>> cells_;
};

// One family of zones: ellipsoids with foci tx and ue (RIS-local frame) and
// focal sums |tx - ue| + j*lambda - residual*lambda/(2pi).
struct ZoneSystem {
    Point3 tx;
    Point3 ue;
    double residual = 0.0;
    int source = -1; // antenna index, -1 for the array phase centre
};

struct ZoneLayoutOptions {
    int bits = 1;
    double lambda = 0.01;
    double pitch = 0.005;
    double max_gap = 0.00125;
    int coupling_bits = 1; // 0: check at the zone resolution itself
    AxisMode axis_mode = AxisMode::Exact;
};

struct ZoneLayout {
    static constexpr std::size_t kCand = 6;

    int bits = 1;
    std::vector<int> m;            // zone index times 2^bits, ascending
    std::vector<double> spacing;   // min distance to the next zone curve
    std::vector<std::uint8_t> in_ris; // curve crosses the populated aperture
    std::vector<std::uint8_t> usable;
    std::vector<std::vector<std::vector<Point3>>> arcs;
    double max_index = 0.0;        // J; 0 when no zone passes the coupling check
    double margin = 0.0;

    // per element, up to kCand (zone slot, distance) pairs, slot -1 = empty
    std::vector<std::int32_t> cand_zone;
    std::vector<double> cand_dist;

    double j(std::size_t slot) const { return static_cast<double>(m[slot]) / static_cast<double>(1 << bits); }
    std::size_t slot_of(int mm) const; // npos if absent

    // Zone slot assigned to element n for half-angle chi, or -1.
    int select(std::size_t n, double chi) const;
};

// Builds curves, spacings, J and the candidate tables. Elements are in the
// RIS-local frame (z = 0).
ZoneLayout build_zone_layout(const ZoneSystem &sys, const std::vector<Point3> &elements,
                             const ZoneLayoutOptions &opt, Exec exec = Exec::Parallel);

// Min distance between two sampled curves, measured from the vertices of
// each that lie in window onto the segments of the other.
double curve_spacing(const std::vector<std::vector<Point3>> &a, const std::vector<std::vector<Point3>> &b,
                     const Box2 &window);

} // namespace ewris
