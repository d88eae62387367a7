// SPDX-License-Identifier: Apache-2.0
#include "ewris/zones.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ewris {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
inline bool parallel(Exec e) { return e == Exec::Parallel; }
} // namespace

SegmentIndex::SegmentIndex(const Box2 &box, double cell) : box_(box), cell_(cell)
{
    if (!(cell > 0.0)) throw std::invalid_argument("SegmentIndex: cell must be positive");
    nx_ = static_cast<std::size_t>(std::ceil((box.xmax - box.xmin) / cell)) + 1;
    ny_ = static_cast<std::size_t>(std::ceil((box.ymax - box.ymin) / cell)) + 1;
    cells_.resize(nx_ * ny_);
}

int SegmentIndex::cell_x(double x) const
{
    const double c = std::floor((x - box_.xmin) / cell_);
    return static_cast<int>(std::clamp(c, 0.0, static_cast<double>(nx_ - 1)));
}

int SegmentIndex::cell_y(double y) const
{
    const double c = std::floor((y - box_.ymin) / cell_);
    return static_cast<int>(std::clamp(c, 0.0, static_cast<double>(ny_ - 1)));
}

void SegmentIndex::add(int curve, const std::vector<std::vector<Point3>> &arcs)
{
    for (const auto &arc : arcs) {
        const std::size_t n = arc.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point3 &a = arc[i];
            const Point3 &b = (i + 1 < n) ? arc[i + 1] : arc[i];
            if (i + 1 == n && n > 1) break;
            const auto id = static_cast<std::uint32_t>(segs_.size());
            segs_.push_back({a.x, a.y, b.x, b.y, curve});
            const int i0 = cell_x(std::min(a.x, b.x)), i1 = cell_x(std::max(a.x, b.x));
            const int k0 = cell_y(std::min(a.y, b.y)), k1 = cell_y(std::max(a.y, b.y));
            for (int k = k0; k <= k1; ++k)
                for (int c = i0; c <= i1; ++c)
                    cells_[static_cast<std::size_t>(k) * nx_ + static_cast<std::size_t>(c)].push_back(id);
        }
    }
}

double SegmentIndex::point_segment(double x, double y, const Segment &s)
{
    const double dx = s.bx - s.ax, dy = s.by - s.ay;
    const double l2 = dx * dx + dy * dy;
    double t = 0.0;
    if (l2 > 0.0) t = std::clamp(((x - s.ax) * dx + (y - s.ay) * dy) / l2, 0.0, 1.0);
    return std::hypot(x - (s.ax + t * dx), y - (s.ay + t * dy));
}

double curve_spacing(const std::vector<std::vector<Point3>> &a, const std::vector<std::vector<Point3>> &b,
                     const Box2 &window)
{
    auto one_way = [&](const auto &from, const auto &to) {
        double best = kInf;
        for (const auto &arc : from)
            for (const auto &p : arc) {
                if (!window.contains(p.x, p.y)) continue;
                for (const auto &seg : to) {
                    if (seg.size() == 1) {
                        best = std::min(best, std::hypot(p.x - seg[0].x, p.y - seg[0].y));
                        continue;
                    }
                    for (std::size_t i = 0; i + 1 < seg.size(); ++i)
                        best = std::min(best, SegmentIndex::point_segment(
                                                  p.x, p.y, {seg[i].x, seg[i].y, seg[i + 1].x, seg[i + 1].y, 0}));
                }
            }
        return best;
    };
    return std::min(one_way(a, b), one_way(b, a));
}

std::size_t ZoneLayout::slot_of(int mm) const
{
    auto it = std::lower_bound(m.begin(), m.end(), mm);
    if (it == m.end() || *it != mm) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - m.begin());
}

int ZoneLayout::select(std::size_t n, double chi) const
{
    const double p = static_cast<double>(1 << bits) * chi / kPi;
    int best = -1;
    double best_norm = kInf;
    for (std::size_t c = 0; c < kCand; ++c) {
        const std::int32_t slot = cand_zone[n * kCand + c];
        if (slot < 0) break;
        const double sp = spacing[static_cast<std::size_t>(slot)];
        const double d = cand_dist[n * kCand + c];
        if (!(d <= sp * p)) continue;
        const double r = d / sp;
        if (r < best_norm || (r == best_norm && slot < best)) {
            best_norm = r;
            best = slot;
        }
    }
    return best;
}

namespace {

Box2 bounding_box(const std::vector<Point3> &pts, double pad)
{
    Box2 b{kInf, -kInf, kInf, -kInf};
    for (const auto &p : pts) {
        b.xmin = std::min(b.xmin, p.x);
        b.xmax = std::max(b.xmax, p.x);
        b.ymin = std::min(b.ymin, p.y);
        b.ymax = std::max(b.ymax, p.y);
    }
    return {b.xmin - pad, b.xmax + pad, b.ymin - pad, b.ymax + pad};
}

Box2 grow(const Box2 &b, double m) { return {b.xmin - m, b.xmax + m, b.ymin - m, b.ymax + m}; }

// Distance from the in-window vertices of curve `from` to curve `to`.
double indexed_spacing(const SegmentIndex &index, const std::vector<std::vector<Point3>> &from, int to,
                       const Box2 &window, double r0, double r_cap)
{
    double best = kInf;
    for (const auto &arc : from)
        for (const auto &p : arc) {
            if (!window.contains(p.x, p.y)) continue;
            double r = std::min(r0, best);
            for (;;) {
                double local = kInf;
                index.visit(p.x, p.y, r, [&](int c, double d) {
                    if (c == to) local = std::min(local, d);
                });
                if (local <= r || r >= r_cap) {
                    best = std::min(best, local);
                    break;
                }
                r = std::min(2.0 * r, r_cap);
            }
        }
    return best;
}

} // namespace

ZoneLayout build_zone_layout(const ZoneSystem &sys, const std::vector<Point3> &elements,
                             const ZoneLayoutOptions &opt, Exec exec)
{
    if (opt.bits < 1 || opt.bits > 16) throw std::invalid_argument("zone layout: bits out of range");
    ZoneLayout out;
    out.bits = opt.bits;
    const double scale = static_cast<double>(1 << opt.bits);
    const double shift = sys.residual / kTwoPi;
    const double d_direct = distance(sys.tx, sys.ue);
    auto excess = [&](double x, double y) {
        const Point3 r{x, y, 0.0};
        return distance(r, sys.tx) + distance(r, sys.ue) - d_direct;
    };
    const Box2 ris_box = bounding_box(elements, 0.5 * opt.pitch);
    const double ris_extent = std::max(ris_box.xmax - ris_box.xmin, ris_box.ymax - ris_box.ymin);
    const double cell = std::max(2.0 * opt.max_gap, 0.5 * opt.pitch);
    double margin = 2.0 * opt.pitch;
    const double margin_cap = 4.0 * ris_extent + 2.0 * opt.pitch;

    for (int iter = 0;; ++iter) {
        const Box2 box = grow(ris_box, margin);
        // excess is convex in the plane: max at a corner, min bounded from a lattice
        double e_max = std::max({excess(box.xmin, box.ymin), excess(box.xmin, box.ymax), excess(box.xmax, box.ymin),
                                 excess(box.xmax, box.ymax)});
        double e_min = kInf;
        const double step = opt.pitch;
        const auto nx = static_cast<int>(std::ceil((box.xmax - box.xmin) / step));
        const auto ny = static_cast<int>(std::ceil((box.ymax - box.ymin) / step));
        for (int iy = 0; iy <= ny; ++iy)
            for (int ix = 0; ix <= nx; ++ix)
                e_min = std::min(e_min, excess(std::min(box.xmin + ix * step, box.xmax),
                                               std::min(box.ymin + iy * step, box.ymax)));
        e_min = std::max(0.0, e_min - 1.5 * step);
        const auto lo = static_cast<int>(std::ceil((e_min / opt.lambda + shift) * scale)) - 1;
        const auto hi = static_cast<int>(std::floor((e_max / opt.lambda + shift) * scale)) + 1;

        out.m.clear();
        for (int mm = lo; mm <= hi; ++mm)
            if ((mm / scale - shift) >= 0.0) out.m.push_back(mm);
        const std::size_t nz = out.m.size();
        out.arcs.assign(nz, {});
        const auto nzi = static_cast<std::ptrdiff_t>(nz);
#pragma omp parallel for schedule(dynamic, 1) if (parallel(exec))
        for (std::ptrdiff_t i = 0; i < nzi; ++i) {
            const auto s = static_cast<std::size_t>(i);
            const double j = out.m[s] / scale;
            const double level = (j - shift) * opt.lambda;
            const FresnelZoneSpec spec = make_zone_spec(sys.tx, sys.ue, j, level, opt.axis_mode, sys.source);
            out.arcs[s] = curve_arcs_in_box(spec, box, opt.max_gap);
        }

        SegmentIndex index(box, cell);
        for (std::size_t s = 0; s < nz; ++s) index.add(static_cast<int>(s), out.arcs[s]);

        out.in_ris.assign(nz, 0);
        for (std::size_t s = 0; s < nz; ++s)
            for (const auto &arc : out.arcs[s])
                for (const auto &p : arc)
                    if (ris_box.contains(p.x, p.y)) out.in_ris[s] = 1;

        out.spacing.assign(nz, kInf);
        const double r_cap = margin + ris_extent;
#pragma omp parallel for schedule(dynamic, 1) if (parallel(exec))
        for (std::ptrdiff_t i = 0; i < nzi - 1; ++i) {
            const auto s = static_cast<std::size_t>(i);
            if (!out.in_ris[s] && !out.in_ris[s + 1]) continue;
            const double a = indexed_spacing(index, out.arcs[s], static_cast<int>(s + 1), ris_box, cell, r_cap);
            const double b = indexed_spacing(index, out.arcs[s + 1], static_cast<int>(s), ris_box, cell, r_cap);
            out.spacing[s] = std::min(a, b);
        }
        // zones without a measurable neighbour borrow the adjacent spacing
        for (std::size_t s = 0; s < nz; ++s)
            if (!std::isfinite(out.spacing[s]) && s > 0 && std::isfinite(out.spacing[s - 1]))
                out.spacing[s] = out.spacing[s - 1];
        for (std::size_t s = nz; s-- > 0;)
            if (!std::isfinite(out.spacing[s]) && s + 1 < nz && std::isfinite(out.spacing[s + 1]))
                out.spacing[s] = out.spacing[s + 1];

        double max_sp = 0.0;
        for (std::size_t s = 0; s < nz; ++s)
            if (out.in_ris[s] && std::isfinite(out.spacing[s])) max_sp = std::max(max_sp, out.spacing[s]);
        out.margin = margin;
        if (max_sp <= margin || margin >= margin_cap || iter == 5) {
            // coupling check: spacing to the zone one coupling step further out
            const int cb = opt.coupling_bits == 0 ? opt.bits : std::min(opt.coupling_bits, opt.bits);
            const int stride = 1 << (opt.bits - cb);
            out.max_index = 0.0;
            bool started = false;
            for (std::size_t s = 0; s < nz; ++s) {
                if (out.m[s] <= 0) continue;
                if (!out.in_ris[s]) {
                    if (started) break;
                    continue;
                }
                started = true;
                const std::size_t partner = out.slot_of(out.m[s] + stride);
                double gap = kInf;
                if (partner != static_cast<std::size_t>(-1) && !out.arcs[partner].empty() && !out.arcs[s].empty()) {
                    gap = stride == 1 ? out.spacing[s]
                                      : std::min(indexed_spacing(index, out.arcs[s], static_cast<int>(partner),
                                                                 ris_box, cell, r_cap),
                                                 indexed_spacing(index, out.arcs[partner], static_cast<int>(s),
                                                                 ris_box, cell, r_cap));
                }
                if (!(gap - opt.pitch > 0.0)) break;
                out.max_index = out.m[s] / scale;
            }
            for (std::size_t s = 0; s < nz; ++s)
                if (!std::isfinite(out.spacing[s])) out.spacing[s] = margin;
            out.usable.assign(nz, 0);
            for (std::size_t s = 0; s < nz; ++s)
                out.usable[s] = out.m[s] > 0 && out.m[s] / scale <= out.max_index && !out.arcs[s].empty();

            // candidate tables
            double r_q = 0.0;
            for (std::size_t s = 0; s < nz; ++s)
                if (out.usable[s]) r_q = std::max(r_q, out.spacing[s]);
            const std::size_t ne = elements.size();
            out.cand_zone.assign(ne * ZoneLayout::kCand, -1);
            out.cand_dist.assign(ne * ZoneLayout::kCand, kInf);
            if (r_q > 0.0) {
                const auto nei = static_cast<std::ptrdiff_t>(ne);
#pragma omp parallel for schedule(static) if (parallel(exec))
                for (std::ptrdiff_t i = 0; i < nei; ++i) {
                    const auto n = static_cast<std::size_t>(i);
                    std::vector<std::pair<int, double>> near;
                    index.visit(elements[n].x, elements[n].y, r_q, [&](int c, double d) {
                        const auto s = static_cast<std::size_t>(c);
                        if (!out.usable[s] || d > out.spacing[s]) return;
                        for (auto &e : near)
                            if (e.first == c) {
                                e.second = std::min(e.second, d);
                                return;
                            }
                        near.emplace_back(c, d);
                    });
                    std::sort(near.begin(), near.end(), [&](const auto &x, const auto &y) {
                        const double rx = x.second / out.spacing[static_cast<std::size_t>(x.first)];
                        const double ry = y.second / out.spacing[static_cast<std::size_t>(y.first)];
                        return rx < ry || (rx == ry && x.first < y.first);
                    });
                    const std::size_t k = std::min(near.size(), ZoneLayout::kCand);
                    for (std::size_t c = 0; c < k; ++c) {
                        out.cand_zone[n * ZoneLayout::kCand + c] = near[c].first;
                        out.cand_dist[n * ZoneLayout::kCand + c] = near[c].second;
                    }
                }
            }
            return out;
        }
        margin = std::min(margin_cap, 1.25 * max_sp);
    }
}

} // namespace ewris
