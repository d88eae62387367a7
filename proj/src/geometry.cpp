// SPDX-License-Identifier: Apache-2.0
#include "ewris/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace ewris {

double fresnel_radius(double d1, double d2, double d_total, double i, double lambda)
{
    if (!(d1 > 0.0) || !(d2 > 0.0) || !(d_total > 0.0) || !(lambda > 0.0))
        throw std::domain_error("fresnel_radius: distances and wavelength must be positive");
    if (i < 0.0) throw std::domain_error("fresnel_radius: negative zone index");
    if (std::abs(d1 + d2 - d_total) > 1e-9 * d_total)
        throw std::invalid_argument("fresnel_radius: d1 + d2 must equal d_total");
    return std::sqrt(i * lambda * d1 * d2 / d_total);
}

Axes axes_for_excess(double d, double excess, AxisMode mode)
{
    if (!(d > 0.0)) throw std::domain_error("focal distance must be positive");
    if (excess < 0.0) throw std::domain_error("focal sum below focal distance");
    Axes ax;
    ax.a = 0.5 * (d + excess);
    if (mode == AxisMode::Exact)
        ax.b = std::sqrt(std::max(0.0, ax.a * ax.a - 0.25 * d * d));
    else
        ax.b = std::sqrt(0.5 * excess * d);
    ax.c = ax.b;
    return ax;
}

Axes fractional_axes(double d, double j, double lambda, AxisMode mode)
{
    if (!(lambda > 0.0)) throw std::domain_error("wavelength must be positive");
    if (j < 0.0) throw std::domain_error("zone index must be non-negative");
    return axes_for_excess(d, j * lambda, mode);
}

Mat3 rotation_matrix(double alpha, double beta)
{
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const double cb = std::cos(beta), sb = std::sin(beta);
    return {{{ca * cb, -ca * sb, -sa},
             {sa * cb, -sa * sb, ca},
             {sb, cb, 0.0}}};
}

Point3 zone_center(const Point3 &t, const Point3 &u, const Point3 &n_l)
{
    return (t + u + n_l) * 0.5;
}

FresnelZoneSpec make_zone_spec(const Point3 &t, const Point3 &u, double j, double excess,
                               AxisMode mode, int source)
{
    const Vec3 dir = u - t;
    const double d = norm(dir);
    const Axes ax = axes_for_excess(d, excess, mode);
    FresnelZoneSpec s;
    s.j = j;
    s.a = ax.a;
    s.b = ax.b;
    s.c = ax.c;
    s.center = zone_center(t, u, {});
    s.azimuth = std::atan2(dir.y, dir.x);
    s.elevation = std::atan2(dir.z, std::hypot(dir.x, dir.y));
    s.focal_distance = d;
    s.source = source;
    return s;
}

namespace {

Vec3 column(const Mat3 &r, int k) { return {r[0][k], r[1][k], r[2][k]}; }

// Plane cut as p(t) = p0 + u cos t + v sin t.
struct PlaneCut {
    enum Kind { Empty, Point, Ellipse } kind = Empty;
    Point3 p0;
    Vec3 u, v;
};

PlaneCut plane_cut(const FresnelZoneSpec &s)
{
    PlaneCut cut;
    const Mat3 r = rotation_matrix(s.azimuth, s.elevation);
    const Vec3 c1 = column(r, 0), c2 = column(r, 1), c3 = column(r, 2);
    const double cz = s.center.z;

    if (s.b <= 0.0) {
        // degenerate zone: the focal segment
        const Point3 p = s.center - s.a * c1, q = s.center + s.a * c1;
        if ((p.z <= 0.0 && q.z >= 0.0) || (p.z >= 0.0 && q.z <= 0.0)) {
            if (p.z == q.z) {
                if (p.z != 0.0) return cut;
                cut.kind = PlaneCut::Point;
                cut.p0 = s.center;
            } else {
                const double w = p.z / (p.z - q.z);
                cut.kind = PlaneCut::Point;
                cut.p0 = p + w * (q - p);
            }
        }
        return cut;
    }

    const double sb = std::sin(s.elevation), cb = std::cos(s.elevation);
    const double ia2 = 1.0 / (s.a * s.a), ib2 = 1.0 / (s.b * s.b);
    const double s01 = -cz * sb, s02 = -cz * cb;
    const double A = cb * cb * ia2 + sb * sb * ib2;
    const double B = 2.0 * (s01 * cb * ia2 - s02 * sb * ib2);
    const double C = s01 * s01 * ia2 + s02 * s02 * ib2;
    const double mu0 = -B / (2.0 * A);
    const double K = 1.0 - C + A * mu0 * mu0;
    if (K < 0.0) return cut;

    const Vec3 rperp = cb * c1 - sb * c2; // R * (cos b, -sin b, 0)
    const Vec3 base = (s01 + mu0 * cb) * c1 + (s02 - mu0 * sb) * c2;
    cut.p0 = s.center + base;
    cut.u = std::sqrt(K / A) * rperp;
    cut.v = (s.b * std::sqrt(K)) * c3;
    cut.kind = K == 0.0 ? PlaneCut::Point : PlaneCut::Ellipse;
    return cut;
}

Point3 at(const PlaneCut &c, double t)
{
    Point3 p = c.p0 + std::cos(t) * c.u + std::sin(t) * c.v;
    p.z = 0.0;
    return p;
}

} // namespace

std::vector<CurveSample> curve_in_plane(const FresnelZoneSpec &spec, std::size_t n_samples)
{
    std::vector<CurveSample> out;
    const PlaneCut cut = plane_cut(spec);
    if (cut.kind == PlaneCut::Empty || n_samples == 0) return out;
    if (cut.kind == PlaneCut::Point) {
        Point3 p = cut.p0;
        p.z = 0.0;
        out.push_back({p, spec.j, spec.source});
        return out;
    }
    out.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(n_samples);
        out.push_back({at(cut, t), spec.j, spec.source});
    }
    return out;
}

std::vector<std::vector<Point3>> curve_arcs_in_box(const FresnelZoneSpec &spec, const Box2 &box,
                                                   double max_gap)
{
    std::vector<std::vector<Point3>> arcs;
    const PlaneCut cut = plane_cut(spec);
    if (cut.kind == PlaneCut::Empty) return arcs;
    if (cut.kind == PlaneCut::Point) {
        if (box.contains(cut.p0.x, cut.p0.y)) arcs.push_back({Point3{cut.p0.x, cut.p0.y, 0.0}});
        return arcs;
    }

    // angles where the ellipse crosses a window edge
    std::vector<double> cuts{0.0, kTwoPi};
    auto crossing = [&](double cu, double cv, double rhs) {
        const double r = std::hypot(cu, cv);
        if (r == 0.0) return;
        const double q = rhs / r;
        if (q < -1.0 || q > 1.0) return;
        const double phi = std::atan2(cv, cu), ac = std::acos(q);
        cuts.push_back(wrap_2pi(phi + ac));
        cuts.push_back(wrap_2pi(phi - ac));
    };
    crossing(cut.u.x, cut.v.x, box.xmin - cut.p0.x);
    crossing(cut.u.x, cut.v.x, box.xmax - cut.p0.x);
    crossing(cut.u.y, cut.v.y, box.ymin - cut.p0.y);
    crossing(cut.u.y, cut.v.y, box.ymax - cut.p0.y);
    std::sort(cuts.begin(), cuts.end());

    std::vector<std::pair<double, double>> spans;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double t0 = cuts[i], t1 = cuts[i + 1];
        if (t1 - t0 <= 0.0) continue;
        const Point3 m = at(cut, 0.5 * (t0 + t1));
        if (!box.contains(m.x, m.y)) continue;
        if (!spans.empty() && spans.back().second == t0)
            spans.back().second = t1;
        else
            spans.emplace_back(t0, t1);
    }
    // join the arc running through t = 0
    if (spans.size() > 1 && spans.front().first == 0.0 && spans.back().second == kTwoPi) {
        spans.front().first = spans.back().first - kTwoPi;
        spans.pop_back();
    }

    const double speed = std::max(norm(cut.u), norm(cut.v));
    for (const auto &[t0, t1] : spans) {
        const double len = (t1 - t0) * speed;
        const auto n = static_cast<std::size_t>(std::ceil(len / max_gap)) + 1;
        std::vector<Point3> arc;
        arc.reserve(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            arc.push_back(at(cut, t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n)));
        arcs.push_back(std::move(arc));
    }
    return arcs;
}

RisFrame make_ris_frame(const Point3 &ris_center, const Vec3 &ris_normal, const Point3 &ue,
                        const Vec3 &row_hint)
{
    const double nn = norm(ris_normal);
    if (!(nn > 1e-12) || !std::isfinite(nn)) throw std::invalid_argument("degenerate RIS normal");
    RisFrame f;
    f.e3 = ris_normal / nn;
    Vec3 e1 = row_hint - dot(row_hint, f.e3) * f.e3;
    if (norm(e1) < 1e-9) e1 = Vec3{1, 0, 0} - f.e3.x * f.e3;
    if (norm(e1) < 1e-9) e1 = Vec3{0, 1, 0} - f.e3.y * f.e3;
    f.e1 = e1 / norm(e1);
    f.e2 = cross(f.e3, f.e1);
    f.origin = ue - dot(ue - ris_center, f.e3) * f.e3;
    return f;
}

std::vector<Point3> to_ris_frame(const std::vector<Point3> &points, const Point3 &ris_center,
                                 const Vec3 &ris_normal, const Point3 &ue)
{
    const RisFrame f = make_ris_frame(ris_center, ris_normal, ue);
    std::vector<Point3> out;
    out.reserve(points.size());
    for (const auto &p : points) out.push_back(f.to_local(p));
    return out;
}

double focal_sum_residual(const Point3 &p, const Point3 &t, const Point3 &u, double j, double lambda)
{
    return std::abs(distance(t, p) + distance(u, p) - distance(t, u) - j * lambda);
}

} // namespace ewris
