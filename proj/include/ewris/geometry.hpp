// SPDX-License-Identifier: Apache-2.0
// Fresnel-zone ellipsoids, their plane cuts and the RIS-local frame.
#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ewris/vec3.hpp"

namespace ewris {

enum class AxisMode { Exact, Approximate };

struct Axes {
    double a = 0.0; // along the focal axis
    double b = 0.0;
    double c = 0.0;
};

using Mat3 = std::array<std::array<double, 3>, 3>;

struct FresnelZoneSpec {
    double j = 0.0;              // zone index, multiple of 1/2^D
    double a = 0.0, b = 0.0, c = 0.0;
    Point3 center;
    double azimuth = 0.0;        // alpha
    double elevation = 0.0;      // beta
    double focal_distance = 0.0; // d
    int source = 0;              // transmit antenna index
};

struct CurveSample {
    Point3 point;
    double j = 0.0;
    int source = 0;
};

// Axis-aligned window in the RIS-local plane.
struct Box2 {
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool contains(double x, double y) const { return x >= xmin && x <= xmax && y >= ymin && y <= ymax; }
};

// sqrt(i*lambda*d1*d2/d_total); throws std::domain_error on non-positive distances.
double fresnel_radius(double d1, double d2, double d_total, double i, double lambda);

// Semi-axes of the ellipsoid whose focal sum is d + excess.
Axes axes_for_excess(double d, double excess, AxisMode mode = AxisMode::Exact);
Axes fractional_axes(double d, double j, double lambda, AxisMode mode = AxisMode::Exact);

Mat3 rotation_matrix(double alpha, double beta);

Point3 zone_center(const Point3 &t, const Point3 &u, const Point3 &n_l);

// Ellipsoid with foci t and u and focal sum |t-u| + excess. All points in one frame.
FresnelZoneSpec make_zone_spec(const Point3 &t, const Point3 &u, double j, double excess,
                               AxisMode mode = AxisMode::Exact, int source = 0);

// Plane z = 0 cut of the ellipsoid, n_samples points uniform in the curve angle.
std::vector<CurveSample> curve_in_plane(const FresnelZoneSpec &spec, std::size_t n_samples);

// Same cut restricted to a window; each returned arc is an ordered polyline
// whose adjacent points are at most max_gap apart.
std::vector<std::vector<Point3>> curve_arcs_in_box(const FresnelZoneSpec &spec, const Box2 &box,
                                                   double max_gap);

struct RisFrame {
    Point3 origin; // UE projection on the RIS plane
    Vec3 e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};

    Point3 to_local(const Point3 &p) const
    {
        Vec3 d = p - origin;
        return {dot(d, e1), dot(d, e2), dot(d, e3)};
    }
    Point3 to_world(const Point3 &q) const { return origin + q.x * e1 + q.y * e2 + q.z * e3; }
};

// e3 = normal, e1 = row_hint projected on the plane, origin = UE projection.
RisFrame make_ris_frame(const Point3 &ris_center, const Vec3 &ris_normal, const Point3 &ue,
                        const Vec3 &row_hint = {1, 0, 0});

std::vector<Point3> to_ris_frame(const std::vector<Point3> &points, const Point3 &ris_center,
                                 const Vec3 &ris_normal, const Point3 &ue);

double focal_sum_residual(const Point3 &p, const Point3 &t, const Point3 &u, double j, double lambda);

} // namespace ewris
