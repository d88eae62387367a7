// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "doctest.h"
#include "ewris/geometry.hpp"
#include "oracle_values.hpp"

using namespace ewris;
using doctest::Approx;

TEST_CASE("fresnel radius")
{
    CHECK(fresnel_radius(2.0, 2.0, 4.0, 1.0, 0.01) == Approx(std::sqrt(0.01 * 4.0) / 2.0));
    CHECK(fresnel_radius(1.0, 3.0, 4.0, 0.0, 0.01) == 0.0);
    CHECK(fresnel_radius(1.0, 3.0, 4.0, 1.0, 0.01) == Approx(oracle::kFresnelRadiusApprox).epsilon(1e-12));
    // the small-angle radius tracks the exact ellipse cut
    CHECK(fresnel_radius(1.0, 3.0, 4.0, 1.0, 0.01) == Approx(oracle::kFresnelRadiusExact).epsilon(1e-3));
    CHECK_THROWS_AS(fresnel_radius(0.0, 3.0, 3.0, 1.0, 0.01), std::domain_error);
    CHECK_THROWS_AS(fresnel_radius(1.0, -3.0, 4.0, 1.0, 0.01), std::domain_error);
}

TEST_CASE("fractional axes")
{
    const Axes z = fractional_axes(10.0, 0.0, 0.01);
    CHECK(z.a == Approx(5.0));
    CHECK(z.b == 0.0);
    CHECK(z.c == 0.0);
    const Axes e = fractional_axes(10.0, 1.0, 0.01);
    CHECK(e.a == Approx(oracle::kAxesA).epsilon(1e-12));
    CHECK(e.b == Approx(oracle::kAxesBExact).epsilon(1e-9));
    CHECK(e.c == e.b);
    const Axes ap = fractional_axes(10.0, 1.0, 0.01, AxisMode::Approximate);
    CHECK(ap.b == Approx(oracle::kAxesBApprox).epsilon(1e-9));
    CHECK(std::abs(ap.b - e.b) / e.b < 3e-4);
}

TEST_CASE("rotation matrix")
{
    const Mat3 r0 = rotation_matrix(0.0, 0.0);
    const Mat3 e0{{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}};
    const Mat3 r1 = rotation_matrix(kPi / 2, 0.0);
    const Mat3 e1{{{0, 0, -1}, {1, 0, 0}, {0, 1, 0}}};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            CHECK(r0[i][k] == Approx(e0[i][k]));
            CHECK(r1[i][k] == Approx(e1[i][k]));
        }
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int t = 0; t < 200; ++t) {
        const Mat3 r = rotation_matrix(ang(rng), ang(rng));
        for (int k = 0; k < 3; ++k) CHECK(r[0][k] * r[0][k] + r[1][k] * r[1][k] + r[2][k] * r[2][k] == Approx(1.0));
        const double det = r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
                           r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
                           r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
        CHECK(std::abs(det) == Approx(1.0));
    }
}

TEST_CASE("zone centre")
{
    const Point3 t{1, 2, 3};
    const Point3 c0 = zone_center(t, t, {});
    CHECK(distance(c0, t) == 0.0);
    const Point3 c1 = zone_center({0, 0, 0}, {2, 4, 6}, {});
    CHECK(distance(c1, {1, 2, 3}) < 1e-15);
    const Point3 c2 = zone_center({0, 0, 0}, {2, 0, 0}, {0.1, 0, 0});
    CHECK(distance(c2, {1.05, 0, 0}) < 1e-15);
}

TEST_CASE("plane cut of a zone ellipsoid")
{
    const double lam = 0.01;
    SUBCASE("foci on the plane give an ellipse")
    {
        const Point3 t{-2, 0, 0}, u{2, 0, 0};
        const FresnelZoneSpec s = make_zone_spec(t, u, 1.0, lam);
        const auto pts = curve_in_plane(s, 512);
        REQUIRE(pts.size() == 512);
        for (const auto &p : pts) {
            CHECK(std::abs(p.point.z) < 1e-12);
            CHECK(focal_sum_residual(p.point, t, u, 1.0, lam) < lam / 100);
        }
    }
    SUBCASE("ellipsoid above the plane is empty")
    {
        const FresnelZoneSpec s = make_zone_spec({0, 0, 5}, {1, 0, 5}, 1.0, lam);
        CHECK(curve_in_plane(s, 64).empty());
    }
    SUBCASE("degenerate zone crosses at most once")
    {
        const FresnelZoneSpec s = make_zone_spec({0, 0, 2}, {1, 0, -2}, 0.0, 0.0);
        const auto pts = curve_in_plane(s, 16);
        for (const auto &p : pts) CHECK(distance(p.point, {0.5, 0, 0}) < 1e-9);
    }
}

TEST_CASE("focal-sum property over random scenarios")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xy(-3.0, 3.0), zz(0.5, 15.0), jj(0.0, 40.0);
    const double lam = 0.01;
    int checked = 0;
    for (int s = 0; s < 500; ++s) {
        const Point3 t{xy(rng), xy(rng), zz(rng)}, u{xy(rng), xy(rng), zz(rng)};
        // the plane is reached once the excess passes the mirror-path excess
        const double j_min = (distance(t, {u.x, u.y, -u.z}) - distance(t, u)) / lam;
        const double j = std::ceil((j_min + jj(rng)) * 4.0) / 4.0;
        const FresnelZoneSpec spec = make_zone_spec(t, u, j, j * lam);
        const double d = distance(t, u);
        for (const auto &p : curve_in_plane(spec, 64)) {
            CHECK(focal_sum_residual(p.point, t, u, j, lam) < 1e-9 * d);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("zones nest strictly")
{
    double a = 0.0, b = 0.0;
    for (int m = 1; m < 40; ++m) {
        const Axes x = fractional_axes(7.0, m / 4.0, 0.01);
        CHECK(x.a > a);
        CHECK(x.b > b);
        a = x.a;
        b = x.b;
    }
}

TEST_CASE("RIS frame")
{
    const Point3 ue{5, 5, 1.5};
    SUBCASE("identity pose keeps points")
    {
        const auto out = to_ris_frame({{1, 2, 3}, {-4, 0.5, 2}}, {0, 0, 0}, {0, 0, 1}, {0, 0, 7});
        CHECK(distance(out[0], {1, 2, 3}) < 1e-12);
        CHECK(distance(out[1], {-4, 0.5, 2}) < 1e-12);
    }
    SUBCASE("round trip")
    {
        const RisFrame f = make_ris_frame({1, -2, 0.5}, {0.3, -0.2, 0.9}, ue, {1, 1, 0});
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> v(-10, 10);
        for (int i = 0; i < 100; ++i) {
            const Point3 p{v(rng), v(rng), v(rng)};
            CHECK(distance(f.to_world(f.to_local(p)), p) < 1e-12);
        }
    }
    SUBCASE("UE above the centre lands on the normal axis")
    {
        const RisFrame f = make_ris_frame({0, 0, 0}, {0, 1, 0}, {0, 4, 0});
        const Point3 q = f.to_local({0, 4, 0});
        CHECK(std::abs(q.x) < 1e-12);
        CHECK(std::abs(q.y) < 1e-12);
        CHECK(q.z == Approx(4.0));
    }
    SUBCASE("focal sum is frame invariant")
    {
        const RisFrame f = make_ris_frame({0.2, 0.1, 0}, {0.1, 0.2, 1.0}, ue);
        const Point3 t{0, 0, 15}, p{0.3, -0.1, 0.02};
        const double r0 = focal_sum_residual(p, t, ue, 0.5, 0.01);
        const double r1 = focal_sum_residual(f.to_local(p), f.to_local(t), f.to_local(ue), 0.5, 0.01);
        CHECK(std::abs(r0 - r1) < 1e-12);
    }
    CHECK_THROWS(make_ris_frame({0, 0, 0}, {0, 0, 0}, ue));
}

TEST_CASE("location noise shifts a level zone by half the offset")
{
    const Point3 t{-1, 0.5, 3}, u{2, -1, 3};
    const FresnelZoneSpec s = make_zone_spec(t, u, 2.0, 0.02);
    const Point3 n{0.04, -0.06, 0.0};
    FresnelZoneSpec shifted = s;
    shifted.center = zone_center(t, u, n);
    const auto a = curve_in_plane(s, 32);
    const auto b = curve_in_plane(shifted, 32);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(b[i].point.x - a[i].point.x == Approx(n.x / 2));
        CHECK(b[i].point.y - a[i].point.y == Approx(n.y / 2));
    }
}

TEST_CASE("clipped arcs stay in the window and respect the gap")
{
    const Point3 t{0, 0, 15}, u{0.3, 0.4, 1.5};
    const double j = 300.0;
    const FresnelZoneSpec s = make_zone_spec(t, u, j, j * 0.01);
    const Box2 box{-0.5, 0.5, -0.5, 0.5};
    const auto arcs = curve_arcs_in_box(s, box, 0.001);
    REQUIRE(!arcs.empty());
    for (const auto &arc : arcs)
        for (std::size_t i = 0; i < arc.size(); ++i) {
            CHECK(box.contains(arc[i].x, arc[i].y));
            CHECK(focal_sum_residual(arc[i], t, u, j, 0.01) < 1e-9);
            if (i > 0) CHECK(distance(arc[i], arc[i - 1]) <= 0.001 + 1e-12);
        }
}
