// SPDX-License-Identifier: Apache-2.0
#include "ewris/kernels.hpp"

#include <algorithm>

namespace ewris::kernels {

namespace {

inline bool parallel(Exec e) { return e == Exec::Parallel; }

inline void element_links(const PanelLinks &in, std::size_t n, CMat &h, CVec &g)
{
    const Point3 &r = (*in.elements)[n];
    for (std::size_t t = 0; t < in.tx->size(); ++t) {
        const Point3 &tx = (*in.tx)[t];
        h(t, n) = los_coefficient(tx, r, in.tx_pattern->gain(r - tx), in.element_pattern.gain(tx - r), in.lambda);
    }
    g[n] = los_coefficient(r, in.ue, in.element_pattern.gain(in.ue - r), in.ue_pattern->gain(r - in.ue), in.lambda);
}

// Power collected by the two switch streams for hypothesis u.
inline double indicator_at(const std::vector<Point3> &elements, const CVec &uplink, const Point3 &u,
                           double lambda, double absorb_eff)
{
    cplx a{}, b{};
    for (std::size_t n = 0; n < elements.size(); ++n) {
        const double cycles = distance(elements[n], u) / lambda;
        const double phase = wrap_pi(kTwoPi * (cycles - std::floor(cycles)));
        if (phase > -0.5 * kPi && phase <= 0.5 * kPi)
            a += uplink[n];
        else
            b += uplink[n];
    }
    const double s = absorb_eff * (std::abs(a) + std::abs(b));
    return s * s;
}

} // namespace

void ris_channels(const PanelLinks &in, CMat &h, CVec &g, Exec exec)
{
    const std::size_t n_el = in.elements->size();
    h = CMat(in.tx->size(), n_el);
    g.assign(n_el, cplx{});
    const auto n = static_cast<std::ptrdiff_t>(n_el);
#pragma omp parallel for schedule(static) if (parallel(exec))
    for (std::ptrdiff_t i = 0; i < n; ++i) element_links(in, static_cast<std::size_t>(i), h, g);
}

void ris_channels_ref(const PanelLinks &in, CMat &h, CVec &g)
{
    const std::size_t n_el = in.elements->size();
    h = CMat(in.tx->size(), n_el);
    g.assign(n_el, cplx{});
    for (std::size_t t = 0; t < in.tx->size(); ++t)
        for (std::size_t n = 0; n < n_el; ++n) {
            const Point3 &tx = (*in.tx)[t], &r = (*in.elements)[n];
            h(t, n) = los_coefficient(tx, r, in.tx_pattern->gain(r - tx), in.element_pattern.gain(tx - r), in.lambda);
        }
    for (std::size_t n = 0; n < n_el; ++n) {
        const Point3 &r = (*in.elements)[n];
        g[n] = los_coefficient(r, in.ue, in.element_pattern.gain(in.ue - r), in.ue_pattern->gain(r - in.ue), in.lambda);
    }
}

void incident(const CMat &h, const CVec &w, double amp, CVec &z, Exec exec)
{
    z.assign(h.cols, cplx{});
    const auto n = static_cast<std::ptrdiff_t>(h.cols);
#pragma omp parallel for schedule(static) if (parallel(exec))
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        cplx s{};
        for (std::size_t t = 0; t < h.rows; ++t) s += std::conj(h(t, static_cast<std::size_t>(i))) * w[t];
        z[static_cast<std::size_t>(i)] = amp * s;
    }
}

CascadeSum cascade(const CVec &g, const CVec &phi, const CVec &z, Exec exec)
{
    const std::size_t n = g.size();
    const std::size_t nb = (n + kBlock - 1) / kBlock;
    std::vector<cplx> part_f(nb);
    std::vector<double> part_n(nb);
    const auto nbi = static_cast<std::ptrdiff_t>(nb);
#pragma omp parallel for schedule(static) if (parallel(exec) && nb > 1)
    for (std::ptrdiff_t b = 0; b < nbi; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kBlock, hi = std::min(n, lo + kBlock);
        cplx f{};
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            if (phi[i] == cplx{}) continue;
            const cplx gp = std::conj(g[i]) * phi[i];
            f += gp * z[i];
            s += std::norm(gp);
        }
        part_f[static_cast<std::size_t>(b)] = f;
        part_n[static_cast<std::size_t>(b)] = s;
    }
    CascadeSum out{cplx{}, 0.0};
    for (std::size_t b = 0; b < nb; ++b) {
        out.field += part_f[b];
        out.noise_gain += part_n[b];
    }
    return out;
}

CascadeSum cascade_ref(const CVec &g, const CVec &phi, const CVec &z)
{
    CascadeSum out{cplx{}, 0.0};
    for (std::size_t i = 0; i < g.size(); ++i) {
        out.field += std::conj(g[i]) * phi[i] * z[i];
        out.noise_gain += std::norm(g[i] * phi[i]);
    }
    return out;
}

void indicator_scan(const std::vector<Point3> &elements, const CVec &uplink, const std::vector<Point3> &grid,
                    double lambda, double absorb_eff, RVec &out, Exec exec)
{
    out.assign(grid.size(), 0.0);
    const auto m = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic, 4) if (parallel(exec))
    for (std::ptrdiff_t i = 0; i < m; ++i)
        out[static_cast<std::size_t>(i)] =
            indicator_at(elements, uplink, grid[static_cast<std::size_t>(i)], lambda, absorb_eff);
}

void indicator_scan_ref(const std::vector<Point3> &elements, const CVec &uplink,
                        const std::vector<Point3> &grid, double lambda, double absorb_eff, RVec &out)
{
    out.assign(grid.size(), 0.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        cplx a{}, b{};
        for (std::size_t n = 0; n < elements.size(); ++n) {
            const double ph = std::arg(std::polar(1.0, kTwoPi * distance(elements[n], grid[i]) / lambda));
            (std::cos(ph) > 0.0 || ph == 0.5 * kPi ? a : b) += absorb_eff * uplink[n];
        }
        out[i] = std::pow(std::abs(a) + std::abs(b), 2);
    }
}

} // namespace ewris::kernels
